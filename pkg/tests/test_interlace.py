import itertools
import random

import pytest

from interlacement import (
    GF2Matrix,
    GraphMismatch,
    SimpleGraph,
    TransitionLabel,
    TransitionSystem,
    adjacency_matrix,
    check_core_independence,
    check_core_kernel,
    check_interlacement_complement,
    check_inverse,
    check_label_exchange,
    check_local_complement_transform,
    check_naturality,
    circuit_nullity,
    core_space,
    dow,
    hierholzer,
    interlacement_graph,
    kappa_transform,
    kernel_basis,
    kotzig_orbit,
    label_transitions,
    mat_mul,
    modified_interlacement_matrix,
    modified_local_complement,
    random_matching_graph,
    rank,
    simple_local_complement,
    spans_equal,
    trace_partition,
)
from conftest import corpus


def all_ts(g):
    for codes in itertools.product((0, 1, 2), repeat=g.n):
        yield TransitionSystem(codes)


def alternation_graph(c):
    # oracle for the interlacement graph straight off the double
    # occurrence words: v ~ w iff the four positions alternate
    g = c.graph
    rows = [[0] * g.n for _ in range(g.n)]
    for comp in range(g.c):
        letters = dow(c, comp).word
        for v, w in itertools.combinations(set(letters), 2):
            pat = [x for x in letters if x in (v, w)]
            if pat == [v, w, v, w] or pat == [w, v, w, v]:
                vi, wi = g.vertex_index(v), g.vertex_index(w)
                rows[vi][wi] = rows[wi][vi] = 1
    return rows


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_interlacement_graph_against_dow_oracle(g):
    for c in kotzig_orbit(g, hierholzer(g)):
        h = interlacement_graph(c)
        assert adjacency_matrix(h).to_lists() == alternation_graph(c)


def test_interlacement_golden(g_4par, g_loops):
    # u v u v alternates, so the two vertices interlace
    h = interlacement_graph(hierholzer(g_4par))
    assert h.has_edge("u", "v")
    h1 = interlacement_graph(hierholzer(g_loops))
    assert h1.neighbors("a") == ()


def test_simple_graph_guards():
    with pytest.raises(AssertionError):
        SimpleGraph(("a",), (1,))  # loop
    with pytest.raises(AssertionError):
        SimpleGraph(("a", "b"), (2, 0))  # asymmetric


def test_simple_local_complement_involution():
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randrange(2, 8)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = rng.randrange(2)
        h = SimpleGraph.from_edges(
            tuple(f"v{i}" for i in range(n)),
            [
                (f"v{i}", f"v{j}")
                for i in range(n)
                for j in range(i + 1, n)
                if rows[i][j]
            ],
        )
        for v in h.vertices:
            assert simple_local_complement(simple_local_complement(h, v), v) == h


def test_simple_local_complement_toggles_neighbors():
    h = SimpleGraph.from_edges(("a", "b", "c"), [("a", "b"), ("a", "c")])
    hv = simple_local_complement(h, "a")
    assert hv.has_edge("b", "c")
    assert hv.has_edge("a", "b") and hv.has_edge("a", "c")
    assert simple_local_complement(hv, "a") == h


def test_matrix_golden_values(g_4par):
    c = hierholzer(g_4par)
    psi = TransitionSystem(tuple(c.psi_codes))
    m = modified_interlacement_matrix(c, psi).matrix
    assert m.to_lists() == [[1, 1], [1, 1]]
    assert [k.to_tuple() for k in kernel_basis(m)] == [(1, 1)]

    phi_psi = TransitionSystem((c.ts.codes[0], c.psi_codes[1]))
    assert modified_interlacement_matrix(c, phi_psi).matrix.to_lists() == [
        [1, 1],
        [0, 1],
    ]

    chi = TransitionSystem(tuple(c.chi_codes))
    assert modified_interlacement_matrix(c, chi).matrix.to_lists() == [
        [0, 1],
        [1, 0],
    ]


def test_matrix_label_structure(g_mixed):
    # phi columns are unit vectors, psi diagonals are set, chi columns
    # keep the interlacement column
    g = g_mixed
    c = hierholzer(g)
    adj = adjacency_matrix(interlacement_graph(c))
    for ts in all_ts(g):
        m = modified_interlacement_matrix(c, ts).matrix
        labels = label_transitions(c, ts)
        for j, v in enumerate(g.vertices):
            col = [m.entry(i, j) for i in range(g.n)]
            ref = [adj.entry(i, j) for i in range(g.n)]
            if labels[v] == TransitionLabel.PHI:
                assert col == [1 if i == j else 0 for i in range(g.n)]
            elif labels[v] == TransitionLabel.PSI:
                ref[j] = 1
                assert col == ref
            else:
                assert col == ref


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_matrix_of_itself_is_identity(g):
    # a system measured against its own partition is all-phi, so the
    # matrix collapses to the identity and the kernel is trivial
    for c in kotzig_orbit(g, hierholzer(g)):
        m = modified_interlacement_matrix(c, c.ts).matrix
        assert m == GF2Matrix.identity(g.n)
        assert kernel_basis(m) == []


def test_modified_local_complement_golden(g_4par):
    c = hierholzer(g_4par)
    psi = TransitionSystem(tuple(c.psi_codes))
    m = modified_interlacement_matrix(c, psi)
    out = modified_local_complement(m, "u")
    assert out.matrix.to_lists() == [[1, 1], [0, 0]]
    assert out.euler.ts == kappa_transform(c, "u").ts


def block_transform_oracle(m, c, v):
    # independent oracle: build the row operation as a matrix product,
    # T = I + sum of E_{w,v} over interlacement neighbors w of v
    g = c.graph
    vi = g.vertex_index(v)
    h = interlacement_graph(c)
    nbr = {g.vertex_index(w) for w in h.neighbors(v)}
    rows = []
    for i in range(g.n):
        bits = 1 << i
        if i in nbr:
            bits |= 1 << vi
        rows.append(bits)
    t = GF2Matrix(g.n, g.n, tuple(rows))
    return mat_mul(t, m)


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_transform_matches_block_oracle(g):
    c = hierholzer(g)
    for ts in all_ts(g):
        m = modified_interlacement_matrix(c, ts)
        for v in g.vertices:
            out = modified_local_complement(m, v)
            assert out.matrix == block_transform_oracle(m.matrix, c, v)


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_local_complement_transform_exhaustive(g):
    # the row operation on the modified matrix lands exactly on the
    # matrix of the transformed euler system, over the whole orbit
    for c in kotzig_orbit(g, hierholzer(g)):
        for ts in all_ts(g):
            for v in g.vertices:
                assert check_local_complement_transform(g, c, ts, v)


def test_transform_random_sampling():
    # the same identity spot-checked on larger graphs
    rng = random.Random(2024)
    checks = 0
    while checks < 400:
        n = rng.randrange(5, 13)
        g = random_matching_graph(n, seed=rng.randrange(10**6))
        c = hierholzer(g)
        for _ in range(rng.randrange(1, 4)):
            c = kappa_transform(c, rng.choice(g.vertices))
        ts = TransitionSystem(tuple(rng.randrange(3) for _ in range(n)))
        v = rng.choice(g.vertices)
        assert check_local_complement_transform(g, c, ts, v)
        checks += 1


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_interlacement_complement_rule(g):
    for c in kotzig_orbit(g, hierholzer(g)):
        for v in g.vertices:
            assert check_interlacement_complement(g, c, v)


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_label_exchange_rule(g):
    for c in kotzig_orbit(g, hierholzer(g)):
        for ts in all_ts(g):
            for v in g.vertices:
                assert check_label_exchange(g, c, ts, v)


@pytest.mark.parametrize("g", corpus(3), ids=lambda g: "-".join(g.vertices))
def test_naturality_and_inverse_exhaustive(g):
    # the n <= 4 corpus is swept by the acceptance tests; this keeps a
    # fast exhaustive check in the unit suite
    orbit = kotzig_orbit(g, hierholzer(g))
    for c in orbit:
        for c2 in orbit:
            assert check_inverse(g, c, c2)
            for ts in all_ts(g):
                assert check_naturality(g, c, c2, ts)


def test_naturality_random_triples():
    rng = random.Random(77)
    checks = 0
    while checks < 1000:
        n = rng.randrange(2, 11)
        g = random_matching_graph(n, seed=rng.randrange(10**6))
        c = hierholzer(g)
        c1 = c
        for _ in range(rng.randrange(0, 4)):
            c1 = kappa_transform(c1, rng.choice(g.vertices))
        c2 = c
        for _ in range(rng.randrange(0, 4)):
            c2 = kappa_transform(c2, rng.choice(g.vertices))
        ts = TransitionSystem(tuple(rng.randrange(3) for _ in range(n)))
        assert check_naturality(g, c1, c2, ts)
        assert check_inverse(g, c1, c2)
        checks += 1


@pytest.mark.parametrize("g", corpus(6), ids=lambda g: "-".join(g.vertices))
def test_core_equals_kernel(g):
    c = hierholzer(g)
    for ts in all_ts(g):
        assert check_core_kernel(g, c, ts)


@pytest.mark.parametrize("g", corpus(6), ids=lambda g: "-".join(g.vertices))
def test_nullity_formula(g):
    c = hierholzer(g)
    for ts in all_ts(g):
        nullity, p_size, comps = circuit_nullity(g, c, ts)
        assert comps == g.c
        assert nullity == p_size - comps


def test_nullity_formula_large_random():
    g = random_matching_graph(14, seed=1)
    c = hierholzer(g)
    rng = random.Random(0)
    for _ in range(200):
        ts = TransitionSystem(tuple(rng.randrange(3) for _ in range(14)))
        nullity, p_size, comps = circuit_nullity(g, c, ts)
        assert nullity == p_size - comps


def test_core_kernel_large_random():
    g = random_matching_graph(14, seed=1)
    c = hierholzer(g)
    rng = random.Random(0)
    for _ in range(200):
        ts = TransitionSystem(tuple(rng.randrange(3) for _ in range(14)))
        assert check_core_kernel(g, c, ts)


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_core_independence(g):
    for ts in all_ts(g):
        p = trace_partition(g, ts)
        for size in range(p.size + 1):
            for subset in itertools.combinations(range(p.size), size):
                assert check_core_independence(g, ts, subset)


def test_core_independence_witness(g_split):
    # choosing every circuit of a component forces dependence, and the
    # check certifies that the rank criterion and the component
    # criterion agree on it
    ts = TransitionSystem((0, 0, 0))
    p = trace_partition(g_split, ts)
    full = tuple(range(p.size))
    assert check_core_independence(g_split, ts, full)
    m = core_space(g_split, p)
    assert rank(m) < p.size


def test_core_independence_bad_subset(g_4par):
    ts = TransitionSystem((0, 0))
    with pytest.raises(GraphMismatch):
        check_core_independence(g_4par, ts, (99,))


def test_check_result_witness(g_4par):
    c = hierholzer(g_4par)
    ts = TransitionSystem((0, 0))
    res = check_local_complement_transform(g_4par, c, ts, "u")
    assert res
    assert res.witness is None or isinstance(res.witness, dict)


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_kernel_spans_core_spans(g):
    # spans_equal is symmetric on these pairs
    c = hierholzer(g)
    for ts in all_ts(g):
        p = trace_partition(g, ts)
        m = modified_interlacement_matrix(c, ts).matrix
        kmat = GF2Matrix.from_vectors(kernel_basis(m), g.n)
        assert spans_equal(core_space(g, p), kmat)
        assert spans_equal(kmat, core_space(g, p))
