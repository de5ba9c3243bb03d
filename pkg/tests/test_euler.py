import itertools

import pytest

from interlacement import (
    AlreadyEuler,
    DoubleOccurrenceWord,
    EulerSystem,
    GF2Vector,
    NotEulerSystem,
    TRANSITIONS,
    TooLarge,
    TransitionLabel,
    TransitionSystem,
    all_euler_systems_bruteforce,
    circuit_count,
    core_vector,
    dow,
    euler_from_partition,
    hierholzer,
    interlacement_graph,
    kappa_transform,
    kotzig_orbit,
    label_transitions,
    random_matching_graph,
    trace_partition,
    transition_for_label,
)
from interlacement.euler import _kappa_by_walk_reversal
from conftest import corpus


def all_ts(g):
    for codes in itertools.product((0, 1, 2), repeat=g.n):
        yield TransitionSystem(codes)


def test_hierholzer_golden_loops(g_loops):
    c = hierholzer(g_loops)
    assert [TRANSITIONS[x].value for x in c.ts.codes] == ["03|12"]
    assert str(dow(c, 0)) == "a a"


def test_hierholzer_golden_parallel(g_4par):
    c = hierholzer(g_4par)
    assert c.ts.as_map(g_4par) == {
        "u": TRANSITIONS[2],  # 03|12
        "v": TRANSITIONS[0],  # 01|23
    }
    assert str(dow(c, 0)) == "u v u v"


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_hierholzer_is_euler(g):
    c = hierholzer(g)
    assert circuit_count(g, c.ts.codes) == g.c
    assert len(c.circuits) == g.c
    # one circuit per component, matched in order
    for circ, comp in zip(c.circuits, g.components_index):
        assert set(circ.vertex_indices()) == set(comp)


def test_from_transitions_rejects_non_euler(g_4par):
    with pytest.raises(NotEulerSystem):
        EulerSystem.from_transitions(g_4par, TransitionSystem((0, 0)))


def test_dow_properties(g_mixed):
    c = hierholzer(g_mixed)
    letters = dow(c, 0).word
    assert sorted(letters) == sorted(
        v for v in g_mixed.vertices for _ in range(2)
    )


def test_dow_equivalence():
    w = DoubleOccurrenceWord(("a", "b", "c", "a", "b", "c"))
    assert w.equivalent(DoubleOccurrenceWord(("c", "a", "b", "c", "a", "b")))
    # the reversal is not a rotation of this word
    rev = DoubleOccurrenceWord(("c", "b", "a", "c", "b", "a"))
    assert rev.word not in set(w.rotations())
    assert w.equivalent(rev)
    assert not w.equivalent(DoubleOccurrenceWord(("a", "a", "b", "b", "c", "c")))


def test_labels_golden_parallel(g_4par):
    c = hierholzer(g_4par)
    # at u the traversal enters slots 1 and 2, so psi pairs them: 02|13
    assert transition_for_label(c, "u", TransitionLabel.PSI) == TRANSITIONS[1]
    assert transition_for_label(c, "u", TransitionLabel.CHI) == TRANSITIONS[0]
    assert transition_for_label(c, "u", TransitionLabel.PHI) == TRANSITIONS[2]
    labels = label_transitions(c, c.ts)
    assert set(labels.values()) == {TransitionLabel.PHI}


def test_labels_partition_every_transition(g_mixed):
    c = hierholzer(g_mixed)
    for vi, v in enumerate(g_mixed.vertices):
        seen = set()
        for code in range(3):
            ts = c.ts.replace(vi, code)
            seen.add(label_transitions(c, ts)[v])
        assert seen == {
            TransitionLabel.PHI,
            TransitionLabel.CHI,
            TransitionLabel.PSI,
        }


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_labels_orientation_invariant(g):
    # reversing the stored orientation of any circuit must not change
    # any label
    c = hierholzer(g)
    for flip in range(len(c.circuits)):
        circs = list(c.circuits)
        circs[flip] = circs[flip].reversed_circuit()
        mirrored = EulerSystem(g, c.ts, tuple(circs))
        for ts in all_ts(g):
            assert label_transitions(c, ts) == label_transitions(mirrored, ts)


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_kappa_involution_and_euler(g):
    c = hierholzer(g)
    for v in g.vertices:
        cv = kappa_transform(c, v)
        assert circuit_count(g, cv.ts.codes) == g.c
        assert kappa_transform(cv, v).ts == c.ts


@pytest.mark.parametrize("g", corpus(4), ids=lambda g: "-".join(g.vertices))
def test_kappa_matches_walk_reversal(g):
    # the O(1) transition swap against the literal walk-reversal oracle
    c = hierholzer(g)
    frontier = [c]
    seen = {c.ts}
    for _ in range(3):  # a few layers of the orbit
        nxt = []
        for cur in frontier:
            for v in g.vertices:
                fast = kappa_transform(cur, v)
                slow = _kappa_by_walk_reversal(cur, v)
                assert fast.ts == slow.ts
                # the slow form must itself be a valid partition of the
                # half-edges
                used = sorted(
                    h
                    for circ in slow.circuits
                    for cr in circ.crossings
                    for h in cr
                )
                assert used == list(range(4 * g.n))
                if fast.ts not in seen:
                    seen.add(fast.ts)
                    nxt.append(fast)
        frontier = nxt


def test_kappa_changes_only_v(g_4par):
    c = hierholzer(g_4par)
    cv = kappa_transform(c, "u")
    assert cv.ts.codes[1] == c.ts.codes[1]
    assert cv.ts.codes[0] == c.psi_codes[0]


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_kotzig_closure(g):
    # reachable-by-transforms set == brute force over all transition
    # systems with the right circuit count
    orbit = kotzig_orbit(g, hierholzer(g))
    brute = all_euler_systems_bruteforce(g)
    assert {e.ts for e in orbit} == {e.ts for e in brute}
    assert len(orbit) == len(brute)


def test_kotzig_orbit_limit(g_4par):
    with pytest.raises(TooLarge):
        kotzig_orbit(g_4par, hierholzer(g_4par), limit=3)


def test_orbit_golden_counts(g_loops, g_4par):
    assert len(kotzig_orbit(g_loops, hierholzer(g_loops))) == 2
    assert len(kotzig_orbit(g_4par, hierholzer(g_4par))) == 6


def test_euler_from_partition_loops(g_loops):
    ts = TransitionSystem((0,))  # 01|23 splits the loops apart
    p = trace_partition(g_loops, ts)
    assert p.size == 2
    c, v0, gamma0 = euler_from_partition(g_loops, p)
    assert v0 == "a"
    assert label_transitions(c, ts)["a"] == TransitionLabel.CHI
    assert gamma0 in p.circuits
    # loop core: e_a, and a has no interlacement neighbors
    assert core_vector(g_loops, gamma0) == GF2Vector.unit(1, 0)
    assert interlacement_graph(c).neighbors("a") == ()


def test_euler_from_partition_rejects_euler(g_4par):
    c = hierholzer(g_4par)
    p = trace_partition(g_4par, c.ts)
    with pytest.raises(AlreadyEuler):
        euler_from_partition(g_4par, p)


@pytest.mark.parametrize("g", corpus(5), ids=lambda g: "-".join(g.vertices))
def test_euler_from_partition_postconditions(g):
    phi, chi = TransitionLabel.PHI, TransitionLabel.CHI
    for ts in all_ts(g):
        p = trace_partition(g, ts)
        if p.size == g.c:
            continue
        c, v0, gamma0 = euler_from_partition(g, p)
        labels = label_transitions(c, ts)
        # (1) only follow or crossing labels anywhere
        assert set(labels.values()) <= {phi, chi}
        # (2) crossing exactly at the final junction, follow on the rest
        # of the united circuit
        assert labels[v0] == chi
        v0i = g.vertex_index(v0)
        for vi in gamma0.vertex_indices():
            if vi != v0i:
                assert labels[g.vertices[vi]] == phi
        # (3) the united circuit's core is the unit vector at the
        # junction plus its interlacement neighborhood
        h = interlacement_graph(c)
        expect = GF2Vector.unit(g.n, v0i)
        for w in h.neighbors(v0):
            expect += GF2Vector.unit(g.n, g.vertex_index(w))
        assert core_vector(g, gamma0) == expect


def test_bruteforce_guard():
    with pytest.raises(TooLarge):
        all_euler_systems_bruteforce(
            random_matching_graph(6, seed=0), max_vertices=5
        )
