"""Euler systems of 4-regular multigraphs and the transforms between them.

An Euler system is a transition system that traces exactly one circuit
per connected component.  Relative to an Euler system C, every
transition at a vertex carries one of three labels: phi (the transition
C itself uses), chi (the other transition consistent with a traversal
orientation of C, pairing each entering half-edge with an exiting one),
and psi (the orientation-inconsistent transition, pairing the two
entering half-edges together).  The labels do not depend on which of the
two traversal directions is stored.

The vertex transform kappa replaces the transition at one vertex with
its psi transition; the result is again an Euler system, the transform
is an involution, and repeatedly applying it at all vertices reaches
every Euler system of the graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, List, Tuple

from .errors import (
    AlreadyEuler,
    GraphMismatch,
    NotEulerSystem,
    TooLarge,
)
from .graph4 import (
    TRANSITIONS,
    Circuit,
    CircuitPartition,
    Graph4R,
    Transition,
    TransitionSystem,
    circuit_count,
    trace_partition,
    unite_circuits,
)

__all__ = [
    "TransitionLabel",
    "DoubleOccurrenceWord",
    "EulerSystem",
    "hierholzer",
    "dow",
    "label_transitions",
    "transition_for_label",
    "kappa_transform",
    "kotzig_orbit",
    "all_euler_systems_bruteforce",
    "euler_from_partition",
    "DEFAULT_ENUMERATION_GUARD",
]

DEFAULT_ENUMERATION_GUARD = 20


class TransitionLabel(Enum):
    PHI = "phi"
    CHI = "chi"
    PSI = "psi"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DoubleOccurrenceWord:
    """Cyclic sequence of vertex ids in which each vertex occurs twice."""

    word: Tuple[object, ...]

    def rotations(self):
        w = self.word
        for i in range(len(w)):
            yield w[i:] + w[:i]

    def equivalent(self, other: "DoubleOccurrenceWord") -> bool:
        """Equality up to rotation and reflection."""
        if len(self.word) != len(other.word):
            return False
        targets = set(self.rotations())
        rev = DoubleOccurrenceWord(tuple(reversed(other.word)))
        return other.word in targets or any(r in targets for r in rev.rotations())

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


@dataclass(frozen=True, eq=False)
class EulerSystem:
    """An Euler system: one circuit per component, plus a stored traversal.

    ``circuits`` holds one directed circuit per connected component (in
    component order).  The stored direction is an artifact of how the
    system was produced; two Euler systems are equal exactly when their
    transition systems are, and every label computation is invariant
    under reversing any stored circuit.
    """

    graph: Graph4R
    ts: TransitionSystem
    circuits: Tuple[Circuit, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EulerSystem):
            return NotImplemented
        return self.graph == other.graph and self.ts == other.ts

    def __hash__(self) -> int:
        return hash(self.ts)

    @classmethod
    def from_transitions(cls, g: Graph4R, ts: TransitionSystem) -> "EulerSystem":
        """Validate that ``ts`` traces one circuit per component and wrap it.

        Raises:
            NotEulerSystem: the partition has more circuits than components.
        """
        p = trace_partition(g, ts)
        if p.size != g.c:
            raise NotEulerSystem(
                f"transition system traces {p.size} circuits, graph has {g.c} components"
            )
        by_comp = sorted(
            p.circuits, key=lambda circ: g.component_of[circ.crossings[0][0] >> 2]
        )
        return cls(g, ts, tuple(by_comp))

    @cached_property
    def _in_out_slots(self) -> Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]:
        """Per vertex: the two entering slots and the two exiting slots."""
        ins: List[List[int]] = [[] for _ in range(self.graph.n)]
        outs: List[List[int]] = [[] for _ in range(self.graph.n)]
        for circ in self.circuits:
            for hin, hout in circ.crossings:
                ins[hin >> 2].append(hin & 3)
                outs[hout >> 2].append(hout & 3)
        result = []
        for vi in range(self.graph.n):
            assert len(ins[vi]) == 2 and len(outs[vi]) == 2
            result.append((tuple(ins[vi]), tuple(outs[vi])))
        return tuple(result)

    @cached_property
    def psi_codes(self) -> Tuple[int, ...]:
        """Transition code of the psi transition at each vertex."""
        out = []
        for vi in range(self.graph.n):
            (i1, i2), _ = self._in_out_slots[vi]
            out.append(Transition.from_pair(i1, i2).code)
        return tuple(out)

    @cached_property
    def chi_codes(self) -> Tuple[int, ...]:
        # the three codes at a vertex are {0, 1, 2}, so chi is the remainder
        return tuple(
            3 - p - q for p, q in zip(self.ts.codes, self.psi_codes)
        )


def hierholzer(g: Graph4R) -> EulerSystem:
    """Deterministic Euler system of ``g``, one circuit per component.

    Tours always start from the lowest-indexed unused half-edge, every
    exit taken is the lowest-indexed unused half-edge at the current
    vertex, and sub-tours are spliced in at the first vertex of the tour
    (in traversal order) that still has unused half-edges.
    """
    nhe = g.half_edge_count
    other = g.other_end_table
    used = bytearray(nhe)

    def lowest_unused(vi: int):
        base = vi << 2
        for s in range(4):
            if not used[base + s]:
                return base + s
        return None

    def walk(start: int) -> List[int]:
        seq = []
        h = start
        while h is not None:
            seq.append(h)
            used[h] = 1
            used[other[h]] = 1
            h = lowest_unused(other[h] >> 2)
        assert other[seq[-1]] >> 2 == start >> 2, "walk must close up"
        return seq

    circuits = []
    pair_slots: List[Dict[int, int]] = [{} for _ in range(g.n)]
    for comp in g.components_index:
        tour = walk(comp[0] << 2)
        while True:
            for i, h in enumerate(tour):
                sub_start = lowest_unused(h >> 2)
                if sub_start is not None:
                    tour[i:i] = walk(sub_start)
                    break
            else:
                break
        crossings = tuple(
            (other[tour[i - 1]], tour[i]) for i in range(len(tour))
        )
        circuits.append(Circuit(crossings))
        for hin, hout in crossings:
            vi = hin >> 2
            assert hout >> 2 == vi
            pair_slots[vi][hin & 3] = hout & 3
            pair_slots[vi][hout & 3] = hin & 3
    codes = []
    for vi in range(g.n):
        slots = pair_slots[vi]
        assert len(slots) == 4, "each vertex is crossed exactly twice"
        codes.append(Transition.from_pair(0, slots[0]).code)
    return EulerSystem(g, TransitionSystem(tuple(codes)), tuple(circuits))


def dow(c: EulerSystem, component: int = 0) -> DoubleOccurrenceWord:
    """Double occurrence word of one component's circuit of ``c``."""
    if not 0 <= component < len(c.circuits):
        raise GraphMismatch(
            f"component {component} out of range ({len(c.circuits)} components)"
        )
    circ = c.circuits[component]
    return DoubleOccurrenceWord(
        tuple(c.graph.vertices[h >> 2] for h, _ in circ.crossings)
    )


def label_transitions(c: EulerSystem, ts: TransitionSystem) -> Dict:
    """Label of each vertex's transition in ``ts`` relative to ``c``.

    Returns a {vertex id: TransitionLabel} dict in vertex order.
    """
    g = c.graph
    if len(ts) != g.n:
        raise GraphMismatch(
            f"transition system covers {len(ts)} vertices, graph has {g.n}"
        )
    phi = c.ts.codes
    psi = c.psi_codes
    labels = {}
    for i, v in enumerate(g.vertices):
        code = ts.codes[i]
        if code == phi[i]:
            labels[v] = TransitionLabel.PHI
        elif code == psi[i]:
            labels[v] = TransitionLabel.PSI
        else:
            labels[v] = TransitionLabel.CHI
    return labels


def transition_for_label(c: EulerSystem, v, label: TransitionLabel) -> Transition:
    """The transition at ``v`` that carries ``label`` relative to ``c``."""
    i = c.graph.vertex_index(v)
    if label is TransitionLabel.PHI:
        return TRANSITIONS[c.ts.codes[i]]
    if label is TransitionLabel.PSI:
        return TRANSITIONS[c.psi_codes[i]]
    return TRANSITIONS[c.chi_codes[i]]


@lru_cache(maxsize=8192)
def kappa_transform(c: EulerSystem, v) -> EulerSystem:
    """Replace the transition at ``v`` with its psi transition.

    The result is again an Euler system (validated), and applying the
    transform twice at the same vertex gives back ``c``.
    """
    i = c.graph.vertex_index(v)
    new_ts = c.ts.replace(i, c.psi_codes[i])
    return EulerSystem.from_transitions(c.graph, new_ts)


def _kappa_by_walk_reversal(c: EulerSystem, v) -> EulerSystem:
    """Debug oracle for :func:`kappa_transform`: reverse one v-to-v walk.

    Splits the component circuit at the two crossings of ``v``, reverses
    the closed walk between them, and reassembles the crossing sequence
    directly, deriving the new transition system from the result.
    """
    g = c.graph
    vi = g.vertex_index(v)
    comp = g.component_of[vi]
    circ = c.circuits[comp]
    positions = [k for k, (hin, _) in enumerate(circ.crossings) if hin >> 2 == vi]
    assert len(positions) == 2
    p1, p2 = positions
    in1, out1 = circ.crossings[p1]
    in2, out2 = circ.crossings[p2]
    middle = tuple(
        (hout, hin) for hin, hout in reversed(circ.crossings[p1 + 1 : p2])
    )
    new_crossings = (
        circ.crossings[:p1]
        + ((in1, in2),)
        + middle
        + ((out1, out2),)
        + circ.crossings[p2 + 1 :]
    )
    new_circ = Circuit(new_crossings)
    new_ts = c.ts.replace(vi, Transition.from_pair(in1 & 3, in2 & 3).code)
    circuits = tuple(
        new_circ if k == comp else old for k, old in enumerate(c.circuits)
    )
    return EulerSystem(g, new_ts, circuits)


def kotzig_orbit(g: Graph4R, c: EulerSystem, limit: int | None = None):
    """All Euler systems reachable from ``c`` by vertex transforms.

    Breadth-first closure over single-vertex transforms, deduplicated by
    transition system.  Returns the systems sorted by transition codes.

    Raises:
        TooLarge: the orbit grows past ``limit`` systems.
    """
    if c.graph != g:
        raise GraphMismatch("Euler system belongs to a different graph")
    seen: Dict[TransitionSystem, EulerSystem] = {c.ts: c}
    queue = [c]
    while queue:
        cur = queue.pop(0)
        for v in g.vertices:
            nxt = kappa_transform(cur, v)
            if nxt.ts not in seen:
                if limit is not None and len(seen) >= limit:
                    raise TooLarge(
                        f"orbit exceeds the limit of {limit} Euler systems"
                    )
                seen[nxt.ts] = nxt
                queue.append(nxt)
    return tuple(sorted(seen.values(), key=lambda e: e.ts.codes))


def all_euler_systems_bruteforce(
    g: Graph4R, *, max_vertices: int = DEFAULT_ENUMERATION_GUARD
):
    """Every Euler system of ``g``, found by trying all 3^n transition systems.

    Enumeration runs the mixed-radix base-3 counter over vertices in
    index order (first vertex most significant).

    Raises:
        TooLarge: ``g`` has more than ``max_vertices`` vertices.
    """
    if g.n > max_vertices:
        raise TooLarge(
            f"brute force over 3^{g.n} transition systems refused "
            f"(guard at {max_vertices} vertices)"
        )
    c = g.c
    out = []
    for codes in itertools.product((0, 1, 2), repeat=g.n):
        if circuit_count(g, codes) == c:
            out.append(EulerSystem.from_transitions(g, TransitionSystem(codes)))
    return tuple(out)


def euler_from_partition(g: Graph4R, p: CircuitPartition):
    """Grow an Euler system from a non-Euler partition by uniting circuits.

    Within each component (components in vertex order), circuits are
    repeatedly united at the lowest-indexed vertex where the growing
    circuit meets an untouched circuit of ``p``, respecting the stored
    orientations; the first step of a component unites the two original
    circuits meeting at its lowest-indexed junction.  After size(p) - c
    steps every component is a single circuit.

    Returns:
        (c, v0, gamma0): the resulting Euler system, the vertex of the
        final uniting step, and the untouched circuit of ``p`` consumed
        by that step.  Relative to ``c``, the source of ``p`` is chi at
        every uniting vertex (in particular at v0) and phi elsewhere,
        and the core of gamma0 equals the unit vector at v0 plus the
        indicator of v0's interlacement neighborhood.

    Raises:
        AlreadyEuler: ``p`` already has one circuit per component.
    """
    if p.graph != g:
        raise GraphMismatch("partition belongs to a different graph")
    if p.size == g.c:
        raise AlreadyEuler("the partition already has one circuit per component")
    originals = set(p.circuits)
    cur = p
    growing: Circuit | None = None
    last_vertex = None
    last_original: Circuit | None = None
    for comp in g.components_index:
        comp_set = set(comp)
        growing = None
        while True:
            comp_circuits = [
                ci
                for ci, circ in enumerate(cur.circuits)
                if (circ.crossings[0][0] >> 2) in comp_set
            ]
            if len(comp_circuits) == 1:
                break
            candidate = None
            for vi in comp:
                owners = cur.circuits_at(vi)
                if owners[0] == owners[1]:
                    continue
                pair = (cur.circuits[owners[0]], cur.circuits[owners[1]])
                if growing is None or growing in pair:
                    candidate = (vi, pair)
                    break
            assert candidate is not None, "a connected component always joins up"
            vi, pair = candidate
            if growing is None:
                gamma = pair[1]
            else:
                gamma = pair[0] if pair[1] is growing else pair[1]
            assert gamma in originals
            last_vertex = g.vertices[vi]
            last_original = gamma
            before = set(cur.circuits)
            cur = unite_circuits(g, cur, g.vertices[vi])
            (growing,) = set(cur.circuits) - before
    assert cur.size == g.c
    system = EulerSystem.from_transitions(g, cur.source)
    return system, last_vertex, last_original
