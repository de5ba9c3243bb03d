"""Property sweeps: run every matrix and label identity check over a graph.

Three modes share one report shape: an exhaustive sweep over the full
Euler-system orbit and all 3^n transition systems, a seeded random sweep
over one graph, and a seeded random sweep over freshly generated
matching graphs.  All randomness comes from one ``random.Random(seed)``
stream, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .errors import TooLarge
from .euler import (
    EulerSystem,
    all_euler_systems_bruteforce,
    hierholzer,
    kappa_transform,
    kotzig_orbit,
)
from .gf2 import GF2Matrix
from .graph4 import (
    Graph4R,
    TRANSITIONS,
    TransitionSystem,
    random_matching_graph,
    trace_partition,
)
from .interlace import (
    CheckResult,
    check_core_independence,
    check_core_kernel,
    check_interlacement_complement,
    check_inverse,
    check_label_exchange,
    check_local_complement_transform,
    check_naturality,
    circuit_nullity,
    modified_interlacement_matrix,
    modified_local_complement,
)

__all__ = [
    "PropertyOutcome",
    "VerifyReport",
    "PROPERTY_NAMES",
    "run_exhaustive",
    "run_samples",
    "run_random_graphs",
]

PROPERTY_NAMES = (
    "local-complement transform",
    "naturality",
    "inverse",
    "core-kernel equality",
    "circuit nullity",
    "core independence",
    "kotzig closure",
    "label exchange",
)

_MAX_WITNESSES = 3
_DEFAULT_WORK_LIMIT = 5_000_000
_ORBIT_LIMIT = 20_000
_KOTZIG_SAMPLES_GUARD = 8


@dataclass
class PropertyOutcome:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, result: CheckResult, describe: Callable[[], str]) -> None:
        self.checks += 1
        if not result and len(self.failures) < _MAX_WITNESSES:
            self.failures.append(describe())


@dataclass
class VerifyReport:
    meta: List[str]
    outcomes: List[PropertyOutcome]

    @property
    def passed(self) -> bool:
        return all(o.ok for o in self.outcomes)


def _fmt_ts(g: Graph4R, ts: TransitionSystem) -> str:
    return " ".join(
        f"{v}:{TRANSITIONS[c].value}" for v, c in zip(g.vertices, ts.codes)
    )


def _fmt_matrix(m: GF2Matrix) -> str:
    return "/".join(str(m.row(i)) for i in range(m.nrows))


def _fmt_witness(g: Graph4R, data: Dict) -> str:
    parts = []
    for key, value in data.items():
        if isinstance(value, TransitionSystem):
            parts.append(f"{key}=[{_fmt_ts(g, value)}]")
        elif isinstance(value, GF2Matrix):
            parts.append(f"{key}={_fmt_matrix(value)}")
        elif isinstance(value, dict):
            parts.append(
                f"{key}={{" + " ".join(f"{k}:{v}" for k, v in value.items()) + "}}"
            )
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


def _all_ts_codes(n: int):
    return itertools.product((0, 1, 2), repeat=n)


def _codes_from_index(idx: int, n: int) -> Tuple[int, ...]:
    codes = []
    for _ in range(n):
        idx, r = divmod(idx, 3)
        codes.append(r)
    return tuple(reversed(codes))


def _corrupted(m: GF2Matrix) -> GF2Matrix:
    rows = list(m.rows)
    rows[0] ^= 1
    return GF2Matrix(m.nrows, m.ncols, tuple(rows))


def _subset_iter(size: int):
    for mask in range(1 << size):
        yield tuple(i for i in range(size) if (mask >> i) & 1)


def run_exhaustive(
    g: Graph4R,
    *,
    threads: int = 1,
    force: bool = False,
    corrupt: bool = False,
    work_limit: int = _DEFAULT_WORK_LIMIT,
) -> VerifyReport:
    """Exhaustive sweep: full orbit x all transition systems x vertices.

    Raises:
        TooLarge: the estimated number of checks exceeds ``work_limit``
            (pass ``force=True`` to run anyway).
    """
    n = g.n
    c0 = hierholzer(g)
    orbit = kotzig_orbit(g, c0, limit=None if force else _ORBIT_LIMIT)
    total_ts = 3 ** n
    subset_bound = 2 ** (g.c + n)
    estimate = total_ts * (2 * len(orbit) * n + len(orbit) + subset_bound) + len(
        orbit
    ) ** 2
    if estimate > work_limit and not force:
        raise TooLarge(
            f"exhaustive sweep needs about {estimate} checks "
            f"(limit {work_limit}); use force to run anyway"
        )
    outcomes = {name: PropertyOutcome(name) for name in PROPERTY_NAMES}

    def ts_range_worker(bounds: Tuple[int, int]):
        lo, hi = bounds
        local = {name: PropertyOutcome(name) for name in PROPERTY_NAMES}
        first = corrupt and lo == 0
        for idx in range(lo, hi):
            ts = TransitionSystem(_codes_from_index(idx, n))
            for c in orbit:
                for v in g.vertices:
                    if first:
                        lhs = modified_local_complement(
                            modified_interlacement_matrix(c, ts), v
                        )
                        rhs = modified_interlacement_matrix(
                            kappa_transform(c, v), ts
                        )
                        res = CheckResult(
                            _corrupted(lhs.matrix) == rhs.matrix,
                            {
                                "note": "negative control (corrupted entry)",
                                "vertex": v,
                                "euler": c.ts,
                                "partition": ts,
                            },
                        )
                        first = False
                    else:
                        res = check_local_complement_transform(g, c, ts, v)
                    local["local-complement transform"].record(
                        res, lambda r=res: _fmt_witness(g, r.witness)
                    )
                    res = check_label_exchange(g, c, ts, v)
                    local["label exchange"].record(
                        res, lambda r=res: _fmt_witness(g, r.witness)
                    )
                for c2 in orbit:
                    res = check_naturality(g, c, c2, ts)
                    local["naturality"].record(
                        res, lambda r=res: _fmt_witness(g, r.witness)
                    )
            res = check_core_kernel(g, c0, ts)
            local["core-kernel equality"].record(
                res, lambda r=res: _fmt_witness(g, r.witness)
            )
            nullity, p_size, comps = circuit_nullity(g, c0, ts)
            res = CheckResult(
                nullity == p_size - comps,
                {
                    "partition": ts,
                    "nullity": nullity,
                    "p_size": p_size,
                    "components": comps,
                },
            )
            local["circuit nullity"].record(
                res, lambda r=res: _fmt_witness(g, r.witness)
            )
            p = trace_partition(g, ts)
            for subset in _subset_iter(p.size):
                res = check_core_independence(g, ts, subset)
                local["core independence"].record(
                    res, lambda r=res: _fmt_witness(g, r.witness)
                )
        return local

    ranges = _split_range(total_ts, threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(ts_range_worker, ranges))
    else:
        partials = [ts_range_worker(r) for r in ranges]
    for partial in partials:
        for name, out in partial.items():
            tgt = outcomes[name]
            tgt.checks += out.checks
            for f in out.failures:
                if len(tgt.failures) < _MAX_WITNESSES:
                    tgt.failures.append(f)

    for c in orbit:
        for c2 in orbit:
            res = check_inverse(g, c, c2)
            outcomes["inverse"].record(
                res, lambda r=res: _fmt_witness(g, r.witness)
            )
        for v in g.vertices:
            res = check_interlacement_complement(g, c, v)
            outcomes["label exchange"].record(
                res, lambda r=res: _fmt_witness(g, r.witness)
            )

    _run_kotzig(g, c0, orbit, outcomes["kotzig closure"])

    meta = [
        _graph_line(g),
        "mode: exhaustive",
        f"orbit size: {len(orbit)}",
    ]
    return VerifyReport(meta, [outcomes[name] for name in PROPERTY_NAMES])


def _graph_line(g: Graph4R) -> str:
    comp = "component" if g.c == 1 else "components"
    return f"graph: {g.n} vertices, {len(g.edges)} edges, {g.c} {comp}"


def _split_range(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(parts, total or 1))
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_kotzig(g, c0, orbit, outcome: PropertyOutcome) -> None:
    if g.n > _KOTZIG_SAMPLES_GUARD:
        outcome.skipped = (
            f"needs all 3^{g.n} transition systems; guard at "
            f"{_KOTZIG_SAMPLES_GUARD} vertices"
        )
        return
    brute = all_euler_systems_bruteforce(g)
    ok = {e.ts for e in orbit} == {e.ts for e in brute}
    outcome.record(
        CheckResult(ok, None if ok else {"orbit": len(orbit), "total": len(brute)}),
        lambda: f"orbit size {len(orbit)} != euler system count {len(brute)}",
    )


def _random_walk(c0: EulerSystem, rng: random.Random) -> EulerSystem:
    c = c0
    for _ in range(rng.randrange(0, 2 * c0.graph.n + 1)):
        c = kappa_transform(c, rng.choice(c0.graph.vertices))
    return c


def _sample_once(
    g: Graph4R,
    c0: EulerSystem,
    rng: random.Random,
    outcomes: Dict[str, PropertyOutcome],
    corrupt_this: bool,
) -> None:
    n = g.n
    c = _random_walk(c0, rng)
    c2 = _random_walk(c0, rng)
    ts = TransitionSystem(tuple(rng.randrange(3) for _ in range(n)))
    v = rng.choice(g.vertices)

    if corrupt_this:
        lhs = modified_local_complement(modified_interlacement_matrix(c, ts), v)
        rhs = modified_interlacement_matrix(kappa_transform(c, v), ts)
        res = CheckResult(
            _corrupted(lhs.matrix) == rhs.matrix,
            {
                "note": "negative control (corrupted entry)",
                "vertex": v,
                "euler": c.ts,
                "partition": ts,
            },
        )
    else:
        res = check_local_complement_transform(g, c, ts, v)
    outcomes["local-complement transform"].record(
        res, lambda r=res: _fmt_witness(g, r.witness)
    )
    res = check_label_exchange(g, c, ts, v)
    outcomes["label exchange"].record(res, lambda r=res: _fmt_witness(g, r.witness))
    res = check_interlacement_complement(g, c, v)
    outcomes["label exchange"].record(res, lambda r=res: _fmt_witness(g, r.witness))
    res = check_naturality(g, c, c2, ts)
    outcomes["naturality"].record(res, lambda r=res: _fmt_witness(g, r.witness))
    res = check_inverse(g, c, c2)
    outcomes["inverse"].record(res, lambda r=res: _fmt_witness(g, r.witness))
    res = check_core_kernel(g, c, ts)
    outcomes["core-kernel equality"].record(
        res, lambda r=res: _fmt_witness(g, r.witness)
    )
    nullity, p_size, comps = circuit_nullity(g, c, ts)
    res = CheckResult(
        nullity == p_size - comps,
        {"partition": ts, "nullity": nullity, "p_size": p_size, "components": comps},
    )
    outcomes["circuit nullity"].record(res, lambda r=res: _fmt_witness(g, r.witness))
    p = trace_partition(g, ts)
    subset = tuple(i for i in range(p.size) if rng.random() < 0.5)
    res = check_core_independence(g, ts, subset)
    outcomes["core independence"].record(
        res, lambda r=res: _fmt_witness(g, r.witness)
    )


def run_samples(
    g: Graph4R,
    samples: int,
    seed: int,
    *,
    corrupt: bool = False,
) -> VerifyReport:
    """Seeded random sweep over one graph: per sample, random Euler
    systems (random transform walks), transition system, vertex, and
    circuit subset."""
    rng = random.Random(seed)
    c0 = hierholzer(g)
    outcomes = {name: PropertyOutcome(name) for name in PROPERTY_NAMES}
    for i in range(samples):
        _sample_once(g, c0, rng, outcomes, corrupt and i == 0)
    if g.n <= _KOTZIG_SAMPLES_GUARD:
        orbit = kotzig_orbit(g, c0)
        _run_kotzig(g, c0, orbit, outcomes["kotzig closure"])
    else:
        outcomes["kotzig closure"].skipped = (
            f"needs all 3^{g.n} transition systems; guard at "
            f"{_KOTZIG_SAMPLES_GUARD} vertices"
        )
    meta = [
        _graph_line(g),
        f"mode: samples ({samples})",
        f"seed: {seed}",
    ]
    return VerifyReport(meta, [outcomes[name] for name in PROPERTY_NAMES])


def run_random_graphs(
    size: int,
    samples: int,
    seed: int,
    *,
    corrupt: bool = False,
) -> VerifyReport:
    """Seeded random sweep over freshly generated matching graphs.

    Each sample draws a new random perfect matching on 4*size labeled
    half-edges and then one random configuration on it.
    """
    rng = random.Random(seed)
    outcomes = {name: PropertyOutcome(name) for name in PROPERTY_NAMES}
    kotzig_ran = False
    for i in range(samples):
        g = random_matching_graph(size, seed=rng.randrange(2 ** 32))
        c0 = hierholzer(g)
        _sample_once(g, c0, rng, outcomes, corrupt and i == 0)
        if not kotzig_ran and size <= 5:
            orbit = kotzig_orbit(g, c0)
            _run_kotzig(g, c0, orbit, outcomes["kotzig closure"])
            kotzig_ran = True
    if not kotzig_ran:
        outcomes["kotzig closure"].skipped = (
            f"size {size} above the closure guard (5 vertices)"
        )
    meta = [
        f"graphs: {samples} generated, {size} vertices each",
        f"mode: samples ({samples})",
        f"seed: {seed}",
    ]
    return VerifyReport(meta, [outcomes[name] for name in PROPERTY_NAMES])
