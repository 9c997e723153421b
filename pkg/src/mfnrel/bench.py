"""Benchmark lab: random instance generation, bundled fixtures, a timing
harness for the two solvers, and performance-profile curves.

Instance recipe (for n nodes, one RNG seeded per instance):

* arc count m is uniform in [f, f+g] with f = 3*(ceil(n/2) - 1) and
  g = 25 - ceil(n/2); the upper end is clamped to the number of admissible
  node pairs when n is small;
* arc endpoints are sampled without replacement from the admissible ordered
  pairs: no self-loops, no duplicates, nothing into the source or out of
  the sink;
* per arc, max capacity ~ U[10, 50], lead time ~ U[5, 10], unit cost
  ~ U[5, 20] (all integer);
* instances are rejected and redrawn until at least one source->sink path
  exists and the path count stays under the cap.

The derived demand/time/budget of an instance are rounded means over its
path catalog: d = ceil(mean path capacity at maximum), T = ceil(mean path
lead time), b = ceil(d * mean path unit cost).
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import BenchmarkMismatchError, GenerationError, ResourceLimitError
from .model import Arc, Network, Query, ceil_div, path_stats
from .paths import DEFAULT_MP_CAP, MpCatalog, enumerate_mps
from .solver import SolutionSet, solve_a1, solve_a2

CAP_RANGE = (10, 50)
LEAD_RANGE = (5, 10)
COST_RANGE = (5, 20)

#: Seed used once to draw the bundled Pan-European arc attributes.
PAN_EUROPEAN_ATTR_SEED = 266

_SOLVERS = {"a1": solve_a1, "a2": solve_a2}


@dataclass(frozen=True)
class GenConfig:
    """Parameters of one random instance; n and seed fully determine it."""

    n: int
    seed: int
    cap_range: Tuple[int, int] = CAP_RANGE
    lead_range: Tuple[int, int] = LEAD_RANGE
    cost_range: Tuple[int, int] = COST_RANGE
    mp_cap: int = DEFAULT_MP_CAP
    max_rejects: int = 1000

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("need at least 4 nodes")
        if self.f < 1:
            raise ValueError("arc-count lower bound must be >= 1")
        if self.g < 0:
            raise ValueError(f"n = {self.n} pushes the arc-count spread below 0")
        for name in ("cap_range", "lead_range", "cost_range"):
            lo, hi = getattr(self, name)
            if not 1 <= lo <= hi:
                raise ValueError(f"{name} ({lo}, {hi}) is empty or nonpositive")

    @property
    def half(self) -> int:
        return (self.n + 1) // 2  # ceil(n/2)

    @property
    def f(self) -> int:
        return 3 * (self.half - 1)

    @property
    def g(self) -> int:
        return 25 - self.half

    @property
    def arc_count_range(self) -> Tuple[int, int]:
        return (self.f, self.f + self.g)


@dataclass(frozen=True)
class GeneratedInstance:
    network: Network
    catalog: MpCatalog
    query: Query
    config: GenConfig
    attempts: int

    @property
    def name(self) -> str:
        return f"n{self.config.n:02d}-s{self.config.seed}"


def capacity_distribution(max_cap: int) -> Tuple[float, ...]:
    """Skewed-to-healthy distribution for generated arcs.

    Mass 0.7 at the maximum, 0.1 one level below, and the remaining 0.2
    spread evenly over the lower levels (all of the remainder lands on level
    0 when the arc has only two levels). The benchmarked solver steps never
    read these probabilities; they only matter for reliability evaluation
    on generated files.
    """
    if max_cap < 1:
        raise ValueError("max_cap must be >= 1")
    if max_cap == 1:
        return (0.3, 0.7)
    dist = [0.0] * (max_cap + 1)
    dist[max_cap] = 0.7
    dist[max_cap - 1] = 0.1
    share = 0.2 / (max_cap - 1)
    for v in range(max_cap - 1):
        dist[v] = share
    return tuple(dist)


def admissible_pairs(n: int) -> List[Tuple[int, int]]:
    """Ordered endpoint pairs a generated arc may use (source 1, sink n)."""
    return [
        (t, h)
        for t in range(1, n)
        for h in range(2, n + 1)
        if t != h
    ]


def derive_query(cat: MpCatalog, d: Optional[int] = None) -> Query:
    """Demand/time/budget derived from rounded catalog means.

    A caller-chosen demand may be passed in (the benchmark sweep varies d);
    the budget is then derived for that demand.
    """
    if cat.q == 0:
        raise ValueError("cannot derive a query from an empty catalog")
    if d is None:
        d = ceil_div(sum(p.kp_max for p in cat), cat.q)
    T = ceil_div(sum(p.lp for p in cat), cat.q)
    b = ceil_div(d * sum(p.cp for p in cat), cat.q)
    return Query(d=d, T=T, b=b)


def generate_instance(cfg: GenConfig) -> GeneratedInstance:
    """Draw one random instance; deterministic for a fixed (n, seed)."""
    rng = random.Random(cfg.seed)
    pairs = admissible_pairs(cfg.n)
    m_low, m_high = cfg.f, min(cfg.f + cfg.g, len(pairs))
    if m_low > len(pairs):
        raise ValueError(f"n = {cfg.n} admits only {len(pairs)} arcs, need {m_low}")

    rejects = 0
    while True:
        m = rng.randint(m_low, m_high)
        endpoints = rng.sample(pairs, m)
        arcs = []
        for i, (tail, head) in enumerate(endpoints, 1):
            max_cap = rng.randint(*cfg.cap_range)
            lead = rng.randint(*cfg.lead_range)
            cost = rng.randint(*cfg.cost_range)
            arcs.append(
                Arc(
                    id=i,
                    tail=tail,
                    head=head,
                    max_cap=max_cap,
                    lead=lead,
                    unit_cost=cost,
                    dist=capacity_distribution(max_cap),
                )
            )
        net = Network(n=cfg.n, arcs=tuple(arcs))
        try:
            cat = enumerate_mps(net, cap=cfg.mp_cap)
        except ResourceLimitError:
            cat = MpCatalog(paths=())
        if cat.q >= 1:
            return GeneratedInstance(
                network=net,
                catalog=cat,
                query=derive_query(cat),
                config=cfg,
                attempts=rejects + 1,
            )
        rejects += 1
        if rejects >= cfg.max_rejects:
            raise GenerationError(
                f"{cfg.max_rejects} consecutive unusable networks for n={cfg.n}, seed={cfg.seed}"
            )


# ---------------------------------------------------------------------------
# Bundled fixtures


@dataclass(frozen=True)
class Fig3Fixture:
    """The 5-node / 8-arc benchmark example at path granularity.

    The catalog is given explicitly (it is input data, not derived): nine
    paths whose lead-time, cost and capacity sums are the published ones.
    Six of them are true paths of the bundled topology; the arc supports of
    paths 4, 8 and 9 are placeholders that reproduce the per-path sums from
    the per-arc data but do not chain up in the drawn topology, which cannot
    realize all nine paths at once.
    """

    network: Network
    catalog: MpCatalog


_FIG3_ARCS = (
    # (tail, head, max_cap, lead, cost, dist ascending from capacity 0)
    (1, 2, 5, 2, 1, (0.05, 0.05, 0.05, 0.05, 0.1, 0.7)),
    (1, 3, 3, 2, 2, (0.05, 0.05, 0.1, 0.8)),
    (1, 4, 4, 3, 2, (0.05, 0.05, 0.1, 0.1, 0.7)),
    (2, 3, 3, 1, 1, (0.05, 0.05, 0.1, 0.8)),
    (3, 4, 2, 2, 3, (0.05, 0.1, 0.85)),
    (2, 5, 4, 2, 2, (0.05, 0.05, 0.1, 0.1, 0.7)),
    (3, 5, 5, 3, 3, (0.05, 0.05, 0.05, 0.05, 0.1, 0.7)),
    (4, 5, 3, 1, 4, (0.05, 0.05, 0.1, 0.8)),
)

_FIG3_MPS = (
    (1, 6),
    (1, 4, 7),
    (1, 4, 5, 8),
    (2, 4, 6),
    (2, 7),
    (2, 5, 8),
    (3, 8),
    (3, 5, 7),
    (2, 3, 4, 5),
)


def fig3_fixture() -> Fig3Fixture:
    net = Network(
        n=5,
        arcs=tuple(
            Arc(id=i, tail=t, head=h, max_cap=mc, lead=l, unit_cost=c, dist=dist)
            for i, (t, h, mc, l, c, dist) in enumerate(_FIG3_ARCS, 1)
        ),
    )
    cat = MpCatalog(paths=tuple(path_stats(net, ids) for ids in _FIG3_MPS))
    return Fig3Fixture(network=net, catalog=cat)


def pan_european_fixture(path: Optional[Path] = None) -> Network:
    """The bundled 28-node / 40-arc continental backbone network.

    Parses the packaged instance file (or an explicit ``path``). Arc
    attributes were drawn once with seed ``PAN_EUROPEAN_ATTR_SEED`` over the
    usual generator ranges and are frozen in the file.
    """
    from .instance_io import parse, parse_file

    if path is not None:
        return parse_file(path).network
    ref = resources.files("mfnrel").joinpath("data/pan_european.net")
    try:
        text = ref.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise FileNotFoundError("bundled pan_european.net is missing") from exc
    return parse(text).network


def demand_grid(cat: MpCatalog, width: int = 10) -> List[int]:
    """Demand sweep around the catalog-derived level: d*-5 .. d*+4."""
    d_star = ceil_div(sum(p.kp_max for p in cat), cat.q)
    lo = d_star - width // 2
    return [max(1, lo + i) for i in range(width)]


# ---------------------------------------------------------------------------
# Timing harness


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    algorithm: str
    seconds: float
    sigma: int
    k: int
    q: int


def run_benchmark(
    items: Sequence[Tuple[str, Network, MpCatalog, Query]],
    algorithms: Sequence[str] = ("a1", "a2"),
    repeats: int = 5,
) -> List[BenchRecord]:
    """Time the solution-set construction step of each algorithm.

    Per (instance, algorithm): one discarded warmup run, then the median of
    ``repeats`` wall-clock timings, single-threaded. Before anything is
    timed the algorithms' vector sets are compared; a mismatch aborts the
    whole benchmark, since timings of disagreeing solvers mean nothing.
    """
    for alg in algorithms:
        if alg not in _SOLVERS:
            raise ValueError(f"unknown algorithm {alg!r}")
    records: List[BenchRecord] = []
    for name, net, cat, query in items:
        warm: Dict[str, SolutionSet] = {
            alg: _SOLVERS[alg](net, cat, query) for alg in algorithms
        }
        sets = {alg: sol.vector_set() for alg, sol in warm.items()}
        first = sets[algorithms[0]]
        for alg, vs in sets.items():
            if vs != first:
                raise BenchmarkMismatchError(
                    f"instance {name}: {algorithms[0]} and {alg} disagree "
                    f"({len(first)} vs {len(vs)} vectors)"
                )
        for alg in algorithms:
            fn = _SOLVERS[alg]
            times = []
            for _ in range(repeats):
                t0 = time.perf_counter()
                fn(net, cat, query)
                times.append(time.perf_counter() - t0)
            records.append(
                BenchRecord(
                    instance=name,
                    algorithm=alg,
                    seconds=statistics.median(times),
                    sigma=warm[alg].sigma,
                    k=warm[alg].k,
                    q=cat.q,
                )
            )
    return records


def times_by_instance(records: Sequence[BenchRecord]) -> Dict[str, Dict[str, float]]:
    out: Dict[str, Dict[str, float]] = {}
    for r in records:
        out.setdefault(r.instance, {})[r.algorithm] = r.seconds
    return out


# ---------------------------------------------------------------------------
# Performance profiles


@dataclass(frozen=True)
class ProfileData:
    """Per-algorithm time ratios and their cumulative distribution.

    ``ratios[alg][i]`` is the time of ``alg`` on instance i divided by the
    best time on that instance (ties give 1 to every winner). ``curves``
    samples each distribution on ``tau_grid``; ``value`` evaluates it
    exactly at any tau.
    """

    algorithms: Tuple[str, ...]
    instances: Tuple[str, ...]
    ratios: Mapping[str, Tuple[float, ...]]
    tau_grid: Tuple[float, ...]
    curves: Mapping[str, Tuple[float, ...]]

    def value(self, algorithm: str, tau: float) -> float:
        rs = self.ratios[algorithm]
        return sum(1 for r in rs if r <= tau) / len(rs)


def performance_profile(
    times: Mapping[str, Mapping[str, float]], grid_points: int = 64
) -> ProfileData:
    """Cumulative distribution of each algorithm's time ratio to the best.

    ``times`` maps instance -> algorithm -> positive seconds; every instance
    must carry the same algorithms (at least two). The tau grid is
    log-spaced from 1 to the largest observed ratio.
    """
    if not times:
        raise ValueError("no instances")
    instances = tuple(sorted(times))
    algorithms = tuple(sorted(times[instances[0]]))
    if len(algorithms) < 2:
        raise ValueError("need at least two algorithms to compare")
    for inst in instances:
        if tuple(sorted(times[inst])) != algorithms:
            raise ValueError(f"instance {inst} does not cover all algorithms")
        for alg, t in times[inst].items():
            if not t > 0:
                raise ValueError(f"nonpositive time {t!r} for {inst}/{alg}")

    ratios: Dict[str, List[float]] = {alg: [] for alg in algorithms}
    for inst in instances:
        best = min(times[inst].values())
        for alg in algorithms:
            ratios[alg].append(times[inst][alg] / best)

    max_ratio = max(max(rs) for rs in ratios.values())
    if max_ratio <= 1.0:
        grid = (1.0,)
    else:
        grid = tuple(
            max_ratio ** (i / (grid_points - 1)) for i in range(grid_points)
        )
    n_inst = len(instances)
    curves = {
        alg: tuple(sum(1 for r in rs if r <= tau) / n_inst for tau in grid)
        for alg, rs in ((a, ratios[a]) for a in algorithms)
    }
    return ProfileData(
        algorithms=algorithms,
        instances=instances,
        ratios={alg: tuple(rs) for alg, rs in ratios.items()},
        tau_grid=grid,
        curves=curves,
    )
