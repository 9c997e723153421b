"""Exact reliability: probability that the demand can be met.

The feasible-state set is upward closed, so it is the union of the upsets of
its minimal vectors. The probability of one upset factors into per-arc tail
probabilities (arc capacities are independent), and the union is evaluated
exactly by inclusion-exclusion: intersecting upsets means taking the
componentwise maximum of their base vectors.

``brute_force_reliability`` is the independent cross-check: it enumerates the
whole state space, sums the probability of every feasible state, and extracts
the minimal feasible vectors directly. It exists to verify the solver/IE
route and is deliberately kept free of any shared logic with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .errors import ResourceLimitError
from .model import Network, Query, StateVector
from .paths import MpCatalog
from .solver import SolutionSet, solve_a1, solve_a2

DEFAULT_SIGMA_CAP = 30
DEFAULT_STATE_CAP = 5_000_000
_ORACLE_CHUNK = 1 << 18


@dataclass(frozen=True)
class TailTable:
    """Per-arc cumulative tails: tails[i][v] = Pr(capacity of arc i >= v).

    Each row has max_cap + 2 entries; the last one (v = max_cap + 1) is 0,
    and row[0] is the full mass.
    """

    tails: Tuple[Tuple[float, ...], ...]

    @classmethod
    def from_network(cls, net: Network) -> "TailTable":
        rows = []
        for a in net.arcs:
            if a.dist is None:
                raise ValueError(f"arc {a.id} has no capacity distribution")
            row = [0.0] * (a.max_cap + 2)
            acc = 0.0
            for v in range(a.max_cap, -1, -1):
                acc = a.dist[v] + acc
                row[v] = acc
            rows.append(tuple(row))
        return cls(tails=tuple(rows))

    @property
    def m(self) -> int:
        return len(self.tails)

    def max_caps(self) -> Tuple[int, ...]:
        return tuple(len(row) - 2 for row in self.tails)


def upset_prob(tails: TailTable, v: Sequence[int]) -> float:
    """Probability that the current state dominates v componentwise."""
    if len(v) != tails.m:
        raise ValueError(f"vector length {len(v)} != arc count {tails.m}")
    p = 1.0
    for i, row in enumerate(tails.tails):
        if not 0 <= v[i] <= len(row) - 2:
            raise ValueError(f"coordinate {i + 1} = {v[i]} outside 0..{len(row) - 2}")
        p *= row[v[i]]
    return p


def _upset_terms(vectors: Sequence[StateVector]) -> Iterator[Tuple[int, StateVector]]:
    """Yield (sign, componentwise max) for every nonempty subset, in a fixed
    depth-first order; 2^len(vectors) - 1 terms in total."""

    def rec(start, cur, sign):
        for r in range(start, len(vectors)):
            nxt = tuple(map(max, cur, vectors[r])) if cur is not None else vectors[r]
            yield sign, nxt
            yield from rec(r + 1, nxt, -sign)

    yield from rec(0, None, +1)


def union_prob_ie(tails: TailTable, vectors, cap: int = DEFAULT_SIGMA_CAP) -> float:
    """Exact union probability of the upsets of the given vectors.

    Accepts a SolutionSet or any sequence of state vectors. Terms are summed
    with Kahan compensation in a fixed order, so the result is reproducible
    bit for bit. More than ``cap`` vectors (2^cap terms) is refused.
    """
    vecs = list(getattr(vectors, "vectors", vectors))
    if not vecs:
        return 0.0
    if len(vecs) > cap:
        raise ResourceLimitError(
            f"{len(vecs)} vectors would need 2^{len(vecs)}-1 union terms; cap is {cap}"
        )
    total = 0.0
    comp = 0.0
    for sign, mv in _upset_terms(vecs):
        term = sign * upset_prob(tails, mv)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return min(max(total, 0.0), 1.0)


def brute_force_reliability(
    net: Network, cat: MpCatalog, query: Query, cap: int = DEFAULT_STATE_CAP
) -> Tuple[float, List[StateVector]]:
    """Exhaustive oracle: enumerate every state X <= M.

    Returns the summed probability of the feasible states and the minimal
    feasible vectors (every feasible state whose one-step decrements are all
    infeasible). State indices are mixed-radix over arc capacities, arc 1
    slowest, so the minimal vectors come out in a deterministic order.
    """
    total_states = net.state_space_size
    if total_states > cap:
        raise ResourceLimitError(f"{total_states} states exceed the cap of {cap}")
    for a in net.arcs:
        if a.dist is None:
            raise ValueError(f"arc {a.id} has no capacity distribution")

    m = net.m
    sizes = np.array([a.max_cap + 1 for a in net.arcs], dtype=np.int64)
    strides = np.ones(m, dtype=np.int64)
    for i in range(m - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    dists = [np.asarray(a.dist, dtype=np.float64) for a in net.arcs]

    affordable = [p for p in cat if query.d * p.cp <= query.b]

    def caps_block(lo: int, hi: int) -> np.ndarray:
        idx = np.arange(lo, hi, dtype=np.int64)
        return (idx[None, :] // strides[:, None]) % sizes[:, None]

    feasible = np.zeros(total_states, dtype=bool)
    prob_sum = 0.0
    for lo in range(0, total_states, _ORACLE_CHUNK):
        hi = min(lo + _ORACLE_CHUNK, total_states)
        caps = caps_block(lo, hi)
        if affordable:
            best = np.full(hi - lo, np.inf)
            for p in affordable:
                pc = caps[p.arc_ids[0] - 1]
                for i in p.arc_ids[1:]:
                    pc = np.minimum(pc, caps[i - 1])
                t = np.where(
                    pc > 0,
                    p.lp + (query.d + pc - 1) // np.maximum(pc, 1),
                    np.inf,
                )
                best = np.minimum(best, t)
            ok = best <= query.T
        else:
            ok = np.zeros(hi - lo, dtype=bool)
        feasible[lo:hi] = ok
        if ok.any():
            prob = np.ones(hi - lo)
            for i in range(m):
                prob *= dists[i][caps[i]]
            prob_sum += float(prob[ok].sum())

    minimal: List[StateVector] = []
    ok_idx = np.nonzero(feasible)[0]
    for lo in range(0, ok_idx.size, _ORACLE_CHUNK):
        block = ok_idx[lo : lo + _ORACLE_CHUNK]
        caps = (block[None, :] // strides[:, None]) % sizes[:, None]
        is_min = np.ones(block.size, dtype=bool)
        for i in range(m):
            pos = caps[i] > 0
            is_min[pos] &= ~feasible[block[pos] - strides[i]]
        for col in np.nonzero(is_min)[0]:
            minimal.append(tuple(int(caps[i, col]) for i in range(m)))
    return prob_sum, minimal


def reliability(
    net: Network,
    cat: MpCatalog,
    query: Query,
    algorithm: str = "a1",
    sigma_cap: int = DEFAULT_SIGMA_CAP,
) -> Tuple[float, SolutionSet]:
    """Solve for the minimal vectors and evaluate their union probability."""
    if algorithm == "a1":
        sol = solve_a1(net, cat, query)
    elif algorithm == "a2":
        sol = solve_a2(net, cat, query)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected 'a1' or 'a2'")
    if sol.sigma == 0:
        return 0.0, sol
    tails = TailTable.from_network(net)
    return union_prob_ie(tails, sol, cap=sigma_cap), sol
