"""Shared builders for randomized tests: small networks the exhaustive
oracle can chew through, and an independent path enumerator that searches
node permutations instead of walking the graph."""

import itertools
import random

from mfnrel import Arc, MpCatalog, Network, Query


def random_dist(rng: random.Random, max_cap: int):
    weights = [rng.random() + 0.05 for _ in range(max_cap + 1)]
    total = sum(weights)
    return tuple(w / total for w in weights)


def small_random_network(rng: random.Random, n_max=6, m_max=8, cap_max=3) -> Network:
    n = rng.randint(2, n_max)
    m = rng.randint(1, m_max)
    arcs = []
    for i in range(1, m + 1):
        tail = rng.randint(1, n)
        head = rng.randint(1, n)
        while head == tail:
            head = rng.randint(1, n)
        max_cap = 0 if rng.random() < 0.08 else rng.randint(1, cap_max)
        arcs.append(
            Arc(
                id=i,
                tail=tail,
                head=head,
                max_cap=max_cap,
                lead=rng.randint(1, 4),
                unit_cost=rng.randint(1, 4),
                dist=random_dist(rng, max_cap),
            )
        )
    return Network(n=n, arcs=tuple(arcs))


def random_query(rng: random.Random, cat: MpCatalog) -> Query:
    """Query that may land anywhere between trivially easy and impossible."""
    if cat.q:
        lps = [p.lp for p in cat]
        cps = [p.cp for p in cat]
        d = rng.randint(1, 6)
        if rng.random() < 0.6:
            # generous end: enough time and money for at least one path
            T = rng.randint(min(lps) + 1, max(lps) + d + 3)
            b = rng.randint(d * min(cps), d * max(cps) + 4)
        else:
            # stress end: tight or impossible limits
            T = rng.randint(max(1, min(lps) - 2), max(lps) + 2)
            b = rng.randint(1, d * max(cps))
    else:
        d, T, b = rng.randint(1, 5), rng.randint(1, 9), rng.randint(1, 30)
    return Query(d=d, T=T, b=b)


def node_sequence_paths(net: Network):
    """Every simple source->sink path as a frozen arc-id set.

    Enumerates node permutations and fills in parallel-arc choices, so it
    shares nothing with the depth-first enumerator it cross-checks.
    """
    arcs_between = {}
    for a in net.arcs:
        arcs_between.setdefault((a.tail, a.head), []).append(a.id)
    inner = [v for v in range(1, net.n + 1) if v not in (net.source, net.sink)]
    found = set()
    for k in range(len(inner) + 1):
        for mid in itertools.permutations(inner, k):
            seq = (net.source, *mid, net.sink)
            legs = [arcs_between.get(hop) for hop in zip(seq, seq[1:])]
            if all(legs):
                for combo in itertools.product(*legs):
                    found.add(frozenset(combo))
    return found


def arc_subset_connects(net: Network, arc_ids) -> bool:
    """True when the arc subset alone still links source to sink."""
    allowed = set(arc_ids)
    frontier = [net.source]
    seen = {net.source}
    while frontier:
        v = frontier.pop()
        if v == net.sink:
            return True
        for a in net.arcs:
            if a.id in allowed and a.tail == v and a.head not in seen:
                seen.add(a.head)
                frontier.append(a.head)
    return net.sink in seen
