"""Modules, primality, critical primality, and the prime-height structure.

A module is a vertex subset whose members look identical from outside; a
graph with no nontrivial module is prime.  Graphs of order at most two are
counted as prime here, which makes the height arithmetic come out right
(h of a single edge is 2, sitting at level 2 above the one- and zero-vertex
graphs).  That convention lives in :func:`is_prime` only.

Module search grows the smallest module containing each vertex pair by
splitter closure; the exhaustive-subset method stays available to tests as
an oracle.  Heights are computed by dynamic programming over canonical keys;
the memo table is shared and idempotent (all writers compute equal values).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    CanonKey,
    Graph,
    GraphError,
    canonical_key,
    enumerate_graphs,
    induced_subgraph,
)


class PrimalityError(ValueError):
    """Operation requires a prime graph."""


@dataclass(frozen=True)
class ModuleWitness:
    """A nontrivial module: 2 <= |vertices| < n, externally homogeneous."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PrimeHeightRecord:
    key: CanonKey
    order: int
    height: int


def is_module(g: Graph, subset) -> bool:
    members = set(subset)
    mask = 0
    for v in members:
        mask |= 1 << v
    for x in range(g.n):
        if x in members:
            continue
        hits = (g.rows[x] & mask).bit_count()
        if hits not in (0, len(members)):
            return False
    return True


def _pair_closure(g: Graph, u: int, v: int) -> int:
    """Smallest module containing {u, v}, as a bitmask (may be all of V)."""
    full = (1 << g.n) - 1
    mask = (1 << u) | (1 << v)
    size = 2
    while True:
        grown = False
        outside = full ^ mask
        for x in range(g.n):
            if not (outside >> x) & 1:
                continue
            hits = (g.rows[x] & mask).bit_count()
            if hits not in (0, size):
                mask |= 1 << x
                size += 1
                grown = True
        if not grown or mask == full:
            return mask


def find_nontrivial_module(g: Graph) -> ModuleWitness | None:
    """First proper pair closure in lexicographic pair order, or None.

    A nontrivial module contains some pair, and the minimal module over that
    pair is contained in it, so scanning all pairs is complete.
    """
    full = (1 << g.n) - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            mask = _pair_closure(g, u, v)
            if mask != full:
                return ModuleWitness(tuple(i for i in range(g.n) if (mask >> i) & 1))
    return None


def is_prime(g: Graph) -> bool:
    """No nontrivial module; order <= 2 is prime by convention."""
    if g.n <= 2:
        return True
    return find_nontrivial_module(g) is None


def is_critically_prime(g: Graph) -> bool:
    """Prime, order >= 4, and no single-vertex deletion stays prime."""
    if g.n < 4 or not is_prime(g):
        return False
    for v in range(g.n):
        if is_prime(induced_subgraph(g, [u for u in range(g.n) if u != v])):
            return False
    return True


def schmerl_trotter_pair(g: Graph) -> tuple[int, int] | None:
    """Distinct c, d with the graph minus {c, d} still prime.

    Guaranteed to exist for prime graphs of order >= 7; smaller orders may
    yield None.  Pairs are scanned in lexicographic order for determinism.
    """
    if not is_prime(g):
        raise PrimalityError("schmerl_trotter_pair requires a prime graph")
    for c in range(g.n):
        for d in range(c + 1, g.n):
            rest = [v for v in range(g.n) if v not in (c, d)]
            if is_prime(induced_subgraph(g, rest)):
                return (c, d)
    return None


# -- heights ----------------------------------------------------------------

_HEIGHT_MEMO: dict[CanonKey, int] = {}
_PRIME_SUBKEYS_MEMO: dict[CanonKey, tuple[tuple[CanonKey, Graph], ...]] = {}

DEFAULT_HEIGHT_CAP = 8


def _prime_subgraphs(g: Graph, key: CanonKey) -> tuple[tuple[CanonKey, Graph], ...]:
    """Canonical (key, representative) pairs of proper prime induced subgraphs."""
    cached = _PRIME_SUBKEYS_MEMO.get(key)
    if cached is not None:
        return cached
    found: dict[CanonKey, Graph] = {}
    for mask in range((1 << g.n) - 1):
        sub = induced_subgraph(g, [v for v in range(g.n) if (mask >> v) & 1])
        if is_prime(sub):
            found.setdefault(canonical_key(sub), sub)
    result = tuple(found.items())
    _PRIME_SUBKEYS_MEMO[key] = result
    return result


def prime_height(g: Graph, cap: int = DEFAULT_HEIGHT_CAP) -> PrimeHeightRecord:
    """Longest chain of prime graphs below g, the empty graph at height 0.

    Every prime strictly embeddable in g appears among its proper induced
    subgraphs, so the recursion over subset classes is exact.
    """
    if g.n > cap:
        raise GraphError(f"prime_height capped at {cap} vertices")
    if not is_prime(g):
        raise PrimalityError("prime_height requires a prime graph")

    def height_of(h: Graph, key: CanonKey) -> int:
        memo = _HEIGHT_MEMO.get(key)
        if memo is not None:
            return memo
        best = -1
        for sub_key, sub in _prime_subgraphs(h, key):
            val = _HEIGHT_MEMO.get(sub_key)
            if val is None:
                val = height_of(sub, sub_key)
            best = max(best, val)
        value = best + 1
        _HEIGHT_MEMO[key] = value
        return value

    key = canonical_key(g)
    return PrimeHeightRecord(key=key, order=g.n, height=height_of(g, key))


# -- census -------------------------------------------------------------------

CENSUS_CAP = 8


def prime_level_census(n_max: int) -> list[int]:
    """Isomorphism classes of prime graphs per order 0..n_max (n_max <= 8)."""
    if n_max > CENSUS_CAP:
        raise GraphError(f"census capped at order {CENSUS_CAP}")
    levels = enumerate_graphs(n_max)
    return [sum(1 for g in level if is_prime(g)) for level in levels[:n_max + 1]]


def prime_graphs_of_order(n: int) -> list[Graph]:
    """Canonical representatives of all prime graphs on exactly n vertices."""
    if n > CENSUS_CAP:
        raise GraphError(f"census capped at order {CENSUS_CAP}")
    return [g for g in enumerate_graphs(n)[n] if is_prime(g)]


def census_csv(counts: list[int]) -> str:
    lines = ["order,count"]
    lines += [f"{order},{count}" for order, count in enumerate(counts)]
    return "\n".join(lines) + "\n"


def census_json(counts: list[int]) -> dict:
    return {"prime_class_counts": {str(i): c for i, c in enumerate(counts)}}
