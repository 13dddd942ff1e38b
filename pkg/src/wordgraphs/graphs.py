"""Finite simple graphs on bit-row adjacency.

A graph stores one integer bitmask per vertex (``rows[i]`` bit ``j`` set iff
``{i, j}`` is an edge), which keeps set operations word-parallel.  Vertices
are always indexed ``0..n-1`` internally; an optional injective ``labels``
map carries external namings such as the ``-1..L-1`` vertex names of word
graphs.  All values are immutable and safe to share across threads.

The canonical-form kernel (exact, refinement plus individualization
backtracking) is capped at :data:`CORE_WIDTH` vertices; every structural
operation accepts arbitrary order since Python integers are unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

CORE_WIDTH = 64

CanonKey = bytes


class GraphError(ValueError):
    """Malformed construction, out-of-range vertex set, or size overflow."""


@dataclass(frozen=True)
class Graph:
    """Undirected loop-free graph with adjacency bit rows.

    Invariants checked on construction: symmetry, irreflexivity, and (when
    present) that ``labels`` is injective and covers all ``n`` vertices.
    """

    n: int
    rows: tuple[int, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {i} has bits outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
        for i in range(self.n):
            ri = self.rows[i]
            for j in range(i + 1, self.n):
                if ((ri >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels must cover exactly the vertex set")
            if len(set(self.labels)) != self.n:
                raise GraphError("labels must be pairwise distinct")

    # -- basic accessors -------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    yield (i, j)
                row >>= 1
                j += 1

    def label_of(self, i: int) -> int:
        return self.labels[i] if self.labels is not None else i

    def index_of_label(self, label: int) -> int:
        if self.labels is None:
            if not 0 <= label < self.n:
                raise GraphError(f"no vertex labelled {label}")
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labelled {label}") from None

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(i) for i in range(self.n)))


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: tuple[int, ...] | None = None) -> Graph:
    rows = [0] * n
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"bad edge ({i}, {j}) for order {n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows), labels)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- elementary operations ----------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on vertex indices ``s``, kept in ascending order."""
    kept = sorted(set(s))
    for v in kept:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex index {v} out of range for order {g.n}")
    pos = {v: a for a, v in enumerate(kept)}
    rows = [0] * len(kept)
    for a, v in enumerate(kept):
        row = g.rows[v]
        acc = 0
        for w in kept:
            if (row >> w) & 1:
                acc |= 1 << pos[w]
        rows[a] = acc
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[v] for v in kept)
    return Graph(len(kept), tuple(rows), labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full ^ r ^ (1 << i)) for i, r in enumerate(g.rows))
    return Graph(g.n, rows, g.labels)


def add_vertex(g: Graph, neighbors: int) -> Graph:
    """Extend by one vertex adjacent to the index set in mask ``neighbors``."""
    if neighbors >> g.n:
        raise GraphError("neighborhood mask exceeds vertex set")
    rows = [r | (((neighbors >> i) & 1) << g.n) for i, r in enumerate(g.rows)]
    rows.append(neighbors)
    return Graph(g.n + 1, tuple(rows))


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of ``g``; adjacency iff edges share an endpoint."""
    edge_list = list(g.edges())
    m = len(edge_list)
    rows = [0] * m
    for a in range(m):
        ia, ja = edge_list[a]
        for b in range(a + 1, m):
            ib, jb = edge_list[b]
            if ia in (ib, jb) or ja in (ib, jb):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return Graph(m, tuple(rows))


# -- standard families ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("order must be nonnegative")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)]) if n else empty_graph(0)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "clique": clique,
    "complete_bipartite": complete_bipartite,
    "empty": empty_graph,
}


def make(family: str, *params: int) -> Graph:
    """Deterministic standard constructions, e.g. ``make("path", 5)``."""
    if family not in _FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    if any(p < 0 for p in params):
        raise GraphError("family parameters must be nonnegative")
    return _FAMILIES[family](*params)


# -- canonical form --------------------------------------------------------
#
# Exact canonical labelling: equitable refinement (cells split by neighbor
# counts, subcells ordered by count) followed by individualization search on
# the first non-singleton cell.  Twin cells (identical rows outside the cell,
# complete or empty inside) admit any internal order without changing the
# encoding, so they never branch; this keeps cliques, independent sets and
# unions of twins linear.  The minimum upper-triangle encoding over all search
# leaves is the canonical form; exactness, not hashing, because age sets and
# census counts deduplicate by key.


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        stable = True
        for splitter in list(cells):
            smask = 0
            for v in splitter:
                smask |= 1 << v
            for di, cell in enumerate(cells):
                if len(cell) <= 1:
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(groups) > 1:
                    cells[di:di + 1] = [groups[c] for c in sorted(groups)]
                    stable = False
                    break
            if not stable:
                break
        if stable:
            return cells


def _is_twin_cell(rows: tuple[int, ...], cell: list[int]) -> bool:
    if len(cell) <= 1:
        return True
    cmask = 0
    for v in cell:
        cmask |= 1 << v
    outside = rows[cell[0]] & ~cmask
    if any(rows[v] & ~cmask != outside for v in cell[1:]):
        return False
    inner = [rows[v] & cmask for v in cell]
    if all(x == 0 for x in inner):
        return True
    return all(inner[k] == cmask ^ (1 << v) for k, v in enumerate(cell))


def _encode(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for i, v in enumerate(order):
        rv = rows[v]
        for w in order[i + 1:]:
            code = (code << 1) | ((rv >> w) & 1)
    return code


def _canonical_order(g: Graph) -> list[int]:
    if g.n > CORE_WIDTH:
        raise GraphError(f"canonical form capped at {CORE_WIDTH} vertices")
    rows = g.rows
    if g.n <= 1:
        return list(range(g.n))
    best_code: int | None = None
    best_order: list[int] = []

    def walk(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(rows, cells)
        target = -1
        for ci, cell in enumerate(cells):
            if len(cell) > 1 and not _is_twin_cell(rows, cell):
                target = ci
                break
        if target < 0:
            order = [v for cell in cells for v in sorted(cell)]
            code = _encode(rows, order)
            if best_code is None or code < best_code:
                best_code = code
                best_order = order
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [w for w in cell if w != v]
            walk(cells[:target] + [[v], rest] + cells[target + 1:])

    walk([list(range(g.n))])
    return best_order


@lru_cache(maxsize=1 << 18)
def _canonical_cached(n: int, rows: tuple[int, ...]) -> tuple[CanonKey, tuple[int, ...]]:
    order = _canonical_order(Graph(n, rows))
    code = _encode(rows, order)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    key = bytes([n]) + code.to_bytes(nbytes, "big")
    return key, tuple(order)


def canonical_key(g: Graph) -> CanonKey:
    """Byte key equal for two graphs iff they are isomorphic (exact)."""
    return _canonical_cached(g.n, g.rows)[0]


def canonical_form(g: Graph) -> Graph:
    """Canonically relabelled copy; labels are dropped."""
    order = _canonical_cached(g.n, g.rows)[1]
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for i, v in enumerate(order):
        acc = 0
        for w in _bits(g.rows[v]):
            acc |= 1 << pos[w]
        rows[i] = acc
    return Graph(g.n, tuple(rows))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_key(g) == canonical_key(h)


# -- induced-subgraph embedding -------------------------------------------


def embedding(h: Graph, g: Graph) -> tuple[int, ...] | None:
    """An injective map realizing ``h`` as an induced subgraph of ``g``.

    Returns the image of pattern vertex ``p`` at position ``p``, or ``None``.
    Backtracking over bitmask candidate sets with forward checking: every
    assignment intersects the candidates of all unmapped pattern vertices
    with the neighborhood (or non-neighborhood) of the image, and the most
    constrained pattern vertex is branched next.
    """
    nh, ng = h.n, g.n
    if nh == 0:
        return ()
    if nh > ng:
        return None
    full = (1 << ng) - 1
    hdeg = [h.degree(i) for i in range(nh)]
    gdeg = [g.degree(i) for i in range(ng)]
    base = []
    for p in range(nh):
        mask = 0
        for v in range(ng):
            if gdeg[v] >= hdeg[p] and (ng - 1 - gdeg[v]) >= (nh - 1 - hdeg[p]):
                mask |= 1 << v
        if not mask:
            return None
        base.append(mask)

    image = [-1] * nh

    def solve(done: int, used: int, cands: list[int]) -> bool:
        if done == nh:
            return True
        pick, pick_count = -1, ng + 1
        for p in range(nh):
            if image[p] < 0:
                count = (cands[p] & ~used).bit_count()
                if count == 0:
                    return False
                if count < pick_count:
                    pick, pick_count = p, count
        p = pick
        for v in _bits(cands[p] & ~used):
            grows_v = g.rows[v]
            feasible = True
            nxt = cands[:]
            for q in range(nh):
                if q == p or image[q] >= 0:
                    continue
                narrowed = cands[q] & (grows_v if h.has_edge(p, q)
                                       else full ^ grows_v)
                nxt[q] = narrowed
                if not narrowed & ~(used | (1 << v)):
                    feasible = False
                    break
            if feasible:
                image[p] = v
                if solve(done + 1, used | (1 << v), nxt):
                    return True
                image[p] = -1
        return False

    if not solve(0, 0, base):
        return None
    return tuple(image)


def embeds(h: Graph, g: Graph) -> bool:
    """True iff some vertex subset of ``g`` induces a copy of ``h``."""
    return embedding(h, g) is not None


# -- exhaustive small-graph generation --------------------------------------


_LEVEL_CACHE: list[tuple[Graph, ...]] = [(empty_graph(0),)]


def enumerate_graphs(n_max: int) -> list[list[Graph]]:
    """All isomorphism classes per order ``0..n_max`` (canonical reps).

    Level ``k + 1`` is built by attaching one vertex to each level-``k``
    representative with every possible neighborhood, deduplicating by
    canonical key.  Exhaustive: deleting the last vertex of any class leaves
    a class of the previous level.  Levels are cached across calls.
    """
    while len(_LEVEL_CACHE) <= n_max:
        k = len(_LEVEL_CACHE) - 1
        seen: dict[CanonKey, Graph] = {}
        for g in _LEVEL_CACHE[k]:
            for nbrs in range(1 << k):
                ext = add_vertex(g, nbrs)
                key = canonical_key(ext)
                if key not in seen:
                    seen[key] = canonical_form(ext)
        _LEVEL_CACHE.append(tuple(seen[key] for key in sorted(seen)))
    return [list(level) for level in _LEVEL_CACHE[:n_max + 1]]
