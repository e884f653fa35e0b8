"""Graphs, even closed walks and the odd-cycle patterns behind circuit generation.

Vertices are 1..d and edge ``i`` (1-based, input order) corresponds to the
variable ``x_i`` of the incidence configuration. Internally edge indices are
0-based like every other exponent vector in the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .circuits import Circuit
from .config import graph_incidence
from .errors import (
    DegenerateWalk,
    InvalidGraph,
    NotInIdeal,
    ParseError,
    TooLarge,
    WalkNotClosed,
    WalkNotEven,
)
from .ideal import Binomial

Cycle = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple connected graph on vertices ``1..n_vertices``."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        d = self.n_vertices
        if d < 1:
            raise InvalidGraph("a graph needs at least one vertex")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise InvalidGraph(f"edge {e!r} is not a pair")
            u, v = e
            if not (1 <= u <= d and 1 <= v <= d):
                raise InvalidGraph(f"edge {e!r} has a vertex outside 1..{d}")
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            key = frozenset(e)
            if key in seen:
                raise InvalidGraph(f"repeated edge {e!r}")
            seen.add(key)
        if not self._is_connected():
            raise InvalidGraph("graph is not connected")

    def _is_connected(self) -> bool:
        adj = {v: set() for v in range(1, self.n_vertices + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        stack, seen = [1], {1}
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        return len(seen) == self.n_vertices

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def edge_index(self) -> dict[frozenset[int], int]:
        """0-based edge index of each unordered vertex pair."""
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self):
        """The vertex-edge incidence configuration (computed once)."""
        return graph_incidence(self)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edge_between(self, u: int, v: int) -> int:
        try:
            return self.edge_index[frozenset((u, v))]
        except KeyError:
            raise InvalidGraph(f"no edge {{{u},{v}}}") from None

    def induced_edges(self, vs: Iterable[int]) -> list[tuple[int, int]]:
        s = set(vs)
        return [e for e in self.edges if e[0] in s and e[1] in s]


def new_graph(n_vertices: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n_vertices, tuple((int(u), int(v)) for u, v in edges))


def from_incidence(matrix: Sequence[Sequence[int]]) -> Graph:
    """Graph whose vertex-edge incidence matrix is ``matrix`` (columns are edges)."""
    d = len(matrix)
    edges = []
    for j in range(len(matrix[0])):
        ends = [i + 1 for i in range(d) if matrix[i][j]]
        if len(ends) != 2 or any(matrix[i - 1][j] != 1 for i in ends):
            raise InvalidGraph(f"column {j + 1} is not an edge column")
        edges.append(tuple(ends))
    return new_graph(d, edges)


def parse_graph(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        d, n = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed graph file: {exc}") from exc
    if len(edges) != n or any(len(e) != 2 for e in edges):
        raise ParseError(f"expected {n} lines of two vertex indices")
    return new_graph(d, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n_vertices} {g.n_edges}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"


def complete_graph(k: int, offset: int = 0) -> list[tuple[int, int]]:
    """Edges of the complete graph on ``offset+1 .. offset+k``."""
    return [(offset + i, offset + j) for i, j in combinations(range(1, k + 1), 2)]


def clique_sum_of_complete(k1: int, k2: int, shared: int) -> Graph:
    """Clique sum of K_{k1} and K_{k2} glued along ``shared`` vertices.

    The first graph uses vertices 1..k1, the second k1-shared+1 .. k1-shared+k2,
    so the glued clique is the last ``shared`` vertices of the first. Gluing
    along k+1 vertices is a k-sum. Edges are listed in lex order.
    """
    if not 1 <= shared <= min(k1, k2):
        raise ValueError("shared clique must be nonempty and fit both graphs")
    edges = set(complete_graph(k1)) | set(complete_graph(k2, k1 - shared))
    return new_graph(k1 + k2 - shared, sorted(edges))


# ---------------------------------------------------------------- cycles & walks


def cycles(g: Graph) -> list[Cycle]:
    """All cycles as vertex tuples: smallest vertex first, second < last.

    Sorted by (length, vertices).
    """
    cached = g.__dict__.get("_cycles")
    if cached is not None:
        return list(cached)
    adj = g.adjacency
    out = []
    for s in g.vertices:
        stack = [(s, [s], {s})]
        while stack:
            x, path, used = stack.pop()
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif y > s and y not in used:
                    stack.append((y, path + [y], used | {y}))
    out.sort(key=lambda c: (len(c), c))
    object.__setattr__(g, "_cycles", tuple(out))
    return out


def is_chordless(g: Graph, cyc: Cycle) -> bool:
    return len(g.induced_edges(cyc)) == len(cyc)


def chordless_cycles(g: Graph) -> list[Cycle]:
    return [c for c in cycles(g) if is_chordless(g, c)]


def cycle_edges(g: Graph, cyc: Sequence[int]) -> list[int]:
    """0-based edge indices along a closed vertex sequence."""
    return [g.edge_between(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]


def _rotate(cyc: Sequence[int], v: int) -> list[int]:
    k = list(cyc).index(v)
    return list(cyc[k:]) + list(cyc[:k])


def _walk_vertices(g: Graph, walk: Sequence[int]) -> list[int] | None:
    """Vertex sequence v_0..v_{q-1} traversing 1-based ``walk``, or None if not closed."""
    if not walk:
        return None
    ends = [g.edges[i - 1] for i in walk]
    for start in (ends[0][0], ends[0][1]):
        seq = [start]
        cur = start
        ok = True
        for u, v in ends:
            if cur == u:
                cur = v
            elif cur == v:
                cur = u
            else:
                ok = False
                break
            seq.append(cur)
        if ok and cur == start:
            return seq[:-1]
    return None


def walk_binomial(walk: Sequence[int], g: Graph) -> Binomial:
    """``f_walk``: odd-position edges minus even-position edges.

    ``walk`` is a sequence of 1-based edge indices forming a closed walk of
    even length.
    """
    walk = list(walk)
    if any(not 1 <= i <= g.n_edges for i in walk):
        raise WalkNotClosed(f"edge index out of range 1..{g.n_edges}")
    if len(walk) % 2:
        raise WalkNotEven(f"walk has odd length {len(walk)}")
    if _walk_vertices(g, walk) is None:
        raise WalkNotClosed("consecutive edges do not chain into a closed walk")
    plus = [0] * g.n_edges
    minus = [0] * g.n_edges
    for pos, i in enumerate(walk):
        (plus if pos % 2 == 0 else minus)[i - 1] += 1
    if plus == minus:
        raise DegenerateWalk("walk binomial is zero")
    return Binomial(tuple(plus), tuple(minus))


def vertex_walk_binomial(g: Graph, seq: Sequence[int]) -> Binomial:
    """Walk binomial of the closed vertex sequence ``seq`` (last vertex joins the first)."""
    return walk_binomial([i + 1 for i in cycle_edges(g, seq)], g)


# ---------------------------------------------------------------- circuits


def _odd_pairs(cyc_list: Sequence[Cycle]):
    odd = [c for c in cyc_list if len(c) % 2]
    for a, b in combinations(odd, 2):
        yield a, b


def _paths_between(g: Graph, a: int, targets: set[int], avoid: set[int]):
    """Simple paths from ``a`` to a vertex of ``targets``; internal vertices avoid ``avoid``."""
    adj = g.adjacency
    stack = [(a, [a])]
    while stack:
        x, path = stack.pop()
        for y in adj[x]:
            if y in targets:
                yield path + [y]
            elif y not in avoid and y not in path:
                stack.append((y, path + [y]))


def enumerate_graph_circuits(g: Graph) -> list[Circuit]:
    """Circuits of the incidence configuration built from the three walk shapes.

    Even cycles; two odd cycles sharing exactly one vertex; two vertex-disjoint
    odd cycles with a connecting path whose internal vertices avoid both. The
    result is deduplicated by support and sorted like
    :func:`toricirc.circuits.enumerate_circuits`.
    """
    found: dict[tuple[int, ...], Circuit] = {}

    def add(seq):
        c = Circuit.from_vector(vertex_walk_binomial(g, seq).vector)
        found.setdefault(c.support, c)

    cyc_list = cycles(g)
    for cyc in cyc_list:
        if len(cyc) % 2 == 0:
            add(cyc)
    for c1, c2 in _odd_pairs(cyc_list):
        common = set(c1) & set(c2)
        if len(common) == 1:
            (v,) = common
            add(_rotate(c1, v) + _rotate(c2, v))
        elif not common:
            s1, s2 = set(c1), set(c2)
            for a in c1:
                for path in _paths_between(g, a, s2, s1 | s2):
                    b = path[-1]
                    # C1 from a, path to b, C2 from b, path back (excluding endpoints)
                    add(_rotate(c1, a) + path[:-1] + _rotate(c2, b) + path[-1:0:-1])
    return sorted(found.values(), key=Circuit.sort_key)


# ---------------------------------------------------------------- odd cycle condition


def _disjoint_chordless_odd_pairs(g: Graph):
    # A chord of an odd cycle splits it into a shorter odd cycle on a subset of
    # its vertices, so for questions about disjoint, non-adjacent odd cycles
    # the chordless ones suffice.
    odd = [c for c in chordless_cycles(g) if len(c) % 2]
    for c1, c2 in combinations(odd, 2):
        if not set(c1) & set(c2):
            yield c1, c2


def _joining_edges(g: Graph, c1: Sequence[int], c2: Sequence[int]) -> list[tuple[int, int]]:
    s2 = set(c2)
    return [(u, v) for u in c1 for v in g.adjacency[u] if v in s2]


def odd_cycle_condition(g: Graph) -> bool:
    """Every two vertex-disjoint odd cycles are joined by an edge."""
    return all(_joining_edges(g, c1, c2) for c1, c2 in _disjoint_chordless_odd_pairs(g))


def normality_gap_witness(g: Graph) -> tuple[int, ...] | None:
    """A degree in the normalization but not in the semigroup, if any.

    For disjoint, non-adjacent chordless odd cycles, the 0/1 indicator of
    their vertices is half the sum of their edge columns (so it lies in the
    cone and the lattice), while its fiber is empty: a monomial of that degree
    would be a perfect matching of two disjoint odd cycles. The emptiness is
    confirmed by fiber enumeration rather than assumed.
    """
    from .fibers import enumerate_fiber

    c = None
    for c1, c2 in _disjoint_chordless_odd_pairs(g):
        if _joining_edges(g, c1, c2):
            continue
        s = set(c1) | set(c2)
        deg = tuple(1 if v in s else 0 for v in g.vertices)
        if c is None:
            c = g.incidence
        if not enumerate_fiber(c, deg, limit=1).monomials:
            return deg
    return None


# ---------------------------------------------------------------- patterns


@dataclass(frozen=True)
class PatternWitness:
    """Two disjoint odd cycles and a path between them forming an induced subgraph."""

    cycle1: tuple[int, ...]
    cycle2: tuple[int, ...]
    path: tuple[int, ...]

    @property
    def path_length(self) -> int:
        return len(self.path) - 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle1) | frozenset(self.cycle2) | frozenset(self.path)


def is_pattern(g: Graph, w: PatternWitness, min_path_len: int = 1) -> bool:
    """Check every defining property of a pattern witness against ``g``."""
    c1, c2, p = w.cycle1, w.cycle2, w.path
    if len(c1) % 2 == 0 or len(c2) % 2 == 0 or len(c1) < 3 or len(c2) < 3:
        return False
    if set(c1) & set(c2) or len(set(c1)) != len(c1) or len(set(c2)) != len(c2):
        return False
    if len(p) < 2 or p[0] not in c1 or p[-1] not in c2 or len(set(p)) != len(p):
        return False
    if set(p[1:-1]) & (set(c1) | set(c2)) or w.path_length < min_path_len:
        return False
    try:
        expected = set(cycle_edges(g, c1)) | set(cycle_edges(g, c2))
        expected |= {g.edge_between(p[k], p[k + 1]) for k in range(len(p) - 1)}
    except InvalidGraph:
        return False
    actual = {g.edge_between(u, v) for u, v in g.induced_edges(w.vertices)}
    return actual == expected


def _canonical_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    cyc = _rotate(cyc, min(cyc))
    if len(cyc) > 2 and cyc[1] > cyc[-1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def find_pattern(g: Graph, min_path_len: int = 1) -> PatternWitness | None:
    """An induced pattern with path length >= ``min_path_len``, or None.

    For each pair of disjoint chordless odd cycles: with exactly one edge
    between them that edge is the only candidate path (any longer path would
    leave it as a chord); with none, a depth-first search grows induced paths
    whose vertices see the cycles only at the two endpoints. The search is
    exhaustive, so None is a definite answer.
    """
    if min_path_len not in (1, 2):
        raise ValueError("min_path_len must be 1 or 2")
    adj = g.adjacency
    for c1, c2 in _disjoint_chordless_odd_pairs(g):
        for first, second in ((c1, c2), (c2, c1)):
            w = _pattern_for_pair(g, adj, first, second, min_path_len)
            if w is not None:
                return w
    return None


def _pattern_for_pair(g, adj, c1, c2, min_path_len):
    s1, s2 = set(c1), set(c2)
    joins = _joining_edges(g, c1, c2)
    if len(joins) > 1:
        return None
    if len(joins) == 1:
        if min_path_len > 1:
            return None
        a, b = joins[0]
        return PatternWitness(tuple(c1), tuple(c2), (a, b))
    s = s1 | s2
    for a in c1:
        # path holds a, x_1, ..., x_t; every x_i is outside s and sees only its
        # path neighbours among path + c1; only the last may touch c2.
        stack = []
        for x in sorted(adj[a] - s):
            if adj[x] & s1 == {a}:
                stack.append([a, x])
        while stack:
            path = stack.pop()
            x = path[-1]
            hits = adj[x] & s2
            if hits:
                if len(hits) == 1:
                    (b,) = hits
                    full = path + [b]
                    if len(full) - 1 >= min_path_len:
                        return PatternWitness(tuple(c1), tuple(c2), tuple(full))
                continue
            inner = set(path)
            for y in sorted(adj[x] - s - inner, reverse=True):
                if adj[y] & (inner | s1) == {x}:
                    stack.append(path + [y])
    return None


def _bridges(vs: Sequence[int], edges: Sequence[tuple[int, int]]) -> set[frozenset[int]]:
    out = set()
    for e in edges:
        rest = [f for f in edges if f is not e]
        adj = {v: set() for v in vs}
        for u, v in rest:
            adj[u].add(v)
            adj[v].add(u)
        stack, seen = [e[0]], {e[0]}
        while stack:
            x = stack.pop()
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        if e[1] not in seen:
            out.add(frozenset(e))
    return out


def _components(vs, edges):
    adj = {v: set() for v in vs}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, comps = set(), []
    for v in vs:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x] - seen:
                seen.add(y)
                stack.append(y)
        comps.append(comp)
    return comps, adj


def _cycle_order(comp, adj) -> list[int]:
    start = min(comp)
    seq = [start]
    prev, cur = None, start
    while True:
        nxt = min(y for y in adj[cur] if y != prev) if prev is not None else min(adj[cur])
        if nxt == start:
            return seq
        seq.append(nxt)
        prev, cur = cur, nxt


def pattern_oracle(g: Graph, min_path_len: int = 1) -> PatternWitness | None:
    """Exhaustive pattern search over vertex subsets (small graphs only).

    A subset is a pattern when its induced subgraph is connected, has one more
    edge than vertices, exactly two vertices of degree 3 (the rest degree 2),
    bridges forming a path of the required length, and two odd cycles left
    after removing the bridges.
    """
    if min_path_len not in (1, 2):
        raise ValueError("min_path_len must be 1 or 2")
    if g.n_vertices > 20:
        raise TooLarge("pattern_oracle enumerates all vertex subsets; at most 20 vertices")
    smallest = 6 + (min_path_len - 1)
    for size in range(smallest, g.n_vertices + 1):
        for vs in combinations(g.vertices, size):
            edges = g.induced_edges(vs)
            if len(edges) != size + 1:
                continue
            deg = {v: 0 for v in vs}
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            threes = [v for v in vs if deg[v] == 3]
            if len(threes) != 2 or any(deg[v] not in (2, 3) for v in vs):
                continue
            comps, _ = _components(vs, edges)
            if len(comps) != 1:
                continue
            br = _bridges(vs, edges)
            if len(br) < min_path_len:
                continue
            rest = [e for e in edges if frozenset(e) not in br]
            comps, adj = _components(vs, rest)
            cyc_comps = [c for c in comps if len(c) > 1]
            if len(cyc_comps) != 2 or any(len(c) % 2 == 0 for c in cyc_comps):
                continue
            c1, c2 = (_cycle_order(c, adj) for c in cyc_comps)
            # path: walk the bridges from the degree-3 vertex of c1
            badj: dict[int, set[int]] = {}
            for e in br:
                u, v = tuple(e)
                badj.setdefault(u, set()).add(v)
                badj.setdefault(v, set()).add(u)
            (a,) = [v for v in threes if v in c1]
            path = [a]
            while len(path) == 1 or path[-1] not in c2:
                nxt = [y for y in badj[path[-1]] if y not in path]
                path.append(nxt[0])
            return PatternWitness(tuple(c1), tuple(c2), tuple(path))
    return None


# ---------------------------------------------------------------- walk types


class WalkType(str, enum.Enum):
    EVEN_CYCLE = "even_cycle"
    TWO_CYCLES_SHARED_VERTEX = "two_cycles_shared_vertex"
    TWO_CYCLES_PATH = "two_cycles_path"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WalkShape:
    """How a binomial is realized as an even closed walk.

    ``walk`` is a closed vertex sequence realizing the binomial exactly.
    For two_cycles_path, ``path`` is the connecting path when the walk is
    ``(C1, path, C2, path reversed)``, and None for the general shape
    ``(C1, W1, C2, W2)`` with arbitrary connecting walks.
    """

    kind: WalkType
    walk: tuple[int, ...] = ()
    cycles: tuple[tuple[int, ...], ...] = ()
    path: tuple[int, ...] | None = None

    @property
    def path_length(self) -> int | None:
        return None if self.path is None else len(self.path) - 1


_RANK = {
    WalkType.EVEN_CYCLE: 0,
    WalkType.TWO_CYCLES_SHARED_VERTEX: 1,
    WalkType.TWO_CYCLES_PATH: 2,
    WalkType.OTHER: 4,
}


def _alternating_walks(g: Graph, b: Binomial, cap: int):
    """Closed walks using each edge copy of ``b`` once, alternating plus/minus."""
    left = [list(b.plus), list(b.minus)]
    total = b.degree * 2
    first = next(i for i, x in enumerate(b.plus) if x)
    incident: dict[int, list[int]] = {}
    for i in b.support:
        for v in g.edges[i]:
            incident.setdefault(v, []).append(i)
    count = 0
    for start in g.edges[first]:
        other = g.edges[first][0] if start == g.edges[first][1] else g.edges[first][1]
        left[0][first] -= 1
        seq = [start, other]

        def dfs():
            nonlocal count
            if count >= cap:
                return
            if len(seq) == total + 1:
                if seq[-1] == start:
                    count += 1
                    yield tuple(seq[:-1])
                return
            side = (len(seq) - 1) % 2
            cur = seq[-1]
            for i in incident.get(cur, ()):
                if left[side][i]:
                    u, v = g.edges[i]
                    nxt = v if u == cur else u
                    left[side][i] -= 1
                    seq.append(nxt)
                    yield from dfs()
                    seq.pop()
                    left[side][i] += 1

        yield from dfs()
        left[0][first] += 1


def _is_cycle_walk(seg: Sequence[int]) -> bool:
    # closed segment v0 .. vk with v0 == vk, k >= 3, inner vertices distinct
    inner = seg[:-1]
    return len(seg) >= 4 and seg[0] == seg[-1] and len(set(inner)) == len(inner)


def _shape_of_walk(w: tuple[int, ...]) -> WalkShape:
    L = len(w)
    if len(set(w)) == L:
        return WalkShape(WalkType.EVEN_CYCLE, w, (w,))
    best = WalkShape(WalkType.OTHER, w)
    for r in range(L):
        rot = w[r:] + w[:r]
        ext = rot + (rot[0],)
        # shared vertex: rot = C1 C2 both starting at rot[0]
        for k in range(3, L - 2):
            if rot[k] == rot[0]:
                a, b = ext[: k + 1], ext[k:]
                if (
                    _is_cycle_walk(a) and _is_cycle_walk(b) and k % 2 == 1
                    and set(a) & set(b) == {rot[0]}
                ):
                    return WalkShape(WalkType.TWO_CYCLES_SHARED_VERTEX, w, (a[:-1], b[:-1]))
        # two_cycles_path: rot = C1 (0..j) W1 (j..k) C2 (k..l) W2 (l..L)
        for j in range(3, L, 2):
            if rot[j] != rot[0] or not _is_cycle_walk(ext[: j + 1]):
                continue
            c1 = set(ext[:j])
            for k in range(j + 1, L):
                for l in range(k + 3, L, 2):
                    if (l - k) % 2 == 0 or rot[l] != rot[k]:
                        continue
                    seg = ext[k : l + 1]
                    if not _is_cycle_walk(seg) or set(seg) & c1:
                        continue
                    w1 = ext[j : k + 1]
                    w2 = ext[l:]
                    cyc = (ext[:j], seg[:-1])
                    if w2[::-1] == w1 and len(set(w1)) == len(w1) and not (set(w1[1:-1]) & (c1 | set(seg))):
                        return WalkShape(WalkType.TWO_CYCLES_PATH, w, cyc, tuple(w1))
                    if best.kind is WalkType.OTHER:
                        best = WalkShape(WalkType.TWO_CYCLES_PATH, w, cyc, None)
    return best


def walk_shape(b: Binomial, g: Graph, cap: int = 20000) -> WalkShape:
    """Best walk shape realizing ``b`` up to sign, searching alternating closed walks."""
    if b.n != g.n_edges:
        raise NotInIdeal(f"binomial has {b.n} variables, graph has {g.n_edges} edges")
    c = g.incidence
    if any(x - y for x, y in zip(c.degree_of(b.plus), c.degree_of(b.minus))):
        raise NotInIdeal(f"{b} is not in the toric ideal of the graph")
    best = WalkShape(WalkType.OTHER)
    best_rank = _RANK[WalkType.OTHER] + 1
    for w in _alternating_walks(g, b, cap):
        s = _shape_of_walk(w)
        rank = _RANK[s.kind] + (1 if s.kind is WalkType.TWO_CYCLES_PATH and s.path is None else 0)
        if rank < best_rank:
            best, best_rank = s, rank
            if rank == 0:
                break
    return best


def classify_walk_type(b: Binomial, g: Graph) -> WalkType:
    return walk_shape(b, g).kind
