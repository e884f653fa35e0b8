"""Fibers, minimal generating sets, redundancy and indispensability.

All the ideal-membership questions here go through fiber connectivity:
for binomials F inside a toric ideal, ``x^u - x^v`` lies in the ideal
generated by F exactly when u and v are joined by a chain of F-moves
``m -> m - f.plus + f.minus`` (or the reverse), and every monomial on such
a chain shares the degree ``A u``. This turns membership into a graph search
inside a finite fiber. The Groebner route in module ``ideal`` answers the same
questions independently and is used to cross-check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import lattice
from .config import Configuration, normalize_rows
from .errors import NotInIdeal, NotNormalized
from .ideal import Binomial, DEFAULT_ORDER, GroebnerBasis, Monomial, toric_groebner

DegreeVector = tuple[int, ...]


@dataclass(frozen=True)
class Fiber:
    degree: DegreeVector
    monomials: tuple[Monomial, ...]

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, m):
        return tuple(m) in set(self.monomials)


def _nonnegative(c: Configuration) -> Configuration:
    return c if c.is_nonnegative() else normalize_rows(c)


def enumerate_fiber(c: Configuration, b: Sequence[int], limit: int | None = None) -> Fiber:
    """All ``u >= 0`` with ``A u = b``, in decreasing lex order.

    Depth-first over the columns with the residual ``b - A u`` kept
    nonnegative. Rows still needing mass must be coverable by the columns not
    yet decided, which prunes most dead branches early. With ``limit`` the
    search stops after that many monomials (the result is then partial).
    """
    if not c.is_nonnegative():
        raise NotNormalized("fiber enumeration needs a nonnegative matrix; apply normalize_rows")
    b = tuple(int(x) for x in b)
    if len(b) != c.d:
        raise ValueError(f"degree vector has length {len(b)}, expected {c.d}")
    total = c.total_degree(b)
    if total < 0 or total.denominator != 1 or any(x < 0 for x in b):
        return Fiber(b, ())
    cols = c.columns
    n, d = c.n, c.d
    # covered[j]: rows with a positive entry in some column >= j
    covered = [set() for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        covered[j] = covered[j + 1] | {i for i in range(d) if cols[j][i] > 0}
    out: list[Monomial] = []
    u = [0] * n

    class _Done(Exception):
        pass

    def dfs(j, rest):
        if not any(rest):
            out.append(tuple(u))
            if limit is not None and len(out) >= limit:
                raise _Done
            return
        if j == n:
            return
        if any(rest[i] and i not in covered[j] for i in range(d)):
            return
        col = cols[j]
        top = min(rest[i] // col[i] for i in range(d) if col[i])
        for k in range(top, -1, -1):
            u[j] = k
            dfs(j + 1, [r - k * a for r, a in zip(rest, col)] if k else rest)
        u[j] = 0

    try:
        dfs(0, list(b))
    except _Done:
        pass
    return Fiber(b, tuple(out))


class MoveSet:
    """Binomials used as moves, indexed by each of their two monomials.

    Neighbours of ``m`` are found by looking up every sub-monomial of ``m``
    whose degree matches some move, so the cost does not grow with the number
    of moves.
    """

    def __init__(self, moves: Iterable[Binomial] = ()):
        self.table: dict[Monomial, list[Monomial]] = {}
        self.degrees: set[int] = set()
        self.moves: list[Binomial] = []
        for g in moves:
            self.add(g)

    def add(self, g: Binomial):
        self.moves.append(g)
        self.table.setdefault(g.plus, []).append(g.minus)
        self.table.setdefault(g.minus, []).append(g.plus)
        self.degrees.add(g.degree)

    def __len__(self):
        return len(self.moves)

    def neighbours(self, m: Monomial) -> Iterator[Monomial]:
        if not self.table:
            return
        idx = [i for i, x in enumerate(m) if x]
        deg_m = sum(m)
        degrees = {k for k in self.degrees if k <= deg_m}
        if not degrees:
            return
        zero = [0] * len(m)
        for exps in product(*(range(m[i] + 1) for i in idx)):
            k = sum(exps)
            if k not in degrees:
                continue
            s = list(zero)
            for i, e in zip(idx, exps):
                s[i] = e
            others = self.table.get(tuple(s))
            if others:
                for t in others:
                    yield tuple(a - x + y for a, x, y in zip(m, s, t))


def connected(a: Monomial, b: Monomial, moves: MoveSet) -> bool:
    """Whether ``a`` and ``b`` are joined by a chain of moves (BFS from ``a``)."""
    a, b = tuple(a), tuple(b)
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        m = queue.popleft()
        for nb in moves.neighbours(m):
            if nb == b:
                return True
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return False


def fiber_classes(fiber: Fiber, moves: MoveSet) -> list[list[Monomial]]:
    """Connected components of the fiber under the moves, each sorted, in fiber order."""
    index = {m: k for k, m in enumerate(fiber.monomials)}
    parent = list(range(len(index)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m, k in index.items():
        for nb in moves.neighbours(m):
            j = index.get(nb)
            if j is None:
                raise AssertionError("a move left the fiber; moves must lie in the toric ideal")
            ra, rb = find(k), find(j)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[Monomial]] = {}
    for m, k in index.items():
        groups.setdefault(find(k), []).append(m)
    return [groups[r] for r in sorted(groups)]


def _degree_key(c: Configuration, deg: DegreeVector) -> tuple:
    return (c.total_degree(deg), deg)


def _support_size(p: Monomial, q: Monomial) -> int:
    return sum(1 for x, y in zip(p, q) if x or y)


def _connectors(classes: list[list[Monomial]], tiebreak: str) -> list[Binomial]:
    """A spanning set of binomials joining the classes (Kruskal over cross pairs)."""
    pairs = []
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            for p in classes[a]:
                for q in classes[b]:
                    hi, lo = (p, q) if p > q else (q, p)
                    if tiebreak == "support":
                        key = (_support_size(hi, lo), tuple(-x for x in hi), tuple(-x for x in lo))
                    elif tiebreak == "lex":
                        key = (tuple(-x for x in hi), tuple(-x for x in lo))
                    elif tiebreak == "reverse":
                        key = (hi, lo)
                    else:
                        raise ValueError(f"unknown tiebreak {tiebreak!r}")
                    pairs.append((key, a, b, hi, lo))
    pairs.sort()
    parent = list(range(len(classes)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    out = []
    for _, a, b, hi, lo in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            out.append(Binomial(hi, lo))
            if len(out) == len(classes) - 1:
                break
    return out


def minimal_generators(
    c: Configuration,
    gb: GroebnerBasis | None = None,
    tiebreak: str = "support",
) -> list[Binomial]:
    """A minimal binomial generating set of the toric ideal, degree by degree.

    Candidate degrees are the multidegrees of a Groebner basis. Fibers are
    processed by increasing total degree; in each, the classes under moves by
    the generators chosen so far are joined by connectors. ``tiebreak``
    selects connectors: ``"support"`` prefers small support, then
    lexicographically largest monomials; ``"lex"`` and ``"reverse"`` are
    alternative deterministic choices (the degree multiset never depends on
    this).
    """
    cn = _nonnegative(c)
    if gb is None:
        gb = toric_groebner(c, DEFAULT_ORDER)
    degrees = sorted({cn.degree_of(g.plus) for g in gb.elements}, key=lambda x: _degree_key(cn, x))
    chosen: list[Binomial] = []
    moves = MoveSet()
    for deg in degrees:
        fiber = enumerate_fiber(cn, deg)
        classes = fiber_classes(fiber, moves)
        new = _connectors(classes, tiebreak)
        for g in new:
            chosen.append(g)
        for g in new:
            moves.add(g)
    return chosen


def lower_moves(gens: Sequence[Binomial], degree: int) -> MoveSet:
    """Moves by the generators of total degree strictly below ``degree``."""
    return MoveSet(g for g in gens if g.degree < degree)


def _check(b: Binomial, c: Configuration):
    if b.n != c.n or any(lattice.mat_vec(c.matrix, b.vector)):
        raise NotInIdeal(f"{b} is not in the toric ideal")


def is_redundant(b: Binomial, c: Configuration, gens: Sequence[Binomial] | None = None) -> bool:
    """True iff ``b`` lies in no minimal generating system.

    That happens exactly when its two monomials are already connected inside
    their fiber by binomials of strictly smaller degree.
    """
    _check(b, c)
    if gens is None:
        gens = minimal_generators(c)
    return connected(b.plus, b.minus, lower_moves(gens, b.degree))


def is_indispensable(b: Binomial, c: Configuration, gens: Sequence[Binomial] | None = None) -> bool:
    """True iff the fiber of ``b`` has exactly the two singleton classes {plus}, {minus}."""
    _check(b, c)
    if gens is None:
        gens = minimal_generators(c)
    cn = _nonnegative(c)
    fiber = enumerate_fiber(cn, cn.degree_of(b.plus), limit=3)
    if set(fiber.monomials) != {b.plus, b.minus}:
        return False
    return not connected(b.plus, b.minus, lower_moves(gens, b.degree))


def generates(family: Iterable[Binomial], gens: Sequence[Binomial]) -> Binomial | None:
    """Whether ``family`` (inside the toric ideal) generates the ideal of ``gens``.

    Returns None when every generator is reachable, otherwise the first
    generator whose monomials are not connected by moves of the family.
    """
    family = list(family)
    for g in gens:
        moves = MoveSet(f for f in family if f.degree <= g.degree)
        if not connected(g.plus, g.minus, moves):
            return g
    return None


def degree_multiset(c: Configuration, gens: Iterable[Binomial]) -> list[tuple[Fraction, DegreeVector]]:
    cn = _nonnegative(c)
    return sorted(_degree_key(cn, cn.degree_of(g.plus)) for g in gens)
