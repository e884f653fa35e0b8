"""Binomials, monomial orders and binomial Groebner bases.

Every polynomial handled here is a pure difference binomial ``x^a - x^b``.
Reducing such a binomial by other binomials always yields a binomial or zero,
so the Groebner machinery works on pairs of monomials only. Internally a
monomial is packed into one Python int (fixed-width fields with a guard bit),
which turns divisibility tests and monomial products into single integer
operations.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence

from . import lattice
from .errors import ParseError

if TYPE_CHECKING:
    from .config import Configuration

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus``.

    Binomials coming from kernel vectors have disjoint supports; intermediate
    binomials of non-saturated ideals may share variables.
    """

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("monomials over different variable counts")
        if self.plus == self.minus:
            raise ValueError("x^u - x^u is the zero binomial")

    @classmethod
    def from_vector(cls, u: Sequence[int]) -> "Binomial":
        return cls(tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))

    @property
    def n(self) -> int:
        return len(self.plus)

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def degree(self) -> int:
        return sum(self.plus)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if self.plus[i] or self.minus[i])

    def is_pure(self) -> bool:
        return not any(a and b for a, b in zip(self.plus, self.minus))

    def negate(self) -> "Binomial":
        return Binomial(self.minus, self.plus)

    def oriented(self, order: "MonomialOrder") -> "Binomial":
        return self if order.key(self.plus) > order.key(self.minus) else self.negate()

    def canonical(self) -> "Binomial":
        return self.oriented(GRADED_LEX_DEFAULT)

    def same_up_to_sign(self, other: "Binomial") -> bool:
        return self == other or self == other.negate()

    def sort_key(self):
        return (self.degree, tuple(-e for e in self.plus), tuple(-e for e in self.minus))

    def __str__(self) -> str:
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    exps = [0] * n
    text = re.sub(r"\s+", "", text)
    if text == "1":
        return tuple(exps)
    if not text:
        raise ParseError("empty monomial")
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ParseError(f"bad factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} out of range 1..{n}")
        exps[i - 1] += int(m.group(2) or 1)
    return tuple(exps)


def parse_binomial(text: str, n: int) -> Binomial:
    parts = text.split("-")
    if len(parts) != 2:
        raise ParseError(f"expected 'monomial - monomial', got {text!r}")
    plus, minus = (parse_monomial(p, n) for p in parts)
    try:
        return Binomial(plus, minus)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def sort_binomials(bs: Iterable[Binomial]) -> list[Binomial]:
    return sorted(bs, key=Binomial.sort_key)


def format_binomials(bs: Iterable[Binomial]) -> str:
    return "".join(f"{b}\n" for b in sort_binomials(bs))


ORDER_KINDS = ("lex", "graded-lex", "graded-revlex", "elimination-block", "weight-then-tiebreak")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``permutation`` lists variable indices from the largest variable to the
    smallest. For ``weight-then-tiebreak`` the weights are compared first and
    graded-revlex breaks ties; ``elimination-block`` uses weights as a 0/1
    block indicator (block variables are eliminated first) with the same
    tiebreak.
    """

    kind: str = "graded-revlex"
    permutation: tuple[int, ...] | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind in ("elimination-block", "weight-then-tiebreak") and self.weights is None:
            raise ValueError(f"{self.kind} needs weights")

    def perm(self, n: int) -> tuple[int, ...]:
        p = self.permutation if self.permutation is not None else tuple(range(n))
        if sorted(p) != list(range(n)):
            raise ValueError(f"permutation {p} does not cover {n} variables")
        return p

    def key(self, e: Sequence[int]):
        p = self.perm(len(e))
        if self.kind == "lex":
            return tuple(e[i] for i in p)
        deg = sum(e)
        if self.kind == "graded-lex":
            return (deg,) + tuple(e[i] for i in p)
        revlex = tuple(-e[i] for i in reversed(p))
        if self.kind == "graded-revlex":
            return (deg,) + revlex
        w = sum(a * b for a, b in zip(self.weights, e))
        return (w, deg) + revlex

    @classmethod
    def grevlex_last(cls, n: int, i: int) -> "MonomialOrder":
        """Graded reverse lex in which ``x_i`` is the cheapest variable."""
        return cls("graded-revlex", tuple(j for j in range(n) if j != i) + (i,))

    @classmethod
    def lex_from(cls, ranking: Sequence[int], n: int) -> "MonomialOrder":
        """Lex order whose largest variables are ``ranking`` (in that order)."""
        rest = [j for j in range(n) if j not in set(ranking)]
        return cls("lex", tuple(ranking) + tuple(rest))


DEFAULT_ORDER = MonomialOrder("graded-revlex")
GRADED_LEX_DEFAULT = MonomialOrder("graded-lex")


class _Packer:
    """Fixed-width packing of exponent vectors into ints, x_1 in the low bits.

    Each field has a guard bit on top that is zero in a valid monomial, so
    ``((a | G) - b) & G`` has the guard of field i set iff ``a_i >= b_i``.
    """

    BITS = 24

    def __init__(self, n: int):
        self.n = n
        b = self.BITS
        self.guard = sum(1 << (b * i + b - 1) for i in range(n))
        self.ones = sum(1 << (b * i) for i in range(n))
        self.field = (1 << b) - 1
        self.low = (1 << (b - 1)) - 1

    def pack(self, e: Sequence[int]) -> int:
        b = self.BITS
        x = 0
        for i, v in enumerate(e):
            x |= v << (b * i)
        return x

    def unpack(self, x: int) -> Monomial:
        b, f = self.BITS, self.field
        return tuple((x >> (b * i)) & f for i in range(self.n))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        g = self.guard
        ge = (((a | g) - b) & g) >> (self.BITS - 1)  # 1 in fields where a >= b
        mask = ge * self.low
        return (a & mask) | (b & ~mask)

    def support(self, a: int) -> int:
        g = self.guard
        return ((a | g) - self.ones) & g

    def degree(self, a: int) -> int:
        if self.n == 0:
            return 0
        return ((a * self.ones) >> (self.BITS * (self.n - 1))) & self.field


class _Reducer:
    """Monomial normal forms modulo a changing list of (lead, tail) pairs.

    Leads are bucketed by their lowest variable, so reducing ``m`` only scans
    the buckets of variables occurring in ``m``.
    """

    def __init__(self, pk: _Packer):
        self.pk = pk
        self.buckets: dict[int, list[tuple[int, int]]] = {}

    def _key(self, lead: int) -> int:
        s = self.pk.support(lead)
        return s & -s

    def add(self, lead: int, tail: int):
        self.buckets.setdefault(self._key(lead), []).append((lead, tail))

    def remove(self, lead: int):
        b = self.buckets[self._key(lead)]
        for k, (l, _) in enumerate(b):
            if l == lead:
                del b[k]
                return

    def nf(self, m: int) -> int:
        g = self.pk.guard
        ones = self.pk.ones
        buckets = self.buckets
        while True:
            mg = m | g
            s = (mg - ones) & g
            while s:
                low = s & -s
                for l, t in buckets.get(low, ()):
                    if (mg - l) & g == g:
                        m = m - l + t
                        break
                else:
                    s ^= low
                    continue
                break
            else:
                return m


class GroebnerBasis:
    """A (by default reduced) binomial Groebner basis together with its order."""

    def __init__(self, elements: Sequence[Binomial], order: MonomialOrder, n: int, reduced: bool = True):
        self.elements = list(elements)
        self.order = order
        self.n = n
        self.reduced = reduced
        self._packer = _Packer(n)
        self._reducer = _Reducer(self._packer)
        for b in self.elements:
            self._reducer.add(self._packer.pack(b.plus), self._packer.pack(b.minus))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({[str(b) for b in self.elements]}, order={self.order.kind})"

    def reduce_monomial(self, m: Monomial) -> Monomial:
        p = self._packer
        return p.unpack(self._reducer.nf(p.pack(m)))

    def contains(self, b: Binomial) -> bool:
        return normal_form(b, self) is None


def normal_form(b: Binomial, basis: GroebnerBasis) -> Binomial | None:
    """Remainder of ``b`` modulo ``basis``; ``None`` means zero."""
    p = basis.reduce_monomial(b.plus)
    q = basis.reduce_monomial(b.minus)
    if p == q:
        return None
    return Binomial(p, q).oriented(basis.order)


def ideal_contains(big: GroebnerBasis, small_gens: Iterable[Binomial]) -> bool:
    return all(big.contains(b) for b in small_gens)


def same_ideal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return ideal_contains(a, b.elements) and ideal_contains(b, a.elements)


def initial_ideal(gb: GroebnerBasis) -> list[Monomial]:
    return sorted({b.plus for b in gb.elements}, key=lambda m: (sum(m), tuple(-e for e in m)))


def buchberger(gens: Iterable[Binomial], order: MonomialOrder = DEFAULT_ORDER, n: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("cannot infer the variable count of an empty generator list")
        n = gens[0].n
    if not gens:
        return GroebnerBasis([], order, n)
    pk = _Packer(n)
    guard = pk.guard
    order_key = order.key
    order.perm(n)  # validates the permutation once
    divides, lcm, supp, degree = pk.divides, pk.lcm, pk.support, pk.degree

    lead_p: list[int] = []
    tail_p: list[int] = []
    lead_s: list[int] = []
    active: list[bool] = []
    red = _Reducer(pk)
    nf = red.nf
    heap: list = []
    pairs_alive: dict[tuple[int, int], int] = {}
    counter = 0

    def add(s: int, t: int):
        nonlocal counter
        if order_key(pk.unpack(s)) < order_key(pk.unpack(t)):
            s, t = t, s
        h = len(lead_p)
        ss = supp(s)
        # Gebauer-Moeller: among new pairs keep those whose lcm is minimal;
        # coprime pairs take part in the comparison but are never queued.
        new = []
        for g in range(h):
            if active[g]:
                l = lcm(s, lead_p[g])
                cop = not (ss & lead_s[g])
                new.append((degree(l), not cop, g, l, cop))
        new.sort()
        minimal: list[int] = []
        fresh = []
        for _, _, g, l, cop in new:
            if any(divides(m, l) for m in minimal):
                continue
            minimal.append(l)
            if not cop:
                fresh.append((l, g))
        for key, l in list(pairs_alive.items()):
            if divides(s, l):
                i, j = key
                if lcm(lead_p[i], s) != l and lcm(lead_p[j], s) != l:
                    del pairs_alive[key]
        for g in range(h):
            if active[g] and divides(s, lead_p[g]):
                active[g] = False
                red.remove(lead_p[g])
        lead_p.append(s)
        tail_p.append(t)
        lead_s.append(ss)
        active.append(True)
        red.add(s, t)
        for l, g in fresh:
            pairs_alive[(g, h)] = l
            heapq.heappush(heap, (degree(l), counter, (g, h)))
            counter += 1

    for g in gens:
        s = nf(pk.pack(g.plus))
        t = nf(pk.pack(g.minus))
        if s != t:
            add(s, t)

    while heap:
        _, _, key = heapq.heappop(heap)
        lp = pairs_alive.pop(key, None)
        if lp is None:
            continue
        i, j = key
        s = nf(lp - lead_p[i] + tail_p[i])
        t = nf(lp - lead_p[j] + tail_p[j])
        if s != t:
            add(s, t)

    leads = [(lead_p[k], tail_p[k]) for k in range(len(lead_p)) if active[k]]
    return _interreduce(pk, leads, order, n)


def _interreduce(pk: _Packer, pairs: list[tuple[int, int]], order: MonomialOrder, n: int) -> GroebnerBasis:
    """Reduced basis from a Groebner basis given as packed (lead, tail) pairs."""
    divides = pk.divides
    uniq = {}
    for l, t in pairs:
        uniq.setdefault(l, t)
    leads = list(uniq)
    minimal = [l for l in leads if not any(m != l and divides(m, l) for m in leads)]
    red = _Reducer(pk)
    for l in minimal:
        red.add(l, uniq[l])
    out = []
    for l in minimal:
        t = red.nf(uniq[l])
        out.append(Binomial(pk.unpack(l), pk.unpack(t)))
    out.sort(key=lambda b: order.key(b.plus))
    return GroebnerBasis(out, order, n)


def _divide_out(b: Binomial, i: int) -> Binomial | None:
    k = min(b.plus[i], b.minus[i])
    if not k:
        return b
    p = list(b.plus)
    q = list(b.minus)
    p[i] -= k
    q[i] -= k
    if p == q:
        return None
    return Binomial(tuple(p), tuple(q))


def saturate_variable(gens: Iterable[Binomial], i: int, n: int | None = None) -> list[Binomial]:
    """Generators of ``<gens> : x_i^inf`` for a homogeneous binomial ideal.

    Computes a reduced basis under graded revlex with ``x_i`` cheapest; then
    ``x_i`` divides an element iff it divides its leading term, and dividing
    out the shared power of ``x_i`` gives a basis of the saturation.
    """
    gens = list(gens)
    if not gens:
        return []
    n = gens[0].n if n is None else n
    gb = buchberger(gens, MonomialOrder.grevlex_last(n, i), n)
    out = []
    for b in gb.elements:
        r = _divide_out(b, i)
        if r is not None:
            out.append(r)
    return out


def lattice_basis_binomials(c: "Configuration") -> tuple[list[Binomial], list[int]]:
    """Binomials of a unit-pivot kernel basis, and the pivot columns."""
    basis, pivots = lattice.unit_pivot_form(c.kernel_basis())
    return [Binomial.from_vector(v) for v in basis], pivots


def toric_groebner(c: "Configuration", order: MonomialOrder = DEFAULT_ORDER) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal I_A.

    Starts from the ideal of a kernel lattice basis (plus the degree-two
    binomials, which lie in I_A anyway) and saturates by the variables that
    are not unit pivots of the basis. After inverting the non-pivot
    variables every pivot variable equals a Laurent monomial in the others,
    so those saturations already give the saturation by all variables.
    """
    n = c.n
    basis, pivots = lattice_basis_binomials(c)
    if not basis:
        return GroebnerBasis([], order, n)
    gens = basis + quadratic_binomials(c)
    piv = set(pivots)
    to_saturate = [i for i in range(n) if i not in piv]
    if order.kind != "graded-revlex":
        for i in to_saturate:
            gens = saturate_variable(gens, i, n)
        return buchberger(gens, order, n)
    # Saturating once more by the cheapest variable of the target order is
    # harmless and lets that last step produce the final basis directly.
    last = order.perm(n)[-1]
    for i in to_saturate:
        if i != last:
            gens = saturate_variable(gens, i, n)
    gb = buchberger(gens, order, n)
    pk = _Packer(n)
    pairs = []
    for b in gb.elements:
        r = _divide_out(b, last)
        if r is not None:
            pairs.append((pk.pack(r.plus), pk.pack(r.minus)))
    return _interreduce(pk, pairs, order, n)


def quadratic_binomials(c: "Configuration") -> list[Binomial]:
    """All degree-two binomials ``x_i x_j - x_k x_l`` of I_A."""
    n = c.n
    cols = c.columns
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i, n):
            s = tuple(a + b for a, b in zip(cols[i], cols[j]))
            groups.setdefault(s, []).append((i, j))
    out = []
    for pairs in groups.values():
        for (i, j), (k, l) in combinations(pairs, 2):
            p = [0] * n
            q = [0] * n
            p[i] += 1
            p[j] += 1
            q[k] += 1
            q[l] += 1
            out.append(Binomial(tuple(p), tuple(q)).canonical())
    return sort_binomials(out)
