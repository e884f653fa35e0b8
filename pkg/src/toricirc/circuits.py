"""Circuits of a configuration: enumeration, membership and classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from . import lattice
from .config import Configuration, normalize_rows, restrict
from .errors import NotInIdeal
from .ideal import Binomial, buchberger, toric_groebner


@dataclass(frozen=True)
class Circuit:
    binomial: Binomial
    support: tuple[int, ...]

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "Circuit":
        v = lattice.canonical_sign(lattice.primitive(v))
        return cls(Binomial.from_vector(v), tuple(j for j, x in enumerate(v) if x))

    @property
    def degree(self) -> int:
        return self.binomial.degree

    def sort_key(self):
        return (self.degree, self.support)


class SquarefreeClass(str, enum.Enum):
    NEITHER = "neither"
    ONE_SIDE = "one_side"
    BOTH_SIDES = "both_sides"

    def __str__(self) -> str:
        return self.value


def _is_squarefree(m: Sequence[int]) -> bool:
    return all(x <= 1 for x in m)


def squarefree_class(b: Binomial) -> SquarefreeClass:
    p, q = _is_squarefree(b.plus), _is_squarefree(b.minus)
    if p and q:
        return SquarefreeClass.BOTH_SIDES
    if p or q:
        return SquarefreeClass.ONE_SIDE
    return SquarefreeClass.NEITHER


def in_filter(b: Binomial, which: str) -> bool:
    """Membership in C^sf (``"sf"``), C^sf-sf (``"sfsf"``) or all circuits."""
    cls = squarefree_class(b)
    if which == "all":
        return True
    if which == "sf":
        return cls is not SquarefreeClass.NEITHER
    if which == "sfsf":
        return cls is SquarefreeClass.BOTH_SIDES
    raise ValueError(f"unknown circuit filter {which!r}")


def enumerate_circuits(c: Configuration, max_support: int | None = None) -> list[Circuit]:
    """All circuits of ``c``, canonically signed, sorted by (degree, support).

    Depth-first search over independent column sets, extended by increasing
    index only. Every circuit C with largest index j is found exactly once:
    C minus j is independent, and adding j produces a dependency whose
    coefficients are all nonzero. Each later column carries an integer
    residual ``[A-part | combination-part]`` modulo the span of the current
    set; adding a column costs one elimination step per remaining column, and
    a zero A-part means the combination part is a kernel vector.
    """
    n, d = c.n, c.d
    limit = c.rank + 1 if max_support is None else min(max_support, c.rank + 1)
    found: list[Circuit] = []
    start = []
    for j, col in enumerate(c.columns):
        r = list(col) + [0] * n
        r[d + j] = 1
        start.append((j, r))

    def dfs(residuals, size):
        # residuals: (column index, residual) for candidate columns, increasing
        for k, (j, r) in enumerate(residuals):
            piv = next((i for i in range(d) if r[i]), None)
            if piv is None:
                # kernel vector on (current set + j); circuit iff full support
                if sum(1 for x in r[d:] if x) == size + 1:
                    found.append(Circuit.from_vector(r[d:]))
                continue
            if size + 2 > limit:
                continue
            p = r[piv]
            nxt = []
            for jj, rr in residuals[k + 1:]:
                f = rr[piv]
                if f:
                    rr = [p * a - f * b for a, b in zip(rr, r)]
                    g = gcd(*rr)
                    if g > 1:
                        rr = [a // g for a in rr]
                nxt.append((jj, rr))
            dfs(nxt, size + 1)

    dfs(start, 0)
    found.sort(key=Circuit.sort_key)
    return found


def _check_in_ideal(b: Binomial, c: Configuration):
    if b.n != c.n:
        raise NotInIdeal(f"binomial has {b.n} variables, configuration has {c.n} columns")
    if any(lattice.mat_vec(c.matrix, b.vector)):
        raise NotInIdeal(f"{b} is not in the toric ideal (A u != 0)")


def is_circuit(b: Binomial, c: Configuration) -> bool:
    _check_in_ideal(b, c)
    sub = restrict(c, sorted(b.support))
    if sub.n - sub.rank != 1:
        return False
    v = b.vector
    return gcd(*v) == 1


def fundamental_columns(b: Binomial, c: Configuration) -> list[int]:
    """Columns of A_f: those whose support lies in the rows where A . plus > 0."""
    if not c.is_nonnegative():
        c = normalize_rows(c)
    deg = lattice.mat_vec(c.matrix, b.plus)
    rows = {i for i, x in enumerate(deg) if x > 0}
    return [j for j, col in enumerate(c.columns) if all(i in rows for i, x in enumerate(col) if x)]


def is_fundamental(b: Binomial, c: Configuration, method: str = "lattice") -> bool:
    """Whether ``b`` generates the toric ideal of its subconfiguration A_f.

    ``method="lattice"`` uses that I_{A_f} is principal exactly when the
    kernel of A_f is one-dimensional and spanned by the primitive vector of
    ``b``. ``method="groebner"`` compares ideals through a Groebner basis.
    Configurations with negative entries are row-normalized first, since the
    row selection only makes sense for nonnegative matrices.
    """
    _check_in_ideal(b, c)
    cols = fundamental_columns(b, c)
    sub = restrict(c, cols)
    pos = {j: k for k, j in enumerate(cols)}
    local = Binomial(
        tuple(b.plus[j] for j in cols), tuple(b.minus[j] for j in cols)
    )
    if any(b.plus[j] or b.minus[j] for j in range(c.n) if j not in pos):
        raise AssertionError("binomial support escapes A_f")
    if method == "lattice":
        return sub.n - sub.rank == 1 and gcd(*b.vector) == 1
    if method == "groebner":
        gb = toric_groebner(sub)
        principal = buchberger([local], n=sub.n)
        return all(principal.contains(g) for g in gb.elements) and gb.contains(local)
    raise ValueError(f"unknown method {method!r}")
