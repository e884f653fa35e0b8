"""Integer configurations and the families built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import TYPE_CHECKING, Iterable, Sequence

from . import lattice
from .errors import DuplicateColumns, NoIntegerHomogenizingRow, NotHomogeneous, ParseError

if TYPE_CHECKING:
    from .graphs import Graph


@dataclass(frozen=True)
class Configuration:
    """A d x n integer matrix whose distinct columns sit on an affine hyperplane.

    ``functional`` is a rational vector w with ``w . a_j = 1`` for every
    column, so ``w . (A u)`` is the total degree of the monomial ``x^u``.
    ``labels`` remembers original column indices after :func:`restrict`.
    """

    matrix: tuple[tuple[int, ...], ...]
    functional: tuple[Fraction, ...]
    labels: tuple[int, ...] = field(default=())

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    def degree_of(self, u: Sequence[int]) -> tuple[int, ...]:
        """Multidegree ``A u`` of the monomial with exponent vector ``u``."""
        return lattice.mat_vec(self.matrix, u)

    def total_degree(self, b: Sequence[int]) -> Fraction:
        return sum((w * x for w, x in zip(self.functional, b)), Fraction(0))

    @property
    def rank(self) -> int:
        return lattice.rank(self.matrix)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        return lattice.kernel_lattice_basis(self.matrix)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for row in self.matrix for x in row)


def _min_norm_functional(rows: list[list[int]]) -> tuple[Fraction, ...] | None:
    # w = A y with (A^T A) y = 1 is the minimum-norm solution of w A = 1.
    n = len(rows[0]) if rows else 0
    at = lattice.transpose(rows)
    gram = [[sum(at[i][k] * at[j][k] for k in range(len(rows))) for j in range(n)] for i in range(n)]
    y = lattice.solve_rational(gram, [1] * n)
    if y is None:
        return None
    return tuple(sum((Fraction(rows[i][j]) * y[j] for j in range(n)), Fraction(0)) for i in range(len(rows)))


def new_configuration(
    m: Sequence[Sequence[int]],
    functional: Sequence[Fraction] | None = None,
    labels: Sequence[int] | None = None,
) -> Configuration:
    rows = lattice.as_matrix(m)
    if not rows or not rows[0]:
        raise ValueError("a configuration needs at least one row and one column")
    cols = list(zip(*rows))
    if len(set(cols)) != len(cols):
        raise DuplicateColumns("columns must be pairwise distinct")
    if functional is None:
        w = _min_norm_functional(rows)
        if w is None:
            raise NotHomogeneous("no rational w with w . a_j = 1 for all columns")
    else:
        w = tuple(Fraction(x) for x in functional)
        den = lcm(*(x.denominator for x in w)) if w else 1
        iw = [int(x * den) for x in w]
        if len(w) != len(rows) or any(sum(a * b for a, b in zip(iw, col)) != den for col in cols):
            raise NotHomogeneous("supplied functional does not map every column to 1")
    labels = tuple(labels) if labels is not None else tuple(range(len(cols)))
    return Configuration(tuple(tuple(r) for r in rows), w, labels)


def from_columns(cols: Sequence[Sequence[int]], functional=None) -> Configuration:
    return new_configuration(lattice.transpose(cols), functional)


def _compositions(d: int, r: int) -> Iterable[tuple[int, ...]]:
    # Nonnegative vectors of length d summing to r, lexicographically decreasing.
    if d == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in _compositions(d - 1, r - first):
            yield (first,) + rest


def veronese(d: int, r: int) -> Configuration:
    cols = list(_compositions(d, r))
    return from_columns(cols, [Fraction(1, r)] * d)


def squarefree_veronese(d: int, r: int) -> Configuration:
    if not 1 <= r <= d:
        raise ValueError("need 1 <= r <= d")
    cols = [c for c in _compositions(d, r) if max(c) <= 1]
    return from_columns(cols, [Fraction(1, r)] * d)


def _unit(d: int, *idx: int) -> list[int]:
    v = [0] * d
    for i in idx:
        v[i] += 1
    return v


def root_config(family: str, d: int) -> Configuration:
    """Origin plus positive roots of A_{d-1}, B_d, C_d or D_d, homogenized.

    Column order: origin, then e_i - e_j (i < j) in lex order, then the
    family-specific vectors in lex order; a final all-ones row is appended.
    """
    family = family.upper()
    if family not in "ABCD" or len(family) != 1:
        raise ValueError(f"unknown root system family {family!r}")
    if d < 2:
        raise ValueError("root configurations need d >= 2")
    cols = [[0] * d]
    for i, j in combinations(range(d), 2):
        v = [0] * d
        v[i], v[j] = 1, -1
        cols.append(v)
    if family == "B":
        cols += [_unit(d, i) for i in range(d)]
        cols += [_unit(d, i, j) for i, j in combinations(range(d), 2)]
    elif family == "C":
        cols += [_unit(d, i, j) for i in range(d) for j in range(i, d)]
    elif family == "D":
        cols += [_unit(d, i, j) for i, j in combinations(range(d), 2)]
    cols = [c + [1] for c in cols]
    return from_columns(cols, [Fraction(0)] * d + [Fraction(1)])


def graph_incidence(g: "Graph") -> Configuration:
    """Vertex-edge incidence matrix; column j is e_u + e_v for edge j."""
    cols = []
    for u, v in g.edges:
        col = [0] * g.n_vertices
        col[u - 1] += 1
        col[v - 1] += 1
        cols.append(col)
    return from_columns(cols, [Fraction(1, 2)] * g.n_vertices)


def normalize_rows(c: Configuration) -> Configuration:
    """Row-equivalent configuration with small nonnegative entries.

    Rows are first combined greedily (row_i +- row_j whenever that strictly
    narrows row_i's entry range), then each row is shifted by the minimal
    multiple of the all-ones row making it nonnegative (this step requires the
    all-ones row to be an integer combination of the rows). The all-ones row is
    ``w . A`` for the homogenizing functional, so every step preserves the
    rational row space, hence the kernel and the toric ideal.
    """
    rows = [list(r) for r in c.matrix]

    def width(row):
        return max(row) - min(row)

    improved = True
    while improved:
        improved = False
        for i in range(len(rows)):
            if width(rows[i]) <= 2:
                continue
            for j in range(len(rows)):
                if i == j:
                    continue
                for s in (1, -1):
                    cand = [a + s * b for a, b in zip(rows[i], rows[j])]
                    if 0 < width(cand) < width(rows[i]):
                        rows[i] = cand
                        improved = True
    if any(min(r) < 0 for r in rows):
        if lattice.in_row_lattice([list(r) for r in c.matrix], [1] * c.n) is None:
            raise NoIntegerHomogenizingRow("the all-ones row is not an integer combination of the rows")
        rows = [[x - min(r) for x in r] if min(r) < 0 else r for r in rows]
    if lattice.rank(rows) != c.rank:
        raise AssertionError("row normalization changed the row space")
    w = _min_norm_functional(rows)
    return Configuration(tuple(tuple(r) for r in rows), w, c.labels)


def restrict(c: Configuration, cols: Iterable[int]) -> Configuration:
    """Subconfiguration on the given (0-based) column indices."""
    idx = sorted(set(cols))
    if not idx:
        raise ValueError("restrict needs at least one column")
    rows = tuple(tuple(row[j] for j in idx) for row in c.matrix)
    return Configuration(rows, c.functional, tuple(c.labels[j] for j in idx))


def parse_configuration(text: str) -> Configuration:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    try:
        d, n = map(int, lines[0].split())
        rows = [list(map(int, ln.split())) for ln in lines[1:1 + d]]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"malformed configuration file: {exc}") from exc
    if len(rows) != d or any(len(r) != n for r in rows) or len(lines) != d + 1:
        raise ParseError(f"expected {d} rows of {n} integers")
    return new_configuration(rows)


def format_configuration(c: Configuration) -> str:
    out = [f"{c.d} {c.n}"]
    out += [" ".join(str(x) for x in row) for row in c.matrix]
    return "\n".join(out) + "\n"
