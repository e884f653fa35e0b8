"""Exact integer linear algebra.

Matrices are plain lists of rows of Python ints (arbitrary precision).
Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import PreconditionViolated

IntMatrix = list[list[int]]
IntVector = tuple[int, ...]


def as_matrix(m: Sequence[Sequence[int]]) -> IntMatrix:
    rows = [list(map(int, r)) for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def transpose(m: Sequence[Sequence[int]]) -> IntMatrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def columns(m: Sequence[Sequence[int]], idx: Sequence[int]) -> IntMatrix:
    return [[row[j] for j in idx] for row in m]


def _bareiss(m: IntMatrix) -> tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, last pivot)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, rows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            for j in range(c + 1, cols):
                mi[j] = (piv * mi[j] - f * mr[j]) // prev
            mi[c] = 0
        prev = piv
        r += 1
    return r, prev


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    work = [list(r) for r in m]
    if not work or not work[0]:
        return 0
    return _bareiss(work)[0]


def det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    work = [list(r) for r in m]
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if work[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            work[c], work[p] = work[p], work[c]
            sign = -sign
        piv = work[c][c]
        for i in range(c + 1, n):
            wi = work[i]
            f = wi[c]
            wc = work[c]
            for j in range(c + 1, n):
                wi[j] = (piv * wi[j] - f * wc[j]) // prev
            wi[c] = 0
        prev = piv
    return sign * work[n - 1][n - 1]


def independent_rows(m: Sequence[Sequence[int]]) -> list[int]:
    """Indices of a maximal linearly independent set of rows (greedy, in order)."""
    basis: list[tuple[int, list[int]]] = []  # (pivot column, reduced row)
    chosen = []
    for i, row in enumerate(m):
        v = list(row)
        for pc, b in basis:
            if v[pc]:
                f, g = v[pc], b[pc]
                v = [g * x - f * y for x, y in zip(v, b)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is not None:
            basis.append((pc, v))
            chosen.append(i)
    return chosen


def primitive(v: Sequence[int]) -> IntVector:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def canonical_sign(v: Sequence[int]) -> IntVector:
    """Flip so that the first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def nullity_one_kernel_vector(m: Sequence[Sequence[int]]) -> IntVector:
    """Primitive generator of a one-dimensional kernel via signed maximal minors."""
    m = as_matrix(m)
    ncols = len(m[0]) if m else 0
    r = rank(m)
    if ncols - r != 1:
        raise PreconditionViolated(f"kernel has dimension {ncols - r}, expected 1")
    rows = [m[i] for i in independent_rows(m)]
    v = []
    for j in range(ncols):
        minor = [row[:j] + row[j + 1:] for row in rows]
        v.append((-1) ** j * det(minor))
    return canonical_sign(primitive(v))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def row_echelon_transform(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, int]:
    """Integer row reduction with a unimodular transform.

    Returns ``(H, U, r)`` with ``U @ m == H``, ``det U = ±1``, ``H`` in row
    echelon form (Hermite style, positive pivots, entries above pivots reduced)
    and ``r`` the number of nonzero rows of ``H``.
    """
    H = [list(r) for r in m]
    nrows = len(H)
    ncols = len(H[0]) if nrows else 0
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r + 1, nrows):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            if a == 0:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
                continue
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            hr, hi = H[r], H[i]
            H[r] = [x * s + y * t for s, t in zip(hr, hi)]
            H[i] = [p * t - q * s for s, t in zip(hr, hi)]
            ur, ui = U[r], U[i]
            U[r] = [x * s + y * t for s, t in zip(ur, ui)]
            U[i] = [p * t - q * s for s, t in zip(ur, ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [s - q * t for s, t in zip(H[i], H[r])]
                U[i] = [s - q * t for s, t in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return H, U, r


def hermite_normal_form(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form (nonzero rows only)."""
    H, _, r = row_echelon_transform(m)
    return H[:r]


def kernel_lattice_basis(m: Sequence[Sequence[int]]) -> list[IntVector]:
    """Basis of the saturated lattice ``{u in Z^n : m u = 0}``.

    Row-reduce ``m^T`` with a unimodular transform; the transform rows that hit
    zero rows span the integer kernel exactly.
    """
    m = as_matrix(m)
    ncols = len(m[0]) if m else 0
    if ncols == 0:
        return []
    if not m:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    _, U, r = row_echelon_transform(transpose(m))
    basis = [tuple(row) for row in U[r:]]
    return size_reduce(basis)


def size_reduce(basis: list[IntVector]) -> list[IntVector]:
    """Cheap pairwise size reduction; keeps the lattice, shrinks entries.

    Each step replaces ``b_i`` by ``b_i - q b_j`` with ``q`` the rounded
    projection coefficient, so the result spans the same lattice.
    """
    vecs = [list(b) for b in basis]
    changed = True
    rounds = 0
    while changed and rounds < 50:
        changed = False
        rounds += 1
        for i in range(len(vecs)):
            for j in range(len(vecs)):
                if i == j:
                    continue
                bj = vecs[j]
                nj = sum(x * x for x in bj)
                if nj == 0:
                    continue
                dot = sum(x * y for x, y in zip(vecs[i], bj))
                q = (2 * dot + nj) // (2 * nj)
                if q:
                    cand = [x - q * y for x, y in zip(vecs[i], bj)]
                    if sum(x * x for x in cand) < sum(x * x for x in vecs[i]):
                        vecs[i] = cand
                        changed = True
    return [canonical_sign(v) for v in vecs]


def unit_pivot_form(basis: Sequence[Sequence[int]]) -> tuple[list[IntVector], list[int]]:
    """Unimodular recombination of a lattice basis exposing unit pivots.

    Returns ``(new_basis, pivots)``: for the first ``len(pivots)`` vectors,
    vector ``k`` has entry 1 in column ``pivots[k]`` and every other vector has
    entry 0 there. The remaining vectors vanish on all pivot columns. The
    lattice spanned is unchanged.
    """
    rows = [list(b) for b in basis]
    pivots: list[int] = []
    done: list[list[int]] = []
    while rows:
        best = None
        for ri, row in enumerate(rows):
            for c, x in enumerate(row):
                if x in (1, -1):
                    weight = sum(1 for y in row if y)
                    if best is None or weight < best[0]:
                        best = (weight, ri, c)
        if best is None:
            break
        _, ri, c = best
        row = rows.pop(ri)
        if row[c] == -1:
            row = [-x for x in row]
        for other in rows:
            f = other[c]
            if f:
                other[:] = [x - f * y for x, y in zip(other, row)]
        for other in done:
            f = other[c]
            if f:
                other[:] = [x - f * y for x, y in zip(other, row)]
        done.append(row)
        pivots.append(c)
    rest = [r for r in rows if any(r)]
    return [tuple(r) for r in done] + [tuple(r) for r in rest], pivots


def solve_rational(m: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Some solution ``x`` of ``m x = rhs`` over Q (free variables zero), or None."""
    rows = len(m)
    ncols = len(m[0]) if rows else 0
    aug = [[Fraction(x) for x in m[i]] + [Fraction(rhs[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][ncols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][ncols]
    return x


def in_row_lattice(m: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Integer ``y`` with ``y m = target`` if one exists."""
    if not m:
        return [] if not any(target) else None
    H, U, r = row_echelon_transform(m)
    t = list(target)
    coeff = [0] * len(m)
    for i in range(r):
        c = next(j for j, x in enumerate(H[i]) if x)
        if t[c] % H[i][c]:
            return None
        q = t[c] // H[i][c]
        if q:
            t = [a - q * b for a, b in zip(t, H[i])]
            coeff = [a + q * b for a, b in zip(coeff, U[i])]
    if any(t):
        return None
    return coeff
