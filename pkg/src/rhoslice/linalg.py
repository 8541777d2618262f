"""Small exact linear algebra helpers: rational matrices and matrices of
Laurent polynomials.  Everything here is Fraction- or LaurentPoly-exact;
no floating point."""

from __future__ import annotations

from fractions import Fraction

from .polyalg import LaurentPoly

Row = list[Fraction]
Matrix = list[Row]


# ---------------------------------------------------------------------------
# Rational matrices
# ---------------------------------------------------------------------------


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref_rows, pivot_columns).

    Zero rows are dropped.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[0])


def in_row_span(rows: Matrix, vec: Row) -> bool:
    """True iff vec lies in the Q-span of rows."""
    if all(x == 0 for x in vec):
        return True
    if not rows:
        return False
    base = rank(rows)
    return rank(rows + [list(vec)]) == base


def nullspace(rows: Matrix, ncols: int) -> Matrix:
    """Basis of {x : rows @ x = 0} as a list of length-ncols vectors."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis: Matrix = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -red[i][fc]
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Integer determinant (for Seifert matrix validation)
# ---------------------------------------------------------------------------


def det_int(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


# ---------------------------------------------------------------------------
# Matrices of Laurent polynomials
# ---------------------------------------------------------------------------

PolyMatrix = list[list[LaurentPoly]]


def poly_mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = LaurentPoly.zero(a[i][0].variable)
            for p in range(k):
                acc = acc + a[i][p] * b[p][j]
            row.append(acc)
        out.append(row)
    return out


def poly_mat_identity(n: int, variable: str) -> PolyMatrix:
    one, zero = LaurentPoly.one(variable), LaurentPoly.zero(variable)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def poly_mat_transpose(a: PolyMatrix) -> PolyMatrix:
    return [list(col) for col in zip(*a)] if a else []


def poly_mat_det(a: PolyMatrix, variable: str | None = None) -> LaurentPoly:
    """Determinant over Q[v^{±1}] by cofactor expansion on the sparsest row.

    Matrix dimensions here are small (presentation matrices of knots at desk
    scale), so cofactor expansion with memoization on column subsets is fine.
    """
    n = len(a)
    if variable is None:
        variable = a[0][0].variable if n else "t"
    if n == 0:
        return LaurentPoly.one(variable)
    cols = tuple(range(n))
    cache: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}

    def minor(r: int, cs: tuple[int, ...]) -> LaurentPoly:
        if not cs:
            return LaurentPoly.one(variable)
        key = (r, cs)
        got = cache.get(key)
        if got is not None:
            return got
        acc = LaurentPoly.zero(variable)
        for idx, c in enumerate(cs):
            entry = a[r][c]
            if entry.is_zero():
                continue
            rest = cs[:idx] + cs[idx + 1:]
            term = entry * minor(r + 1, rest)
            acc = acc + (term if idx % 2 == 0 else -term)
        cache[key] = acc
        return acc

    return minor(0, cols)


def poly_mat_adjugate(a: PolyMatrix) -> PolyMatrix:
    """Adjugate matrix: adj(A)[i][j] = (-1)^{i+j} * det(A delete row j, col i)."""
    n = len(a)
    variable = a[0][0].variable if n else "t"
    if n == 0:
        return []
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[a[r][c] for c in range(n) if c != i]
                   for r in range(n) if r != j]
            d = poly_mat_det(sub, variable)
            out[i][j] = d if (i + j) % 2 == 0 else -d
    return out


def poly_mat_scale(a: PolyMatrix, f: LaurentPoly) -> PolyMatrix:
    return [[entry * f for entry in row] for row in a]


def poly_mat_div_unit(a: PolyMatrix, unit: LaurentPoly) -> PolyMatrix:
    inv = unit.inverse_unit()
    return [[entry * inv for entry in row] for row in a]


def poly_mat_inverse_times(a: PolyMatrix) -> tuple[PolyMatrix, LaurentPoly]:
    """Return (adjugate, det); A^{-1} = adjugate / det."""
    return poly_mat_adjugate(a), poly_mat_det(a)


def poly_mat_apply(a: PolyMatrix, vec: list[LaurentPoly]) -> list[LaurentPoly]:
    out = []
    for row in a:
        acc = LaurentPoly.zero(row[0].variable if row else "t")
        for entry, x in zip(row, vec):
            acc = acc + entry * x
        out.append(acc)
    return out


def poly_mat_is_unit_det(a: PolyMatrix) -> bool:
    d = poly_mat_det(a)
    return d.is_unit()
