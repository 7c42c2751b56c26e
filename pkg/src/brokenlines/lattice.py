"""Exact integer linear algebra: Smith normal form, cokernel orders, gluing multiplicities.

Everything here works over arbitrary-precision integers.  Matrices are
immutable row-major tuples; a matrix with r rows and c columns represents a
map Z^c -> Z^r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import IdentityViolation, InfiniteCokernel


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count must be rows x cols")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        return IntMatrix(len(rows), ncols, rows)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)))
            rows.append(row)
        return IntMatrix.from_rows(rows) if rows else IntMatrix(0, other.cols, ())

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(self.entries[i][k] * vec[k] for k in range(self.cols)) for i in range(self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(self.entries[i] + other.entries[i] for i in range(self.rows)))

    def det(self) -> int:
        """Fraction-free Bareiss determinant; square matrices only."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def rank(self) -> int:
        return _rational_rank([list(r) for r in self.entries])

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @staticmethod
    def from_json(data: dict) -> "IntMatrix":
        m = IntMatrix.from_rows(data["entries"]) if data["entries"] else IntMatrix(0, data["cols"], ())
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise ValueError("inconsistent JSON matrix header")
        return m


def _rational_rank(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        col += 1
    return r


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(n))


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Compute U, D, V with U*M*V = D diagonal, d_i | d_{i+1}, U, V unimodular.

    Pivots are chosen by minimal absolute value with lexicographic tie-break,
    so the decomposition is deterministic.
    """
    r, c = M.rows, M.cols
    a = [list(row) for row in M.entries]
    U = [list(row) for row in IntMatrix.identity(r).entries]
    V = [list(row) for row in IntMatrix.identity(c).entries]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]

    def find_pivot(t):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                v = abs(a[i][j])
                if v and (best is None or v < best[0] or (v == best[0] and (i, j) < best[1:])):
                    best = (v, i, j)
        return None if best is None else (best[1], best[2])

    def reduce_from(t0):
        t = t0
        while True:
            piv = find_pivot(t)
            if piv is None:
                break
            i, j = piv
            swap_rows(t, i)
            swap_cols(t, j)
            if a[t][t] < 0:
                negate_row(t)
            # clear row and column t; restart on nonzero remainders
            dirty = True
            while dirty:
                dirty = False
                for i in range(t + 1, r):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        add_row(t, i, -q)
                        if a[i][t]:
                            swap_rows(t, i)
                            if a[t][t] < 0:
                                negate_row(t)
                            dirty = True
                for j in range(t + 1, c):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        add_col(t, j, -q)
                        if a[t][j]:
                            swap_cols(t, j)
                            dirty = True
            t += 1

    reduce_from(0)

    # enforce the divisibility chain; each merge halves gcd products, so this ends
    n = min(r, c)
    i = 0
    while i < n - 1:
        di, dj = a[i][i], a[i + 1][i + 1]
        if (di == 0 and dj == 0) or (di != 0 and dj % di == 0):
            i += 1
            continue
        add_col(i + 1, i, 1)
        reduce_from(i)
        i = max(0, i - 1)

    D = IntMatrix.from_rows(a) if a else IntMatrix(0, c, ())
    return SmithDecomposition(IntMatrix.from_rows(U) if U else IntMatrix(0, 0, ()),
                              D,
                              IntMatrix.from_rows(V) if V else IntMatrix(0, 0, ()))


@dataclass(frozen=True)
class CokernelOrder:
    finite: bool
    order: int | None  # None when infinite
    torsion: int       # product of nonzero diagonal entries

    def __str__(self):
        return str(self.order) if self.finite else f"infinite (torsion {self.torsion})"


def cokernel_order(M: IntMatrix) -> CokernelOrder:
    """Order of Z^rows / image(M), with the torsion part always reported."""
    snf = smith_normal_form(M)
    diag = [d for d in snf.diagonal() if d != 0]
    torsion = 1
    for d in diag:
        torsion *= abs(d)
    if len(diag) == M.rows:
        return CokernelOrder(True, torsion, torsion)
    return CokernelOrder(False, None, torsion)


def integer_kernel(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of ker(M) as a saturated sublattice of Z^cols."""
    snf = smith_normal_form(M)
    n = min(M.rows, M.cols)
    zero_cols = [j for j in range(M.cols) if j >= n or snf.D[j, j] == 0]
    cols = [[snf.V[i, j] for i in range(M.cols)] for j in zero_cols]
    if not cols:
        return IntMatrix(M.cols, 0, tuple(() for _ in range(M.cols)))
    return IntMatrix.from_rows([[col[i] for col in cols] for i in range(M.cols)])


def saturate_span(vectors, ambient_dim: int) -> IntMatrix:
    """Basis (as columns) of Z^ambient_dim intersected with the Q-span of `vectors`."""
    vecs = [tuple(v) for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return IntMatrix(ambient_dim, 0, tuple(() for _ in range(ambient_dim)))
    # annihilator of the span, then its kernel: kernel of an integer matrix is saturated
    span_rows = IntMatrix.from_rows(vecs)          # each row a vector
    ann = integer_kernel(span_rows.transpose())    # columns x with span * x = 0 ... transpose care below
    # ann: columns y with (vectors as rows)^T applied? Recompute directly:
    # We want all linear functionals f with f(v) = 0 for each v: kernel of the matrix
    # whose ROWS are the vectors.
    ann = integer_kernel(span_rows)
    # rows of ann^T are the functionals; kernel of that functional matrix is the saturation
    funcs = ann.transpose()
    if funcs.rows == 0:
        return IntMatrix.identity(ambient_dim)
    return integer_kernel(funcs)


@dataclass(frozen=True)
class GluingData:
    """Per-piece lattice maps into a common stacked target Lambda_sigma^k.

    `piece_maps[0]` is the star map; each subsequent entry is the map of one
    cut piece (nonzero only in its own 2-row block, up to sign).  `glued_ev`
    evaluates the glued family's lattice at the distinguished vertex.
    """
    piece_maps: tuple  # tuple of IntMatrix, all with the same number of rows
    glued_ev: IntMatrix
    piece_out_blocks: tuple  # tuple of IntMatrix, the 2 x dim evaluation of each cut piece

    def assembled(self) -> IntMatrix:
        eps = self.piece_maps[0]
        for m in self.piece_maps[1:]:
            eps = eps.hstack(m)
        return eps


def splitting_multiplicity(g: GluingData) -> int:
    """|coker(eps)| for the assembled gluing map, verifying the lattice identity.

    Checks prod_i k_i = k_glued * |coker(eps)| where k_i is the cokernel order
    of each piece's output-evaluation block and k_glued that of the glued
    evaluation.  Raises InfiniteCokernel when eps is not of full rank, and
    IdentityViolation when the identity fails (inconsistent input data).
    """
    eps = g.assembled()
    cok = cokernel_order(eps)
    if not cok.finite:
        raise InfiniteCokernel("assembled gluing map has infinite cokernel")
    k_pieces = []
    for block in g.piece_out_blocks:
        c = cokernel_order(block)
        if not c.finite:
            raise InfiniteCokernel("piece evaluation has infinite cokernel")
        k_pieces.append(c.order)
    kg = cokernel_order(g.glued_ev)
    if not kg.finite:
        raise InfiniteCokernel("glued evaluation has infinite cokernel")
    lhs = 1
    for k in k_pieces:
        lhs *= k
    if lhs != kg.order * cok.order:
        raise IdentityViolation(
            f"prod k_i = {lhs} but k_glued * |coker eps| = {kg.order} * {cok.order}"
        )
    return cok.order


def _gcd_many(xs) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


def primitive(vec):
    """Primitive integer vector on the same ray (gcd 1, same direction)."""
    g = _gcd_many(vec)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in vec)
