"""Exact dense linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries, so ranks,
kernels and solutions are exact.  The matrices that show up in this
package (action matrices of finite dimensional modules, Hom-space
constraint systems, relation spans) are small and often sparse-ish, but
a dense representation keeps the code simple and the pivoting
deterministic.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Matrix:
    """A dense matrix with Fraction entries.

    Rows are lists; the data is owned by the instance.  All reductions
    use the leftmost nonzero column as pivot, so results are
    deterministic for a given input.
    """

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data, ncols=None):
        self.data = [[_coerce(x) for x in row] for row in data]
        self.nrows = len(self.data)
        if self.nrows:
            self.ncols = len(self.data[0])
        else:
            self.ncols = 0 if ncols is None else ncols
        for row in self.data:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n):
        m = cls.zero(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    def copy(self):
        return Matrix([row[:] for row in self.data], ncols=self.ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: {rows})"

    def row(self, i):
        return self.data[i][:]

    def col(self, j):
        return [row[j] for row in self.data]

    def transpose(self):
        return Matrix(
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
            ncols=self.ncols,
        )

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def scale(self, c):
        c = _coerce(c)
        return Matrix([[c * x for x in row] for row in self.data], ncols=self.ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            out = Matrix.zero(self.nrows, other.ncols)
            for i, row in enumerate(self.data):
                orow = out.data[i]
                for k, a in enumerate(row):
                    if a:
                        brow = other.data[k]
                        for j, b in enumerate(brow):
                            if b:
                                orow[j] += a * b
            return out
        return self.scale(other)

    def mul_row(self, vec):
        """vec (length nrows) times this matrix; returns list of Fractions."""
        if len(vec) != self.nrows:
            raise ValueError("shape mismatch")
        out = [ZERO] * self.ncols
        for a, row in zip(vec, self.data):
            if a:
                for j, b in enumerate(row):
                    if b:
                        out[j] += a * b
        return out

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("shape mismatch")
        return Matrix(
            [ra + rb for ra, rb in zip(self.data, other.data)],
            ncols=self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return Matrix([r[:] for r in self.data] + [r[:] for r in other.data],
                      ncols=self.ncols)

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def rref(self):
        """Reduced row echelon form; returns (pivot columns, new Matrix)."""
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, len(m)):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = ONE / m[r][c]
            if inv != 1:
                m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return pivots, Matrix(m, ncols=self.ncols)

    def rank(self):
        return len(self.rref()[0])

    def kernel_basis(self):
        """Basis of the right kernel {v : self * v = 0}, as rows of a Matrix."""
        pivots, red = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        rows = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, c in enumerate(pivots):
                v[c] = -red.data[r][f]
            rows.append(v)
        return Matrix(rows, ncols=self.ncols)

    def left_kernel_basis(self):
        """Basis of {v : v * self = 0}, as rows of a Matrix."""
        ker = self.transpose().kernel_basis()
        return ker

    def solve(self, rhs):
        """One solution x of self * x = rhs (a list), or None if inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("shape mismatch")
        aug = self.hstack(Matrix([[v] for v in rhs], ncols=1))
        pivots, red = aug.rref()
        if self.ncols in pivots:
            return None
        x = [ZERO] * self.ncols
        for r, c in enumerate(pivots):
            x[c] = red.data[r][self.ncols]
        return x


def rref(m: Matrix):
    """Module-level convenience wrapper; see Matrix.rref."""
    return m.rref()


def kernel_basis(m: Matrix) -> Matrix:
    return m.kernel_basis()


def solve(m: Matrix, rhs):
    return m.solve(rhs)


def from_rows(rows) -> Matrix:
    return Matrix(rows)
