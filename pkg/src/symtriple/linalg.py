"""Exact linear algebra over the rationals.

Everything in this package runs on `fractions.Fraction`; there is no
floating point anywhere.  Matrices are small and dense, subspaces are kept
in reduced column echelon form so that equality of subspaces is structural
equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Fraction
Vec = tuple[Fraction, ...]

ScalarLike = Union[Fraction, int, str]


def frac(x: ScalarLike) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def scalar_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(entries: Iterable[ScalarLike]) -> Vec:
    return tuple(frac(e) for e in entries)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Fraction, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def vec_dot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero_vec(u: Vec) -> bool:
    return all(a == 0 for a in u)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence[ScalarLike]]):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match shape")
        self.rows = rows
        self.cols = cols
        self.data: tuple[Vec, ...] = tuple(tuple(frac(x) for x in r) for r in data)

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rows(data: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return Matrix(rows, cols, data)

    @staticmethod
    def from_cols(cols: Sequence[Sequence[ScalarLike]], ambient: Optional[int] = None) -> "Matrix":
        if not cols:
            if ambient is None:
                raise ValueError("empty column list needs an ambient dimension")
            return Matrix(ambient, 0, [[] for _ in range(ambient)])
        n = len(cols[0])
        return Matrix(n, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(entries: Sequence[ScalarLike]) -> "Matrix":
        n = len(entries)
        return Matrix(n, n, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- basic access --------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.data[ij[0]][ij[1]]

    def row(self, i: int) -> Vec:
        return self.data[i]

    def col(self, j: int) -> Vec:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list[Vec]:
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(scalar_str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c: ScalarLike) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, [[c * x for x in r] for r in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose()
        return Matrix(self.rows, other.cols,
                      [[vec_dot(r, c) for c in ot.data] for r in self.data])

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(vec_dot(r, v) for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols,
                      [list(r1) + list(r2) for r1, r2 in zip(self.data, other.data)])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [[self.data[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i] for i in range(self.rows) for j in range(i))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug, piv = rref(self.hstack(Matrix.identity(n)))
        if len([p for p in piv if p < n]) != n:
            raise ValueError("matrix is singular")
        return aug.submatrix(range(n), range(n, 2 * n))

    def _shape_check(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form, returning (R, pivot columns)."""
    data = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if data[i][c] != 0), None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = 1 / data[r][c]
        data[r] = [x * inv for x in data[r]]
        for i in range(nr):
            if i != r and data[i][c] != 0:
                f = data[i][c]
                data[i] = [a - f * b for a, b in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Matrix(nr, nc, data), pivots


def solve_linear(a: Matrix, b: Matrix) -> tuple[Optional[Matrix], "Subspace"]:
    """Solve A·x = b exactly.

    Returns (one solution or None, kernel of A).  The particular solution is
    deterministic: all free variables are set to zero.  `b` may have several
    columns; a solution is returned only if every column is consistent.
    """
    if a.rows != b.rows:
        raise ValueError("solve_linear: row mismatch between A and b")
    aug, piv = rref(a.hstack(b))
    ker = kernel(a)
    if any(p >= a.cols for p in piv):
        return None, ker
    sol = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for r, c in enumerate(piv):
        for j in range(b.cols):
            sol[c][j] = aug[r, a.cols + j]
    return Matrix(a.cols, b.cols, sol), ker


def solve_vec(a: Matrix, b: Vec) -> Optional[Vec]:
    x, _ = solve_linear(a, Matrix.from_cols([list(b)]))
    return x.col(0) if x is not None else None


def kernel(a: Matrix) -> "Subspace":
    red, piv = rref(a)
    free = [c for c in range(a.cols) if c not in piv]
    cols = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -red[r, f]
        cols.append(v)
    return Subspace.from_spanning_cols(a.cols, cols)


def image(a: Matrix) -> "Subspace":
    return Subspace.from_spanning_cols(a.rows, a.columns())


class Subspace:
    """A subspace of Q^n with a canonical reduced-echelon column basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        # trusted constructor; use from_spanning_cols for raw data
        self.ambient_dim = ambient_dim
        self.basis = basis

    @staticmethod
    def from_spanning_cols(ambient_dim: int, cols: Sequence[Sequence[ScalarLike]]) -> "Subspace":
        m = Matrix.from_cols([vec(c) for c in cols], ambient=ambient_dim)
        red, piv = rref(m.transpose())
        basis_cols = [red.row(i) for i in range(len(piv))]
        return Subspace(ambient_dim, Matrix.from_cols(basis_cols, ambient=ambient_dim))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace.from_spanning_cols(ambient_dim, [])

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.from_spanning_cols(ambient_dim, Matrix.identity(ambient_dim).columns())

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, v: Vec) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return solve_vec(self.basis, v) is not None

    def coords_of(self, v: Vec) -> Vec:
        x = solve_vec(self.basis, v)
        if x is None:
            raise ValueError("vector not in subspace")
        return x

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(c) for c in other.basis.columns())

    def intersect(self, other: "Subspace") -> "Subspace":
        self._ambient_check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = self.basis.hstack(other.basis.scale(-1))
        ker = kernel(stacked)
        cols = []
        for c in ker.basis.columns():
            coeffs = c[: self.dim]
            cols.append(self.basis.apply(coeffs))
        return Subspace.from_spanning_cols(self.ambient_dim, cols)

    def add(self, other: "Subspace") -> "Subspace":
        self._ambient_check(other)
        return Subspace.from_spanning_cols(
            self.ambient_dim, self.basis.columns() + other.basis.columns())

    def complement_in(self, big: "Subspace") -> "Subspace":
        """Pivot-greedy W with self ⊕ W = big; requires self ⊆ big."""
        self._ambient_check(big)
        if not big.contains_subspace(self):
            raise ValueError("complement_in: containment violated")
        chosen = self.basis.columns()
        comp: list[Vec] = []
        current = Subspace.from_spanning_cols(self.ambient_dim, chosen)
        for cand in big.basis.columns():
            if not current.contains(cand):
                comp.append(cand)
                current = Subspace.from_spanning_cols(self.ambient_dim, chosen + comp)
        return Subspace.from_spanning_cols(self.ambient_dim, comp)

    def perp(self, form: Matrix) -> "Subspace":
        """Orthogonal complement w.r.t. a bilinear form on the ambient space."""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis.transpose() @ form)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _ambient_check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


def form_signature(g: Matrix) -> tuple[int, int, int]:
    """Signature (n_minus, n_plus, n_zero) of a symmetric form.

    Exact symmetric Gaussian congruence reduction; zero diagonals with a
    nonzero off-diagonal partner are handled by the hyperbolic-pair step
    e_i += e_j, which makes the diagonal entry 2*g_ij.
    """
    if not g.is_symmetric():
        raise ValueError("form_signature requires a symmetric matrix")
    n = g.rows
    a = [[g[i, j] for j in range(n)] for i in range(n)]
    minus = plus = zero = 0
    todo = list(range(n))
    while todo:
        i = next((p for p in todo if a[p][p] != 0), None)
        if i is None:
            # all remaining diagonals vanish; hyperbolic step on the first
            # coupled pair makes a[i][i] = 2*a[i][j] != 0
            pair = next(((p, q) for p in todo for q in todo
                         if p != q and a[p][q] != 0), None)
            if pair is None:
                zero += len(todo)
                break
            i, j = pair
            for k in range(n):      # row/col op: e_i += e_j
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
        d = a[i][i]
        if d > 0:
            plus += 1
        else:
            minus += 1
        todo.remove(i)
        for j in todo:              # clear row/col i against the pivot
            f = a[i][j] / d
            if f == 0:
                continue
            for k in range(n):
                a[j][k] -= f * a[i][k]
            for k in range(n):
                a[k][j] -= f * a[k][i]
    return minus, plus, zero
