"""Lie algebras given by exact structure constants.

A Lie algebra is stored as the table c^k_{ij} for i < j; antisymmetry is
built into the storage and the Jacobi identity is verified eagerly, so
downstream code never re-checks it.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .linalg import (Matrix, Subspace, Vec, frac, image, kernel, scalar_str,
                     vec_add, vec_scale, zero_vec)

Brackets = dict[tuple[int, int], dict[int, Fraction]]


class LieError(ValueError):
    pass


class JacobiError(LieError):
    def __init__(self, triple: tuple[int, int, int], defect: Fraction):
        self.triple = triple
        self.defect = defect
        super().__init__(f"Jacobi identity fails on basis triple {triple}, defect {defect}")


def _normalize_brackets(dim: int, raw: Mapping[tuple[int, int], Mapping[int, object]]) -> Brackets:
    out: Brackets = {}
    for (i, j), coeffs in raw.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise LieError(f"bracket index ({i},{j}) out of range")
        if i == j:
            if any(frac(c) != 0 for c in coeffs.values()):
                raise LieError("nonzero bracket [x,x]")
            continue
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        entry = out.setdefault((i, j), {})
        for k, c in coeffs.items():
            c = sign * frac(c)
            entry[k] = entry.get(k, Fraction(0)) + c
    for key in [k for k, v in out.items() if all(c == 0 for c in v.values())]:
        del out[key]
    for entry in out.values():
        for k in [k for k, c in entry.items() if c == 0]:
            del entry[k]
    return out


def jacobi_defect_table(dim: int, brackets: Brackets) -> tuple[Fraction, Optional[tuple[int, int, int]]]:
    """Max-norm Jacobi defect of a raw structure-constant table.

    Returns (0, None) iff Jacobi holds, else the defect together with the
    first violating basis triple.
    """

    def bb(i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return brackets.get((i, j), {})
        return {k: -c for k, c in brackets.get((j, i), {}).items()}

    worst = Fraction(0)
    first: Optional[tuple[int, int, int]] = None
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                acc: dict[int, Fraction] = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, cm in bb(a, b).items():
                        for t, ct in bb(m, c).items():
                            acc[t] = acc.get(t, Fraction(0)) + cm * ct
                defect = max((abs(v) for v in acc.values()), default=Fraction(0))
                if defect != 0:
                    if first is None:
                        first = (i, j, k)
                    if defect > worst:
                        worst = defect
    return worst, first


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with validated structure constants."""

    def __init__(self, dim: int,
                 brackets: Mapping[tuple[int, int], Mapping[int, object]],
                 basis_names: Optional[Sequence[str]] = None):
        self.dim = dim
        self.basis_names = list(basis_names) if basis_names else [f"e{i+1}" for i in range(dim)]
        if len(self.basis_names) != dim:
            raise LieError("basis_names length differs from dim")
        self.brackets = _normalize_brackets(dim, brackets)
        defect, triple = jacobi_defect_table(dim, self.brackets)
        if defect != 0:
            assert triple is not None
            raise JacobiError(triple, defect)
        self._ad = [self._ad_basis(i) for i in range(dim)]
        self._killing: Optional[Matrix] = None

    # -- brackets -------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Vec:
        v = [Fraction(0)] * self.dim
        if i == j:
            return tuple(v)
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for k, c in self.brackets.get((i, j), {}).items():
            v[k] = sign * c
        return tuple(v)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise LieError("bracket: dimension mismatch")
        out = zero_vec(self.dim)
        for (i, j), coeffs in self.brackets.items():
            f = x[i] * y[j] - x[j] * y[i]
            if f == 0:
                continue
            term = [Fraction(0)] * self.dim
            for k, c in coeffs.items():
                term[k] = c * f
            out = vec_add(out, tuple(term))
        return out

    def _ad_basis(self, i: int) -> Matrix:
        cols = [self.bracket_basis(i, j) for j in range(self.dim)]
        return Matrix.from_cols(cols, ambient=self.dim)

    def ad(self, x: Vec) -> Matrix:
        m = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self._ad[i].scale(c)
        return m

    def ad_basis(self, i: int) -> Matrix:
        return self._ad[i]

    def jacobi_defect(self) -> Fraction:
        # validated at construction, so this is always exactly zero
        return jacobi_defect_table(self.dim, self.brackets)[0]

    # -- classical invariants --------------------------------------------
    def killing_form(self) -> Matrix:
        if self._killing is None:
            n = self.dim
            self._killing = Matrix(n, n, [[(self._ad[i] @ self._ad[j]).trace()
                                           for j in range(n)] for i in range(n)])
        return self._killing

    def derived_subalgebra(self) -> Subspace:
        cols = [self.bracket_basis(i, j) for i in range(self.dim) for j in range(i + 1, self.dim)]
        return Subspace.from_spanning_cols(self.dim, cols)

    def center(self) -> Subspace:
        stacked = Matrix.from_rows([row for m in self._ad for row in m.data]) \
            if self.dim else Matrix.zero(0, 0)
        return kernel(stacked) if self.dim else Subspace.zero(0)

    def radical(self) -> Subspace:
        """Killing-orthogonal of [g,g]; equals the radical in characteristic 0."""
        der = self.derived_subalgebra()
        if der.dim == 0:
            return Subspace.full(self.dim)
        return kernel(der.basis.transpose() @ self.killing_form())

    # -- ideals and quotients ----------------------------------------------
    def is_ideal(self, u: Subspace) -> bool:
        if u.ambient_dim != self.dim:
            raise LieError("is_ideal: ambient mismatch")
        return all(u.contains(self.ad_basis(i).apply(c))
                   for i in range(self.dim) for c in u.basis.columns())

    def quotient(self, ideal: Subspace) -> tuple["LieAlgebra", Matrix]:
        """Quotient algebra in the pivot-greedy complement basis.

        Returns (g/I, projection matrix g -> g/I coordinates).
        """
        if not self.is_ideal(ideal):
            raise LieError("quotient by a non-ideal")
        comp = ideal.complement_in(Subspace.full(self.dim))
        q = comp.dim
        change = comp.basis.hstack(ideal.basis) if ideal.dim else comp.basis
        proj = change.inverse().submatrix(range(q), range(self.dim)) if q else Matrix.zero(0, self.dim)
        table: Brackets = {}
        cols = comp.basis.columns()
        for i in range(q):
            for j in range(i + 1, q):
                w = proj.apply(self.bracket(cols[i], cols[j]))
                coeffs = {k: w[k] for k in range(q) if w[k] != 0}
                if coeffs:
                    table[(i, j)] = coeffs
        names = [f"q{i+1}" for i in range(q)]
        return LieAlgebra(q, table, names), proj

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        n, m = self.dim, other.dim
        table: Brackets = {k: dict(v) for k, v in self.brackets.items()}
        for (i, j), coeffs in other.brackets.items():
            table[(i + n, j + n)] = {k + n: c for k, c in coeffs.items()}
        return LieAlgebra(n + m, table, self.basis_names + other.basis_names)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.brackets == other.brackets)

    def __hash__(self) -> int:
        frozen = tuple(sorted((ij, tuple(sorted(v.items()))) for ij, v in self.brackets.items()))
        return hash((self.dim, frozen))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, names={self.basis_names})"

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        items = []
        for (i, j) in sorted(self.brackets):
            coeffs = [[k, scalar_str(c)] for k, c in sorted(self.brackets[(i, j)].items())]
            items.append({"i": i, "j": j, "coeffs": coeffs})
        return {"dim": self.dim, "basis": list(self.basis_names), "brackets": items}

    @staticmethod
    def from_json(obj: dict) -> "LieAlgebra":
        dim = int(obj["dim"])
        names = obj.get("basis")
        raw: dict[tuple[int, int], dict[int, object]] = {}
        for item in obj.get("brackets", []):
            raw[(int(item["i"]), int(item["j"]))] = {int(k): v for k, v in item["coeffs"]}
        return LieAlgebra(dim, raw, names)


def abelian(dim: int, names: Optional[Sequence[str]] = None) -> LieAlgebra:
    return LieAlgebra(dim, {}, names)


# canonical presentations used throughout (brackets as in the classification
# of 3-dimensional algebras; basis order X, Y, Z resp. H, X, Y)

def n2() -> LieAlgebra:
    # [X,Y] = Z, [X,Z] = -Y
    return LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {1: -1}}, ["X", "Y", "Z"])


def r3m1() -> LieAlgebra:
    # [X,Y] = Y, [X,Z] = -Z
    return LieAlgebra(3, {(0, 1): {1: 1}, (0, 2): {2: -1}}, ["X", "Y", "Z"])


def h1() -> LieAlgebra:
    # [X,Y] = Z
    return LieAlgebra(3, {(0, 1): {2: 1}}, ["X", "Y", "Z"])


def su2() -> LieAlgebra:
    # [H,X] = 2Y, [H,Y] = -2X, [X,Y] = 2H
    return LieAlgebra(3, {(0, 1): {2: 2}, (0, 2): {1: -2}, (1, 2): {0: 2}}, ["H", "X", "Y"])


def sl2() -> LieAlgebra:
    # [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H
    return LieAlgebra(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, ["H", "X", "Y"])
