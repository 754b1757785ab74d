"""Orthogonal modules of Lie algebras with involution.

Contains the compatibility checks, the Dickson trace-form semisimplicity
test, exact weight-space decompositions for actions with spectra in
Q u iQ, and the block representations used by the index-2 catalog.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .lie import LieAlgebra, LieError
from .linalg import (Matrix, Subspace, Vec, form_signature, frac, kernel,
                     solve_linear, vec, zero_vec)
from .metric import InvolutiveLieAlgebra, eigensplit_matrix
from . import reps

__all__ = [
    "OrthogonalModule", "BlockSpec", "WeightSpace", "UnsupportedInput",
    "check_orthogonal_module", "build_block", "build_sum",
    "canonicalize_weights", "canonicalize_weight_pairs",
    "matrix_algebra_closure", "trace_form_radical", "module_radical_space",
]


class UnsupportedInput(ValueError):
    """Raised when an exact computation is outside the supported fragment."""


# ---------------------------------------------------------------------------
# associative algebra machinery (Dickson radical)
# ---------------------------------------------------------------------------


def _mat_to_vec(m: Matrix) -> Vec:
    return tuple(x for row in m.data for x in row)


def matrix_algebra_closure(generators: Sequence[Matrix], n: int) -> list[Matrix]:
    """Basis of the unital associative algebra generated inside End(Q^n)."""
    basis: list[Matrix] = []
    span_rows: list[Vec] = []

    def try_add(m: Matrix) -> bool:
        sub = Subspace.from_spanning_cols(n * n, [list(v) for v in span_rows])
        if sub.contains(_mat_to_vec(m)):
            return False
        basis.append(m)
        span_rows.append(_mat_to_vec(m))
        return True

    try_add(Matrix.identity(n))
    for g in generators:
        try_add(g)
    frontier = list(basis)
    while frontier:
        new: list[Matrix] = []
        for b in frontier:
            for g in generators:
                for prod in (b @ g,):
                    if try_add(prod):
                        new.append(prod)
        frontier = new
    return basis


def trace_form_radical(basis: Sequence[Matrix]) -> list[Matrix]:
    """Radical of a matrix algebra via the trace form (valid in char 0)."""
    k = len(basis)
    gram = Matrix(k, k, [[(basis[i] @ basis[j]).trace() for j in range(k)] for i in range(k)])
    rad = kernel(gram)
    out = []
    for c in rad.basis.columns():
        m = Matrix.zero(basis[0].rows, basis[0].cols)
        for coeff, b in zip(c, basis):
            if coeff != 0:
                m = m + b.scale(coeff)
        out.append(m)
    return out


def _restrict_operator(op: Matrix, sub: Subspace) -> Matrix:
    coords, _ = solve_linear(sub.basis, op @ sub.basis)
    if coords is None:
        raise LieError("subspace is not invariant under the operator")
    return coords


def module_radical_space(operators: Sequence[Matrix], sub: Subspace) -> Subspace:
    """J(A)·M for the module M = sub under the algebra generated by the
    operators (restricted to M); the smallest submodule with semisimple
    quotient."""
    q = sub.dim
    if q == 0:
        return sub
    restricted = [_restrict_operator(op, sub) for op in operators]
    alg = matrix_algebra_closure(restricted, q)
    rad = trace_form_radical(alg)
    cols: list[Vec] = []
    for j in rad:
        prod = sub.basis @ j
        cols.extend(prod.columns())
    return Subspace.from_spanning_cols(sub.ambient_dim, cols)


def module_socle_preimage(operators: Sequence[Matrix], ambient: int,
                          below: Subspace) -> Subspace:
    """Preimage in Q^ambient of the socle of the quotient module by `below`."""
    comp = below.complement_in(Subspace.full(ambient))
    q = comp.dim
    if q == 0:
        return below
    change = comp.basis.hstack(below.basis) if below.dim else comp.basis
    proj = change.inverse().submatrix(range(q), range(ambient))
    ops_q = [proj @ op @ comp.basis for op in operators]
    alg = matrix_algebra_closure(ops_q, q)
    rad = trace_form_radical(alg)
    if not rad:
        return Subspace.full(ambient)
    stacked = Matrix.from_rows([row for j in rad for row in j.data])
    soc = kernel(stacked)
    cols = below.basis.columns() + [comp.basis.apply(c) for c in soc.basis.columns()]
    return Subspace.from_spanning_cols(ambient, cols)


# ---------------------------------------------------------------------------
# minimal polynomials and exact spectra
# ---------------------------------------------------------------------------


def minimal_polynomial(t: Matrix) -> list[Fraction]:
    """Coefficients (ascending, monic) of the minimal polynomial."""
    n = t.rows
    powers = [Matrix.identity(n)]
    while True:
        powers.append(powers[-1] @ t)
        cols = [list(_mat_to_vec(p)) for p in powers[:-1]]
        target = _mat_to_vec(powers[-1])
        a = Matrix.from_cols(cols, ambient=n * n)
        x, _ = solve_linear(a, Matrix.from_cols([list(target)]))
        if x is not None:
            coeffs = [-x[i, 0] for i in range(len(powers) - 1)]
            coeffs.append(Fraction(1))
            return coeffs


def _sqrt_fraction(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    from math import isqrt
    pn, pd = isqrt(c.numerator), isqrt(c.denominator)
    if pn * pn == c.numerator and pd * pd == c.denominator:
        return Fraction(pn, pd)
    return None


def spectrum_qi(t: Matrix) -> Optional[tuple[list[Fraction], list[Fraction]]]:
    """Spectrum of a semisimple operator when it lies in Q u iQ.

    Returns (rational eigenvalues, positive mu with eigenvalue pair +-i*mu),
    or None when the spectrum leaves Q u iQ or the operator fails to be
    semisimple over Q[x]/(factors).
    """
    import sympy

    x = sympy.Symbol("x")
    coeffs = minimal_polynomial(t)
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(coeffs)], x)
    if sympy.gcd(poly, poly.diff(x)).degree() > 0:
        return None  # not semisimple
    rational: list[Fraction] = []
    imaginary: list[Fraction] = []
    for factor, mult in poly.factor_list()[1]:
        assert mult == 1
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            rational.append(Fraction(-sympy.Rational(c0, c1)))
        elif factor.degree() == 2:
            c2, c1, c0 = factor.all_coeffs()
            if c1 != 0:
                return None
            c = Fraction(sympy.Rational(c0, c2))
            mu = _sqrt_fraction(c)
            if mu is None or mu == 0:
                return None
            imaginary.append(mu)
        else:
            return None
    return rational, imaginary


@dataclass
class WeightSpace:
    """One joint weight space of a commuting family of semisimple operators.

    kind 'real': the functional takes the rational values `values` on the
    generators.  kind 'imag': the weight is i * values, and `jmat` is the
    complex structure on the space (in subspace coordinates).
    """
    kind: str
    values: tuple[Fraction, ...]
    space: Subspace
    jmat: Optional[Matrix] = None


def joint_weight_spaces(operators: Sequence[Matrix], ambient: int) -> list[WeightSpace]:
    """Simultaneous weight decomposition, spectra restricted to Q u iQ."""
    pieces: list[dict] = [{"space": Subspace.full(ambient), "tags": []}]
    for t in operators:
        new_pieces: list[dict] = []
        for piece in pieces:
            sub = piece["space"]
            if sub.dim == 0:
                continue
            tr = _restrict_operator(t, sub)
            spec = spectrum_qi(tr)
            if spec is None:
                raise UnsupportedInput(
                    "operator spectrum outside Q u iQ (or not semisimple)")
            rational, imaginary = spec
            ident = Matrix.identity(sub.dim)
            for r in rational:
                ker = kernel(tr - ident.scale(r))
                if ker.dim == 0:
                    continue
                cols = [sub.basis.apply(c) for c in ker.basis.columns()]
                new_pieces.append({
                    "space": Subspace.from_spanning_cols(ambient, cols),
                    "tags": piece["tags"] + [("real", r)],
                })
            for mu in imaginary:
                ker = kernel(tr @ tr + ident.scale(mu * mu))
                if ker.dim == 0:
                    continue
                cols = [sub.basis.apply(c) for c in ker.basis.columns()]
                new_pieces.append({
                    "space": Subspace.from_spanning_cols(ambient, cols),
                    "tags": piece["tags"] + [("imag", mu)],
                })
        pieces = new_pieces
    # resolve imaginary pieces into uniform-J spaces
    out: list[WeightSpace] = []
    for piece in pieces:
        out.extend(_resolve_piece(operators, piece["space"], piece["tags"]))
    return out


def _resolve_piece(operators: Sequence[Matrix], sub: Subspace,
                   tags: list[tuple[str, Fraction]]) -> list[WeightSpace]:
    has_imag = any(k == "imag" for k, _ in tags)
    if has_imag and any(k == "real" and v != 0 for k, v in tags):
        raise UnsupportedInput("mixed real/imaginary weight (outside Q u iQ)")
    if not has_imag:
        return [WeightSpace("real", tuple(v for _, v in tags), sub)]
    # fix J from the first imaginary tag, then split by the rational
    # eigenvalues of -T@J for the remaining imaginary generators
    first = next(i for i, (k, _) in enumerate(tags) if k == "imag")
    tr = _restrict_operator(operators[first], sub)
    j = tr.scale(Fraction(1) / tags[first][1])
    spaces = [(sub, j, {first: tags[first][1]})]
    for i, (k, _v) in enumerate(tags):
        if i == first or k != "imag":
            continue
        new_spaces = []
        for cur, jcur, vals in spaces:
            ti = _restrict_operator(operators[i], cur)
            c = (ti @ jcur).scale(-1)
            spec = spectrum_qi(c)
            if spec is None or spec[1]:
                raise UnsupportedInput("incoherent imaginary weight pair")
            ident = Matrix.identity(cur.dim)
            for b in spec[0]:
                ker = kernel(c - ident.scale(b))
                if ker.dim == 0:
                    continue
                cols = [cur.basis.apply(x) for x in ker.basis.columns()]
                nxt = Subspace.from_spanning_cols(sub.ambient_dim, cols)
                jr = _restrict_operator_via(cur, jcur, nxt)
                new_spaces.append((nxt, jr, {**vals, i: b}))
        spaces = new_spaces
    out = []
    for cur, jcur, vals in spaces:
        values = tuple(vals.get(i, Fraction(0)) if tags[i][0] == "imag" else Fraction(0)
                       for i in range(len(tags)))
        out.append(WeightSpace("imag", values, cur, jcur))
    return out


def _restrict_operator_via(cur: Subspace, op_in_cur: Matrix, nxt: Subspace) -> Matrix:
    """Restrict an operator given in cur-coordinates to a subspace nxt of it."""
    coords_nxt, _ = solve_linear(cur.basis, nxt.basis)
    assert coords_nxt is not None
    img = cur.basis @ (op_in_cur @ coords_nxt)
    res, _ = solve_linear(nxt.basis, img)
    if res is None:
        raise LieError("subspace not invariant in restriction")
    return res


# ---------------------------------------------------------------------------
# orthogonal modules
# ---------------------------------------------------------------------------


def check_orthogonal_module(l_inv: InvolutiveLieAlgebra, a_dim: int,
                            rho: Sequence[Matrix], form_a: Matrix,
                            theta_a: Matrix) -> dict:
    """Verify all the axioms; report the first violation per family."""
    report = {"homomorphism": None, "skew": None, "involution": None,
              "compatibility": None, "ok": True}
    g = l_inv.algebra
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = Matrix.zero(a_dim, a_dim)
            for k, c in enumerate(g.bracket_basis(i, j)):
                if c != 0:
                    lhs = lhs + rho[k].scale(c)
            rhs = rho[i] @ rho[j] - rho[j] @ rho[i]
            if lhs != rhs and report["homomorphism"] is None:
                report["homomorphism"] = (i, j)
    for k in range(g.dim):
        if not (form_a @ rho[k] + rho[k].transpose() @ form_a).is_zero():
            if report["skew"] is None:
                report["skew"] = k
    if theta_a @ theta_a != Matrix.identity(a_dim) or \
            theta_a.transpose() @ form_a @ theta_a != form_a:
        report["involution"] = True
    for k in range(g.dim):
        rho_theta = Matrix.zero(a_dim, a_dim)
        for m, c in enumerate(l_inv.theta.col(k)):
            if c != 0:
                rho_theta = rho_theta + rho[m].scale(c)
        if theta_a @ rho_theta != rho[k] @ theta_a:
            if report["compatibility"] is None:
                report["compatibility"] = k
    report["ok"] = all(report[k] is None for k in
                       ("homomorphism", "skew", "involution", "compatibility"))
    return report


class OrthogonalModule:
    """Orthogonal (l, theta_l)-module: validated at construction."""

    def __init__(self, l_inv: InvolutiveLieAlgebra, a_dim: int,
                 rho: Sequence[Matrix], form_a: Matrix, theta_a: Matrix):
        if len(rho) != l_inv.dim:
            raise LieError("rho needs one matrix per basis vector of l")
        if not form_a.is_symmetric() or form_signature(form_a)[2] != 0:
            raise LieError("module form must be symmetric nondegenerate")
        report = check_orthogonal_module(l_inv, a_dim, rho, form_a, theta_a)
        if not report["ok"]:
            raise LieError(f"orthogonal module axioms fail: {report}")
        self.l_inv = l_inv
        self.a_dim = a_dim
        self.rho = list(rho)
        self.form_a = form_a
        self.theta_a = theta_a
        self.a_plus, self.a_minus = eigensplit_matrix(theta_a)
        self._weights: Optional[list[WeightSpace]] = None

    # -- basic maps ------------------------------------------------------
    def rho_of(self, x: Vec) -> Matrix:
        m = Matrix.zero(self.a_dim, self.a_dim)
        for i, c in enumerate(x):
            if c != 0:
                m = m + self.rho[i].scale(c)
        return m

    def pair(self, u: Vec, v: Vec) -> Fraction:
        from .linalg import vec_dot
        return vec_dot(self.form_a.apply(u), v)

    def invariants(self) -> Subspace:
        if self.l_inv.dim == 0:
            return Subspace.full(self.a_dim)
        stacked = Matrix.from_rows([row for m in self.rho for row in m.data])
        return kernel(stacked)

    def rho_l_a(self) -> Subspace:
        cols: list[Vec] = []
        for m in self.rho:
            cols.extend(m.columns())
        return Subspace.from_spanning_cols(self.a_dim, cols)

    def invariants_split(self) -> tuple[Subspace, Subspace]:
        if not self.is_semisimple():
            raise LieError("invariants_split requires a semisimple module")
        a_l = self.invariants()
        rla = self.rho_l_a()
        if a_l.intersect(rla).dim != 0 or a_l.dim + rla.dim != self.a_dim:
            raise LieError("invariants_split: decomposition failed")
        return a_l, rla

    def is_semisimple(self) -> bool:
        alg = matrix_algebra_closure(self.rho, self.a_dim)
        rad = trace_form_radical(alg)
        return all(m.is_zero() for m in rad)

    # -- weights -----------------------------------------------------------
    def action_generators(self) -> tuple[list[Vec], list[Matrix]]:
        """Vectors spanning a complement of l' in l and their actions.

        The induced action of l/l' determines the weights; a semisimple
        module kills l' = R(l) in the solvable cases.
        """
        g = self.l_inv.algebra
        der = g.derived_subalgebra()
        comp = der.complement_in(Subspace.full(g.dim))
        gens = comp.basis.columns()
        return list(gens), [self.rho_of(v) for v in gens]

    def weight_spaces(self) -> list[WeightSpace]:
        if self._weights is None:
            _gens, ops = self.action_generators()
            self._weights = joint_weight_spaces(ops, self.a_dim)
        return self._weights

    def weight_multiset(self) -> list[tuple]:
        """Canonical multiset of weight data (for invariant separation)."""
        out = []
        for w in self.weight_spaces():
            values = list(w.values)
            nz = next((v for v in values if v != 0), None)
            if nz is not None and nz < 0:
                values = [-v for v in values]
            out.append((w.kind, tuple(values), w.space.dim))
        return sorted(out)

    def direct_sum(self, other: "OrthogonalModule") -> "OrthogonalModule":
        if self.l_inv != other.l_inv:
            raise LieError("direct sum over different base algebras")
        n, m = self.a_dim, other.a_dim

        def block(a: Matrix, b: Matrix) -> Matrix:
            return Matrix(n + m, n + m,
                          [[a[i, j] if i < n and j < n
                            else b[i - n, j - n] if i >= n and j >= n
                            else 0 for j in range(n + m)] for i in range(n + m)])

        rho = [block(self.rho[k], other.rho[k]) for k in range(self.l_inv.dim)]
        return OrthogonalModule(self.l_inv, n + m, rho,
                                block(self.form_a, other.form_a),
                                block(self.theta_a, other.theta_a))

    def signature_split(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """((p,q) on a_plus, (r,s) on a_minus) as (n_minus, n_plus) pairs."""
        bp, bm = self.a_plus.basis, self.a_minus.basis
        sp = form_signature(bp.transpose() @ self.form_a @ bp)
        sm = form_signature(bm.transpose() @ self.form_a @ bm)
        if sp[2] or sm[2]:
            raise LieError("degenerate restriction to a theta_a eigenspace")
        return (sp[0], sp[1]), (sm[0], sm[1])

    def __repr__(self) -> str:
        return f"OrthogonalModule(dim l={self.l_inv.dim}, dim a={self.a_dim})"


# ---------------------------------------------------------------------------
# block specs
# ---------------------------------------------------------------------------

ABELIAN_KINDS = {"rho_plus", "rho_minus", "rho_tilde_plus", "rho_tilde_minus",
                 "rho_double_prime", "rho_zero"}
SU2_KINDS = {"su2_rho_k_plus", "su2_rho_k_minus", "su2_rho_prime_k"}
SL2_KINDS = {"sl2_rho_k_plus", "sl2_rho_k_minus", "sl2_rho_prime_k", "sl2_adjoint"}


@dataclass(frozen=True)
class BlockSpec:
    """One irreducible (or trivial) building block of a module."""
    kind: str
    params: tuple

    def __post_init__(self):
        k = self.kind
        if k in ("rho_plus", "rho_minus", "rho_tilde_plus", "rho_tilde_minus"):
            if len(self.params) != 1 or not isinstance(self.params[0], tuple):
                raise LieError(f"{k} takes a single weight tuple")
        elif k == "rho_double_prime":
            if len(self.params) != 2 or not all(isinstance(p, tuple) for p in self.params):
                raise LieError("rho_double_prime takes a (mu, nu) pair of weight tuples")
        elif k == "rho_zero":
            if len(self.params) != 4 or not all(isinstance(p, int) and p >= 0 for p in self.params):
                raise LieError("rho_zero takes the signature (p, q, r, s)")
        elif k in SU2_KINDS or k in SL2_KINDS - {"sl2_adjoint"}:
            if len(self.params) != 1 or not isinstance(self.params[0], int) or self.params[0] < 1:
                raise LieError(f"{k} takes a positive integer k")
        elif k == "sl2_adjoint":
            if self.params:
                raise LieError("sl2_adjoint takes no parameters")
        else:
            raise LieError(f"unknown block kind {k!r}")

    def to_json(self) -> dict:
        from .linalg import scalar_str

        def enc(p):
            if isinstance(p, tuple):
                return [scalar_str(frac(x)) for x in p]
            return p
        return {"kind": self.kind, "params": [enc(p) for p in self.params]}

    @staticmethod
    def from_json(obj: dict) -> "BlockSpec":
        def dec(p):
            if isinstance(p, list):
                return tuple(frac(x) for x in p)
            return p
        return BlockSpec(obj["kind"], tuple(dec(p) for p in obj.get("params", [])))


def _weight_functional(l_inv: InvolutiveLieAlgebra, values: tuple) -> list[Fraction]:
    vals = [frac(v) for v in values]
    if len(vals) != l_inv.dim:
        raise LieError("weight tuple length must equal dim l")
    lam = vals
    g = l_inv.algebra
    bad = g.derived_subalgebra().add(l_inv.plus)
    for c in bad.basis.columns():
        if sum((lam[i] * c[i] for i in range(g.dim)), Fraction(0)) != 0:
            raise LieError("weight must vanish on l' + l_plus")
    return lam


def build_block(l_inv: InvolutiveLieAlgebra, spec: BlockSpec) -> OrthogonalModule:
    kind = spec.kind
    if kind in ABELIAN_KINDS:
        return _build_abelian_block(l_inv, spec)
    if kind in SU2_KINDS:
        return _build_su2_block(l_inv, spec)
    if kind in SL2_KINDS:
        return _build_sl2_block(l_inv, spec)
    raise LieError(f"unknown block kind {kind!r}")


def _build_abelian_block(l_inv: InvolutiveLieAlgebra, spec: BlockSpec) -> OrthogonalModule:
    kind = spec.kind
    if kind == "rho_zero":
        p, q, r, s = spec.params
        n = p + q + r + s
        form = Matrix.diag([-1] * p + [1] * q + [-1] * r + [1] * s)
        theta = Matrix.diag([1] * (p + q) + [-1] * (r + s))
        rho = [Matrix.zero(n, n) for _ in range(l_inv.dim)]
        return OrthogonalModule(l_inv, n, rho, form, theta)
    if kind == "rho_double_prime":
        mu = _weight_functional(l_inv, spec.params[0])
        nu = _weight_functional(l_inv, spec.params[1])
        rho = []
        for i in range(l_inv.dim):
            m, n_ = mu[i], nu[i]
            rho.append(Matrix(4, 4, [[0, 0, -n_, m], [0, 0, m, n_],
                                     [n_, m, 0, 0], [m, -n_, 0, 0]]))
        form = Matrix.diag([-1, 1, -1, 1])
        theta = Matrix.diag([1, 1, -1, -1])
        return OrthogonalModule(l_inv, 4, rho, form, theta)
    lam = _weight_functional(l_inv, spec.params[0])
    if kind == "rho_plus":
        block = [[0, -1], [1, 0]]
        form = Matrix.diag([1, 1])
    elif kind == "rho_minus":
        block = [[0, -1], [1, 0]]
        form = Matrix.diag([-1, -1])
    elif kind == "rho_tilde_plus":
        block = [[0, 1], [1, 0]]
        form = Matrix.diag([-1, 1])
    else:  # rho_tilde_minus
        block = [[0, 1], [1, 0]]
        form = Matrix.diag([1, -1])
    theta = Matrix.diag([1, -1])
    b = Matrix.from_rows(block)
    rho = [b.scale(lam[i]) for i in range(l_inv.dim)]
    return OrthogonalModule(l_inv, 2, rho, form, theta)


def _case_sign_on_kernel(theta_a: Matrix, fixed: Subspace) -> Fraction:
    v = fixed.basis.col(0)
    w = theta_a.apply(v)
    for i, c in enumerate(v):
        if c != 0:
            return w[i] / c
    raise LieError("empty kernel")


def _build_su2_block(l_inv: InvolutiveLieAlgebra, spec: BlockSpec) -> OrthogonalModule:
    from .lie import su2
    if l_inv.algebra != su2() or l_inv.theta != Matrix.diag([1, -1, -1]):
        raise LieError("su2 block kinds need the canonical su(2) with l+ = R.H")
    k = spec.params[0]
    if spec.kind == "su2_rho_prime_k":
        rho, gram, invol = reps.su2_quaternionic_block(k)
        return OrthogonalModule(l_inv, 4 * k, rho, gram, invol)
    rho, gram, refl = reps.su2_harmonic_block(k)
    sign = Fraction((-1) ** k) if spec.kind == "su2_rho_k_plus" else Fraction(-((-1) ** k))
    theta = refl.scale(sign)
    mod = OrthogonalModule(l_inv, 2 * k + 1, rho, gram, theta)
    want_plus = k + 1 if spec.kind == "su2_rho_k_plus" else k
    assert mod.a_plus.dim == want_plus
    assert _case_sign_on_kernel(theta, kernel(rho[0])) == \
        (Fraction((-1) ** k) if spec.kind == "su2_rho_k_plus" else -Fraction((-1) ** k))
    return mod


def _build_sl2_block(l_inv: InvolutiveLieAlgebra, spec: BlockSpec) -> OrthogonalModule:
    from .lie import sl2
    if spec.kind == "sl2_adjoint":
        if l_inv.algebra != sl2() or l_inv.theta != Matrix.diag([1, -1, -1]):
            raise LieError("sl2_adjoint needs the canonical sl(2,R) with l+ = R.H")
        g = sl2()
        rho = [g.ad_basis(i) for i in range(3)]
        form = g.killing_form()
        theta = l_inv.theta.scale(-1)
        return OrthogonalModule(l_inv, 3, rho, form, theta)
    theta_case7 = Matrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])
    if l_inv.algebra != sl2() or l_inv.theta != theta_case7:
        raise LieError("sl2 block kinds need the canonical sl(2,R) with l+ = R.(X-Y)")
    k = spec.params[0]
    if spec.kind == "sl2_rho_prime_k":
        rho, form, invol = reps.sl2_dual_pair_block(k)
        return OrthogonalModule(l_inv, 4 * k, rho, form, invol)
    rho, form, w = reps.sl2_split_block(k)
    want = Fraction((-1) ** k) if spec.kind == "sl2_rho_k_plus" else -Fraction((-1) ** k)
    fixed = kernel(rho[1] - rho[2])  # ker rho(X - Y)
    t = want / _case_sign_on_kernel(w, fixed)
    theta = w.scale(t)
    # scale the form so that a_minus is positive definite
    mod = None
    for s in (Fraction(1), Fraction(-1)):
        try:
            cand = OrthogonalModule(l_inv, 2 * k + 1, rho, form.scale(s), theta)
        except LieError:
            continue
        (pm, pp), (mm, mp) = cand.signature_split()
        if mm == 0 and pp == 0:
            mod = cand
            break
    if mod is None:
        raise LieError("sl2 block: no form scaling with the required signature")
    want_plus = k + 1 if spec.kind == "sl2_rho_k_plus" else k
    assert mod.a_plus.dim == want_plus
    return mod


def build_sum(l_inv: InvolutiveLieAlgebra, specs: Sequence[BlockSpec],
              padding: tuple[int, int, int, int] = (0, 0, 0, 0)) -> OrthogonalModule:
    """Direct sum of blocks, with a trivial block of signature `padding`
    appended when nonzero."""
    parts = [build_block(l_inv, s) for s in specs]
    if any(padding):
        parts.append(build_block(l_inv, BlockSpec("rho_zero", tuple(padding))))
    if not parts:
        rho = [Matrix.zero(0, 0) for _ in range(l_inv.dim)]
        return OrthogonalModule(l_inv, 0, rho, Matrix.zero(0, 0), Matrix.zero(0, 0))
    mod = parts[0]
    for p in parts[1:]:
        mod = mod.direct_sum(p)
    return mod


# ---------------------------------------------------------------------------
# weight canonicalization (orbit representatives of Lambda_m, Lambda''_m)
# ---------------------------------------------------------------------------


def _sign_normalize(w: tuple) -> tuple:
    vals = tuple(frac(x) for x in w)
    nz = next((v for v in vals if v != 0), None)
    if nz is None:
        raise LieError("zero weight cannot be canonicalized")
    if nz < 0:
        vals = tuple(-v for v in vals)
    return vals


def canonicalize_weights(weights: Sequence[tuple]) -> list[tuple]:
    """Representative of the S_m x (Z_2)^m orbit: sign-normalize, sort."""
    return sorted(_sign_normalize(w) for w in weights)


def canonicalize_weight_pairs(pairs: Sequence[tuple[tuple, tuple]]) -> list[tuple[tuple, tuple]]:
    """Representative of the Lambda''_m orbit: independent sign
    normalization of each component, then a simultaneous sort of pairs."""
    return sorted((_sign_normalize(m), _sign_normalize(n)) for m, n in pairs)
