"""The admissibility conditions (T1), (T2), (A_k), (B_k) and the per-case
indecomposability criteria for the seven admissible (l, theta_l) with
dim l_- <= 2.

(A_k) quantifies over ideals inside S_1(l) ^ R_k(l); the submodule lattices
appearing there are finite for the supported algebras and enumerated
exactly.  (B_k) computes the maximal submodule b_k weight space by weight
space: for a direction w in a weight space, the defect condition against
the module generated by w reduces to a linear system in w and the scalar
functions K -> <Phi(K), w>, <Phi(K), Jw>; the solution projections assemble
to the unique maximal b_k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .cohomology import (Cochain, QuadraticCochain, QuadraticCocycle,
                         d_cochain, is_theta_fixed, qc_act, theta_pullback)
from .lie import LieAlgebra, LieError, h1, n2, r3m1, sl2, su2
from .linalg import Matrix, Subspace, Vec, form_signature, kernel, solve_linear, solve_vec
from .metric import InvolutiveLieAlgebra
from .modules import OrthogonalModule, UnsupportedInput, module_radical_space

__all__ = [
    "AdmissibilityReport", "recognize_case", "check_T1", "check_T2",
    "check_A0", "check_B0", "check_Ak", "check_Bk", "admissible_class_check",
    "indecomposable_class_check", "cohomology_normal_form",
    "decomposition_witness_verify", "triple_indecomposable_abelian",
]


# ---------------------------------------------------------------------------
# case recognition
# ---------------------------------------------------------------------------

CASE_METHOD = {
    "r1": "case_abelian", "r2": "case_abelian", "n2": "case_n2",
    "r3m1": "case_r3m1", "h1": "case_h1", "su2": "case_semisimple",
    "sl2_h": "case_semisimple", "sl2_xy": "case_semisimple",
}


def recognize_case(l_inv: InvolutiveLieAlgebra) -> Optional[str]:
    """Tag of the Prop.-7.2-style list by structural invariants; None if the
    pair does not match any of the seven shapes."""
    g = l_inv.algebra
    der = g.derived_subalgebra()
    lp, lm = l_inv.plus, l_inv.minus
    if g.dim in (1, 2):
        if der.dim == 0 and lp.dim == 0:
            return "r1" if g.dim == 1 else "r2"
        return None
    if g.dim != 3 or lm.dim != 2 or lp.dim != 1:
        return None
    kf = g.killing_form()
    sig = form_signature(kf)
    if der.dim == 3:
        if sig == (3, 0, 0):
            return "su2"
        if sig == (1, 2, 0):
            b = lp.basis
            val = (b.transpose() @ kf @ b)[0, 0]
            return "sl2_h" if val > 0 else "sl2_xy"
        return None
    if der.dim == 2:
        if sig == (1, 0, 2):
            return "n2"
        if sig == (0, 1, 2):
            return "r3m1"
        return None
    if der.dim == 1 and sig == (0, 0, 3):
        return "h1"
    return None


_CANONICAL = {
    "n2": lambda: (n2(), Matrix.diag([-1, -1, 1])),
    "r3m1": lambda: (r3m1(), Matrix.from_rows([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])),
    "h1": lambda: (h1(), Matrix.diag([-1, -1, 1])),
    "su2": lambda: (su2(), Matrix.diag([1, -1, -1])),
    "sl2_h": lambda: (sl2(), Matrix.diag([1, -1, -1])),
    "sl2_xy": lambda: (sl2(), Matrix.from_rows([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])),
}


def is_canonical_presentation(l_inv: InvolutiveLieAlgebra, tag: str) -> bool:
    if tag == "r1":
        return l_inv.dim == 1 and l_inv.theta == Matrix.diag([-1])
    if tag == "r2":
        return (l_inv.dim == 2 and not l_inv.algebra.brackets
                and l_inv.theta == Matrix.diag([-1, -1]))
    alg, theta = _CANONICAL[tag]()
    return l_inv.algebra == alg and l_inv.theta == theta


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _membership_rows(sub: Subspace) -> Matrix:
    """R with R v = 0 iff v in sub (annihilator rows, standard dot)."""
    ann = kernel(sub.basis.transpose())
    return ann.basis.transpose()


def _alpha0_projector(module: OrthogonalModule) -> Matrix:
    """Projection of a onto a^l along rho(l)a."""
    a_l, rla = module.invariants_split()
    if a_l.dim == 0:
        return Matrix.zero(module.a_dim, module.a_dim)
    change = a_l.basis.hstack(rla.basis) if rla.dim else a_l.basis
    inv = change.inverse()
    coords = inv.submatrix(range(a_l.dim), range(module.a_dim))
    return a_l.basis @ coords


def _bracket_kernel(g: LieAlgebra, vectors: list[Vec]) -> list[tuple]:
    """Kernel of Lambda^2(span) -> g on the given basis vectors; returns a
    list of coefficient dicts over the index pairs."""
    pairs = list(combinations(range(len(vectors)), 2))
    if not pairs:
        return []
    cols = [g.bracket(vectors[s], vectors[t]) for (s, t) in pairs]
    ker = kernel(Matrix.from_cols(cols, ambient=g.dim))
    return [tuple(zip(pairs, kv)) for kv in ker.basis.columns()]


def _alpha_eval(alpha: Cochain, x: Vec, y: Vec) -> Vec:
    return alpha.eval_vectors([x, y])


def _l_chains(g: LieAlgebra) -> tuple[list[Subspace], list[Subspace]]:
    from .extension import canonical_chains
    return canonical_chains(g)


# ---------------------------------------------------------------------------
# the conditions
# ---------------------------------------------------------------------------


def check_T1(l_inv: InvolutiveLieAlgebra) -> bool:
    g = l_inv.algebra
    mb = l_inv.minus.basis.columns()
    cols = [g.bracket(x, y) for x, y in combinations(mb, 2)]
    return Subspace.from_spanning_cols(g.dim, cols) == l_inv.plus


def check_T2(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
             z: QuadraticCocycle) -> bool:
    proj0 = _alpha0_projector(module)
    mb = l_inv.minus.basis.columns()
    cols: list[Vec] = []
    for kv in _bracket_kernel(l_inv.algebra, mb):
        acc = tuple(Fraction(0) for _ in range(module.a_dim))
        for (s, t), coeff in kv:
            if coeff != 0:
                val = _alpha_eval(z.alpha, mb[s], mb[t])
                acc = tuple(a + coeff * b for a, b in zip(acc, val))
        cols.append(proj0.apply(acc))
    img = Subspace.from_spanning_cols(module.a_dim, cols)
    a_l = module.invariants()
    a_l_plus = a_l.intersect(module.a_plus)
    return img == a_l_plus


def check_A0(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
             z: QuadraticCocycle) -> bool:
    g = l_inv.algebra
    n, m = g.dim, module.a_dim
    zl = g.center()
    # ker rho = {x in l : rho(x) = 0}: columns are the vectorized rho(e_i)
    flat_cols = [[mat[r, c] for r in range(m) for c in range(m)] for mat in module.rho]
    ker_rho = kernel(Matrix.from_cols(flat_cols, ambient=m * m)) if n \
        else Subspace.full(0)
    space = zl.intersect(ker_rho)
    d0 = space.dim
    if d0 == 0:
        return True
    # unknowns: u (d0), A0 (m), Z0 (n); rows from (i) and (ii)
    rows: list[list[Fraction]] = []
    sb = space.basis.columns()
    for i in range(n):
        # (i): alpha(e_i, L0) - rho(e_i) A0 = 0   (m rows)
        for r in range(m):
            row = [Fraction(0)] * (d0 + m + n)
            for s, w in enumerate(sb):
                ei = tuple(Fraction(1 if t == i else 0) for t in range(n))
                row[s] = _alpha_eval(z.alpha, ei, w)[r]
            for c in range(m):
                row[d0 + c] = -module.rho[i][r, c]
            rows.append(row)
        # (ii): gamma(e_i, L0, e_k) + <A0, alpha(e_i, e_k)> - Z0([e_i,e_k]) = 0
        for k in range(n):
            row = [Fraction(0)] * (d0 + m + n)
            ei = tuple(Fraction(1 if t == i else 0) for t in range(n))
            ek = tuple(Fraction(1 if t == k else 0) for t in range(n))
            for s, w in enumerate(sb):
                row[s] = z.gamma.eval_vectors([ei, w, ek])
            al = z.alpha.get((i, k))
            fa = module.form_a.apply(al)
            for c in range(m):
                row[d0 + c] = fa[c]
            br = g.bracket_basis(i, k)
            for c in range(n):
                row[d0 + m + c] = -br[c]
            rows.append(row)
    ker = kernel(Matrix.from_rows(rows)) if rows else Subspace.full(d0 + m + n)
    proj = Subspace.from_spanning_cols(d0, [c[:d0] for c in ker.basis.columns()])
    return proj.dim == 0


def check_B0(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
             z: QuadraticCocycle) -> bool:
    proj0 = _alpha0_projector(module)
    g = l_inv.algebra
    basis = [tuple(Fraction(1 if t == i else 0) for t in range(g.dim))
             for i in range(g.dim)]
    cols: list[Vec] = []
    for kv in _bracket_kernel(g, basis):
        acc = tuple(Fraction(0) for _ in range(module.a_dim))
        for (s, t), coeff in kv:
            if coeff != 0:
                val = _alpha_eval(z.alpha, basis[s], basis[t])
                acc = tuple(a + coeff * b for a, b in zip(acc, val))
        cols.append(proj0.apply(acc))
    img = Subspace.from_spanning_cols(module.a_dim, cols)
    return _nondegenerate_on(module.form_a, img)


def _nondegenerate_on(form: Matrix, sub: Subspace) -> bool:
    if sub.dim == 0:
        return True
    gram = sub.basis.transpose() @ form @ sub.basis
    return form_signature(gram)[2] == 0


# -- (A_k) --------------------------------------------------------------------


def _submodules_of(g: LieAlgebra, space: Subspace) -> list[Subspace]:
    """All l-submodules (ideals) inside `space`, for dim(space) <= 2."""
    d = space.dim
    if d == 0:
        return [space]
    ops = [g.ad_basis(i) for i in range(g.dim)]
    restricted = []
    for op in ops:
        coords, _ = solve_linear(space.basis, op @ space.basis)
        if coords is None:
            raise LieError("space is not a submodule")
        restricted.append(coords)
    out = [Subspace.zero(space.ambient_dim), space]
    if d == 1:
        return out
    if d > 2:
        raise UnsupportedInput(
            "submodule lattice enumeration limited to dim <= 2")
    # invariant lines = common eigenvectors of the restricted operators
    nonscalar = [r for r in restricted
                 if r != Matrix.identity(d).scale(r[0, 0])]
    if not nonscalar:
        raise UnsupportedInput(
            "scalar action on a 2-dimensional space: infinite lattice")
    from .modules import spectrum_qi
    t = nonscalar[0]
    spec = spectrum_qi(t)
    lines: list[Subspace] = []
    if spec is None:
        # eigenvalues may be irrational; any invariant line would be a
        # rational eigenline, so enumerate rational eigenvalues only
        spec = ([], [])
        import sympy
        x = sympy.Symbol("x")
        from .modules import minimal_polynomial
        coeffs = minimal_polynomial(t)
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                           for c in reversed(coeffs)], x)
        for factor, _m in poly.factor_list()[1]:
            if factor.degree() == 1:
                c1, c0 = factor.all_coeffs()
                spec[0].append(Fraction(-sympy.Rational(c0, c1)))
    for r in spec[0]:
        eig = kernel(t - Matrix.identity(d).scale(r))
        if eig.dim == 1:
            v = eig.basis.col(0)
            ok = True
            for other in restricted:
                w = other.apply(v)
                if not Subspace.from_spanning_cols(d, [v]).contains(w):
                    ok = False
                    break
            if ok:
                amb = space.basis.apply(v)
                lines.append(Subspace.from_spanning_cols(space.ambient_dim, [amb]))
        elif eig.dim == 2:
            raise UnsupportedInput("scalar eigenspace of full dimension")
    return out + lines


def check_Ak(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
             z: QuadraticCocycle, k: int) -> bool:
    if k < 1:
        raise LieError("check_Ak needs k >= 1")
    g = l_inv.algebra
    s_chain, r_chain = _l_chains(g)
    if k >= len(r_chain):
        return True  # R_k = 0
    rk = r_chain[k]
    if rk.dim == 0:
        return True
    target = s_chain[1].intersect(rk)
    for sub in _submodules_of(g, target):
        if sub.dim == 0:
            continue
        if _ak_system_solvable(l_inv, module, z, sub, rk):
            return False
    return True


def _ak_system_solvable(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                        z: QuadraticCocycle, kspace: Subspace, rk: Subspace) -> bool:
    g = l_inv.algebra
    n, m = g.dim, module.a_dim
    dk, r = kspace.dim, rk.dim
    # unknowns: Phi1 (m x dk), Phi2 (r x dk); Phi2(K) in R_k^* via the
    # coordinate functionals of the R_k basis
    nvars = m * dk + r * dk

    def phi1_col(j: int, row: int) -> int:
        return row * dk + j

    def phi2_col(j: int, t: int) -> int:
        return m * dk + t * dk + j

    kb = kspace.basis.columns()
    rb = rk.basis.columns()
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(n):
        ei = tuple(Fraction(1 if s == i else 0) for s in range(n))
        for j, kvec in enumerate(kb):
            br = g.bracket(ei, kvec)          # lies in kspace
            br_k = solve_vec(kspace.basis, br)
            if br_k is None:
                raise LieError("(A_k): bracket leaves the candidate ideal")
            # (i): alpha(e_i, K_j) = rho(e_i) Phi1(K_j) - Phi1([e_i,K_j])
            aval = _alpha_eval(z.alpha, ei, kvec)
            for c in range(m):
                row = [Fraction(0)] * nvars
                for b in range(m):
                    row[phi1_col(j, b)] += module.rho[i][c, b]
                for j2 in range(dk):
                    row[phi1_col(j2, c)] -= br_k[j2]
                rows.append(row)
                rhs.append(aval[c])
            # (ii) as an element of R_k^*: evaluate against each w_t
            for t, wvec in enumerate(rb):
                row = [Fraction(0)] * nvars
                gval = z.gamma.eval_vectors([ei, kvec, wvec])
                # -<Phi1(K_j), alpha(e_i, w_t)>
                aw = module.form_a.apply(_alpha_eval(z.alpha, ei, wvec))
                for b in range(m):
                    row[phi1_col(j, b)] -= aw[b]
                # +Phi2(K_j)([e_i, w_t])
                brw = g.bracket(ei, wvec)
                brw_r = solve_vec(rk.basis, brw)
                if brw_r is None:
                    raise LieError("(A_k): R_k is not an ideal")
                for t2 in range(r):
                    row[phi2_col(j, t2)] += brw_r[t2]
                # +Phi2([e_i,K_j])(w_t)
                for j2 in range(dk):
                    row[phi2_col(j2, t)] += br_k[j2]
                rows.append(row)
                rhs.append(gval)
    a = Matrix.from_rows(rows)
    b = Matrix.from_cols([rhs])
    x, _ = solve_linear(a, b)
    return x is not None


# -- (B_k) --------------------------------------------------------------------


def compute_bk(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
               z: QuadraticCocycle, k: int) -> Subspace:
    """The maximal submodule b_k of Definition-(B_k)."""
    g = l_inv.algebra
    _s, r_chain = _l_chains(g)
    if k >= len(r_chain) or r_chain[k].dim == 0:
        return Subspace.full(module.a_dim)
    rk = r_chain[k]
    rb = rk.basis.columns()
    r = len(rb)
    n, m = g.dim, module.a_dim
    total = Subspace.zero(m)
    for w in module.weight_spaces():
        e = w.space
        d = e.dim
        if w.kind == "real":
            lam = _extend_weight(module, w.values)
            # unknowns: u (d), psi (r)
            rows: list[list[Fraction]] = []
            for i in range(n):
                ei = tuple(Fraction(1 if s == i else 0) for s in range(n))
                for t, wvec in enumerate(rb):
                    row = [Fraction(0)] * (d + r)
                    av = module.form_a.apply(_alpha_eval(z.alpha, ei, wvec))
                    for c in range(d):
                        col = e.basis.col(c)
                        row[c] = sum((av[s] * col[s] for s in range(m)), Fraction(0))
                    row[d + t] += lam[i]
                    brw = solve_vec(rk.basis, g.bracket(ei, wvec))
                    for t2 in range(r):
                        row[d + t2] += brw[t2]
                    rows.append(row)
            sol = kernel(Matrix.from_rows(rows)) if rows else Subspace.full(d + r)
            ucols = [c[:d] for c in sol.basis.columns()]
            part = Subspace.from_spanning_cols(
                m, [e.basis.apply(u) for u in
                    Subspace.from_spanning_cols(d, ucols).basis.columns()])
        else:
            mu = _extend_weight(module, w.values)
            jm = w.jmat
            rows = []
            for i in range(n):
                ei = tuple(Fraction(1 if s == i else 0) for s in range(n))
                for t, wvec in enumerate(rb):
                    av = module.form_a.apply(_alpha_eval(z.alpha, ei, wvec))
                    brw = solve_vec(rk.basis, g.bracket(ei, wvec))
                    row1 = [Fraction(0)] * (d + 2 * r)
                    row2 = [Fraction(0)] * (d + 2 * r)
                    for c in range(d):
                        col = e.basis.col(c)
                        jcol = e.basis.apply(jm.col(c))
                        row1[c] = sum((av[s] * col[s] for s in range(m)), Fraction(0))
                        row2[c] = sum((av[s] * jcol[s] for s in range(m)), Fraction(0))
                    row1[d + r + t] += mu[i]        # +mu(e_i) psi_b(t)
                    row2[d + t] -= mu[i]            # -mu(e_i) psi_a(t)
                    for t2 in range(r):
                        row1[d + t2] += brw[t2]         # psi_a([e_i,w_t])
                        row2[d + r + t2] += brw[t2]     # psi_b([e_i,w_t])
                    rows.append(row1)
                    rows.append(row2)
            sol = kernel(Matrix.from_rows(rows)) if rows else Subspace.full(d + 2 * r)
            ucols = [c[:d] for c in sol.basis.columns()]
            usub = Subspace.from_spanning_cols(d, ucols)
            # sanity: J-invariance of the direction space
            for u in usub.basis.columns():
                if not usub.contains(jm.apply(u)):
                    raise LieError("(B_k): direction space not J-invariant")
            part = Subspace.from_spanning_cols(
                m, [e.basis.apply(u) for u in usub.basis.columns()])
        total = total.add(part)
    return total


def _extend_weight(module: OrthogonalModule, values: tuple) -> list[Fraction]:
    """Weight values on the full l-basis (zero on l' and its complement map)."""
    gens, _ = module.action_generators()
    g = module.l_inv.algebra
    der = g.derived_subalgebra()
    gen_mat = Matrix.from_cols(gens, ambient=g.dim)
    mix = gen_mat.hstack(der.basis) if der.dim else gen_mat
    out = []
    for i in range(g.dim):
        ei = tuple(Fraction(1 if s == i else 0) for s in range(g.dim))
        coords = solve_vec(mix, ei)
        out.append(sum((values[t] * coords[t] for t in range(len(gens))), Fraction(0)))
    return out


def check_Bk(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
             z: QuadraticCocycle, k: int) -> bool:
    if k < 1:
        raise LieError("check_Bk needs k >= 1")
    bk = compute_bk(l_inv, module, z, k)
    # the maximal submodule is automatically theta_a-invariant
    timg = Subspace.from_spanning_cols(
        module.a_dim, [module.theta_a.apply(c) for c in bk.basis.columns()])
    if timg != bk:
        raise LieError("(B_k): b_k is not theta_a-invariant")
    return _nondegenerate_on(module.form_a, bk)


# ---------------------------------------------------------------------------
# the aggregate report
# ---------------------------------------------------------------------------


@dataclass
class AdmissibilityReport:
    semisimple: bool
    T1: bool
    T2: Optional[bool] = None
    A0: Optional[bool] = None
    B0: Optional[bool] = None
    Ak: list = field(default_factory=list)
    Bk: list = field(default_factory=list)
    admissible: bool = False
    method: str = "generic"

    def to_json(self) -> dict:
        return {
            "semisimple": self.semisimple, "T1": self.T1, "T2": self.T2,
            "A0": self.A0, "B0": self.B0,
            "Ak": [[k, v] for k, v in self.Ak], "Bk": [[k, v] for k, v in self.Bk],
            "admissible": self.admissible, "method": self.method,
        }


def admissible_class_check(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                           z: QuadraticCocycle) -> AdmissibilityReport:
    """Admissibility of [alpha, gamma]: semisimple module, (T1), and the
    conditions (T2), (A_k), (B_k) for 0 <= k <= m with R_{m+1}(l) = 0."""
    if not is_theta_fixed(module, z):
        raise LieError("admissible_class_check needs a Theta-fixed cocycle")
    tag = recognize_case(l_inv)
    method = CASE_METHOD.get(tag, "generic") if tag else "generic"
    ss = module.is_semisimple()
    t1 = check_T1(l_inv)
    report = AdmissibilityReport(semisimple=ss, T1=t1, method=method)
    if not (ss and t1):
        report.admissible = False
        return report
    report.T2 = check_T2(l_inv, module, z)
    report.A0 = check_A0(l_inv, module, z)
    report.B0 = check_B0(l_inv, module, z)
    _s, r_chain = _l_chains(l_inv.algebra)
    m_top = len(r_chain) - 2  # R_{m_top + 1} = 0
    ok = report.T2 and report.A0 and report.B0
    for k in range(1, m_top + 1):
        ak = check_Ak(l_inv, module, z, k)
        bk = check_Bk(l_inv, module, z, k)
        report.Ak.append((k, ak))
        report.Bk.append((k, bk))
        ok = ok and ak and bk
    report.admissible = bool(ok)
    return report


# ---------------------------------------------------------------------------
# normal forms and indecomposability
# ---------------------------------------------------------------------------


def cohomology_normal_form(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                           z: QuadraticCocycle) -> QuadraticCocycle:
    """Case normal form of a Theta-fixed cocycle.

    Acts by a plus-part cochain (tau, 0) so that alpha lands in the case
    subspace Z_l (n2, r3m1, h1), in C^2(l, a^l_+) (abelian), or vanishes
    (su2/sl2).  The class is unchanged.
    """
    tag = recognize_case(l_inv)
    if tag is None or not is_canonical_presentation(l_inv, tag):
        raise UnsupportedInput("normal form needs a canonical case presentation")
    if not is_theta_fixed(module, z):
        raise LieError("normal form needs a Theta-fixed cocycle")
    g = l_inv.algebra
    n, m = g.dim, module.a_dim
    # unknowns: tau matrix T (m x n): tau(e_j) = col j
    nvars = m * n

    def var(r: int, j: int) -> int:
        return r * n + j

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    # plus-part constraint: theta_a T theta_l = T
    tl, ta = l_inv.theta, module.theta_a
    for rr in range(m):
        for j in range(n):
            row = [Fraction(0)] * nvars
            row[var(rr, j)] -= Fraction(1)
            for r2 in range(m):
                for j2 in range(n):
                    row[var(r2, j2)] += ta[rr, r2] * tl[j2, j]
            rows.append(row)
            rhs.append(Fraction(0))

    def dtau_entry(i: int, j: int, r: int) -> list[tuple[int, Fraction]]:
        """coefficients of (d tau)(e_i, e_j)_r in the tau variables."""
        terms = [(var(b, j), module.rho[i][r, b]) for b in range(m)
                 if module.rho[i][r, b] != 0]
        terms += [(var(b, i), -module.rho[j][r, b]) for b in range(m)
                  if module.rho[j][r, b] != 0]
        br = g.bracket_basis(i, j)
        for k2, c in enumerate(br):
            if c != 0:
                terms.append((var(r, k2), -c))
        return terms

    def demand_in_subspace(i: int, j: int, sub: Subspace):
        rmat = _membership_rows(sub)
        for t in range(rmat.rows):
            row = [Fraction(0)] * nvars
            base = Fraction(0)
            for r in range(m):
                coeff = rmat[t, r]
                if coeff == 0:
                    continue
                base += coeff * z.alpha.get((i, j))[r]
                for col, cval in dtau_entry(i, j, r):
                    row[col] += coeff * cval
            rows.append(row)
            rhs.append(-base)

    def demand_linear(pairs_coeffs: list[tuple[int, int, Matrix]]):
        """sum_k M_k (alpha+dtau)(i_k, j_k) = 0 componentwise."""
        for r in range(m):
            row = [Fraction(0)] * nvars
            base = Fraction(0)
            for (i, j, mat) in pairs_coeffs:
                for s in range(m):
                    coeff = mat[r, s]
                    if coeff == 0:
                        continue
                    base += coeff * z.alpha.get((i, j))[s]
                    for col, cval in dtau_entry(i, j, s):
                        row[col] += coeff * cval
            rows.append(row)
            rhs.append(-base)

    a_l = module.invariants()
    a_l_plus = a_l.intersect(module.a_plus)
    a_l_minus = a_l.intersect(module.a_minus)
    ident = Matrix.identity(m)
    if tag in ("r1", "r2"):
        for i in range(n):
            for j in range(i + 1, n):
                demand_in_subspace(i, j, a_l_plus)
    elif tag in ("su2", "sl2_h", "sl2_xy"):
        for i in range(n):
            for j in range(i + 1, n):
                demand_in_subspace(i, j, Subspace.zero(m))
    elif tag == "n2":
        e_rot = kernel(module.rho[0] @ module.rho[0] + ident)
        demand_in_subspace(1, 2, a_l_plus)                       # alpha(Y,Z)
        demand_in_subspace(0, 1, e_rot.intersect(module.a_plus))  # alpha(X,Y)
        # alpha(X,Z) = rho(X) alpha(X,Y)
        demand_linear([(0, 2, ident), (0, 1, -module.rho[0])])
    elif tag == "r3m1":
        e1 = kernel(module.rho[0] - ident)
        demand_in_subspace(1, 2, a_l_plus)
        demand_in_subspace(0, 1, e1)
        # theta_a alpha(X,Y) = -alpha(X,Z)
        demand_linear([(0, 1, module.theta_a), (0, 2, ident)])
    elif tag == "h1":
        demand_in_subspace(0, 1, Subspace.zero(m))               # alpha(X,Y) = 0
        demand_in_subspace(0, 2, a_l_minus)                      # alpha(X,Z)
        demand_in_subspace(1, 2, a_l_minus)                      # alpha(Y,Z)
    else:
        raise UnsupportedInput(f"no normal form for tag {tag}")

    sol, _ = solve_linear(Matrix.from_rows(rows), Matrix.from_cols([rhs]))
    if sol is None:
        raise LieError("normal form system unsolvable; cocycle class outside "
                       "the classified fragment")
    tvals = {}
    for j in range(n):
        tvals[(j,)] = tuple(sol[var(r, j), 0] for r in range(m))
    tau = Cochain(1, n, m, tvals)
    c = QuadraticCochain(tau, Cochain.zero(2, n, None))
    out = qc_act(module, z, c)
    if not is_theta_fixed(module, out):
        raise LieError("normal form lost Theta-invariance")
    return out


def triple_indecomposable_abelian(l_inv: InvolutiveLieAlgebra,
                                  module: OrthogonalModule) -> bool:
    """Indecomposability of the triple (l, theta, a) for abelian l = R^k,
    theta = -Id, decided on the weight support."""
    if module.invariants().dim != 0:
        return False
    if l_inv.dim <= 1:
        return True
    directions = set()
    for w in module.weight_spaces():
        vals = w.values
        nz = next((v for v in vals if v != 0), None)
        if nz is None:
            return False  # zero weight = invariants, already excluded
        directions.add(tuple(v / nz for v in vals))
    return len(directions) >= 3


def indecomposable_class_check(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                               z: QuadraticCocycle) -> bool:
    """Membership of the class in the indecomposable set, per-case criteria.

    Precondition: the class is admissible (checked)."""
    report = admissible_class_check(l_inv, module, z)
    if not report.admissible:
        raise LieError("indecomposable_class_check needs an admissible class")
    tag = recognize_case(l_inv)
    if tag is None or not is_canonical_presentation(l_inv, tag):
        raise UnsupportedInput("indecomposability dispatch needs a canonical "
                               "case presentation")
    a_l = module.invariants()
    if tag in ("su2", "sl2_h", "sl2_xy"):
        return a_l.dim == 0
    nf = cohomology_normal_form(l_inv, module, z)
    alpha, gamma = nf.alpha, nf.gamma
    if tag in ("r1", "r2"):
        a_l_plus = a_l.intersect(module.a_plus)
        a_l_minus = a_l.intersect(module.a_minus)
        if not alpha.is_zero():
            return a_l_plus.dim == 1 and a_l_minus.dim == 0
        return a_l.dim == 0 and triple_indecomposable_abelian(l_inv, module)
    if tag in ("n2", "r3m1"):
        if not alpha.is_zero():
            ayz = alpha.get((1, 2))
            span_yz = Subspace.from_spanning_cols(module.a_dim, [ayz])
            if span_yz.dim != 1 or span_yz != a_l:
                return False
            span_x = Subspace.from_spanning_cols(
                module.a_dim, [alpha.get((0, 1)), alpha.get((0, 2))])
            return _nondegenerate_on(module.form_a, span_x)
        return a_l.dim == 0 and not gamma.is_zero()
    if tag == "h1":
        if alpha.is_zero():
            return False
        span_z = Subspace.from_spanning_cols(
            module.a_dim, [alpha.get((2, 0)), alpha.get((2, 1))])
        return span_z == a_l
    raise UnsupportedInput(f"unsupported case tag {tag}")


# ---------------------------------------------------------------------------
# decomposition witnesses
# ---------------------------------------------------------------------------


def _is_morphism_of_triples(src_l: InvolutiveLieAlgebra, src_mod: OrthogonalModule,
                            dst_l: InvolutiveLieAlgebra, dst_mod: OrthogonalModule,
                            q: Matrix, j: Matrix) -> bool:
    """(q, j): (src) -> (dst); q: l -> l_i, j: a_i -> a (reverse direction)."""
    g, gi = src_l.algebra, dst_l.algebra
    if q.rows != gi.dim or q.cols != g.dim:
        return False
    if j.rows != src_mod.a_dim or j.cols != dst_mod.a_dim:
        return False
    for s in range(g.dim):
        for t in range(s + 1, g.dim):
            if q.apply(g.bracket_basis(s, t)) != gi.bracket(q.col(s), q.col(t)):
                return False
    if q @ src_l.theta != dst_l.theta @ q:
        return False
    if j @ dst_mod.theta_a != src_mod.theta_a @ j:
        return False
    if j.transpose() @ src_mod.form_a @ j != dst_mod.form_a:
        return False  # isometric embedding
    for s in range(g.dim):
        lhs = j @ dst_mod.rho_of(q.col(s))
        rhs = src_mod.rho[s] @ j
        if lhs != rhs:
            return False
    return True


def _pullback_cocycle(src_mod: OrthogonalModule, dst_mod: OrthogonalModule,
                      q: Matrix, j: Matrix, z: QuadraticCocycle) -> QuadraticCocycle:
    n = q.cols
    alpha_vals = {}
    gamma_vals = {}
    qcols = [q.col(s) for s in range(n)]
    for s in range(n):
        for t in range(s + 1, n):
            av = z.alpha.eval_vectors([qcols[s], qcols[t]])
            alpha_vals[(s, t)] = j.apply(av)
            for u in range(t + 1, n):
                pass
    for s in range(n):
        for t in range(s + 1, n):
            for u in range(t + 1, n):
                gamma_vals[(s, t, u)] = z.gamma.eval_vectors(
                    [qcols[s], qcols[t], qcols[u]])
    return QuadraticCocycle(Cochain(2, n, src_mod.a_dim, alpha_vals),
                            Cochain(3, n, None, gamma_vals))


def decomposition_witness_verify(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                                 part1, part2, z1: QuadraticCocycle,
                                 z2: QuadraticCocycle, z: QuadraticCocycle) -> bool:
    """True iff (q1,j1), (q2,j2) is a non-trivial decomposition of the triple
    and [z] = [(q1,j1)^* z1 + (q2,j2)^* z2].

    Each part is (l_i_inv, module_i, q_i, j_i)."""
    l1, mod1, q1, j1 = part1
    l2, mod2, q2, j2 = part2
    if (q1.is_zero() and j1.is_zero()) or (q2.is_zero() and j2.is_zero()):
        return False
    if not _is_morphism_of_triples(l_inv, module, l1, mod1, q1, j1):
        return False
    if not _is_morphism_of_triples(l_inv, module, l2, mod2, q2, j2):
        return False
    # (q1 + q2, j1 + j2) must be an isomorphism
    if l1.dim + l2.dim != l_inv.dim or mod1.a_dim + mod2.a_dim != module.a_dim:
        return False
    qsum = Matrix.from_rows([list(q1.row(i)) for i in range(q1.rows)]
                            + [list(q2.row(i)) for i in range(q2.rows)])
    if qsum.rank() != l_inv.dim:
        return False
    jsum = j1.hstack(j2)
    if jsum.rank() != module.a_dim:
        return False
    w1 = _pullback_cocycle(module, mod1, q1, j1, z1)
    w2 = _pullback_cocycle(module, mod2, q2, j2, z2)
    total = QuadraticCocycle(w1.alpha + w2.alpha, w1.gamma + w2.gamma)
    from .cohomology import is_quadratic_cocycle
    if not is_quadratic_cocycle(module, total.alpha, total.gamma):
        return False
    return _classes_equal(l_inv, module, total, z)


def _classes_equal(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                   za: QuadraticCocycle, zb: QuadraticCocycle) -> bool:
    """Equality in H^2_Q(l, theta, a), decided via the case normal forms."""
    tag = recognize_case(l_inv)
    if tag is not None and is_canonical_presentation(l_inv, tag):
        na = cohomology_normal_form(l_inv, module, za)
        nb = cohomology_normal_form(l_inv, module, zb)
        if na.alpha != nb.alpha:
            return False
        if not na.alpha.is_zero():
            return True  # class determined by the alpha part
        if tag in ("r1", "r2"):
            return True  # C^3 = 0 there
        return na.gamma == nb.gamma
    if za.alpha == zb.alpha and za.gamma == zb.gamma:
        return True
    raise UnsupportedInput("class equality is only decided for the canonical "
                           "case presentations")
