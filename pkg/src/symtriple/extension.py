"""Quadratic extensions: the standard model, canonical chains and ideal,
section/cocycle extraction and the equivalence map Psi."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cohomology import (Cochain, QuadraticCochain, QuadraticCocycle,
                         is_theta_fixed, make_cocycle)
from .lie import LieAlgebra, LieError
from .linalg import Matrix, Subspace, Vec, kernel, solve_linear, solve_vec, vec_dot
from .metric import InvolutiveLieAlgebra, MetricLieAlgebraWithInvolution
from .modules import (OrthogonalModule, module_radical_space,
                      module_socle_preimage)

__all__ = [
    "StandardModel", "QuadraticExtension", "build_standard_model",
    "model_signature", "canonical_chains", "canonical_ideal",
    "balanced_check", "canonical_quotients", "extract_section",
    "extract_cocycle", "build_psi",
]


class StandardModel:
    """d_{alpha,gamma}(l, theta_l, a) with slot markers 0..n | n..n+m | n+m..2n+m."""

    def __init__(self, metric: MetricLieAlgebraWithInvolution,
                 l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                 cocycle: QuadraticCocycle):
        self.metric = metric
        self.l_inv = l_inv
        self.module = module
        self.cocycle = cocycle
        n, m = l_inv.dim, module.a_dim
        self.slot_l_star = list(range(n))
        self.slot_a = list(range(n, n + m))
        self.slot_l = list(range(n + m, 2 * n + m))

    @property
    def dim(self) -> int:
        return self.metric.dim

    def canonical_extension(self) -> "QuadraticExtension":
        n, m = self.l_inv.dim, self.module.a_dim
        total = 2 * n + m
        ideal = Subspace.from_spanning_cols(
            total, [ _unit(total, i) for i in self.slot_l_star ])
        # quotient by l*: complement is exactly the (a, l)-slots
        i_map = Matrix(n + m, m, [[1 if i == j else 0 for j in range(m)]
                                  for i in range(n + m)])
        p_map = Matrix(n, n + m, [[1 if j == m + i else 0 for j in range(n + m)]
                                  for i in range(n)])
        return QuadraticExtension(self.metric, ideal, self.l_inv, self.module,
                                  i_map, p_map)


def _unit(n: int, i: int) -> list[int]:
    return [1 if j == i else 0 for j in range(n)]


def model_signature(a_minus_signature: tuple[int, int], dim_l_minus: int) -> tuple[int, int]:
    """(p + dim l_-, q + dim l_-) where (p, q) is the signature on a_-."""
    p, q = a_minus_signature
    return p + dim_l_minus, q + dim_l_minus


def build_standard_model(l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                         z: QuadraticCocycle,
                         require_theta_fixed: bool = True) -> StandardModel:
    """The standard model; all metric-Lie-with-involution axioms are verified
    by the constructor of the result."""
    if module.l_inv != l_inv:
        raise LieError("module is not over the given (l, theta_l)")
    if not getattr(z, "alpha").l_dim == l_inv.dim:
        raise LieError("cocycle over the wrong algebra")
    from .cohomology import is_quadratic_cocycle
    if not is_quadratic_cocycle(module, z.alpha, z.gamma):
        raise LieError("(alpha, gamma) is not a quadratic cocycle")
    if require_theta_fixed and not is_theta_fixed(module, z):
        raise LieError("cocycle is not Theta-fixed")
    g = l_inv.algebra
    n, m = g.dim, module.a_dim
    total = 2 * n + m

    def zs(i: int) -> int:
        return i

    def As(i: int) -> int:
        return n + i

    def Ls(i: int) -> int:
        return n + m + i

    table: dict[tuple[int, int], dict[int, Fraction]] = {}

    def put(i: int, j: int, k: int, c: Fraction):
        if c == 0 or i == j:
            return
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        entry = table.setdefault((i, j), {})
        entry[k] = entry.get(k, Fraction(0)) + sign * c

    for i in range(n):
        for j in range(i + 1, n):
            # [L_i, L_j] = gamma(L_i,L_j,.) + alpha(L_i,L_j) + [L_i,L_j]_l
            for k in range(n):
                put(Ls(i), Ls(j), zs(k), z.gamma.get((i, j, k)))
            av = z.alpha.get((i, j))
            for k in range(m):
                put(Ls(i), Ls(j), As(k), av[k])
            br = g.bracket_basis(i, j)
            for k in range(n):
                put(Ls(i), Ls(j), Ls(k), br[k])
    for i in range(n):
        for j in range(m):
            # [L_i, A_j] = rho(L_i)A_j - <A_j, alpha(L_i,.)>
            col = module.rho[i].col(j)
            for k in range(m):
                put(Ls(i), As(j), As(k), col[k])
            ej = tuple(Fraction(1 if t == j else 0) for t in range(m))
            for k in range(n):
                put(Ls(i), As(j), zs(k), -module.pair(ej, z.alpha.get((i, k))))
        for j in range(n):
            # [L_i, Z_j] = ad^*(L_i) Z_j ;  (ad^* x Z)(M) = -Z([x, M])
            for k in range(n):
                c = g.bracket_basis(i, k)[j]
                put(Ls(i), zs(j), zs(k), -c)
    for i in range(m):
        for j in range(i + 1, m):
            # [A_i, A_j] = <rho(.) A_i, A_j>
            ei = tuple(Fraction(1 if t == i else 0) for t in range(m))
            ej = tuple(Fraction(1 if t == j else 0) for t in range(m))
            for k in range(n):
                put(As(i), As(j), zs(k), module.pair(module.rho[k].apply(ei), ej))

    names = ([f"Z{g.basis_names[i]}" for i in range(n)]
             + [f"A{i+1}" for i in range(m)]
             + list(g.basis_names))
    algebra = LieAlgebra(total, table, names)

    fdata = [[Fraction(0)] * total for _ in range(total)]
    for i in range(n):
        fdata[zs(i)][Ls(i)] = Fraction(1)
        fdata[Ls(i)][zs(i)] = Fraction(1)
    for i in range(m):
        for j in range(m):
            fdata[As(i)][As(j)] = module.form_a[i, j]
    form = Matrix(total, total, fdata)

    tdata = [[Fraction(0)] * total for _ in range(total)]
    tl = l_inv.theta
    tlt = tl.transpose()
    for i in range(n):
        for j in range(n):
            tdata[zs(i)][zs(j)] = tlt[i, j]
            tdata[Ls(i)][Ls(j)] = tl[i, j]
    for i in range(m):
        for j in range(m):
            tdata[As(i)][As(j)] = module.theta_a[i, j]
    theta = Matrix(total, total, tdata)

    metric = MetricLieAlgebraWithInvolution(algebra, form, theta)
    return StandardModel(metric, l_inv, module, z)


def standard_form_and_theta(l_inv: InvolutiveLieAlgebra,
                            module: OrthogonalModule) -> tuple[Matrix, Matrix]:
    """Form and involution of the standard model, without a cocycle."""
    n, m = l_inv.dim, module.a_dim
    total = 2 * n + m
    fdata = [[Fraction(0)] * total for _ in range(total)]
    for i in range(n):
        fdata[i][n + m + i] = Fraction(1)
        fdata[n + m + i][i] = Fraction(1)
    for i in range(m):
        for j in range(m):
            fdata[n + i][n + j] = module.form_a[i, j]
    tdata = [[Fraction(0)] * total for _ in range(total)]
    tlt = l_inv.theta.transpose()
    for i in range(n):
        for j in range(n):
            tdata[i][j] = tlt[i, j]
            tdata[n + m + i][n + m + j] = l_inv.theta[i, j]
    for i in range(m):
        for j in range(m):
            tdata[n + i][n + j] = module.theta_a[i, j]
    return Matrix(total, total, fdata), Matrix(total, total, tdata)


# ---------------------------------------------------------------------------
# abstract quadratic extensions
# ---------------------------------------------------------------------------


class QuadraticExtension:
    """(g, theta, i, i, p): validated theta-invariant isotropic ideal with
    identifications a = i^perp/i and l = g/i^perp.

    The quotient g/i is represented in the pivot-greedy complement basis of
    the ideal; `i_map` sends a-coordinates to quotient coordinates and
    `p_map` quotient coordinates to l-coordinates.
    """

    def __init__(self, metric: MetricLieAlgebraWithInvolution, ideal: Subspace,
                 l_inv: InvolutiveLieAlgebra, module: OrthogonalModule,
                 i_map: Matrix, p_map: Matrix):
        self.metric = metric
        self.ideal = ideal
        self.l_inv = l_inv
        self.module = module
        self.i_map = i_map
        self.p_map = p_map
        g = metric.algebra
        total = g.dim
        self.quot_comp = ideal.complement_in(Subspace.full(total))
        q = self.quot_comp.dim
        change = self.quot_comp.basis.hstack(ideal.basis) if ideal.dim else self.quot_comp.basis
        self.quot_proj = change.inverse().submatrix(range(q), range(total))
        self._validate()

    # quotient bracket/involution in quot coordinates
    def quot_bracket(self, x: Vec, y: Vec) -> Vec:
        g = self.metric.algebra
        lift = lambda v: self.quot_comp.basis.apply(v)
        return self.quot_proj.apply(g.bracket(lift(x), lift(y)))

    def quot_theta(self) -> Matrix:
        return self.quot_proj @ self.metric.theta @ self.quot_comp.basis

    def p_tilde(self) -> Matrix:
        return self.p_map @ self.quot_proj

    def _validate(self) -> None:
        m = self.metric
        g = m.algebra
        i = self.ideal
        n, adim = self.l_inv.dim, self.module.a_dim
        if not g.is_ideal(i):
            raise LieError("quadratic extension: not an ideal")
        if not (i.basis.transpose() @ m.form @ i.basis).is_zero():
            raise LieError("quadratic extension: ideal is not isotropic")
        timg = Subspace.from_spanning_cols(g.dim, [m.theta.apply(c) for c in i.basis.columns()])
        if timg != i:
            raise LieError("quadratic extension: ideal is not theta-invariant")
        if self.i_map.cols != adim or self.i_map.rows != self.quot_comp.dim:
            raise LieError("i_map shape mismatch")
        if self.p_map.rows != n or self.p_map.cols != self.quot_comp.dim:
            raise LieError("p_map shape mismatch")
        # exactness: i injective, p surjective, ker p = im i
        if kernel(self.i_map).dim != 0:
            raise LieError("i_map not injective")
        from .linalg import image
        if image(self.p_map).dim != n:
            raise LieError("p_map not surjective")
        if kernel(self.p_map) != image(self.i_map):
            raise LieError("sequence not exact at g/i")
        # i lands in i^perp/i and is an isometry onto it
        iperp = i.perp(m.form)
        lifted = [self.quot_comp.basis.apply(self.i_map.col(j)) for j in range(adim)]
        for x in lifted:
            if not iperp.contains(x):
                raise LieError("i does not land in i^perp/i")
        for a in range(adim):
            for b in range(adim):
                if m.pair(lifted[a], lifted[b]) != self.module.form_a[a, b]:
                    raise LieError("i is not an isometry")
        span = Subspace.from_spanning_cols(g.dim, lifted).add(i)
        if span != iperp:
            raise LieError("image of i does not fill i^perp/i")
        # i^perp/i abelian
        for x, y in combinations(lifted, 2):
            if not i.contains(g.bracket(x, y)):
                raise LieError("i^perp/i is not abelian")
        # homomorphism properties of i and p with involutions
        qtheta = self.quot_theta()
        if self.i_map @ self.module.theta_a != qtheta @ self.i_map:
            raise LieError("i is not involution-equivariant")
        if self.p_map @ qtheta != self.l_inv.theta @ self.p_map:
            raise LieError("p is not involution-equivariant")
        # p is a Lie homomorphism onto l, and the sequence is consistent
        # with rho: [x, i(A)] = i(rho(p(x)) A) in g/i
        qb = self.quot_comp.basis
        for s in range(self.quot_comp.dim):
            for t in range(self.quot_comp.dim):
                br = self.quot_proj.apply(g.bracket(qb.col(s), qb.col(t)))
                lhs = self.p_map.apply(br)
                rhs = self.l_inv.algebra.bracket(self.p_map.col(s), self.p_map.col(t))
                if lhs != rhs:
                    raise LieError("p is not a Lie homomorphism")
        for s in range(self.quot_comp.dim):
            px = self.p_map.col(s)
            rho_px = self.module.rho_of(px)
            for j in range(adim):
                lhs = self.quot_proj.apply(g.bracket(qb.col(s),
                                                     qb.apply(self.i_map.col(j))))
                rhs = self.i_map.apply(rho_px.col(j))
                if lhs != rhs:
                    raise LieError("sequence is not consistent with rho")


# ---------------------------------------------------------------------------
# canonical chains and ideal
# ---------------------------------------------------------------------------


def canonical_chains(g: LieAlgebra) -> tuple[list[Subspace], list[Subspace]]:
    """(ascending S_k, descending R_k) for the adjoint module; S starts at 0,
    R starts at g, every quotient is semisimple."""
    ops = [g.ad_basis(i) for i in range(g.dim)]
    r_chain = [Subspace.full(g.dim)]
    while r_chain[-1].dim > 0:
        nxt = module_radical_space(ops, r_chain[-1])
        if nxt.dim >= r_chain[-1].dim:
            raise LieError("radical chain failed to descend")
        r_chain.append(nxt)
    s_chain = [Subspace.zero(g.dim)]
    while s_chain[-1].dim < g.dim:
        nxt = module_socle_preimage(ops, g.dim, s_chain[-1])
        if nxt.dim <= s_chain[-1].dim:
            raise LieError("socle chain failed to ascend")
        s_chain.append(nxt)
    return s_chain, r_chain


def canonical_ideal(g: LieAlgebra) -> Subspace:
    """i(g) = sum_{k=1}^{l_- - 1} S_k(g) ^ R_k(g)."""
    s_chain, r_chain = canonical_chains(g)
    l_minus = len(r_chain) - 1  # R_{l_minus} = 0
    out = Subspace.zero(g.dim)
    for k in range(1, l_minus):
        s_k = s_chain[k] if k < len(s_chain) else s_chain[-1]
        out = out.add(s_k.intersect(r_chain[k]))
    return out


def balanced_check(ext: QuadraticExtension) -> bool:
    return ext.ideal == canonical_ideal(ext.metric.algebra)


# ---------------------------------------------------------------------------
# canonical quotients of a metric Lie algebra with involution
# ---------------------------------------------------------------------------


def canonical_quotients(metric: MetricLieAlgebraWithInvolution, ideal: Subspace
                        ) -> tuple[InvolutiveLieAlgebra, OrthogonalModule, QuadraticExtension]:
    """l = g/i^perp, a = i^perp/i with the induced structures, and the
    canonical extension associated with (g, theta, i)."""
    g = metric.algebra
    form = metric.form
    if not g.is_ideal(ideal):
        raise LieError("canonical_quotients: not an ideal")
    if not (ideal.basis.transpose() @ form @ ideal.basis).is_zero():
        raise LieError("canonical_quotients: ideal is not isotropic")
    timg = Subspace.from_spanning_cols(g.dim, [metric.theta.apply(c)
                                               for c in ideal.basis.columns()])
    if timg != ideal:
        raise LieError("canonical_quotients: ideal is not theta-invariant")
    iperp = ideal.perp(form)
    for x, y in combinations(iperp.basis.columns(), 2):
        if not ideal.contains(g.bracket(x, y)):
            raise LieError("canonical_quotients: i^perp/i is not abelian")

    l_alg, l_proj = g.quotient(iperp)
    l_comp = iperp.complement_in(Subspace.full(g.dim))
    theta_l = l_proj @ metric.theta @ l_comp.basis
    l_inv = InvolutiveLieAlgebra(l_alg, theta_l)

    acomp = ideal.complement_in(iperp)
    adim = acomp.dim
    ab = acomp.basis
    # coordinates in i^perp/i: solve [acomp | ideal] x = v for v in i^perp
    mixer = ab.hstack(ideal.basis) if ideal.dim else ab

    def a_coords(v: Vec) -> Vec:
        x = solve_vec(mixer, v)
        if x is None:
            raise LieError("vector outside i^perp")
        return tuple(x[:adim])

    form_a = ab.transpose() @ form @ ab
    theta_a = Matrix.from_cols([a_coords(metric.theta.apply(c)) for c in ab.columns()],
                               ambient=adim)
    rho = []
    for i in range(l_alg.dim):
        lift = l_comp.basis.col(i)
        rho.append(Matrix.from_cols([a_coords(g.bracket(lift, c)) for c in ab.columns()],
                                    ambient=adim))
    module = OrthogonalModule(l_inv, adim, rho, form_a, theta_a)

    quot_comp = ideal.complement_in(Subspace.full(g.dim))
    change = quot_comp.basis.hstack(ideal.basis) if ideal.dim else quot_comp.basis
    quot_proj = change.inverse().submatrix(range(quot_comp.dim), range(g.dim))
    i_map = Matrix.from_cols([quot_proj.apply(c) for c in ab.columns()],
                             ambient=quot_comp.dim)
    p_map = Matrix.from_cols([l_proj.apply(quot_comp.basis.col(j))
                              for j in range(quot_comp.dim)], ambient=l_alg.dim)
    ext = QuadraticExtension(metric, ideal, l_inv, module, i_map, p_map)
    return l_inv, module, ext


# ---------------------------------------------------------------------------
# sections and cocycle extraction
# ---------------------------------------------------------------------------


def extract_section(ext: QuadraticExtension) -> Matrix:
    """Isotropic theta-equivariant section s: l -> g with p~ .s = Id.

    Deterministic: per eigenspace of theta, dual vectors to the canonical
    basis of i are produced by the zero-free-variable solver and made
    isotropic by the symmetric hyperbolic correction.
    """
    m = ext.metric
    g = m.algebra
    i = ext.ideal
    vs: list[Vec] = []
    for sign in (1, -1):
        eig = m.inv.plus if sign == 1 else m.inv.minus
        ieig = i.intersect(eig)
        r = ieig.dim
        if r == 0:
            continue
        ub = ieig.basis
        pairing = ub.transpose() @ m.form @ eig.basis  # r x dim(eig)
        sol, _ = solve_linear(pairing, Matrix.identity(r))
        if sol is None:
            raise LieError("extract_section: dual system unsolvable")
        cand = [eig.basis.apply(sol.col(t)) for t in range(r)]
        # correction v'_t = v_t - 1/2 sum_s <v_t, v_s> u_s
        gram = [[m.pair(cand[a], cand[b]) for b in range(r)] for a in range(r)]
        for t in range(r):
            v = cand[t]
            for s2 in range(r):
                coeff = -Fraction(1, 2) * gram[t][s2]
                if coeff != 0:
                    v = tuple(x + coeff * u for x, u in zip(v, ub.col(s2)))
            vs.append(v)
    vmat = Matrix.from_cols(vs, ambient=g.dim)
    pt = ext.p_tilde()
    w = pt @ vmat
    s_mat = vmat @ w.inverse()
    # assertions: section, equivariance, isotropy
    if pt @ s_mat != Matrix.identity(ext.l_inv.dim):
        raise LieError("extract_section: p.s != Id")
    if m.theta @ s_mat != s_mat @ ext.l_inv.theta:
        raise LieError("extract_section: section is not theta-equivariant")
    if not (s_mat.transpose() @ m.form @ s_mat).is_zero():
        raise LieError("extract_section: image is not isotropic")
    return s_mat


def extract_cocycle(ext: QuadraticExtension, s_mat: Matrix
                    ) -> tuple[QuadraticCocycle, Matrix]:
    """(alpha, gamma) from a section, plus the equivalence witness
    Psi = p^* + t + s: d_{alpha,gamma} -> g."""
    m = ext.metric
    g = m.algebra
    n, adim = ext.l_inv.dim, ext.module.a_dim
    scols = [s_mat.col(k) for k in range(n)]
    alpha_vals: dict[tuple[int, ...], tuple] = {}
    gamma_vals: dict[tuple[int, ...], Fraction] = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = g.bracket(scols[i], scols[j])
            lbr = ext.l_inv.algebra.bracket_basis(i, j)
            w_def = tuple(a - b for a, b in zip(w, s_mat.apply(lbr)))
            qc = ext.quot_proj.apply(w_def)
            acoords = solve_vec(ext.i_map, qc)
            if acoords is None:
                raise LieError("extract_cocycle: defect not in the a-slot")
            alpha_vals[(i, j)] = acoords
            for k in range(n):
                gamma_vals[(i, j, k)] = m.pair(w, scols[k])
    alpha = Cochain(2, n, adim, alpha_vals)
    gamma_table = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                gamma_table[(i, j, k)] = gamma_vals[(i, j, k)]
    gamma = Cochain(3, n, None, gamma_table)
    z = make_cocycle(ext.module, alpha, gamma)
    if not is_theta_fixed(ext.module, z):
        raise LieError("extract_cocycle: result is not Theta-fixed")

    # Psi = p^* + t + s
    pt = ext.p_tilde()
    ginv_cols = []
    forminv = m.form.inverse()
    for k in range(n):
        rhs = tuple(pt[k, j] for j in range(g.dim))
        ginv_cols.append(forminv.apply(rhs))
    t_cols = []
    ib = ext.quot_comp.basis
    for j in range(adim):
        x = ib.apply(ext.i_map.col(j))
        # correct by delta in i so that x - delta is orthogonal to s(l)
        pair_si = s_mat.transpose() @ m.form @ ext.ideal.basis
        rhs = [m.pair(x, scols[k]) for k in range(n)]
        d = solve_vec(pair_si, tuple(rhs))
        if d is None:
            raise LieError("extract_cocycle: t-correction unsolvable")
        delta = ext.ideal.basis.apply(d)
        t_cols.append(tuple(a - b for a, b in zip(x, delta)))
    psi = Matrix.from_cols(ginv_cols + t_cols + [s_mat.col(k) for k in range(n)],
                           ambient=g.dim)
    _verify_psi(ext, z, psi)
    return z, psi


def _verify_psi(ext: QuadraticExtension, z: QuadraticCocycle, psi: Matrix) -> None:
    """Psi must be an isomorphism of metric Lie algebras with involution
    d_{z} -> g mapping the slots onto (i, ..) compatibly."""
    model = build_standard_model(ext.l_inv, ext.module, z)
    d = model.metric
    g = ext.metric
    if psi.rows != g.dim or psi.cols != d.dim or g.dim != d.dim:
        raise LieError("Psi shape mismatch")
    if psi.transpose() @ g.form @ psi != d.form:
        raise LieError("Psi is not an isometry")
    if g.theta @ psi != psi @ d.theta:
        raise LieError("Psi does not intertwine the involutions")
    for i in range(d.dim):
        for j in range(i + 1, d.dim):
            lhs = g.algebra.bracket(psi.col(i), psi.col(j))
            rhs = psi.apply(d.algebra.bracket_basis(i, j))
            if lhs != rhs:
                raise LieError("Psi is not a Lie homomorphism")
    n = ext.l_inv.dim
    img = Subspace.from_spanning_cols(g.dim, [psi.col(k) for k in range(n)])
    if img != ext.ideal:
        raise LieError("Psi does not map l* onto the ideal")


def build_psi(module: OrthogonalModule, c: QuadraticCochain) -> Matrix:
    """The unitriangular isometry Psi(c) on l* + a + l.

    Composition law Psi(c1) @ Psi(c2) = Psi(c1 * c2); when z2 = z1 . c it is
    an isomorphism of standard models d_{z2} -> d_{z1}.
    """
    l_dim = c.tau.l_dim
    adim = module.a_dim
    n = l_dim
    total = 2 * n + adim
    tmat = Matrix.from_cols([c.tau.get((k,)) for k in range(n)], ambient=adim)
    tau_star = tmat.transpose() @ module.form_a          # a -> l*
    # sbar[j][k] = sigma(e_k, e_j): column k is sigma(e_k, .) in l*-coordinates
    sbar = Matrix(n, n, [[c.sigma.get((k, j)) for k in range(n)] for j in range(n)])
    half_tt = (tmat.transpose() @ module.form_a @ tmat).scale(Fraction(1, 2))
    corner = sbar - half_tt
    data = [[Fraction(0)] * total for _ in range(total)]
    for i in range(n):
        data[i][i] = Fraction(1)
        data[n + adim + i][n + adim + i] = Fraction(1)
    for i in range(adim):
        data[n + i][n + i] = Fraction(1)
    for i in range(n):
        for j in range(adim):
            data[i][n + j] = -tau_star[i, j]
    for i in range(n):
        for j in range(n):
            data[i][n + adim + j] = corner[i, j]
    for i in range(adim):
        for j in range(n):
            data[n + i][n + adim + j] = tmat[i, j]
    return Matrix(total, total, data)
