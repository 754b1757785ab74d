"""Rational models of the irreducible representations used by the catalog.

su(2) acts in the basis H, X, Y with [H,X]=2Y, [H,Y]=-2X, [X,Y]=2H;
sl(2,R) in the basis H, X, Y with [H,X]=2X, [H,Y]=-2Y, [X,Y]=H.  The
odd-dimensional su(2) representations are realized on harmonic polynomials
in three variables (integer matrices, Fischer inner product); the
4k-dimensional ones as realifications of the complex weight-basis modules.
All constructions are exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .lie import LieError
from .linalg import Matrix, kernel, solve_linear

# ---------------------------------------------------------------------------
# sl(2) weight-basis modules V_n (dim n+1):  H v_i = (n-2i) v_i,
# F v_i = v_{i+1}, E v_i = i(n-i+1) v_{i-1}
# ---------------------------------------------------------------------------


def sl2_irrep(n: int) -> tuple[Matrix, Matrix, Matrix]:
    """(E, F, H) on the (n+1)-dimensional irreducible sl(2)-module."""
    d = n + 1
    e = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    h = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        h[i][i] = Fraction(n - 2 * i)
        if i + 1 < d:
            f[i + 1][i] = Fraction(1)
        if i - 1 >= 0:
            e[i - 1][i] = Fraction(i * (n - i + 1))
    return Matrix(d, d, e), Matrix(d, d, f), Matrix(d, d, h)


def sl2_invariant_form(n: int) -> Matrix:
    """Anti-diagonal invariant form on V_n: (v_i, v_{n-i}) = (-1)^i."""
    d = n + 1
    g = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        g[i][n - i] = Fraction((-1) ** i)
    return Matrix(d, d, g)


def expm_nilpotent(m: Matrix) -> Matrix:
    out = Matrix.identity(m.rows)
    term = Matrix.identity(m.rows)
    k = 1
    while True:
        term = (term @ m).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
        k += 1


def sl2_weyl_element(n: int) -> Matrix:
    """rho(w) for w = exp(E)exp(-F)exp(E), an integer matrix on V_n."""
    e, f, _ = sl2_irrep(n)
    return expm_nilpotent(e) @ expm_nilpotent(f.scale(-1)) @ expm_nilpotent(e)


# ---------------------------------------------------------------------------
# su(2) modules of dimension 2k+1: harmonic polynomials of degree k
# ---------------------------------------------------------------------------


def _monomials(k: int) -> list[tuple[int, int, int]]:
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


def _derivation_matrix(k: int, rule) -> Matrix:
    """Matrix of a derivation on degree-k monomials; rule maps a monomial to
    a list of (coefficient, monomial)."""
    mono = _monomials(k)
    idx = {m: i for i, m in enumerate(mono)}
    n = len(mono)
    data = [[Fraction(0)] * n for _ in range(n)]
    for j, m in enumerate(mono):
        for coeff, target in rule(m):
            if coeff:
                data[idx[target]][j] += Fraction(coeff)
    return Matrix(n, n, data)


def _d1_rule(m):  # w d/dv - v d/dw
    a, b, c = m
    out = []
    if b:
        out.append((b, (a, b - 1, c + 1)))
    if c:
        out.append((-c, (a, b + 1, c - 1)))
    return out


def _d2_rule(m):  # u d/dw - w d/du
    a, b, c = m
    out = []
    if c:
        out.append((c, (a + 1, b, c - 1)))
    if a:
        out.append((-a, (a - 1, b, c + 1)))
    return out


def _d3_rule(m):  # v d/du - u d/dv
    a, b, c = m
    out = []
    if a:
        out.append((a, (a - 1, b + 1, c)))
    if b:
        out.append((-b, (a + 1, b - 1, c)))
    return out


def su2_harmonic_block(k: int) -> tuple[list[Matrix], Matrix, Matrix]:
    """((rho_H, rho_X, rho_Y), Fischer gram, reflection) on harmonic degree-k
    polynomials; dimension 2k+1.  The reflection is the pullback by
    (u,v,w) -> (-u,-v,w) and fixes the zonal line ker(rho_H)."""
    if k < 1:
        raise LieError("harmonic block needs k >= 1")
    mono = _monomials(k)
    n = len(mono)
    idx = {m: i for i, m in enumerate(mono)}
    # Laplacian: degree k -> degree k-2
    tgt = _monomials(k - 2) if k >= 2 else []
    tid = {m: i for i, m in enumerate(tgt)}
    lap = [[Fraction(0)] * n for _ in range(len(tgt))]
    for j, (a, b, c) in enumerate(mono):
        if a >= 2:
            lap[tid[(a - 2, b, c)]][j] += a * (a - 1)
        if b >= 2:
            lap[tid[(a, b - 2, c)]][j] += b * (b - 1)
        if c >= 2:
            lap[tid[(a, b, c - 2)]][j] += c * (c - 1)
    harm = kernel(Matrix(len(tgt), n, lap)) if tgt else kernel(Matrix.zero(0, n))
    basis = harm.basis
    assert basis.cols == 2 * k + 1

    def restrict(op: Matrix) -> Matrix:
        coords, _ = solve_linear(basis, op @ basis)
        assert coords is not None, "harmonic space not invariant"
        return coords

    d1 = _derivation_matrix(k, _d1_rule)
    d2 = _derivation_matrix(k, _d2_rule)
    d3 = _derivation_matrix(k, _d3_rule)
    rho_h = restrict(d3.scale(2))
    rho_x = restrict(d1.scale(2))
    rho_y = restrict(d2.scale(2))
    fischer = Matrix.diag([Fraction(factorial(a) * factorial(b) * factorial(c))
                           for (a, b, c) in mono])
    gram = basis.transpose() @ fischer @ basis
    refl_mono = Matrix.diag([Fraction((-1) ** (a + b)) for (a, b, c) in mono])
    refl = restrict(refl_mono)
    return [rho_h, rho_x, rho_y], gram, refl


# ---------------------------------------------------------------------------
# complex matrices as (Re, Im) pairs, realified in the interleaved basis
# (Re v_0, Im v_0, Re v_1, Im v_1, ...)
# ---------------------------------------------------------------------------


def realify(re: Matrix, im: Matrix) -> Matrix:
    n = re.rows
    data = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            a, b = re[i, j], im[i, j]
            data[2 * i][2 * j] = a
            data[2 * i][2 * j + 1] = -b
            data[2 * i + 1][2 * j] = b
            data[2 * i + 1][2 * j + 1] = a
    return Matrix(2 * n, 2 * n, data)


def su2_quaternionic_block(k: int) -> tuple[list[Matrix], Matrix, Matrix]:
    """((rho_H, rho_X, rho_Y), gram, involution) on the realified complex
    module V_{2k-1}; dimension 4k.  The involution is +1 on the first
    standard vector."""
    if k < 1:
        raise LieError("quaternionic block needs k >= 1")
    n = 2 * k - 1
    e, f, h = sl2_irrep(n)
    zero = Matrix.zero(n + 1, n + 1)
    rho_h = realify(zero, h)                 # i*H_sl
    rho_x = realify(e - f, zero)             # E - F
    rho_y = realify(zero, e + f)             # i*(E + F)
    hdiag = [Fraction(1)]
    for i in range(1, n + 1):
        hdiag.append(hdiag[-1] * i * (n - i + 1))
    gram = Matrix.diag([hdiag[i // 2] for i in range(2 * (n + 1))])
    invol = realify(Matrix.diag([Fraction((-1) ** i) for i in range(n + 1)]), zero)
    return [rho_h, rho_x, rho_y], gram, invol


# ---------------------------------------------------------------------------
# sl(2,R) blocks for the involution with fixed line R(X-Y)
# ---------------------------------------------------------------------------


def sl2_split_block(k: int) -> tuple[list[Matrix], Matrix, Matrix]:
    """((rho_H, rho_X, rho_Y), invariant form, rho(w)) on V_{2k}."""
    if k < 1:
        raise LieError("split block needs k >= 1")
    n = 2 * k
    e, f, h = sl2_irrep(n)
    return [h, e, f], sl2_invariant_form(n), sl2_weyl_element(n)


def sl2_dual_pair_block(k: int) -> tuple[list[Matrix], Matrix, Matrix]:
    """((rho_H, rho_X, rho_Y), form, involution) on V_{2k-1} + its dual;
    dimension 4k, form of split signature, involution swaps the summands."""
    if k < 1:
        raise LieError("dual pair block needs k >= 1")
    n = 2 * k - 1
    e, f, h = sl2_irrep(n)
    d = n + 1

    def hat(m: Matrix) -> Matrix:
        neg_t = m.transpose().scale(-1)
        data = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
        for i in range(d):
            for j in range(d):
                data[i][j] = m[i, j]
                data[d + i][d + j] = neg_t[i, j]
        return Matrix(2 * d, 2 * d, data)

    rho = [hat(h), hat(e), hat(f)]
    form = Matrix(2 * d, 2 * d,
                  [[Fraction(1) if (i < d <= j and j - d == i) or (j < d <= i and i - d == j)
                    else Fraction(0) for j in range(2 * d)] for i in range(2 * d)])
    # involution swapping V and V*: built from the 1-dimensional spaces of
    # twisted intertwiners S: V* -> V and T: V -> V*
    w = sl2_weyl_element(n)
    omega = sl2_invariant_form(n)
    s0 = w.inverse() @ omega.inverse()
    t0 = omega @ w.inverse()
    st = s0 @ t0
    scal = st[0, 0]
    assert st == Matrix.identity(d).scale(scal) and scal != 0
    # theta = [[0, x*s0], [y*t0, 0]] with x*y*scal = 1; the minus eigenspace
    # {(v, -y*t0 v)} must be positive definite for the dual pairing, i.e.
    # -y * (t0 v)(v) > 0.
    q = t0  # quadratic form v -> (t0 v)(v)
    qdiag = [q[i, i] for i in range(d)]
    sym = q + q.transpose()
    from .linalg import form_signature
    n_minus, n_plus, n_zero = form_signature(sym.scale(Fraction(1, 2)))
    if n_zero != 0 or (n_minus and n_plus):
        raise LieError("dual pair involution: quadratic form not definite")
    y = Fraction(-1) if n_plus else Fraction(1)
    x = Fraction(1) / (y * scal)
    data = [[Fraction(0)] * (2 * d) for _ in range(2 * d)]
    sx = s0.scale(x)
    ty = t0.scale(y)
    for i in range(d):
        for j in range(d):
            data[i][d + j] = sx[i, j]
            data[d + i][j] = ty[i, j]
    invol = Matrix(2 * d, 2 * d, data)
    _ = qdiag
    return rho, form, invol


def sl2_weyl_fixed_sign(n: int) -> Matrix:
    """rho(w) is an involution on V_n for even n."""
    w = sl2_weyl_element(n)
    assert w @ w == Matrix.identity(n + 1)
    return w
