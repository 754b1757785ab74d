"""Chevalley-Eilenberg cochains, the wedge pairing and quadratic cohomology.

Quadratic cochains (tau, sigma) form a group acting on quadratic cocycles
(alpha, gamma); the involution Theta = (theta_l, theta_a)^* splits both.
Degree is generic for the plain complex; the quadratic structures live in
degree 2, the only degree the theory uses.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .lie import LieAlgebra, LieError
from .linalg import Matrix, Vec, vec_add, vec_scale, zero_vec
from .modules import OrthogonalModule

Value = Union[Fraction, Vec]


def _perm_sign_sorted(idx: Sequence[int]) -> tuple[Optional[tuple[int, ...]], int]:
    """Sort an index tuple, returning (sorted tuple, sign); None if repeated."""
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
            elif arr[j] == arr[j + 1]:
                return None, 0
    return tuple(arr), sign


class Cochain:
    """Alternating multilinear map on basis tuples, scalar- or a-valued."""

    __slots__ = ("degree", "l_dim", "value_dim", "values")

    def __init__(self, degree: int, l_dim: int, value_dim: Optional[int],
                 values: Optional[dict] = None):
        self.degree = degree
        self.l_dim = l_dim
        self.value_dim = value_dim  # None: scalar-valued
        self.values: dict[tuple[int, ...], Value] = {}
        if values:
            for idx, val in values.items():
                key, sign = _perm_sign_sorted(tuple(idx))
                if key is None:
                    raise LieError("repeated index in cochain table")
                val = self._coerce(val)
                if sign < 0:
                    val = self._neg(val)
                if not self._is_zero_val(val):
                    self.values[key] = val

    # -- value helpers -----------------------------------------------------
    def _zero_val(self) -> Value:
        return Fraction(0) if self.value_dim is None else zero_vec(self.value_dim)

    def _coerce(self, v: Value) -> Value:
        if self.value_dim is None:
            return Fraction(v)
        v = tuple(Fraction(x) for x in v)
        if len(v) != self.value_dim:
            raise LieError("cochain value dimension mismatch")
        return v

    @staticmethod
    def _neg(v: Value) -> Value:
        if isinstance(v, Fraction):
            return -v
        return tuple(-x for x in v)

    @staticmethod
    def _is_zero_val(v: Value) -> bool:
        if isinstance(v, Fraction):
            return v == 0
        return all(x == 0 for x in v)

    # -- access -------------------------------------------------------------
    def get(self, idx: Sequence[int]) -> Value:
        key, sign = _perm_sign_sorted(tuple(idx))
        if key is None:
            return self._zero_val()
        val = self.values.get(key)
        if val is None:
            return self._zero_val()
        return val if sign > 0 else self._neg(val)

    def eval_vectors(self, vecs: Sequence[Vec]) -> Value:
        """Multilinear alternating evaluation on arbitrary vectors."""
        if len(vecs) != self.degree:
            raise LieError("wrong number of arguments")
        out = self._zero_val()
        for key, val in self.values.items():
            d = _det([[v[i] for i in key] for v in vecs])
            if d == 0:
                continue
            if isinstance(val, Fraction):
                out = out + d * val
            else:
                out = vec_add(out, vec_scale(d, val))
        return out

    # -- algebra --------------------------------------------------------------
    def _binop(self, other: "Cochain", f) -> "Cochain":
        if (self.degree, self.l_dim, self.value_dim) != (other.degree, other.l_dim, other.value_dim):
            raise LieError("cochain shape mismatch")
        out = dict(self.values)
        for key, val in other.values.items():
            cur = out.get(key, self._zero_val())
            if isinstance(val, Fraction):
                new = f(cur, val)
            else:
                new = tuple(f(a, b) for a, b in zip(cur, val))
            if self._is_zero_val(new):
                out.pop(key, None)
            else:
                out[key] = new
        return Cochain(self.degree, self.l_dim, self.value_dim, out)

    def __add__(self, other: "Cochain") -> "Cochain":
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self._binop(other, lambda a, b: a - b)

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(self.degree, self.l_dim, self.value_dim,
                       {k: (v * c if isinstance(v, Fraction) else vec_scale(c, v))
                        for k, v in self.values.items()})

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Cochain)
                and (self.degree, self.l_dim, self.value_dim)
                == (other.degree, other.l_dim, other.value_dim)
                and self.values == other.values)

    def __hash__(self):
        return hash((self.degree, self.l_dim, self.value_dim,
                     tuple(sorted(self.values.items()))))

    def __repr__(self) -> str:
        kind = "scalar" if self.value_dim is None else f"a^{self.value_dim}"
        return f"Cochain(p={self.degree}, {kind}, {len(self.values)} entries)"

    @staticmethod
    def zero(degree: int, l_dim: int, value_dim: Optional[int]) -> "Cochain":
        return Cochain(degree, l_dim, value_dim)

    def to_json(self) -> dict:
        from .linalg import scalar_str
        items = []
        for key in sorted(self.values):
            v = self.values[key]
            enc = scalar_str(v) if isinstance(v, Fraction) else [scalar_str(x) for x in v]
            items.append({"indices": list(key), "value": enc})
        return {"degree": self.degree, "values": items}

    @staticmethod
    def from_json(obj: dict, l_dim: int, value_dim: Optional[int]) -> "Cochain":
        vals = {}
        for item in obj.get("values", []):
            v = item["value"]
            vals[tuple(item["indices"])] = Fraction(v) if value_dim is None else tuple(
                Fraction(x) for x in v)
        return Cochain(int(obj["degree"]), l_dim, value_dim, vals)


def _det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det(minor)
    return total


# ---------------------------------------------------------------------------
# differential, wedge, Theta
# ---------------------------------------------------------------------------


def d_cochain(c: Cochain, algebra: LieAlgebra,
              rho: Optional[Sequence[Matrix]] = None) -> Cochain:
    """Chevalley-Eilenberg differential; rho is None for the trivial module."""
    p = c.degree
    n = c.l_dim
    if n != algebra.dim:
        raise LieError("cochain/algebra dimension mismatch")
    out: dict[tuple[int, ...], Value] = {}

    def add_to(key: tuple[int, ...], val: Value):
        if Cochain._is_zero_val(val):
            return
        cur = out.get(key)
        if cur is None:
            out[key] = val
        else:
            new = cur + val if isinstance(val, Fraction) else vec_add(cur, val)
            if Cochain._is_zero_val(new):
                del out[key]
            else:
                out[key] = new

    for idx in combinations(range(n), p + 1):
        total: Value = Fraction(0) if c.value_dim is None else zero_vec(c.value_dim)
        for t in range(p + 1):
            rest = idx[:t] + idx[t + 1:]
            if rho is not None:
                val = c.get(rest)
                if not Cochain._is_zero_val(val):
                    acted = rho[idx[t]].apply(val)
                    total = vec_add(total, vec_scale(Fraction((-1) ** t), acted))
        for s in range(p + 1):
            for t in range(s + 1, p + 1):
                br = algebra.bracket_basis(idx[s], idx[t])
                rest = tuple(x for r, x in enumerate(idx) if r != s and r != t)
                sign = Fraction((-1) ** (s + t))
                for k, coeff in enumerate(br):
                    if coeff == 0:
                        continue
                    val = c.get((k,) + rest)
                    if Cochain._is_zero_val(val):
                        continue
                    if isinstance(val, Fraction):
                        total = total + sign * coeff * val
                    else:
                        total = vec_add(total, vec_scale(sign * coeff, val))
        add_to(idx, total)
    return Cochain(p + 1, n, c.value_dim, out)


def wedge_pair(c1: Cochain, c2: Cochain, form_a: Matrix) -> Cochain:
    """<c1 ^ c2> in C^{p+q}(l): wedge followed by the inner product on a."""
    if c1.value_dim is None or c2.value_dim is None or c1.value_dim != c2.value_dim:
        raise LieError("wedge_pair needs two a-valued cochains over the same module")
    if c1.l_dim != c2.l_dim:
        raise LieError("wedge_pair: base mismatch")
    p, q = c1.degree, c2.degree
    n = c1.l_dim
    out: dict[tuple[int, ...], Value] = {}
    from .linalg import vec_dot
    for idx in combinations(range(n), p + q):
        total = Fraction(0)
        for pos in combinations(range(p + q), p):
            left = tuple(idx[i] for i in pos)
            right = tuple(idx[i] for i in range(p + q) if i not in pos)
            sign = _shuffle_sign(pos, p + q)
            v1 = c1.get(left)
            if Cochain._is_zero_val(v1):
                continue
            v2 = c2.get(right)
            if Cochain._is_zero_val(v2):
                continue
            total += sign * vec_dot(form_a.apply(v1), v2)
        if total != 0:
            out[idx] = total
    return Cochain(p + q, n, None, out)


def _shuffle_sign(pos: tuple[int, ...], total: int) -> int:
    # sign of the permutation moving positions `pos` to the front, in order
    inv = 0
    rest = [i for i in range(total) if i not in pos]
    seq = list(pos) + rest
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def theta_pullback_cochain(c: Cochain, theta_l: Matrix,
                           theta_a: Optional[Matrix]) -> Cochain:
    """(Theta c)(L_1,...) = theta_a c(theta_l L_1, ...)."""
    cols = [theta_l.col(j) for j in range(theta_l.cols)]
    out: dict[tuple[int, ...], Value] = {}
    for idx in combinations(range(c.l_dim), c.degree):
        val = c.eval_vectors([cols[i] for i in idx])
        if c.value_dim is not None and theta_a is not None:
            val = theta_a.apply(val)
        if not Cochain._is_zero_val(val):
            out[idx] = val
    return Cochain(c.degree, c.l_dim, c.value_dim, out)


# ---------------------------------------------------------------------------
# quadratic structures (degree 2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticCochain:
    tau: Cochain    # C^1(l, a)
    sigma: Cochain  # C^2(l)

    def __post_init__(self):
        if self.tau.degree != 1 or self.tau.value_dim is None:
            raise LieError("tau must be an a-valued 1-cochain")
        if self.sigma.degree != 2 or self.sigma.value_dim is not None:
            raise LieError("sigma must be a scalar 2-cochain")


@dataclass(frozen=True)
class QuadraticCocycle:
    alpha: Cochain  # C^2(l, a)
    gamma: Cochain  # C^3(l)

    def __post_init__(self):
        if self.alpha.degree != 2 or self.alpha.value_dim is None:
            raise LieError("alpha must be an a-valued 2-cochain")
        if self.gamma.degree != 3 or self.gamma.value_dim is not None:
            raise LieError("gamma must be a scalar 3-cochain")


def zero_cochain(module: OrthogonalModule) -> QuadraticCochain:
    n = module.l_inv.dim
    return QuadraticCochain(Cochain.zero(1, n, module.a_dim), Cochain.zero(2, n, None))


def zero_cocycle(module: OrthogonalModule) -> QuadraticCocycle:
    n = module.l_inv.dim
    return QuadraticCocycle(Cochain.zero(2, n, module.a_dim), Cochain.zero(3, n, None))


def is_quadratic_cocycle(module: OrthogonalModule, alpha: Cochain, gamma: Cochain) -> bool:
    g = module.l_inv.algebra
    if not d_cochain(alpha, g, module.rho).is_zero():
        return False
    half = wedge_pair(alpha, alpha, module.form_a).scale(Fraction(1, 2))
    return d_cochain(gamma, g) == half


def make_cocycle(module: OrthogonalModule, alpha: Cochain, gamma: Cochain) -> QuadraticCocycle:
    if not is_quadratic_cocycle(module, alpha, gamma):
        raise LieError("not a quadratic cocycle: d.alpha != 0 or d.gamma != (1/2)<alpha^alpha>")
    return QuadraticCocycle(alpha, gamma)


def qc_compose(module: OrthogonalModule, c1: QuadraticCochain,
               c2: QuadraticCochain) -> QuadraticCochain:
    """(tau1,sigma1)*(tau2,sigma2) = (tau1+tau2, sigma1+sigma2+(1/2)<tau1^tau2>)."""
    tau = c1.tau + c2.tau
    sigma = c1.sigma + c2.sigma + wedge_pair(c1.tau, c2.tau, module.form_a).scale(Fraction(1, 2))
    return QuadraticCochain(tau, sigma)


def qc_inverse(module: OrthogonalModule, c: QuadraticCochain) -> QuadraticCochain:
    tau = -c.tau
    sigma = -c.sigma + wedge_pair(c.tau, c.tau, module.form_a).scale(Fraction(1, 2))
    return QuadraticCochain(tau, sigma)


def qc_act(module: OrthogonalModule, z: QuadraticCocycle,
           c: QuadraticCochain) -> QuadraticCocycle:
    """(alpha,gamma)(tau,sigma) = (alpha+d.tau, gamma+d.sigma+<(alpha+(1/2)d.tau)^tau>)."""
    g = module.l_inv.algebra
    dtau = d_cochain(c.tau, g, module.rho)
    alpha = z.alpha + dtau
    mid = z.alpha + dtau.scale(Fraction(1, 2))
    gamma = z.gamma + d_cochain(c.sigma, g) + wedge_pair(mid, c.tau, module.form_a)
    out = QuadraticCocycle(alpha, gamma)
    if not is_quadratic_cocycle(module, out.alpha, out.gamma):
        raise LieError("internal error: action left the cocycle set")
    return out


def theta_pullback(module: OrthogonalModule, x):
    """Theta on cochains, quadratic cochains and quadratic cocycles."""
    tl, ta = module.l_inv.theta, module.theta_a
    if isinstance(x, Cochain):
        return theta_pullback_cochain(x, tl, ta if x.value_dim is not None else None)
    if isinstance(x, QuadraticCochain):
        return QuadraticCochain(theta_pullback_cochain(x.tau, tl, ta),
                                theta_pullback_cochain(x.sigma, tl, None))
    if isinstance(x, QuadraticCocycle):
        return QuadraticCocycle(theta_pullback_cochain(x.alpha, tl, ta),
                                theta_pullback_cochain(x.gamma, tl, None))
    raise LieError("unsupported type for theta_pullback")


def is_theta_fixed(module: OrthogonalModule, x) -> bool:
    y = theta_pullback(module, x)
    if isinstance(x, Cochain):
        return y == x
    if isinstance(x, QuadraticCochain):
        return y.tau == x.tau and y.sigma == x.sigma
    return y.alpha == x.alpha and y.gamma == x.gamma


def theta_split(module: OrthogonalModule, x):
    """(x_plus, x_minus) with x = x_plus + x_minus, Theta-eigencomponents."""
    y = theta_pullback(module, x)
    half = Fraction(1, 2)
    if isinstance(x, Cochain):
        return (x + y).scale(half), (x - y).scale(half)
    if isinstance(x, QuadraticCochain):
        return (QuadraticCochain((x.tau + y.tau).scale(half), (x.sigma + y.sigma).scale(half)),
                QuadraticCochain((x.tau - y.tau).scale(half), (x.sigma - y.sigma).scale(half)))
    raise LieError("theta_split applies to cochains")


def invariantize(module: OrthogonalModule, z: QuadraticCocycle,
                 c: QuadraticCochain) -> tuple[QuadraticCocycle, QuadraticCochain]:
    """Solve Theta z = z . (2 tau, 2 sigma) constructively.

    Given the witness c = (tau, sigma) for the Theta-invariance of the class
    of z, returns a Theta-fixed cocycle z_plus together with the cochain w
    such that z_plus . w = z.  Replays the constructive proof
    z = (alpha_+, gamma_+ - (1/2)<d tau_- ^ tau_->) . (-tau_-, -sigma_-).
    """
    doubled = QuadraticCochain(c.tau.scale(2), c.sigma.scale(2))
    if qc_act(module, z, doubled) != theta_pullback(module, z):
        raise LieError("invariantize: witness identity Theta z = z.(2tau,2sigma) fails")
    g = module.l_inv.algebra
    alpha_p, _ = theta_split(module, z.alpha)
    gamma_p, _ = theta_split(module, z.gamma)
    _, tau_m = theta_split(module, c.tau)
    _, sigma_m = theta_split(module, c.sigma)
    corr = wedge_pair(d_cochain(tau_m, g, module.rho), tau_m,
                      module.form_a).scale(Fraction(1, 2))
    z_plus = make_cocycle(module, alpha_p, gamma_p - corr)
    if not is_theta_fixed(module, z_plus):
        raise LieError("invariantize: output is not Theta-fixed")
    witness = QuadraticCochain(-tau_m, -sigma_m)
    if qc_act(module, z_plus, witness) != z:
        raise LieError("invariantize: witness does not recover the input")
    return z_plus, witness


def equivalence_witness_verify(module: OrthogonalModule, z1: QuadraticCocycle,
                               z2: QuadraticCocycle, c: QuadraticCochain,
                               require_plus: bool) -> bool:
    if require_plus and not is_theta_fixed(module, c):
        return False
    return qc_act(module, z1, c) == z2


def plus_projection_witness(module: OrthogonalModule, z1: QuadraticCocycle,
                            z2: QuadraticCocycle,
                            c: QuadraticCochain) -> QuadraticCochain:
    """Given Theta-fixed z1, z2 with z1.c = z2, the plus part of c already
    connects them (the injectivity argument for the fixed-point sets)."""
    tau_p, _ = theta_split(module, c.tau)
    sigma_p, _ = theta_split(module, c.sigma)
    w = QuadraticCochain(tau_p, sigma_p)
    if qc_act(module, z1, w) != z2:
        raise LieError("plus projection does not connect the cocycles")
    return w
