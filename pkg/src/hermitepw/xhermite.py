"""Exceptional Hermite families: construction, differential-equation and
orthogonality checks, and minimal-order re-representation.

For a partition lam with standard diagram M (positive elements
m_1 > ... > m_ell) the degree-n member is

    P_n = Wr[H_{m_ell}, ..., H_{m_1}, H_{ell - size + n}],

defined exactly for the degrees n whose insertion position
n + ell - size is a hole of M; the excluded degrees number size(lam).
P_n equals a pseudo-Wronskian of M u {position} up to the explicit sign
(-1)^(number of m_i above the inserted position).

Everything here is exact except ``weight_and_norm_check``, the one
numerical routine in the package, which is quarantined behind mpmath
tanh-sinh quadrature at 50-digit working precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hermite import hermite_poly, pseudo_wronskian, equivalence_factor, wronskian
from .maya import MayaDiagram, Partition
from .minorder import xhermite_min_origin
from .polys import IntPoly, RatFunc, count_real_roots

__all__ = [
    "XHermiteFamily",
    "exceptional_hermite",
    "insertion_sign",
    "apply_T_lambda",
    "EigenReport",
    "eigen_check",
    "family_eigen_constant",
    "MinOrderForm",
    "min_order_form",
    "NormReport",
    "weight_and_norm_check",
]


@dataclass(frozen=True)
class XHermiteFamily:
    """Degree bookkeeping for the family indexed by a partition."""

    lam: Partition

    @property
    def diagram(self) -> MayaDiagram:
        return MayaDiagram.from_partition(self.lam)

    @property
    def ell(self):
        return self.lam.length

    @property
    def size(self):
        return self.lam.size

    @property
    def offset(self):
        """Degree minus insertion position: size - length."""
        return self.size - self.ell

    def insertion_position(self, n):
        return n - self.offset

    def is_admissible(self, n):
        return n >= 0 and self.insertion_position(n) not in self.diagram

    def excluded_degrees(self):
        """The size(lam) missing degrees: low block plus shifted elements."""
        low = list(range(self.offset))
        shifted = [t + self.offset for t in sorted(self.diagram.t)]
        return low + shifted

    def admissible_degrees(self, count):
        out = []
        n = 0
        while len(out) < count:
            if self.is_admissible(n):
                out.append(n)
            n += 1
        return out


def exceptional_hermite(lam: Partition, n: int) -> IntPoly:
    """The degree-n family member, as the defining Wronskian."""
    fam = XHermiteFamily(lam)
    if not fam.is_admissible(n):
        raise ValueError(f"degree {n} is not admissible for {lam}")
    indices = sorted(fam.diagram.t) + [fam.insertion_position(n)]
    poly = wronskian([hermite_poly(i) for i in indices])
    assert poly.degree == n, (lam, n, poly.degree)
    return poly


def insertion_sign(lam: Partition, n: int) -> int:
    """Sign relating the defining Wronskian to the pseudo-Wronskian of the
    enlarged diagram: (-1)^(count of diagram elements above the insertion)."""
    fam = XHermiteFamily(lam)
    pos = fam.insertion_position(n)
    return (-1) ** sum(1 for t in fam.diagram.t if t > pos)


def apply_T_lambda(lam: Partition, y: IntPoly) -> RatFunc:
    """Second-order operator of the family applied to a polynomial:

    T[y] = y'' - 2(x + W'/W) y' + (W''/W + 2x W'/W) y,   W = H_M.

    Assembled over the single denominator W.
    """
    w = pseudo_wronskian(MayaDiagram.from_partition(lam))
    if w.is_zero():
        raise ZeroDivisionError("vanishing weight Wronskian")
    x = IntPoly((0, 1))
    yp = y.derivative()
    wp = w.derivative()
    num = (y.derivative(2) - 2 * x * yp) * w - 2 * wp * yp + (wp.derivative() + 2 * x * wp) * y
    return RatFunc(num, w)


@dataclass(frozen=True)
class EigenReport:
    n: int
    eigenvalue: Fraction
    shifted_index: Fraction     # N with eigenvalue = 2(N - n)
    residual: IntPoly

    def to_json(self):
        return {"n": self.n, "eigenvalue": str(self.eigenvalue),
                "N": str(self.shifted_index),
                "residual_zero": self.residual.is_zero()}


def eigen_check(lam: Partition, n: int) -> EigenReport:
    """Verify T[P_n] is an exact constant multiple of P_n.

    The constant is 2(N - n) with N independent of n across the family
    (N equals size(lam); asserted family-wide by the tests).  A
    non-constant ratio is a construction bug and raises.
    """
    y = exceptional_hermite(lam, n)
    image = apply_T_lambda(lam, y)
    ratio = image / RatFunc(y)
    if not ratio.is_constant():
        raise ArithmeticError(f"T[P_{n}] is not proportional to P_{n} for {lam}")
    c = ratio.as_fraction()
    residual_rf = image - c * RatFunc(y)
    assert residual_rf.is_zero()
    return EigenReport(n, c, n + c / 2, IntPoly())


def family_eigen_constant(lam: Partition, count: int = 4) -> Fraction:
    """The common N across the first ``count`` admissible degrees (exact fit)."""
    fam = XHermiteFamily(lam)
    values = {eigen_check(lam, n).shifted_index for n in fam.admissible_degrees(count)}
    if len(values) != 1:
        raise ArithmeticError(f"eigenvalues of {lam} do not fit 2(N - n): {values}")
    return values.pop()


@dataclass(frozen=True)
class MinOrderForm:
    """Smallest determinant representation of one family member."""

    n: int
    origin: int
    diagram: MayaDiagram        # the shifted, minimal-girth diagram
    order: int
    scalar: Fraction            # P_n = scalar * pseudo_wronskian(diagram)
    poly: IntPoly

    def to_json(self):
        return {"n": self.n, "origin": self.origin, "frobenius": str(self.diagram),
                "order": self.order, "scalar": str(self.scalar),
                "poly": self.poly.to_json()}


def min_order_form(lam: Partition, n: int) -> MinOrderForm:
    """Minimal-order pseudo-Wronskian equal to P_n up to an exact scalar."""
    fam = XHermiteFamily(lam)
    if not fam.is_admissible(n):
        raise ValueError(f"degree {n} is not admissible for {lam}")
    order, origin = xhermite_min_origin(lam, n)
    enlarged = fam.diagram.add(fam.insertion_position(n))
    small = enlarged.shift(-origin)
    assert small.girth == order, (lam, n, small, order)
    sign = insertion_sign(lam, n)
    scalar = sign * equivalence_factor(enlarged, origin).ratio
    return MinOrderForm(n, origin, small, order, scalar, pseudo_wronskian(small))


@dataclass(frozen=True)
class NormReport:
    n: int
    m: int
    integral: str
    expected: str
    rel_error: float
    ok: bool

    def to_json(self):
        return {"n": self.n, "m": self.m, "integral": self.integral,
                "expected": self.expected, "rel_error": self.rel_error,
                "ok": self.ok}


def _tail_cutoff(total_degree, dps):
    """Smallest integer L with x^d * exp(-x^2) below the target at |x| >= L."""
    target = -(dps * math.log(10) + 30)
    L = 10
    while total_degree * math.log(L) - L * L > target:
        L += 1
    return L


def weight_and_norm_check(lam: Partition, n: int, m: int,
                          tolerance: float = 1e-10, dps: int = 50) -> NormReport:
    """Numerical orthogonality check for an even partition.

    Integrates P_n P_m e^(-x^2)/W^2 over the real line with tanh-sinh
    quadrature at ``dps`` digits and compares against
    delta_{nm} sqrt(pi) 2^(j+ell) j! prod_i (j - m_i), j = n + ell - N,
    with N the family eigenvalue index.  The weight denominator W must
    have no real zeros; for even partitions it never does (checked
    exactly by Sturm root counting before any numerics).
    """
    if not lam.is_even():
        raise ValueError(f"partition {lam} is not even")
    fam = XHermiteFamily(lam)
    w = pseudo_wronskian(fam.diagram)
    if count_real_roots(w) != 0:
        raise ArithmeticError(f"weight denominator has a real zero for {lam}")
    pn = exceptional_hermite(lam, n)
    pm = pn if m == n else exceptional_hermite(lam, m)
    big_n = family_eigen_constant(lam)

    import mpmath

    mp = mpmath.mp
    old_dps = mp.dps
    try:
        mp.dps = dps
        L = _tail_cutoff(n + m + 2 * max(w.degree, 1), dps)
        f = lambda x: (pn.eval_mpf(x, mp) * pm.eval_mpf(x, mp)
                       * mpmath.exp(-x * x) / w.eval_mpf(x, mp) ** 2)
        integral = mpmath.quad(f, [-L, 0, L])
        j = n + fam.ell - big_n
        assert j.denominator == 1
        j = int(j)
        if n == m:
            expected = mpmath.sqrt(mpmath.pi) * mpmath.mpf(2) ** (j + fam.ell)
            expected *= mpmath.factorial(j)
            for t in fam.diagram.t:
                expected *= j - t
            rel = abs(integral - expected) / abs(expected)
            ok = rel <= tolerance
        else:
            expected = mpmath.mpf(0)
            # scale of the diagonal norms at n, used as the relative yardstick
            scale = mpmath.sqrt(mpmath.pi) * mpmath.mpf(2) ** (j + fam.ell)
            scale *= mpmath.factorial(j)
            for t in fam.diagram.t:
                scale *= abs(j - t)
            rel = float(abs(integral) / scale)
            ok = rel <= tolerance
        return NormReport(n, m, mpmath.nstr(integral, 20), mpmath.nstr(expected, 20),
                          float(rel), bool(ok))
    finally:
        mp.dps = old_dps
