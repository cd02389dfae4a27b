"""Exact univariate polynomial and rational-function arithmetic over Z and Q.

Polynomials are dense integer-coefficient lists, index = degree, with the
zero polynomial canonically represented by an empty coefficient tuple.
Everything here is exact: no floats enter at any point.  Multiplication
switches to Kronecker substitution (packing coefficients into one big
integer) once operands are large enough for CPython's native bignum
multiply to beat the schoolbook loop.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

__all__ = [
    "IntPoly",
    "RatFunc",
    "Zsqrt3",
    "poly_gcd",
    "count_real_roots",
    "sqrt3_log_derivative_term",
]

# operand-size threshold (len(a)*len(b)) above which Kronecker packing wins
_KRONECKER_CUTOFF = 600


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _mul_schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _mul_kronecker(a, b):
    # Pack both factors into integers with word size w, multiply once,
    # then read back balanced base-2^w digits.  Exact for any signs as
    # long as every product coefficient fits in (-2^(w-1), 2^(w-1)).
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bound = ma * mb * min(len(a), len(b))
    w = bound.bit_length() + 2
    pa = 0
    for c in reversed(a):
        pa = (pa << w) + c
    pb = 0
    for c in reversed(b):
        pb = (pb << w) + c
    prod = pa * pb
    nout = len(a) + len(b) - 1
    mask = (1 << w) - 1
    half = 1 << (w - 1)
    out = []
    r = prod
    for _ in range(nout):
        d = ((r + half) & mask) - half
        out.append(d)
        r = (r - d) >> w
    assert r == 0
    return out


class IntPoly:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(tuple(coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c):
        return cls((int(c),))

    @classmethod
    def monomial(cls, degree, c=1):
        if c == 0:
            return cls()
        return cls((0,) * degree + (int(c),))

    # -- basic structure ----------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial (acts as the -infinity sentinel)."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        if len(a) * len(b) <= _KRONECKER_CUTOFF:
            return IntPoly(_mul_schoolbook(a, b))
        return IntPoly(_mul_kronecker(a, b))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = IntPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def shift_degree(self, k):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self, order=1):
        c = self.coeffs
        for _ in range(order):
            c = tuple(i * c[i] for i in range(1, len(c)))
        return IntPoly(c)

    # -- division -----------------------------------------------------

    def divmod(self, other):
        """Euclidean division; requires the remainder steps to stay integral."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lead = b[-1]
        if len(a) - 1 < db:
            return IntPoly(), self
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            if a[i] == 0:
                continue
            c, rem = divmod(a[i], lead)
            if rem:
                raise ValueError("inexact polynomial division over Z")
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
        return IntPoly(q), IntPoly(a)

    def divexact(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division left a remainder")
        return q

    # -- content, gcd helpers ------------------------------------------

    def content(self):
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coeffs))

    # -- evaluation ----------------------------------------------------

    def eval_at(self, x):
        """Evaluate at an exact point (int or Fraction)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_mpf(self, x, mp):
        """Evaluate with mpmath at working precision (quadrature only)."""
        out = mp.mpf(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def parity(self):
        """0 if even, 1 if odd, None if mixed (zero counts as even)."""
        degs = {i & 1 for i, c in enumerate(self.coeffs) if c}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    # -- formatting ------------------------------------------------------

    def pretty(self, var="x"):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = var if i == 1 else f"{var}^{i}"
                body = xpow if mag == 1 else f"{mag}{xpow}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json(self, var="x"):
        return {"var": var, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(c) for c in obj["coeffs"])

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _pseudo_rem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, over Z."""
    da, db = a.degree, b.degree
    lead = b.leading
    r = a * (lead ** (da - db + 1))
    _, rem = r.divmod(b)
    return rem


def poly_gcd(a, b):
    """gcd over Z[x] via the primitive polynomial remainder sequence."""
    if a.is_zero():
        return b.primitive() if not b.is_zero() else IntPoly()
    if b.is_zero():
        return a.primitive()
    ca, cb = a.content(), b.content()
    cg = math.gcd(ca, cb)
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive()
    return a.primitive() * cg


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u * v < 0)


def count_real_roots(p):
    """Number of distinct real roots, by Sturm's theorem (exact)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.divexact(poly_gcd(p, p.derivative())) if p.degree > 0 else p
    if p.degree == 0:
        return 0
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = _pseudo_rem(chain[-2], chain[-1])
        # keep signs faithful: pseudo-remainder scales by lc^k which may
        # flip sign when lc < 0 and k is odd; renormalize via primitive()
        lead = chain[-1].leading
        k = chain[-2].degree - chain[-1].degree + 1
        if lead < 0 and k % 2:
            r = -r
        chain.append(-r)
    if chain[-1].is_zero():
        chain.pop()
    at_plus = [q.leading for q in chain]
    at_minus = [q.leading * (-1) ** q.degree for q in chain]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


class RatFunc:
    """Reduced ratio of two integer polynomials.

    Canonical form: no common polynomial factor, coprime integer contents,
    denominator nonzero with positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if den is None:
            den = IntPoly.const(1)
        elif isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return IntPoly(), IntPoly.const(1)
        g = poly_gcd(num, den)
        if g.degree > 0 or g.leading != 1:
            num = num.divexact(g)
            den = den.divexact(g)
        cg = math.gcd(num.content(), den.content())
        if den.leading < 0:
            cg = -cg
        if cg != 1:
            num = IntPoly(tuple(c // cg for c in num.coeffs))
            den = IntPoly(tuple(c // cg for c in den.coeffs))
        return num, den

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls(IntPoly.const(q.numerator), IntPoly.const(q.denominator), _normalized=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return Fraction(self.num[0] if self.num.coeffs else 0, self.den[0])

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, IntPoly)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    @staticmethod
    def _coerce(v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, IntPoly):
            return RatFunc(v)
        if isinstance(v, (int, Fraction)):
            return RatFunc.from_fraction(v)
        raise TypeError(f"cannot coerce {type(v)!r} to RatFunc")

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def log_derivative(self):
        """(log f)' = f'/f; multiplicative constants drop out."""
        if self.is_zero():
            raise ZeroDivisionError("log-derivative of zero")
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), n * d)

    def eval_at(self, x):
        d = self.den.eval_at(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return Fraction(self.num.eval_at(x), d)

    def pretty(self, var="x"):
        if self.den == IntPoly.const(1):
            return self.num.pretty(var)
        return f"({self.num.pretty(var)}) / ({self.den.pretty(var)})"

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self, var="x"):
        return {"num": self.num.to_json(var), "den": self.den.to_json(var)}

    @classmethod
    def from_json(cls, obj):
        return cls(IntPoly.from_json(obj["num"]), IntPoly.from_json(obj["den"]))


class Zsqrt3:
    """Element a + b*sqrt(3) of the quadratic ring Z[sqrt(3)]."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a
        self.b = b

    def __add__(self, other):
        return Zsqrt3(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Zsqrt3(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        return Zsqrt3(self.a * other.a + 3 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    def conj(self):
        return Zsqrt3(self.a, -self.b)

    def __eq__(self, other):
        return self.a == other.a and self.b == other.b

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __repr__(self):
        return f"Zsqrt3({self.a}, {self.b})"


def _subst_sqrt3(p):
    """Return q with Z[sqrt3] coefficients such that p(t/sqrt3) = q(t) / 3^ceil(deg/2).

    Coefficient of t^k picks up sqrt(3)^(2*ceil(d/2) - k).
    """
    d = p.degree
    if d < 0:
        return []
    top = 2 * ((d + 1) // 2)
    out = []
    for k, c in enumerate(p.coeffs):
        e = top - k
        if e % 2 == 0:
            out.append(Zsqrt3(c * 3 ** (e // 2), 0))
        else:
            out.append(Zsqrt3(0, c * 3 ** ((e - 1) // 2)))
    return out


def _zs_mul(pa, pb):
    out = [Zsqrt3() for _ in range(len(pa) + len(pb) - 1)] if pa and pb else []
    for i, ca in enumerate(pa):
        if not ca.is_zero():
            for j, cb in enumerate(pb):
                out[i + j] = out[i + j] + ca * cb
    return out


def sqrt3_log_derivative_term(num, den):
    """Exact (1/sqrt3) * (num/den)(t/sqrt3) as a rational function of t.

    Used for rescaled log-derivatives: num/den is D_x log(...) in the
    original variable.  All arithmetic stays in Z[sqrt3]; the sqrt(3)
    component of the final numerator must cancel identically, which is
    asserted.
    """
    sn = _subst_sqrt3(num)
    sd = _subst_sqrt3(den)
    if not sn:
        return RatFunc(0)
    # multiply numerator by sqrt3 once more for the 1/sqrt3 = sqrt3/3 factor
    sn = [Zsqrt3(3 * c.b, c.a) for c in sn]
    # rationalize: multiply both by the conjugate of the denominator
    sdc = [c.conj() for c in sd]
    nn = _zs_mul(sn, sdc)
    dd = _zs_mul(sd, sdc)
    assert all(c.b == 0 for c in dd), "denominator norm must be rational"
    assert all(c.b == 0 for c in nn), "sqrt(3) component failed to cancel"
    num_t = IntPoly([c.a for c in nn])
    den_t = IntPoly([c.a for c in dd]) * 3  # the deferred 1/3
    # exponent bookkeeping of the two 3^ceil(d/2) scalings cancels in the
    # ratio up to a known power of 3
    en = (num.degree + 1) // 2
    ed = (den.degree + 1) // 2
    shift = ed - en
    if shift >= 0:
        return RatFunc(num_t * 3 ** shift, den_t)
    return RatFunc(num_t, den_t * 3 ** (-shift))
