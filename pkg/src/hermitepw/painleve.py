"""Rational extensions of the harmonic oscillator, Maya-diagram chains,
and the two families of rational solutions of the fourth Painleve
equation

    y'' = (y')^2/(2y) + (3/2) y^3 + 4 t y^2 + 2 (t^2 - a) y + b / y.

Each solution is a linear term plus log-derivatives of pseudo-Wronskians
of the generalized-Hermite (GH) or Okamoto (O) diagram families.  The GH
family substitutes x = t directly; the O family substitutes x = t/sqrt3,
handled exactly in Z[sqrt3] with the sqrt3 component required to cancel.
Verification clears denominators and checks the residual polynomial

    2 y y'' - (y')^2 - 3 y^4 - 8 t y^3 - 4 (t^2 - a) y^2 - 2 b = 0

identically, with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .hermite import equivalence_factor, pseudo_wronskian
from .maya import MayaDiagram
from .minorder import minimal_girth_of_diagram
from .polys import IntPoly, RatFunc, sqrt3_log_derivative_term

__all__ = [
    "gh_maya",
    "o_maya",
    "MayaChain",
    "three_cycle",
    "RationalPotential",
    "potential",
    "ChainStep",
    "chain_step_verify",
    "PivSolution",
    "piv_solution_gh",
    "piv_solution_o",
    "PivReport",
    "verify_piv",
    "piv_catalog",
    "MinOrderSpec",
    "min_order_gh",
    "min_order_o",
]


def gh_maya(m: int, ell: int) -> MayaDiagram:
    """Generalized-Hermite diagram: negatives plus the block [m, m + ell)."""
    if m < 0 or ell < 0:
        raise ValueError("parameters must be non-negative")
    return MayaDiagram.from_sets(range(m, m + ell))


def o_maya(ell1: int, ell2: int) -> MayaDiagram:
    """Okamoto diagram: negatives plus {3j+1 : j < ell1} and {3j+2 : j < ell2}."""
    if ell1 < 0 or ell2 < 0:
        raise ValueError("parameters must be non-negative")
    filled = {3 * j + 1 for j in range(ell1)} | {3 * j + 2 for j in range(ell2)}
    return MayaDiagram.from_sets(filled)


@dataclass(frozen=True)
class MayaChain:
    """Diagrams M_1..M_4 with single-element flips between consecutive ones."""

    diagrams: tuple
    flips: tuple        # the flipped element at each of the three steps
    shift: int          # M_4 = M_1 + shift

    def __post_init__(self):
        for cur, nxt, f in zip(self.diagrams, self.diagrams[1:], self.flips):
            expected = cur.add(f) if f not in cur else cur.remove(f)
            if nxt != expected:
                raise ValueError(f"flip {f} does not send {cur} to {nxt}")
        if self.diagrams[-1] != self.diagrams[0].shift(self.shift):
            raise ValueError("chain is not cyclic up to translation")


def three_cycle(family: str, params) -> MayaChain:
    """The translation-cyclic three-step chain seeded by a GH or O diagram.

    GH(m, ell) returns to itself shifted by 1 after adding m + ell,
    adding 0 and removing m; O(ell1, ell2) returns shifted by 3 after
    adding 3*ell1 + 1, 3*ell2 + 2 and 0.
    """
    if family == "gh":
        m, ell = params
        if m < 0 or ell < 0:
            raise ValueError("parameters must be non-negative")
        if ell == 0:
            m = 0  # every GH(m, 0) is the bare negative ray
        m1 = gh_maya(m, ell)
        if m > 0:
            flips = (m + ell, 0, m)
        elif ell > 0:
            flips = (ell, 0, 0)
        else:
            flips = (0, 0, 0)
        k = 1
    elif family == "o":
        ell1, ell2 = params
        m1 = o_maya(ell1, ell2)
        flips = (3 * ell1 + 1, 3 * ell2 + 2, 0)
        k = 3
    else:
        raise ValueError(f"unknown family {family!r}")
    diagrams = [m1]
    for f in flips:
        cur = diagrams[-1]
        diagrams.append(cur.add(f) if f not in cur else cur.remove(f))
    return MayaChain(tuple(diagrams), flips, k)


@dataclass(frozen=True)
class RationalPotential:
    """x^2 + log_part + offset with log_part = -2 (log H_M)''."""

    log_part: RatFunc
    offset: int

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(IntPoly((0, 0, 1))) + self.log_part + RatFunc.from_fraction(self.offset)


def potential(m: MayaDiagram) -> RationalPotential:
    h = pseudo_wronskian(m)
    log_part = -2 * RatFunc(h).log_derivative().derivative()
    return RationalPotential(log_part, 2 * (len(m.t) - len(m.s)))


@dataclass(frozen=True)
class ChainStep:
    flip: int
    sigma: int
    eigenvalue: Fraction
    factor: RatFunc      # f with U = f' + f^2 + eigenvalue
    ok: bool


def chain_step_verify(m: MayaDiagram, flip: int) -> ChainStep:
    """Confirm one flip is an exact Darboux step between the two potentials.

    Tries f = sigma*x + (log(H_M'/H_M))' for sigma = +-1, solves
    f' + f^2 = U_M - lam for a constant lam, and requires
    -f' + f^2 = U_M' - lam to hold identically.  Exactly one sigma works
    for a genuine flip; failure of both signals a construction bug.
    """
    m2 = m.add(flip) if flip not in m else m.remove(flip)
    u_lo = potential(m).as_ratfunc()
    u_hi = potential(m2).as_ratfunc()
    log_ratio = RatFunc(pseudo_wronskian(m2)).log_derivative() \
        - RatFunc(pseudo_wronskian(m)).log_derivative()
    x = RatFunc(IntPoly((0, 1)))
    for sigma in (1, -1):
        f = sigma * x + log_ratio
        cand = u_lo - f.derivative() - f * f
        if not cand.is_constant():
            continue
        lam = cand.as_fraction()
        if (-f.derivative() + f * f) == u_hi - RatFunc.from_fraction(lam):
            return ChainStep(flip, sigma, lam, f, True)
    raise ArithmeticError(f"no Darboux factorization found for flip {flip} on {m}")


@dataclass(frozen=True)
class PivSolution:
    """Rational solution y(t) with exact parameters (a, b)."""

    family: str
    params: tuple
    branch: int
    y: RatFunc
    a: Fraction
    b: Fraction

    def to_json(self):
        return {"family": self.family, "params": list(self.params),
                "branch": self.branch, "y": self.y.to_json(var="t"),
                "a": str(self.a), "b": str(self.b)}


def _log_diff(h_num: IntPoly, h_den: IntPoly) -> RatFunc:
    """(log(h_num/h_den))' as a reduced rational function."""
    return RatFunc(h_num).log_derivative() - RatFunc(h_den).log_derivative()


def piv_solution_gh(m: int, ell: int, branch: int) -> PivSolution:
    """GH-family solution; branch picks which flip of the cycle leads."""
    if branch not in (1, 2, 3):
        raise ValueError("branch must be 1, 2 or 3")
    if branch == 2 and m <= 0:
        raise ValueError("branch 2 needs m > 0")
    if branch == 3 and ell <= 0:
        raise ValueError("branch 3 needs ell > 0")
    h0 = pseudo_wronskian(gh_maya(m, ell))
    if branch == 1:
        partner = gh_maya(m, ell + 1)
        a, b = Fraction(-(1 + m + 2 * ell)), Fraction(-2 * m * m)
    elif branch == 2:
        partner = gh_maya(m - 1, ell)
        a, b = Fraction(2 * m + ell - 1), Fraction(-2 * ell * ell)
    else:
        partner = gh_maya(m + 1, ell - 1)
        a, b = Fraction(ell - m - 1), Fraction(-2 * (m + ell) ** 2)
    y = _log_diff(h0, pseudo_wronskian(partner))
    if branch == 3:
        y = y - RatFunc(IntPoly((0, 2)))
    if y.is_zero():
        raise ValueError(f"degenerate parameters: gh({m},{ell}) branch {branch} gives y = 0")
    return PivSolution("gh", (m, ell), branch, y, a, b)


def piv_solution_o(ell1: int, ell2: int, branch: int) -> PivSolution:
    """O-family solution; built at x = t/sqrt3 with exact sqrt3 cancellation."""
    if branch not in (1, 2, 3):
        raise ValueError("branch must be 1, 2 or 3")
    if branch == 1 and (ell1 < 1 or ell2 < 1):
        raise ValueError("branch 1 needs ell1, ell2 >= 1")
    h0 = pseudo_wronskian(o_maya(ell1, ell2))
    if branch == 1:
        partner = o_maya(ell1 - 1, ell2 - 1)
        a = Fraction(ell1 + ell2)
        b = Fraction(-2, 9) * (1 - 3 * ell1 + 3 * ell2) ** 2
    elif branch == 2:
        partner = o_maya(ell1 + 1, ell2)
        a = Fraction(-1 - 2 * ell1 + ell2)
        b = Fraction(-2, 9) * (2 + 3 * ell2) ** 2
    else:
        partner = o_maya(ell1, ell2 + 1)
        a = Fraction(-2 - 2 * ell2 + ell1)
        b = Fraction(-2, 9) * (1 + 3 * ell1) ** 2
    ld = _log_diff(h0, pseudo_wronskian(partner))
    y = RatFunc(IntPoly((0, -2)), IntPoly.const(3)) \
        + sqrt3_log_derivative_term(ld.num, ld.den)
    if y.is_zero():
        raise ValueError(f"degenerate parameters: o({ell1},{ell2}) branch {branch} gives y = 0")
    return PivSolution("o", (ell1, ell2), branch, y, a, b)


@dataclass(frozen=True)
class PivReport:
    ok: bool
    residual: IntPoly

    def to_json(self):
        return {"ok": self.ok, "residual": self.residual.to_json(var="t")}


def verify_piv(sol: PivSolution) -> PivReport:
    """Exact check of the denominator-cleared equation

    2 y y'' - (y')^2 - 3 y^4 - 8 t y^3 - 4 (t^2 - a) y^2 - 2 b = 0.
    """
    n, d = sol.y.num, sol.y.den
    if n.is_zero():
        raise ValueError("y must be nonzero")
    np_, dp = n.derivative(), d.derivative()
    npp, dpp = np_.derivative(), dp.derivative()
    t = IntPoly((0, 1))
    scale = lcm(sol.a.denominator, sol.b.denominator)
    ia = sol.a.numerator * (scale // sol.a.denominator)
    ib = sol.b.numerator * (scale // sol.b.denominator)

    t1 = 2 * n * (npp * d * d - n * dpp * d - 2 * np_ * dp * d + 2 * n * dp * dp)
    t2 = (np_ * d - n * dp) ** 2
    t3 = 3 * n ** 2 * n ** 2
    t4 = 8 * t * n * n * n * d
    n2d2 = n * n * d * d
    residual = (scale * (t1 - t2 - t3 - t4)
                - 4 * (scale * (t * t * n2d2) - ia * n2d2)
                - 2 * ib * d ** 4)
    return PivReport(residual.is_zero(), residual)


def piv_catalog(max_param: int):
    """Every defined, non-degenerate solution with parameters <= max_param,
    each paired with its verification report."""
    out = []
    for fam, builder in (("gh", piv_solution_gh), ("o", piv_solution_o)):
        for p1 in range(max_param + 1):
            for p2 in range(max_param + 1):
                for branch in (1, 2, 3):
                    try:
                        sol = builder(p1, p2, branch)
                    except ValueError:
                        continue
                    out.append((sol, verify_piv(sol)))
    return out


@dataclass(frozen=True)
class MinOrderSpec:
    """Smallest equivalent determinant of a GH or O diagram."""

    order: int
    origin: int
    diagram: MayaDiagram
    poly: IntPoly
    constant: Fraction    # full pseudo-Wronskian = constant * poly

    def to_json(self):
        return {"order": self.order, "origin": self.origin,
                "frobenius": str(self.diagram), "poly": self.poly.to_json(),
                "constant": str(self.constant)}


def _min_order(m: MayaDiagram, order: int, origin: int) -> MinOrderSpec:
    small = m.shift(-origin)
    assert small.girth == order, (m, small, order)
    r, origins = minimal_girth_of_diagram(m)
    assert r == order and origin in origins, (m, order, origin, r, origins)
    constant = equivalence_factor(m, origin).ratio
    return MinOrderSpec(order, origin, small, pseudo_wronskian(small), constant)


def min_order_gh(m: int, ell: int) -> MinOrderSpec:
    """Minimal order of GH(m, ell) is min(m, ell): the plain Wronskian block
    when ell <= m, an all-conjugate determinant at origin m + ell otherwise."""
    if m < 1 or ell < 1:
        raise ValueError("parameters must be >= 1")
    if ell <= m:
        return _min_order(gh_maya(m, ell), ell, 0)
    return _min_order(gh_maya(m, ell), m, m + ell)


def min_order_o(ell1: int, ell2: int) -> MinOrderSpec:
    """Minimal order of O(ell1, ell2) is max(ell1, ell2), attained at the
    origin 3 * min(ell1, ell2)."""
    if ell1 < 1 or ell2 < 1:
        raise ValueError("parameters must be >= 1")
    return _min_order(o_maya(ell1, ell2), max(ell1, ell2), 3 * min(ell1, ell2))
