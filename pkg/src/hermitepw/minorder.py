"""The minimal-order problem: which shift of a diagram has the smallest
Frobenius symbol, hence the smallest pseudo-Wronskian determinant.

Girth as a function of the origin shift is a +-1 walk:
g(k) = girth(M - k) = i_k + j_k in bent-diagram coordinates, rising by 1
through holes and falling by 1 through filled boxes.  Valleys of the walk
(k-1 filled, k empty) are the inside corners of the Ferrers diagram plus
the two degenerate corners, and every minimal-girth origin is a valley.

Two views of the level sets are needed:

* ``valleys_at_level`` - proper corners only; the reported corner labels
  k_r are the largest of these, matching the corner-based bookkeeping of
  the incremental results below.
* ``girth_level_set`` - every k with g(k) = r, valley or not.  The origin
  sets produced by ``min_order_after_insert`` come from these: after an
  insertion, walk points that merely pass through a level can become
  proper valleys, so restricting to prior valleys would drop origins
  (checked exhaustively against brute force in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .maya import MayaDiagram, Partition

__all__ = [
    "girth",
    "girth_of_shift",
    "walk_window",
    "girth_level_set",
    "valleys_at_level",
    "corner_label",
    "CornerReport",
    "minimal_girth",
    "minimal_girth_of_diagram",
    "InsideCorners",
    "inside_corners",
    "DurfeeSymbol",
    "durfee_symbol",
    "InsertReport",
    "min_order_after_insert",
    "xhermite_min_origin",
]


def girth(m: MayaDiagram) -> int:
    return m.girth


def girth_of_shift(m: MayaDiagram, k: int) -> int:
    """girth(M - k) = i_k + j_k, straight from the bent diagram of M."""
    pt = m.bent_point(k)
    return pt.holes_below + pt.filled_at_or_above


def walk_window(m: MayaDiagram, slack: int = 0):
    """Window [lo, hi] outside which the girth walk is strictly monotone.

    All valleys lie in [min_hole, max_element + 1]; widening by ``slack``
    captures every k with g(k) <= min girth + slack.
    """
    lo = m.min_hole() - slack - 1
    hi = m.max_element() + 1 + slack + 1
    return lo, hi


def _walk(m: MayaDiagram, slack):
    lo, hi = walk_window(m, slack)
    return lo, hi, {k: girth_of_shift(m, k) for k in range(lo, hi + 1)}


def girth_level_set(m: MayaDiagram, r: int):
    """All k with girth(M - k) = r, ascending."""
    rmin = minimal_girth_of_diagram(m)[0]
    if r < rmin:
        return []
    lo, hi, g = _walk(m, r - rmin + 1)
    return [k for k in range(lo, hi + 1) if g[k] == r]


def valleys_at_level(m: MayaDiagram, r: int):
    """Corner origins at girth level r: k with g(k) = r, k-1 in M, k not in M."""
    return [k for k in girth_level_set(m, r) if (k - 1) in m and k not in m]


def corner_label(m: MayaDiagram, r: int) -> Optional[int]:
    """k_r: the largest corner origin at level r, or None when there is none."""
    vs = valleys_at_level(m, r)
    return vs[-1] if vs else None


def minimal_girth_of_diagram(m: MayaDiagram):
    """(minimal girth, ascending list of all minimal-girth origins)."""
    lo, hi, g = _walk(m, 0)
    r = min(g.values())
    return r, [k for k in range(lo, hi + 1) if g[k] == r]


@dataclass(frozen=True)
class CornerReport:
    """Minimal girth plus the full corner inventory of a diagram."""

    r: int
    origins: tuple            # ascending minimal-girth origins
    corners: tuple            # all (k, girth) valley pairs, ascending in k

    def to_json(self):
        return {"r": self.r, "origins": list(self.origins),
                "corners": [list(c) for c in self.corners]}


def minimal_girth(lam: Partition) -> CornerReport:
    """Minimal girth of the unlabelled diagram of a partition.

    Cross-checked internally against min over j of lambda_{j+1} + j, the
    corner-distance formula (j = 0..length).
    """
    m = MayaDiagram.from_partition(lam)
    r, origins = minimal_girth_of_diagram(m)
    formula = min(lam.part(j + 1) + j for j in range(lam.length + 1))
    assert r == formula, (r, formula, lam)
    # corner inventory: every valley of the walk
    lo, hi, g = _walk(m, 0)
    corners = tuple((k, g[k]) for k in range(lo + 1, hi + 1)
                    if (k - 1) in m and k not in m)
    return CornerReport(r, tuple(origins), corners)


@dataclass(frozen=True)
class InsideCorners:
    strict: tuple      # (i, j) cells with both neighbours inside
    degenerate: tuple  # (lambda_1, 0) and (0, length)


def inside_corners(lam: Partition) -> InsideCorners:
    """Inside corners of the Ferrers diagram, degenerate endpoints separate."""
    ell = lam.length
    strict = tuple((lam.part(j + 1), j) for j in range(1, ell)
                   if lam.part(j) > lam.part(j + 1))
    degenerate = ((lam.part(1), 0), (0, ell))
    return InsideCorners(strict, degenerate)


@dataclass(frozen=True)
class DurfeeSymbol:
    """Rectangle decomposition [mu | nu]_{p x q} at a corner origin."""

    mu: Partition
    nu: Partition
    p: int
    q: int

    def __str__(self):
        mu = ",".join(str(v) for v in self.mu.parts)
        nu = ",".join(str(v) for v in self.nu.parts)
        return f"[{mu} | {nu}]_{{{self.p}x{self.q}}}"

    def to_json(self):
        return {"mu": self.mu.to_json(), "nu": self.nu.to_json(),
                "p": self.p, "q": self.q}


def _staircase(values):
    """mu_i = v_i - (count - i) for 1-based i over a descending tuple."""
    n = len(values)
    return Partition(tuple(v - (n - i) for i, v in enumerate(values, start=1)
                           if v - (n - i) > 0))


def durfee_symbol(m: MayaDiagram) -> DurfeeSymbol:
    """Durfee symbol of a diagram whose origin sits at a corner.

    Requires a filled box just below the origin and a hole at it
    (s and t entries all positive), covering the degenerate corners when
    either side is empty.  Accounting: p*q + |mu| + |nu| = partition size.
    """
    if 0 in m.s or 0 in m.t:
        raise ValueError("origin is not at a corner of the Ferrers diagram")
    p, q = len(m.s), len(m.t)
    mu = _staircase(m.s)
    nu = _staircase(m.t)
    total = m.partition().size
    assert p * q + mu.size + nu.size == total, (m, mu, nu)
    return DurfeeSymbol(mu, nu, p, q)


@dataclass(frozen=True)
class InsertReport:
    case: str          # one of 'a', 'b', 'c', 'd'
    r: int             # minimal girth after insertion
    origins: tuple     # ascending minimal-girth origins after insertion


def min_order_after_insert(m: MayaDiagram, new: int) -> InsertReport:
    """Minimal girth and origins of M u {new}, by constant-size case analysis.

    Cases on the position of ``new`` against the corner labels k_r and
    k_{r+1}:
      (a) new < k_r:              r-1, origins {k in L_r : k > new}
      (b) new = k_r:              r,   origins {new+1} u {k in L_{r+1} : k > new}
      (c) k_r < new < k_{r+1}:    r,   origins {k in L_{r+1} : k > new}
      (d) otherwise:              r+1, origins L_r u {k in L_{r+2} : k > new}
    where L_r is the full girth level set.  Agrees with recomputation from
    scratch; the level sets (not just valleys) are required in (b)-(d).
    """
    if new in m:
        raise ValueError(f"{new} is already in the diagram")
    r, _ = minimal_girth_of_diagram(m)
    k_r = corner_label(m, r)
    k_r1 = corner_label(m, r + 1)
    if new < k_r:
        case = "a"
        r2 = r - 1
        origins = [k for k in girth_level_set(m, r) if k > new]
    elif new == k_r:
        case = "b"
        r2 = r
        origins = sorted({new + 1} | {k for k in girth_level_set(m, r + 1) if k > new})
    elif k_r1 is not None and k_r < new < k_r1:
        case = "c"
        r2 = r
        origins = [k for k in girth_level_set(m, r + 1) if k > new]
    else:
        case = "d"
        r2 = r + 1
        origins = sorted(set(girth_level_set(m, r)) |
                         {k for k in girth_level_set(m, r + 2) if k > new})
    return InsertReport(case, r2, tuple(origins))


def xhermite_min_origin(lam: Partition, n: int):
    """(minimal order, one minimal origin) for the degree-n member of the
    family indexed by lam, via the corner labels of the base diagram.

    The admissible degrees are those whose insertion position
    n + length - size is a hole of the standard diagram.
    """
    m = MayaDiagram.from_partition(lam)
    offset = lam.size - lam.length
    pos = n - offset
    if n < 0 or pos in m:
        raise ValueError(f"degree {n} is not admissible for {lam}")
    r, _ = minimal_girth_of_diagram(m)
    k_r = corner_label(m, r)
    k_r1 = corner_label(m, r + 1)
    if k_r1 is not None and k_r1 > k_r:
        if n < k_r + offset:
            return r - 1, k_r
        if n < k_r1 + offset:
            return r, k_r1
        return r + 1, k_r
    else:
        if n < k_r + offset:
            return r - 1, k_r
        if n == k_r + offset:
            return r, k_r + 1
        return r + 1, k_r
