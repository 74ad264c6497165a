"""phi-Newton polygons with exact rational edge slopes.

For f with phi-expansion ``sum b_i(x) phi^i`` (top index n) and a prime p
with phi irreducible mod p, the polygon is built from the lattice points
P_i = (i, vpx(b_{n-i})) for the indices where b_{n-i} is nonzero, by the
sequential minimal-slope construction: from the current vertex, take the
minimum slope to any later point and advance to the LARGEST index attaining
it.  That largest-index tie-break is part of the definition, so a generic
convex-hull routine is deliberately not used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fppoly import is_irreducible_mod_p
from .schur import u
from .valuation import ratio_str, vp, vpx
from .zpoly import IntPoly, phi_expand


@dataclass(frozen=True)
class Edge:
    start: tuple[int, int]
    end: tuple[int, int]
    slope: Fraction


@dataclass(frozen=True)
class NewtonPolygon:
    """Lattice points, lower-boundary vertex indices, and edges."""

    points: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def rightmost_slope(self) -> Fraction:
        return rightmost_slope(self)

    def principal_part(self) -> tuple[Edge, ...]:
        """Edges with nonzero slope (the polygon minus its horizontal part)."""
        return tuple(e for e in self.edges if e.slope != 0)

    def to_json(self) -> dict:
        return {
            "points": [[i, v] for i, v in self.points],
            "vertices": list(self.vertices),
            "slopes": [ratio_str(e.slope) for e in self.edges],
        }


def build_polygon(f: IntPoly, phi: IntPoly, p: int) -> NewtonPolygon:
    """Newton polygon of f with respect to phi and p.

    Requires phi monic and irreducible mod p, and both ends of the
    phi-expansion nonzero (b_0 * b_n != 0).
    """
    if not is_irreducible_mod_p(phi, p):
        raise ValueError(f"phi is reducible modulo {p}")
    expansion = phi_expand(f, phi)
    terms = expansion.terms
    if not terms or terms[0].is_zero:
        raise ValueError("polygon requires b_0(x) and b_n(x) both nonzero")
    n = len(terms) - 1
    points = tuple(
        (i, vpx(terms[n - i], p)) for i in range(n + 1) if not terms[n - i].is_zero
    )
    return _build_from_points(points)


def polygon_of_coefficients(coeffs: list[int], p: int) -> NewtonPolygon:
    """Polygon of sum c_i phi^i from the constants alone.

    The polygon of a polynomial whose phi-expansion has constant terms
    depends only on those constants, not on phi.
    """
    n = len(coeffs) - 1
    if n < 0 or coeffs[0] == 0 or coeffs[-1] == 0:
        raise ValueError("polygon requires nonzero first and last coefficients")
    points = tuple(
        (i, vp(coeffs[n - i], p)) for i in range(n + 1) if coeffs[n - i] != 0
    )
    return _build_from_points(points)


def _build_from_points(points: tuple[tuple[int, int], ...]) -> NewtonPolygon:
    n = points[-1][0]
    by_index = dict(points)
    if 0 not in by_index or n not in by_index:
        raise ValueError("polygon requires points at indices 0 and n")
    vertices = [0]
    edges = []
    cur = 0
    while cur < n:
        cv = by_index[cur]
        best: Fraction | None = None
        best_j = cur
        for j, v in points:
            if j <= cur:
                continue
            slope = Fraction(v - cv, j - cur)
            # largest index attaining the minimal slope
            if best is None or slope < best or (slope == best and j > best_j):
                best = slope
                best_j = j
        edges.append(Edge((cur, cv), (best_j, by_index[best_j]), best))
        vertices.append(best_j)
        cur = best_j
    return NewtonPolygon(points, tuple(vertices), tuple(edges))


def rightmost_slope(np_: NewtonPolygon) -> Fraction:
    """Slope of the final edge; errors on a degenerate single-point polygon."""
    if not np_.edges:
        raise ValueError("degenerate polygon has no edges")
    return np_.edges[-1].slope


def rightmost_slope_formula(n: int, c: int, p: int) -> Fraction:
    """Closed form for the rightmost slope of the reference polynomial g_c.

    Equals max over 1 <= j <= n of vp(u(2j+c)) / (2j), which is the slope of
    the right-most edge of the polygon of
    g_c = sum_j (u(2n+c)/u(2j+c)) phi^(2j) for any admissible phi.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if c not in (0, 2):
        raise ValueError("c must be 0 or 2")
    return max(Fraction(vp(u(2 * j + c), p), 2 * j) for j in range(1, n + 1))
