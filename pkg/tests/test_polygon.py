from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from phicert.polygon import (
    build_polygon,
    polygon_of_coefficients,
    rightmost_slope,
    rightmost_slope_formula,
)
from phicert.schur import u
from phicert.valuation import vp
from phicert.zpoly import IntPoly, parse_poly_text


def test_polygon_of_simple_eisenstein():
    # x^2 + 3x + 3 at p=3: points (0,0), (1,1), (2,1) -> single edge of slope 1/2
    poly = polygon_of_coefficients([3, 3, 1], 3)
    assert poly.points == ((0, 0), (1, 1), (2, 1))
    assert poly.vertices == (0, 2)
    assert [e.slope for e in poly.edges] == [Fraction(1, 2)]


def test_polygon_tie_break_takes_largest_index():
    # collinear points (0,0), (1,1), (2,2): one edge straight to index 2
    poly = polygon_of_coefficients([4, 2, 1], 2)
    assert poly.vertices == (0, 2)
    assert len(poly.edges) == 1


def test_polygon_two_edges_and_principal_part():
    # (0,0) -> (2,0) -> (3,2): horizontal part then slope 2
    poly = polygon_of_coefficients([9, 1, 1, 1], 3)
    assert poly.vertices == (0, 2, 3)
    slopes = [e.slope for e in poly.edges]
    assert slopes == [Fraction(0), Fraction(2)]
    assert [e.slope for e in poly.principal_part()] == [Fraction(2)]


def test_slopes_strictly_increase():
    poly = polygon_of_coefficients([8, 2, 4, 2, 1], 2)
    slopes = [e.slope for e in poly.edges]
    assert slopes == sorted(set(slopes))


@given(
    st.lists(st.integers(min_value=1, max_value=10**6), min_size=2, max_size=9),
    st.sampled_from([2, 3, 5, 7]),
)
def test_polygon_invariants(coeffs, p):
    poly = polygon_of_coefficients(coeffs, p)
    slopes = [e.slope for e in poly.edges]
    # strictly increasing slopes, vertices at both ends, no point below the hull
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    assert poly.vertices[0] == 0 and poly.vertices[-1] == len(coeffs) - 1
    for e in poly.edges:
        (x0, y0), (x1, y1) = e.start, e.end
        for i, v in poly.points:
            if x0 <= i <= x1:
                assert (v - y0) * (x1 - x0) >= (y1 - y0) * (i - x0)


def test_build_polygon_matches_coefficient_polygon():
    phi = parse_poly_text("x^2-x+5")
    f = phi**4 + 3 * phi**2 + 3
    built = build_polygon(f, phi, 3)
    direct = polygon_of_coefficients([3, 0, 3, 0, 1], 3)
    assert built.points == direct.points
    assert built.vertices == direct.vertices


def test_build_polygon_requires_irreducible_phi():
    phi = parse_poly_text("x^2-x+5")  # reducible mod 5
    with pytest.raises(ValueError):
        build_polygon(phi**2 + 1, phi, 5)


def test_build_polygon_requires_nonzero_ends():
    phi = parse_poly_text("x^2+1")
    with pytest.raises(ValueError):
        build_polygon(phi**2, phi, 3)  # b_0 = 0


def test_rightmost_slope_formula_small_cases():
    # n=2, c=0, p=3: max(vp(u(2))/2, vp(u(4))/4) = max(0, 1/4)
    assert rightmost_slope_formula(2, 0, 3) == Fraction(1, 4)
    assert rightmost_slope_formula(2, 2, 3) == Fraction(1, 2)
    assert rightmost_slope_formula(5, 0, 7) == Fraction(1, 8)


@pytest.mark.parametrize("n", range(1, 12))
@pytest.mark.parametrize("c", [0, 2])
def test_formula_equals_built_polygon(n, c):
    from phicert.certifier import c_coefficients

    coeffs = c_coefficients(n, c)
    for p in (2, 3, 5, 7, 11, 13):
        formula = rightmost_slope_formula(n, c, p)
        built = rightmost_slope(polygon_of_coefficients(coeffs, p))
        assert formula == built, (n, c, p)


def test_rightmost_slope_definition():
    # rightmost slope is max over j of vp(u(2j+c)) / (2j)
    for n in (1, 3, 6):
        for c in (0, 2):
            for p in (3, 5, 7):
                expected = max(
                    Fraction(vp(u(2 * j + c), p), 2 * j) for j in range(1, n + 1)
                )
                assert rightmost_slope_formula(n, c, p) == expected
