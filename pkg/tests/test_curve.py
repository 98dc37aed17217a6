"""Tests for curve construction, implicitization, and singularity data."""

import math
from fractions import Fraction

import pytest
import sympy

from chsurf.curve import (
    CurveSpec,
    Placement,
    ShapeClass,
    absolute_point_multiplicity,
    curve_point,
    curve_properties,
    homogeneous_implicit,
    implicit_equation,
    origin_cone_constant,
    origin_cone_constant_closed,
    polar_radius,
    shape_class,
    tangent_cone,
    verified_absolute_multiplicity,
)
from chsurf.poly import MultiPoly

XY = ("x", "y")


def spec(n, d, a="0"):
    return CurveSpec(n, d, Fraction(a))


# -- spec validation -----------------------------------------------------------


def test_spec_requires_lowest_terms():
    with pytest.raises(ValueError):
        CurveSpec(6, 3)
    with pytest.raises(ValueError):
        CurveSpec(0, 1)
    with pytest.raises(ValueError):
        CurveSpec(2, 1, Fraction(-1))


# -- polar form ------------------------------------------------------------------


def test_polar_radius_examples():
    assert polar_radius(spec(1, 1), 0.0) == pytest.approx(1.0)
    assert polar_radius(spec(7, 3, 1), 0.0) == pytest.approx(2.0)
    assert polar_radius(spec(2, 3, "1/2"), 1.5 * math.pi) == pytest.approx(-0.5)


def test_shape_class():
    assert shape_class(spec(3, 1, 0)) is ShapeClass.FOLIATE
    assert shape_class(spec(3, 1, "1/4")) is ShapeClass.PROLATE
    assert shape_class(spec(3, 1, 1)) is ShapeClass.CUSPIDATE
    assert shape_class(spec(3, 1, "5/2")) is ShapeClass.CURTATE


def test_curve_point_examples():
    origin = Placement()
    assert curve_point(spec(1, 1), origin, 0.0) == pytest.approx((1.0, 0.0, 0.0))
    lowered = Placement(0, 0, -1)
    assert curve_point(spec(7, 3, 1), lowered, 0.0) == pytest.approx((2.0, 0.0, -1.0))
    s = spec(5, 2, "1/2")
    p1 = curve_point(s, origin, 1.234)
    p2 = curve_point(s, origin, 1.234 + s.parameter_period)
    assert p1 == pytest.approx(p2)


# -- property table ---------------------------------------------------------------


@pytest.mark.parametrize(
    "n,d,a,expected",
    [
        (7, 3, "0", (10, 7, 3)),
        (2, 3, "1/2", (10, 4, 5)),
        (3, 1, "1", (8, 6, 2)),
        (3, 5, "0", (8, 3, 4)),
        (1, 1, "0", (2, 1, 1)),
        (9, 2, "2", (22, 18, 4)),
    ],
)
def test_curve_properties(n, d, a, expected):
    props = curve_properties(spec(n, d, a))
    assert (props.order, props.origin_multiplicity, props.absolute_multiplicity) == expected


# -- implicit equation -------------------------------------------------------------


def test_implicit_unit_circle():
    p = implicit_equation(spec(1, 1))
    assert p == MultiPoly(XY, {(2, 0): 1, (0, 2): 1, (1, 0): -1})


def test_implicit_degree_examples():
    assert implicit_equation(spec(7, 3, "1/4")).total_degree == 20
    assert implicit_equation(spec(3, 1)).total_degree == 4


def _elimination_oracle(n):
    """Implicit form of the d=1 rose via Groebner elimination of cos/sin."""
    c, s, x, y = sympy.symbols("c s x y")
    radius = sympy.chebyshevt(n, c)
    basis = sympy.groebner(
        [x - radius * c, y - radius * s, c * c + s * s - 1],
        c, s, x, y,
        order="lex",
    )
    keep = [g for g in basis.exprs if not (g.has(c) or g.has(s))]
    assert keep, "elimination produced no (x, y) generator"
    return min(keep, key=lambda g: sympy.Poly(g, x, y).total_degree())


def _to_sympy(poly, x, y):
    expr = 0
    for (ex, ey), coeff in poly.terms.items():
        assert coeff.is_real
        expr += sympy.Rational(coeff.re) * x**ex * y**ey
    return sympy.expand(expr)


@pytest.mark.parametrize("n", [1, 3])
def test_implicit_matches_elimination_oracle(n):
    x, y = sympy.symbols("x y")
    oracle = _elimination_oracle(n)
    mine = _to_sympy(implicit_equation(spec(n, 1)), x, y)
    quotient = sympy.simplify(oracle / mine)
    assert quotient.is_constant(), f"not proportional: {quotient}"


def test_implicit_symmetry_in_y():
    for s in [spec(3, 1, "1/2"), spec(2, 3, "1/2"), spec(7, 3)]:
        p = implicit_equation(s)
        y_neg = MultiPoly(XY, {(0, 1): -1})
        assert p.substitute("y", y_neg) == p


def _max_scaled_residual(curve_spec, samples=256):
    p = implicit_equation(curve_spec)
    coeff_scale = p.max_coefficient_magnitude()
    degree = p.total_degree
    worst = 0.0
    period = curve_spec.parameter_period
    for k in range(samples):
        phi = period * k / samples
        r = polar_radius(curve_spec, phi)
        point = (r * math.cos(phi), r * math.sin(phi))
        scale = coeff_scale * max(1.0, abs(r)) ** degree
        worst = max(worst, abs(p.eval_complex(point)) / scale)
    return worst


@pytest.mark.parametrize(
    "n,d,a", [(1, 1, "1/2"), (2, 3, "1/2"), (7, 3, "1/4"), (3, 2, "0"), (5, 3, "5/2")]
)
def test_polar_samples_satisfy_implicit(n, d, a):
    assert _max_scaled_residual(spec(n, d, a)) <= 1e-9


# -- cone constant -----------------------------------------------------------------


def test_cone_constant_examples():
    assert origin_cone_constant(spec(1, 1, 1)) == Fraction(-1)
    assert origin_cone_constant(spec(1, 1, 0)) == Fraction(0)
    assert origin_cone_constant(spec(1, 3, 2)) == Fraction(-26)


def test_cone_constant_closed_examples():
    assert origin_cone_constant_closed(spec(1, 4, 1)) == pytest.approx(1.0)
    value = origin_cone_constant_closed(spec(1, 2, 0))
    assert value.real == pytest.approx(-1.0)
    assert abs(value.imag) <= 1e-12


def test_cone_constant_chebyshev_oracle():
    # The double sum telescopes to the degree-d Chebyshev polynomial at -a.
    t = sympy.symbols("t")
    for d in range(1, 8):
        for a in [Fraction(0), Fraction(1, 4), Fraction(1), Fraction(5, 2)]:
            expected = sympy.chebyshevt(d, t).subs(t, sympy.Rational(-a))
            assert origin_cone_constant(spec(1, d, a)) == Fraction(str(expected))


def test_cone_constant_sum_vs_closed_grid():
    for d in range(1, 10):
        for a in ["0", "1/4", "1/2", "1", "5/2"]:
            s = spec(1, d, a)
            exact = float(origin_cone_constant(s))
            closed = origin_cone_constant_closed(s)
            assert abs(closed.imag) <= 1e-12 * max(1.0, abs(closed))
            assert abs(exact - closed.real) <= 1e-10 * max(1.0, abs(exact))


# -- tangent cone -------------------------------------------------------------------


def test_tangent_cone_explicit_quartic():
    # n = 2, d = 1, a = 2: constant is -2, so the cone is (3x^2 + y^2)^2.
    cone = tangent_cone(spec(2, 1, 2))
    base = MultiPoly(XY, {(2, 0): 3, (0, 2): 1})
    assert cone == (base * base).primitive()


def test_tangent_cone_matches_lowest_form():
    for s in [spec(3, 1, "1/2"), spec(2, 3, "1/2"), spec(3, 2, "0"), spec(7, 3, "1")]:
        cone = tangent_cone(s)
        assert cone.total_degree == 2 * s.n
        assert cone.is_homogeneous()
        assert implicit_equation(s).lowest_form().primitive() == cone


def test_tangent_cone_rejects_odd_rose():
    with pytest.raises(ValueError):
        tangent_cone(spec(3, 1, 0))


def test_lowest_form_degree_examples():
    assert implicit_equation(spec(3, 1, "1/2")).lowest_form().total_degree == 6


# -- absolute points -----------------------------------------------------------------


def test_absolute_multiplicity_examples():
    assert absolute_point_multiplicity(spec(3, 1), 1) == 1
    assert absolute_point_multiplicity(spec(3, 1, "1/2"), Fraction(2, 3)) == 2
    assert absolute_point_multiplicity(spec(2, 3, "1/2"), 1) == 5


def test_verified_absolute_multiplicity_agrees_with_table():
    for s in [spec(3, 1), spec(2, 3, "1/2"), spec(7, 3, "1/4"), (spec(1, 1, "1/2"))]:
        assert verified_absolute_multiplicity(s, seed=7) == curve_properties(s).absolute_multiplicity


def test_absolute_multiplicity_sympy_oracle():
    # Re-derive the vanishing order with sympy end to end: homogenize the
    # implicit form, substitute the line, expand, take the lowest x0 power.
    x0, x1, x2 = sympy.symbols("x0 x1 x2")
    for s, m in [(spec(3, 1), Fraction(2, 5)), (spec(1, 1, "1/2"), Fraction(3, 4)),
                 (spec(2, 3, "1/2"), Fraction(1, 2))]:
        affine = implicit_equation(s)
        degree = affine.total_degree
        expr = 0
        for (ex, ey), coeff in affine.terms.items():
            expr += (
                sympy.Rational(coeff.re)
                * x1**ex * x2**ey * x0 ** (degree - ex - ey)
            )
        substituted = sympy.expand(
            expr.subs(x2, sympy.I * x1 + sympy.Rational(m) * x0)
        )
        poly = sympy.Poly(substituted, x0)
        low = min(k for k, c in enumerate(poly.all_coeffs()[::-1]) if c != 0)
        assert low == absolute_point_multiplicity(s, m)
        assert low == curve_properties(s).absolute_multiplicity


def test_homogeneous_round_trip():
    for s in [spec(3, 1), spec(2, 3, "1/2")]:
        h = homogeneous_implicit(s)
        assert h.is_homogeneous()
        assert h.dehomogenize("x0") == implicit_equation(s).rename_variables(("x1", "x2"))
