"""Degree-truncated tropical linear algebra: residuation, elimination, circuits."""

import itertools
import random
from fractions import Fraction

import pytest

from tropica.parsing import parse_polynomial
from tropica.polynomials import LAURENT, POLY, Polynomial
from tropica.primes import bend_ideal_member, check_admissible, geometric_prime_of_point
from tropica.sampling import random_member_polynomial, random_point
from tropica.scalars import BOTTOM, is_bottom, trop_add, trop_mul
from tropica.tropical_linear import (
    AxiomResult,
    CircuitSet,
    MembershipSample,
    TropVector,
    check_tropical_axiom,
    elimination_witness,
    monomial_window,
    truncated_tropicalization,
    vector_from_polynomial,
)
from tropica.varieties import affine_prevariety, prevariety


def P(text, n=None, mode=POLY):
    return parse_polynomial(text, mode, n)


# -- windows -----------------------------------------------------------------------


def test_window_sizes():
    assert len(monomial_window(2, POLY, 2)) == 6
    assert len(monomial_window(1, LAURENT, 2)) == 5
    assert monomial_window(2, POLY, 1).monomials == ((0, 0), (0, 1), (1, 0))


# -- span membership by residuation ---------------------------------------------------


def test_span_examples():
    from tropica.tropical_linear import span_membership

    w = monomial_window(3, POLY, 1)
    g1 = vector_from_polynomial(P("x + y", 3), w)
    g2 = vector_from_polynomial(P("x + z", 3), w)
    v = vector_from_polynomial(P("x + y + z", 3), w)
    assert span_membership(v, [g1, g2]) == [Fraction(0), Fraction(0)]
    assert span_membership(vector_from_polynomial(P("y + z", 3), w), [g1, g2]) is None
    lams = span_membership(g1, [g1, g2])
    assert lams is not None and lams[0] == Fraction(0)


def _grid_scalars(lo=-4, hi=4):
    return [BOTTOM] + [Fraction(v) for v in range(lo, hi + 1)]


def _combine(lams, gens, window):
    out = {}
    for lam, g in zip(lams, gens):
        for expo, value in g.entries:
            out[expo] = trop_add(out.get(expo, BOTTOM), trop_mul(lam, value))
    return {k: v for k, v in out.items() if not is_bottom(v)}


def test_residuation_vs_grid_brute_force():
    # entries in {-2..2} u {bottom} make every principal solution land on the
    # {-4..4} grid, so brute force over that grid is a complete oracle
    from tropica.tropical_linear import span_membership

    rng = random.Random(3)
    w = monomial_window(5, POLY, 1)  # 6 coordinates; use first 5
    coords = w.monomials[:5]
    cases = 0
    while cases < 200:
        k = rng.randint(1, 3)
        gens = []
        for _ in range(k):
            entries = {
                c: Fraction(rng.randint(-2, 2))
                for c in coords
                if rng.random() < 0.7
            }
            gens.append(TropVector.make(w, entries))
        if rng.random() < 0.5:
            v_entries = {
                c: Fraction(rng.randint(-2, 2)) for c in coords if rng.random() < 0.7
            }
        else:  # bias toward actual combinations
            lams = [rng.choice(_grid_scalars(-2, 2)) for _ in range(k)]
            v_entries = _combine(lams, gens, w)
        v = TropVector.make(w, v_entries)
        cases += 1
        fast = span_membership(v, gens)
        slow = None
        for lams in itertools.product(_grid_scalars(), repeat=k):
            if _combine(lams, gens, w) == dict(v.entries):
                slow = lams
                break
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert _combine(fast, gens, w) == dict(v.entries)


# -- elimination witness ------------------------------------------------------------------


def _point_oracle(point):
    return lambda h: h.is_zero() or h.to_polynomial().vanishes_at(point)


def test_elimination_low_term_example():
    # members of the bend ideal at the origin; eliminating x keeps y plus the
    # low data, with the tie dropped to the second level
    from tropica.tropical_linear import _point_tie_values

    w = monomial_window(2, POLY, 2)
    point = (Fraction(0), Fraction(0))
    f = vector_from_polynomial(P("x + y + -1", 2), w)
    g = vector_from_polynomial(P("x + y + -2", 2), w)
    oracle = _point_oracle(point)
    h = elimination_witness(f, g, (1, 0), oracle, _point_tie_values(f, g, (1, 0), point))
    assert h is not None
    assert h.get((1, 0)) is not None and is_bottom(h.get((1, 0)))
    assert oracle(h)
    assert dict(h.entries) == {(0, 0): Fraction(-1), (0, 1): Fraction(-1)}


def test_elimination_counterexample_for_degree_prime():
    w = monomial_window(2, LAURENT, 2)
    matrix = check_admissible([[0, 1, 1]], 2)
    oracle = lambda h: bend_ideal_member(matrix, h.to_polynomial())
    f = vector_from_polynomial(P("x + y + x^-1", 2, LAURENT), w)
    g = vector_from_polynomial(P("x + y + x^-2", 2, LAURENT), w)
    assert oracle(f) and oracle(g)
    assert elimination_witness(f, g, (1, 0), oracle) is None


def test_elimination_identical_inputs():
    w = monomial_window(2, POLY, 2)
    point = (Fraction(0), Fraction(0))
    f = vector_from_polynomial(P("x + y + 0", 2), w)
    h = elimination_witness(f, f, (1, 0), _point_oracle(point))
    # first candidate: delete x from f, which still vanishes at the origin
    assert h is not None and dict(h.entries) == {(0, 0): Fraction(0), (0, 1): Fraction(0)}


def test_elimination_precondition():
    w = monomial_window(2, POLY, 2)
    f = vector_from_polynomial(P("x + y", 2), w)
    g = vector_from_polynomial(P("y + 0", 2), w)
    with pytest.raises(ValueError):
        elimination_witness(f, g, (1, 0), lambda h: True)


# -- the axiom check ------------------------------------------------------------------------


def _geometric_samples(rng, point, window, count):
    samples, seen = [], set()
    while len(samples) < count:
        poly = random_member_polynomial(rng, point, POLY, max_extra=3, max_deg=window.degree)
        if poly.degree() <= window.degree and poly not in seen:
            seen.add(poly)
            samples.append(vector_from_polynomial(poly, window))
    return tuple(samples)


def test_axiom_passes_for_geometric_primes():
    rng = random.Random(7)
    w = monomial_window(2, POLY, 2)
    for _ in range(6):
        point = random_point(rng, 2, -2, 2, 2)
        samples = _geometric_samples(rng, point, w, 10)
        result = check_tropical_axiom(MembershipSample(samples, _point_oracle(point), point))
        assert result.passed, result.counterexample


def test_axiom_fails_for_degree_prime():
    w = monomial_window(2, LAURENT, 2)
    matrix = check_admissible([[0, 1, 1]], 2)
    oracle = lambda h: bend_ideal_member(matrix, h.to_polynomial())
    f = vector_from_polynomial(P("x + y + x^-1", 2, LAURENT), w)
    g = vector_from_polynomial(P("x + y + x^-2", 2, LAURENT), w)
    result = check_tropical_axiom(MembershipSample((f, g), oracle, None))
    assert not result.passed
    cf, cg, cu = result.counterexample
    assert {cf, cg} <= {f, g}
    assert cf.get(cu) == cg.get(cu)


def test_axiom_passes_for_realized_circuits():
    circuits = truncated_tropicalization([{(1, 0): 1, (0, 1): -1}], 2, 2)
    result = check_tropical_axiom(circuits)
    assert result.passed


# -- tropicalization of rational ideals -------------------------------------------------------


def test_single_circuit_at_degree_one():
    circuits = truncated_tropicalization([{(1, 0): 1, (0, 1): -1}], 2, 1)
    assert [sorted(s) for s in circuits.supports()] == [[(0, 1), (1, 0)]]


def _realization_supports(degree):
    """Independent oracle: supports of (x - y) * q for q over a coefficient grid.

    For this principal ideal the support pattern of the product depends only
    on which sign region the q-coefficients fall in, and every region meets
    the grid, so the enumeration is exhaustive at this scale.
    """
    window = monomial_window(2, POLY, degree)
    q_monos = [m for m in window.monomials if sum(m) <= degree - 1]
    grid = [Fraction(v) for v in range(-2, 3)]
    supports = set()
    for values in itertools.product(grid, repeat=len(q_monos)):
        coeffs = {}
        for m, v in zip(q_monos, values):
            if v == 0:
                continue
            for shift, sign in (((1, 0), 1), ((0, 1), -1)):
                key = tuple(a + b for a, b in zip(m, shift))
                coeffs[key] = coeffs.get(key, Fraction(0)) + sign * v
        clean = frozenset(k for k, v in coeffs.items() if v != 0)
        if clean:
            supports.add(clean)
    minimal = {
        s for s in supports if not any(t < s for t in supports)
    }
    return minimal


def test_degree_two_circuits_match_realization_oracle():
    expected = _realization_supports(2)
    circuits = truncated_tropicalization([{(1, 0): 1, (0, 1): -1}], 2, 2)
    assert set(circuits.supports()) == expected
    assert set(map(tuple, map(sorted, expected))) == {
        ((0, 1), (1, 0)),
        ((1, 1), (2, 0)),
        ((0, 2), (1, 1)),
        ((0, 2), (2, 0)),
    }


def test_unit_ideal_flagged_trivial():
    circuits = truncated_tropicalization([{(0, 0): 1}], 2, 1)
    assert circuits.trivial
    assert all(len(s) == 1 for s in circuits.supports())


def test_degree_cap_enforced():
    with pytest.raises(ValueError):
        truncated_tropicalization([{(1, 0): 1, (0, 1): -1}], 2, 5)
    with pytest.raises(ValueError):
        truncated_tropicalization([{(3, 0): 1}], 2, 2)


def test_realizable_non_primeness_verdicts():
    # the product (x+y+1)(x+y+xy) lies in the degree-3 slice of trop((x-y))
    # while neither factor does, so the tropicalized ideal is not prime
    circuits = truncated_tropicalization([{(1, 0): 1, (0, 1): -1}], 2, 3)
    product = P("x + y + 0", 2) * P("x + y + x*y", 2)
    as_vector = lambda f: vector_from_polynomial(
        f.collapse_coefficients(), circuits.window
    )
    assert circuits.member(as_vector(product))
    assert not circuits.member(as_vector(P("x + y + 0", 2)))
    assert not circuits.member(as_vector(P("x + y + x*y", 2)))


# -- membership equivalence at desk scale ------------------------------------------------------


def test_bend_ideal_matches_pointwise_vanishing_on_grid():
    # every degree-<=2 polynomial over the coefficient grid {-1,0,1,bottom}:
    # membership in the bend ideal of a geometric prime is exactly vanishing
    point = (Fraction(1, 2), Fraction(-1))
    matrix = geometric_prime_of_point(point)
    window = monomial_window(2, POLY, 2)
    grid = [BOTTOM, Fraction(-1), Fraction(0), Fraction(1)]
    checked = 0
    for values in itertools.product(grid, repeat=len(window)):
        f = Polynomial(
            {m: v for m, v in zip(window.monomials, values) if not is_bottom(v)}, 2, POLY
        )
        expected = True if f.is_zero() else f.vanishes_at(point)
        assert bend_ideal_member(matrix, f) == expected
        checked += 1
    assert checked == 4**6


def test_affine_real_stratum_matches_laurent_prevariety():
    # the R^n points of the affine extension are exactly the R^n prevariety
    for texts in (["x + y"], ["x + 1", "y + 2"], ["x + y + 0"]):
        poly_gens = [P(t, 2, POLY) for t in texts]
        affine = affine_prevariety(poly_gens)
        flat = prevariety(poly_gens)
        real_cells = {c.key() for c in affine.cells if c.stratum == ()}
        assert real_cells == {c.key() for c in flat.cells}
