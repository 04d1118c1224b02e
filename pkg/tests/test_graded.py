"""Monoid rings over a coefficient domain: contents, graded ideals, and the
coefficient/exponent decomposition of homogeneous classes."""

from fractions import Fraction
from math import gcd

import pytest

from sgclass import domains as dom
from sgclass import ideals as mid
from sgclass.errors import CapabilityError, ExtractionError, ParseError
from sgclass.graded import (
    GradedElement,
    IdealPair,
    content,
    content_of_ideal,
    decompose_class,
    dedekind_mertens_exponent,
    extract_pair,
    gauss_check,
    graded_element,
    homogeneous_class_is_trivial,
    homogeneous_ideal,
    homogeneous_membership,
    in_monoid_ring,
    inverse_content_product_check,
    lift_coefficient_class,
    monomial,
    multiply_ideals,
    pair_colon,
    pair_contains,
    pair_is_principal,
    pair_is_t_invertible,
    pair_mul,
    pair_t,
    pair_to_homogeneous,
    pair_v,
    parse_element,
    project_to_monoid_class,
    section_from_monoid_class,
    semigroup_ring_integrally_closed,
    transfer_criterion_report,
    unit_pair,
)
from sgclass.semigroups import from_generators, parse_monoid

Z = dom.CoefficientDomain.integers()
Q = dom.CoefficientDomain.rationals()
D5 = dom.CoefficientDomain.z_sqrt(-5)
D3 = dom.CoefficientDomain.z_sqrt(-3)
S23 = from_generators([2, 3])
S1 = from_generators([1])


def test_parse_and_format_round_trip():
    x = parse_element(Z, S23, "2+3*X^2")
    assert x.terms == ((0, 2), (2, 3))
    assert x.text() == "2+3*X^2"
    y = parse_element(Q, S23, "1/2-X^3+2*X^5")
    assert y.text() == "1/2-X^3+2*X^5"
    w = parse_element(D5, S23, "(1+w)*X^2-2")
    assert w.text() == "-2+(1+w)*X^2"
    assert parse_element(Z, S23, "0").terms == ()


def test_parse_rejects_malformed_text():
    for text in ("2+", "X^", "1//2", "q*X", "(2+3", ""):
        with pytest.raises(ParseError):
            parse_element(Z, S23, text)


def test_ring_arithmetic_on_fixed_elements():
    x = parse_element(Z, S23, "2+3*X^2")
    y = parse_element(Z, S23, "X^3-1")
    assert (x + y).text() == "1+3*X^2+X^3"
    assert (x * y).text() == "-2-3*X^2+2*X^3+3*X^5"
    assert (x - x).terms == ()
    assert (x * y) * y == x * (y * y)


def test_negative_exponents_model_the_group_ring():
    x = graded_element(Z, S1, [(-2, 1), (1, 3)])
    y = graded_element(Z, S1, [(2, 1)])
    assert (x * y).terms == ((0, 1), (3, 3))
    assert in_monoid_ring(y)
    assert not in_monoid_ring(x)


def test_monoid_ring_membership_depends_on_domain_and_exponents():
    assert in_monoid_ring(parse_element(Q, S23, "1/2*X^2"))
    assert not in_monoid_ring(parse_element(Q, S23, "1/2*X"))
    assert not in_monoid_ring(parse_element(Z, S23, "1/2*X^2"))
    assert in_monoid_ring(parse_element(Z, S23, "5+X^2"))


def test_content_fixtures():
    x = parse_element(Z, S23, "2+3*X^2")
    assert content(x) == dom.unit_ideal(Z)
    assert content(parse_element(Z, S23, "4+6*X^3")).gen == 2
    w = parse_element(D5, S23, "2+(1+w)*X^2")
    assert content(w) == dom.ideal_from_generators(D5, [2, D5.element(1, 1)])
    assert content(parse_element(Q, S23, "2/3+5*X^2")) == dom.unit_ideal(Q)
    with pytest.raises(ValueError):
        content(parse_element(Z, S23, "0"))


def model_component_membership(ideal, beta, coeff):
    """Coefficient-side membership via integer gcd, independent of lattices."""
    active = [a for (a, alpha) in ideal.gens if ideal.monoid.contains(beta - alpha)]
    if not active:
        return coeff == 0
    g = 0
    for a in active:
        g = gcd(g, int(a))
    return int(coeff) % g == 0


def test_homogeneous_membership_fixture():
    i = content_of_ideal([parse_element(Z, S23, "2+3*X^2")])
    assert not homogeneous_membership(i, parse_element(Z, S23, "X^2+X^3"))
    assert homogeneous_membership(i, parse_element(Z, S23, "2*X^3"))
    assert homogeneous_membership(i, parse_element(Z, S23, "X^2+2*X^3"))
    assert not homogeneous_membership(i, parse_element(Z, S23, "X^3"))
    assert homogeneous_membership(i, parse_element(Z, S23, "0"))


def test_homogeneous_membership_matches_gcd_model():
    i = homogeneous_ideal(Z, S23, [(4, 2), (6, 3), (10, 4)])
    for beta in range(0, 10):
        for coeff in (-12, -5, -2, 1, 2, 3, 4, 5, 6, 8, 12, 20):
            elem = monomial(Z, S23, beta, coeff)
            assert homogeneous_membership(i, elem) == \
                model_component_membership(i, beta, coeff)


def test_content_of_a_principal_homogeneous_product():
    h = homogeneous_ideal(Z, S23, [(1, 2)])
    i = content_of_ideal([parse_element(Z, S23, "2+3*X^2")])
    lhs = content_of_ideal([monomial(Z, S23, 2) * parse_element(Z, S23, "2+3*X^2")])
    rhs = multiply_ideals(h, i)
    for beta in range(0, 10):
        for coeff in (-6, -3, -2, 1, 2, 3, 4, 6, 9):
            probe = monomial(Z, S23, beta, coeff)
            assert homogeneous_membership(lhs, probe) == \
                homogeneous_membership(rhs, probe)


def test_ideal_products_multiply_generators():
    i = homogeneous_ideal(Z, S23, [(2, 2)])
    j = homogeneous_ideal(Z, S23, [(3, 3), (5, 4)])
    p = multiply_ideals(i, j)
    assert homogeneous_membership(p, parse_element(Z, S23, "6*X^5"))
    assert homogeneous_membership(p, parse_element(Z, S23, "10*X^6"))
    assert not homogeneous_membership(p, parse_element(Z, S23, "3*X^5"))


def test_pair_membership_worked_example():
    y0 = mid.ideal_from_generators(S23, [2, 3])
    two_pair = IdealPair(dom.ideal_from_generators(Z, [2]), y0)
    assert pair_contains(two_pair, parse_element(Z, S23, "2*X^2"))
    assert not pair_contains(two_pair, parse_element(Z, S23, "2*X"))
    assert not pair_contains(two_pair, parse_element(Z, S23, "X^2"))
    assert pair_contains(two_pair, parse_element(Z, S23, "0"))
    up = unit_pair(Z, S23)
    assert pair_contains(up, parse_element(Z, S23, "X^2"))
    assert pair_mul(two_pair, up) == two_pair


def test_pair_colon_splits_componentwise():
    y0 = mid.ideal_from_generators(S23, [2, 3])
    two_pair = IdealPair(dom.ideal_from_generators(Z, [2]), y0)
    q = pair_colon(unit_pair(Z, S23), two_pair)
    assert q.coeff.gen == Fraction(1, 2)
    assert q.exps == mid.inverse(y0)
    assert q.exps.min_generators == (0, 1)


def test_pair_closures_are_componentwise():
    y0 = mid.ideal_from_generators(S23, [2, 3])
    two_pair = IdealPair(dom.ideal_from_generators(Z, [2]), y0)
    assert pair_v(two_pair) == IdealPair(dom.v_closure(two_pair.coeff),
                                         mid.v_closure(y0))
    assert pair_t(two_pair).exps == mid.t_closure(y0)


def test_pair_invertibility_and_principality():
    p5 = IdealPair(dom.ideal_from_generators(D5, [2, D5.element(1, 1)]),
                   mid.unit_ideal(S1))
    assert pair_is_t_invertible(p5)
    assert not pair_is_principal(p5)
    shift_pair = IdealPair(dom.ideal_from_generators(Z, [3]),
                           mid.ideal_from_generators(S23, [4]))
    assert pair_is_t_invertible(shift_pair)
    assert pair_is_principal(shift_pair)
    y0_pair = IdealPair(dom.unit_ideal(Z),
                        mid.ideal_from_generators(S23, [2, 3]))
    assert not pair_is_t_invertible(y0_pair)


def test_extraction_recovers_clean_pairs():
    y0 = mid.ideal_from_generators(S23, [2, 3])
    two_pair = IdealPair(dom.ideal_from_generators(Z, [2]), y0)
    assert extract_pair(pair_to_homogeneous(two_pair),
                        assume_divisorial=True) == two_pair
    single = homogeneous_ideal(D5, S23, [(D5.element(1, 1), 3)])
    sp = extract_pair(single, assume_divisorial=True)
    assert sp.exps.min_generators == (3,)
    assert sp.coeff.contains(D5.element(1, 1))


def test_extraction_reports_a_mixed_ideal():
    bad = homogeneous_ideal(Z, S23, [(2, 2), (3, 3)])
    bp = extract_pair(bad)
    assert bp.coeff == dom.unit_ideal(Z)
    assert bp.exps == mid.ideal_from_generators(S23, [2, 3])
    with pytest.raises(ExtractionError):
        extract_pair(bad, assume_divisorial=True)
    assert pair_contains(bp, parse_element(Z, S23, "2*X^3"))
    assert not homogeneous_membership(bad, parse_element(Z, S23, "2*X^3"))


def test_decomposition_splits_coefficient_and_monoid_parts():
    p5 = IdealPair(dom.ideal_from_generators(D5, [2, D5.element(1, 1)]),
                   mid.unit_ideal(S1))
    cls5 = decompose_class(p5)
    assert cls5.coeff_form == dom.QuadForm(2, 2, 3)
    assert mid.class_is_trivial(cls5.monoid_class)
    assert not homogeneous_class_is_trivial(cls5)
    assert dom.compose(cls5.coeff_form, cls5.coeff_form) == dom.identity_form(-20)
    assert lift_coefficient_class(p5.coeff, S1) == cls5
    assert project_to_monoid_class(cls5) == cls5.monoid_class


def test_monoid_section_round_trip():
    m = mid.class_reduce(mid.ideal_from_generators(S23, [2, 3]))
    assert project_to_monoid_class(section_from_monoid_class(m)) == m
    assert section_from_monoid_class(m).coeff_form is None


def test_trivial_class_markers():
    triv = decompose_class(unit_pair(Z, S23))
    assert triv.coeff_form is None
    assert homogeneous_class_is_trivial(triv)
    princ = lift_coefficient_class(
        dom.ideal_from_generators(D5, [D5.element(1, 1)]), S1)
    assert princ.coeff_form is None
    assert homogeneous_class_is_trivial(princ)


def test_decomposition_capability_limits():
    y0_pair = IdealPair(dom.unit_ideal(Z),
                        mid.ideal_from_generators(S23, [2, 3]))
    with pytest.raises(CapabilityError):
        decompose_class(y0_pair)
    k = dom.ideal_from_generators(D3, [2, D3.element(1, 1)])
    with pytest.raises(CapabilityError):
        lift_coefficient_class(k, S1)


def test_content_exponent_vanishes_over_gcd_domains():
    for fx, fy in [("2+3*X^2", "5+7*X^3"), ("4+6*X^3", "10+15*X^2")]:
        x = parse_element(Z, S1, fx)
        y = parse_element(Z, S1, fy)
        assert dedekind_mertens_exponent(x, y) == 0
        assert gauss_check(x, y)
    q = parse_element(Q, S23, "1/2+X^2")
    assert dedekind_mertens_exponent(q, q) == 0
    assert gauss_check(q, q)


def test_content_exponent_frozen_quadratic_fixture():
    x = graded_element(D3, S1, [(0, D3.element(1, 1)), (1, D3.element(1, -1))])
    y = graded_element(D3, S1, [(0, D3.element(1, -1)), (1, D3.element(1, 1))])
    prod = x * y
    assert prod.text() == "4-4*X+4*X^2"
    assert content(prod) == dom.ideal_from_generators(D3, [4])
    k = dom.ideal_from_generators(D3, [2, D3.element(1, 1)])
    assert content(x) == k and content(y) == k
    assert not gauss_check(x, y)
    assert dedekind_mertens_exponent(x, y) == 1


def test_content_exponent_respects_the_term_cap():
    x = graded_element(D3, S1, [(0, D3.element(1, 1)), (1, D3.element(1, -1))])
    for other_terms in ([(0, D3.element(2, 0))],
                        [(0, D3.element(1, 1)), (2, D3.element(3, -1))],
                        [(0, D3.element(1, -1)), (1, D3.element(0, 2)),
                         (3, D3.element(1, 1))]):
        y = graded_element(D3, S1, other_terms)
        assert dedekind_mertens_exponent(x, y) <= len(y.terms) - 1


def test_content_exponent_rejects_zero():
    x = parse_element(Z, S1, "1+X")
    with pytest.raises(ValueError):
        dedekind_mertens_exponent(x, parse_element(Z, S1, "0"))


def test_inverse_content_product_reports():
    rep = inverse_content_product_check(parse_element(Z, S23, "2+3*X^2"),
                                        samples=100, seed=7)
    assert rep["failures"] == 0 and rep["passes"] > 0
    rep2 = inverse_content_product_check(parse_element(D5, S23, "2+(1+w)*X^2"),
                                         samples=60, seed=3)
    assert rep2["failures"] == 0
    rep3 = inverse_content_product_check(monomial(Z, S23, 3, 5),
                                         samples=30, seed=1)
    assert rep3["failures"] == 0


def test_semigroup_ring_integral_closure():
    assert semigroup_ring_integrally_closed(Z, S1)
    assert not semigroup_ring_integrally_closed(Z, S23)
    assert not semigroup_ring_integrally_closed(D3, S1)
    assert semigroup_ring_integrally_closed(D5, S1)


def test_transfer_criterion_success_over_the_power_cone():
    report = transfer_criterion_report(D5, parse_monoid("p^inf:2"), 12)
    assert all(c["holds"] for c in report["conditions"])
    assert report["conclusion"] == \
        "class group of the monoid ring equals the coefficient class group: Z/2Z"


def test_transfer_criterion_success_over_the_whole_line():
    report = transfer_criterion_report(Z, parse_monoid("1"), 12)
    assert all(c["holds"] for c in report["conditions"])
    assert report["conclusion"].endswith("trivial")


def test_transfer_criterion_failure_modes():
    report = transfer_criterion_report(D3, parse_monoid("p^inf:2"), 12)
    assert report["conclusion"] == \
        "criterion fails: coefficient domain integrally closed"
    report2 = transfer_criterion_report(Q, parse_monoid("2,3"), 12)
    assert report2["conclusion"] == \
        "criterion fails: monoid integrally closed"
    assert [c["holds"] for c in report2["conditions"]].count(False) >= 1
    assert report2["conditions"][0]["holds"]
