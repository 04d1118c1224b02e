"""Quadratic orders: lattice ideals, form reduction, and class groups."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sgclass import domains as dom
from sgclass.errors import CapabilityError, ParseError

Q = dom.CoefficientDomain.rationals()
Z = dom.CoefficientDomain.integers()
D5 = dom.CoefficientDomain.z_sqrt(-5)
D3 = dom.CoefficientDomain.z_sqrt(-3)
O3 = dom.CoefficientDomain.maximal_order(-3)
O23 = dom.CoefficientDomain.maximal_order(-23)

DISC_STRUCTURES = {
    -4: "trivial",
    -20: "Z/2Z",
    -23: "Z/3Z",
    -24: "Z/2Z",
    -84: "abelian of order 4 with exponent 2",
}


def test_domain_texts_and_discriminants():
    assert Q.text() == "Q" and Z.text() == "Z"
    assert D5.text() == "Z[sqrt(-5)]" and D5.discriminant == -20
    assert D3.text() == "Z[sqrt(-3)]" and D3.discriminant == -12
    assert O3.text() == "O[sqrt(-3)]" and O3.discriminant == -3
    assert O23.discriminant == -23


def test_maximality_bookkeeping():
    assert D5.maximal and not D3.maximal
    assert O3.maximal and O3.half_basis
    assert not D5.half_basis
    assert Q.is_integrally_closed() and Z.is_integrally_closed()
    assert D5.is_integrally_closed() and not D3.is_integrally_closed()


def test_square_root_argument_validation():
    with pytest.raises(ValueError):
        dom.CoefficientDomain.z_sqrt(-4)
    with pytest.raises(ValueError):
        dom.CoefficientDomain.z_sqrt(5)
    with pytest.raises(ValueError):
        dom.CoefficientDomain.maximal_order(-4)


def test_integrality_of_elements():
    assert D5.is_integral_element(D5.element(1, 1))
    assert not D5.is_integral_element(D5.element(Fraction(1, 2), 0))
    assert O3.is_integral_element(O3.element(0, 1))
    assert not O3.is_integral_element(O3.element(0, Fraction(1, 2)))


@given(st.sampled_from((D5, D3, O3, O23)),
       st.integers(-6, 6), st.integers(-6, 6),
       st.integers(-6, 6), st.integers(-6, 6))
def test_norm_is_multiplicative(domain, x1, y1, x2, y2):
    u = domain.element(x1, y1)
    v = domain.element(x2, y2)
    assert (u * v).norm() == u.norm() * v.norm()
    assert (u * v).conjugate() == u.conjugate() * v.conjugate()


def test_element_arithmetic_uses_the_trace_rule():
    w = D5.element(0, 1)
    assert w * w == D5.element(-5, 0)
    half = O3.element(0, 1)
    assert half * half == half - O3.element(1, 0)
    assert half.norm() == 1


def test_canonical_triple_invariants():
    samples = [
        (D5, [2, D5.element(1, 1)]),
        (D5, [D5.element(3, 1), D5.element(0, 2)]),
        (D3, [2, D3.element(1, 1)]),
        (O23, [3, O23.element(1, 1)]),
        (D5, [D5.element(Fraction(1, 2), 0), D5.element(0, Fraction(1, 3))]),
    ]
    for domain, gens in samples:
        i = dom.ideal_from_generators(domain, gens)
        t, n = domain.omega_trace, domain.omega_norm
        assert i.a > 0 and i.c > 0
        assert i.a % i.c == 0
        assert 0 <= i.b < i.a
        assert (i.b * i.b + t * i.b * i.c + n * i.c * i.c) % (i.a * i.c) == 0


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-4, 4))
@settings(max_examples=50)
def test_ideal_contains_every_lattice_combination(p, q, r, s):
    gens = [D5.element(p, q), D5.element(r, s)]
    if all(g == D5.element(0, 0) for g in gens):
        return
    i = dom.ideal_from_generators(D5, gens)
    basis = i.basis_elements()
    for g in gens:
        assert i.contains(g)
        assert i.contains(g * D5.element(0, 1))
    for m in range(-3, 4):
        for n in range(-3, 4):
            assert i.contains(basis[0] * m + basis[1] * n)


def test_prime_over_two_in_the_nonmaximal_order():
    k = dom.ideal_from_generators(D3, [2, D3.element(1, 1)])
    assert (k.scale, k.a, k.b, k.c) == (1, 2, 1, 1)
    assert k.norm() == 2
    square = dom.mul(k, k)
    assert (square.scale, square.a, square.b, square.c) == (1, 4, 2, 2)
    assert square == dom.mul(dom.ideal_from_generators(D3, [2]), k)
    assert square != dom.ideal_from_generators(D3, [2])
    assert dom.mul(k, dom.inverse(k)) == k
    assert dom.inverse(k) == dom.CoeffIdeal(domain=D3, gen=None,
                                            scale=Fraction(1, 2), a=2, b=1, c=1)
    assert dom.is_divisorial(k)
    assert not dom.is_t_invertible(k)
    assert dom.is_principal(k) is None


def test_same_generators_in_the_maximal_order_are_trivial():
    k = dom.ideal_from_generators(O3, [2, O3.element(1, 1)])
    assert k == dom.unit_ideal(O3)
    assert dom.is_principal(k) is not None


def test_ramified_prime_over_two_in_z_sqrt_minus_five():
    i = dom.ideal_from_generators(D5, [2, D5.element(1, 1)])
    assert i.norm() == 2
    assert dom.mul(i, i) == dom.ideal_from_generators(D5, [2])
    assert dom.mul(i, dom.inverse(i)) == dom.unit_ideal(D5)
    assert dom.is_divisorial(i)
    assert dom.is_t_invertible(i)
    assert dom.is_principal(i) is None
    assert dom.v_closure(i) == i


def test_principal_recognition_returns_a_generator():
    g = D5.element(3, 1)
    i = dom.ideal_from_generators(D5, [g])
    found = dom.is_principal(i)
    assert found is not None
    assert dom.ideal_from_generators(D5, [found]) == i


def test_fractional_scale_keeps_integer_content_in_the_triple():
    two = dom.ideal_from_generators(D5, [2])
    assert (two.scale, two.a, two.b, two.c) == (1, 2, 0, 2)
    half = dom.ideal_from_generators(D5, [Fraction(1, 2)])
    assert (half.scale, half.a, half.b, half.c) == (Fraction(1, 2), 1, 0, 1)


def test_colon_and_v_on_rational_ideals():
    i = dom.ideal_from_generators(Z, [4])
    j = dom.ideal_from_generators(Z, [6])
    assert dom.colon(i, j).gen == Fraction(2, 3)
    assert dom.inverse(i).gen == Fraction(1, 4)
    assert dom.v_closure(i) == i
    assert dom.mul(i, j).gen == 24
    assert dom.add(i, j).gen == 2
    assert dom.power(j, 2).gen == 36


def test_form_reduction_properties():
    f = dom.QuadForm(15, 47, 37)
    assert f.discriminant == -11
    r = f.reduced()
    assert r == dom.QuadForm(1, 1, 3)
    assert r.is_reduced and r.discriminant == -11
    assert r.reduced() == r


def test_reduced_forms_frozen_tables():
    assert [f.text() for f in dom.reduced_forms(-20)] == ["(1,0,5)", "(2,2,3)"]
    assert [f.text() for f in dom.reduced_forms(-23)] == \
        ["(1,1,6)", "(2,-1,3)", "(2,1,3)"]
    assert [f.text() for f in dom.reduced_forms(-84)] == \
        ["(1,0,21)", "(2,2,11)", "(3,0,7)", "(5,4,5)"]
    assert [f.text() for f in dom.reduced_forms(-4)] == ["(1,0,1)"]


def test_composition_in_the_cubic_class_group():
    f = dom.QuadForm(2, 1, 3)
    assert dom.compose(f, f) == dom.QuadForm(2, -1, 3)
    assert dom.form_power(f, 3) == dom.identity_form(-23)
    assert dom.compose(f, f.inverse()) == dom.identity_form(-23)


def test_composition_identity_and_inverse_laws():
    for disc in DISC_STRUCTURES:
        e = dom.identity_form(disc)
        for f in dom.reduced_forms(disc):
            assert dom.compose(f, e) == f
            assert dom.compose(e, f) == f
            assert dom.compose(f, f.inverse()) == e


def test_form_ideal_round_trip():
    for disc in DISC_STRUCTURES:
        domain = dom.domain_for_discriminant(disc)
        for f in dom.reduced_forms(disc):
            assert dom.ideal_to_form(dom.form_to_ideal(domain, f)) == f


def test_composition_matches_ideal_multiplication():
    domain = dom.domain_for_discriminant(-84)
    forms = dom.reduced_forms(-84)
    for f in forms:
        for g in forms:
            via_ideals = dom.ideal_to_form(
                dom.mul(dom.form_to_ideal(domain, f),
                        dom.form_to_ideal(domain, g))).reduced()
            assert dom.compose(f, g) == via_ideals


def test_class_group_structures():
    for disc, structure in DISC_STRUCTURES.items():
        group = dom.class_group(dom.domain_for_discriminant(disc))
        assert group.structure() == structure
        assert dom.describe_class_group(dom.domain_for_discriminant(disc)) == \
            structure


def test_class_group_table_is_a_group():
    group = dom.class_group(dom.domain_for_discriminant(-84))
    n = len(group.forms)
    table = group.table
    for i in range(n):
        assert sorted(table[i]) == list(range(n))
        assert sorted(row[i] for row in table) == list(range(n))
        for j in range(n):
            assert table[i][j] == table[j][i]
    assert all(group.element_order(i) in (1, 2) for i in range(n))


def test_class_group_capability_limits():
    with pytest.raises(CapabilityError):
        dom.class_group(D3)
    with pytest.raises(CapabilityError):
        dom.class_group(Z)
    with pytest.raises(CapabilityError):
        dom.domain_for_discriminant(-12)
    with pytest.raises(ValueError):
        dom.domain_for_discriminant(5)


def test_parse_domain():
    assert dom.parse_domain("Q") == Q
    assert dom.parse_domain("Z") == Z
    assert dom.parse_domain("Z[sqrt(-5)]") == D5
    assert dom.parse_domain("O[sqrt(-3)]") == O3
    with pytest.raises(ParseError):
        dom.parse_domain("Z[sqrt(7)]")
    with pytest.raises(ParseError):
        dom.parse_domain("fields of fractions")
