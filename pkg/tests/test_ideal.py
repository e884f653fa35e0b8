import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strategies import configurations
from toricirc import circuits, config, ideal
from toricirc.errors import ParseError
from toricirc.ideal import Binomial, MonomialOrder, buchberger, parse_binomial, toric_groebner

ORDERS = [
    MonomialOrder("graded-revlex"),
    MonomialOrder("lex"),
    MonomialOrder("graded-lex"),
    MonomialOrder("graded-revlex", (3, 2, 1, 0)),
]


def four_cycle():
    return config.new_configuration([[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])


def test_binomial_grammar():
    b = parse_binomial("x3*x4*x6*x9 - x5^2*x7*x8", 9)
    assert b.plus == (0, 0, 1, 1, 0, 1, 0, 0, 1)
    assert b.minus == (0, 0, 0, 0, 2, 0, 1, 1, 0)
    assert str(b) == "x3*x4*x6*x9 - x5^2*x7*x8"
    assert parse_binomial(str(b), 9) == b
    assert parse_binomial(" x1 *x2  -  1", 2) == Binomial((1, 1), (0, 0))


@pytest.mark.parametrize("text", ["x1 - x1", "x1 + x2", "x0 - x1", "x3 - x1", "y1 - x2", "x1 - x2 - x1"])
def test_binomial_grammar_errors(text):
    with pytest.raises(ParseError):
        parse_binomial(text, 2)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6).filter(any))
def test_binomial_round_trip(v):
    b = Binomial.from_vector(v)
    assert parse_binomial(str(b), len(v)) == b
    assert b.vector == tuple(v)


def test_orders():
    grevlex = MonomialOrder("graded-revlex")
    lex = MonomialOrder("lex")
    # x1*x3 against x2^2: lex prefers x1, grevlex looks at the last variable
    a, b = (1, 0, 1), (0, 2, 0)
    assert lex.key(a) > lex.key(b)
    assert grevlex.key(b) > grevlex.key(a)
    assert MonomialOrder.lex_from([2], 3).key((0, 0, 1)) > MonomialOrder.lex_from([2], 3).key((5, 5, 0))
    w = MonomialOrder("weight-then-tiebreak", weights=(0, 0, 1))
    assert w.key((0, 0, 1)) > w.key((3, 3, 0))
    with pytest.raises(ValueError):
        MonomialOrder("weight-then-tiebreak")
    with pytest.raises(ValueError):
        MonomialOrder("sideways")


def test_four_cycle_gb():
    gb = toric_groebner(four_cycle())
    assert [str(b) for b in gb.elements] == ["x1*x3 - x2*x4"]


def test_veronese_2_3_gb():
    # graded revlex: a monomial containing the last variable loses
    gb = toric_groebner(config.veronese(2, 3))
    assert sorted(str(b) for b in gb.elements) == ["x2*x3 - x1*x4", "x2^2 - x1*x3", "x3^2 - x2*x4"]


def test_buchberger_reduces_and_saturation_needed():
    # <x1 x4 - x2 x3, x1 x3 - x2^2> is not saturated; x2 x4 - x3^2 is missing
    g = [parse_binomial("x1*x4 - x2*x3", 4), parse_binomial("x1*x3 - x2^2", 4)]
    gb = buchberger(g, n=4)
    assert not gb.contains(parse_binomial("x2*x4 - x3^2", 4))
    sat = ideal.saturate_variable(g, 0, 4)
    assert buchberger(sat, n=4).contains(parse_binomial("x2*x4 - x3^2", 4))


def _check_kernel_box(c, gb, bound=2):
    for v in oracles.kernel_box_vectors(c.matrix, bound):
        b = Binomial.from_vector(v)
        assert gb.reduce_monomial(b.plus) == gb.reduce_monomial(b.minus), str(b)


@given(configurations(max_d=3, max_n=5))
def test_toric_gb_reduces_every_small_kernel_vector(c):
    _check_kernel_box(c, toric_groebner(c))


@given(configurations(max_d=3, max_n=5), st.sampled_from(ORDERS[:3]))
def test_toric_gb_is_reduced_and_order_independent(c, order):
    gb = toric_groebner(c, order)
    ref = toric_groebner(c)
    assert ideal.same_ideal(gb, ref)
    leads = [b.plus for b in gb.elements]
    for b in gb.elements:
        assert order.key(b.plus) > order.key(b.minus)
        assert b.is_pure()
        # reduced: no other lead divides either monomial
        for m in leads:
            if m == b.plus:
                continue
            assert not all(x <= y for x, y in zip(m, b.plus))
            assert not all(x <= y for x, y in zip(m, b.minus))


@given(configurations(max_d=3, max_n=5))
def test_toric_gb_elements_lie_in_kernel(c):
    for b in toric_groebner(c).elements:
        assert c.degree_of(b.plus) == c.degree_of(b.minus)


def test_gb_recomputation_agrees_with_buchberger():
    c = config.veronese(3, 2)
    gb = toric_groebner(c)
    again = buchberger(gb.elements, gb.order, c.n)
    assert set(again.elements) == set(gb.elements)


def test_quadratic_binomials_v23():
    qs = ideal.quadratic_binomials(config.veronese(2, 3))
    assert sorted(str(q) for q in qs) == ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]


def test_normal_form_and_membership():
    gb = toric_groebner(four_cycle())
    assert ideal.normal_form(parse_binomial("x1^2*x3^2 - x2^2*x4^2", 4), gb) is None
    assert ideal.normal_form(parse_binomial("x1 - x2", 4), gb) is not None
    assert ideal.initial_ideal(gb) == [(1, 0, 1, 0)]


def test_normal_form_of_an_irreducible_binomial():
    gb = buchberger([parse_binomial("x1*x3 - x2*x4", 4)], n=4)
    b = parse_binomial("x1*x2 - x3*x4", 4)
    assert ideal.normal_form(b, gb) == b


def test_buchberger_small_cases():
    assert buchberger([], n=3).elements == []
    gb = buchberger([parse_binomial("x2^2 - x1*x3", 3)], MonomialOrder("lex"), 3)
    assert [str(b) for b in gb.elements] == ["x1*x3 - x2^2"]


def test_saturate_single_binomial():
    b = parse_binomial("x1*x2*x3 - x2^2*x4", 4)
    assert ideal.saturate_variable([b], 1, 4) == [parse_binomial("x1*x3 - x2*x4", 4)]


def test_initial_ideal_depends_on_the_order():
    v22 = config.veronese(2, 2)
    assert ideal.initial_ideal(toric_groebner(v22, MonomialOrder("lex"))) == [(1, 0, 1)]
    assert ideal.initial_ideal(toric_groebner(v22)) == [(0, 2, 0)]


def test_triangle_ideal_is_zero():
    triangle = config.new_configuration([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert toric_groebner(triangle).elements == []


def test_full_saturation_of_the_lattice_ideal(data):
    # saturating by every variable, not only the non-pivots, gives the same ideal
    c = config.parse_configuration(data("example1.config").read_text())
    gens, _ = ideal.lattice_basis_binomials(c)
    for i in range(c.n):
        gens = ideal.saturate_variable(gens, i, c.n)
    assert ideal.same_ideal(buchberger(gens, n=c.n), toric_groebner(c))


@given(configurations(max_d=3, max_n=6))
def test_circuits_reduce_to_zero(c):
    gb = toric_groebner(c)
    for x in circuits.enumerate_circuits(c):
        assert ideal.normal_form(x.binomial, gb) is None
