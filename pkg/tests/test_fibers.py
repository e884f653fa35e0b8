import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from strategies import configurations
from toricirc import circuits as circ
from toricirc import config, fibers, graphs
from toricirc.errors import NotInIdeal, NotNormalized
from toricirc.ideal import Binomial, buchberger, ideal_contains, parse_binomial, toric_groebner


def load(data, name):
    return config.parse_configuration(data(name).read_text())


def strs(bs):
    return sorted(str(b) for b in bs)


def test_fiber_small_cases(data):
    c = load(data, "four_cycle.config")
    assert set(fibers.enumerate_fiber(c, (1, 1, 1, 1))) == {(1, 0, 1, 0), (0, 1, 0, 1)}
    v = config.veronese(2, 3)
    assert fibers.enumerate_fiber(v, (3, 3)).monomials == ((1, 0, 0, 1), (0, 1, 1, 0))
    assert len(fibers.enumerate_fiber(v, (3, 3), limit=1)) == 1
    assert len(fibers.enumerate_fiber(v, (1, 1))) == 0


def test_fiber_of_normality_gap_is_empty(data):
    c = load(data, "example1.config")
    assert len(fibers.enumerate_fiber(c, (1, 1, 1, 0, 1, 1, 1))) == 0
    # the indicator of the two triangles' vertices has the perfect matching
    # {1,3}, {4,5}, {6,7}, that is x5*x7*x8
    assert fibers.enumerate_fiber(c, (1, 0, 1, 1, 1, 1, 1)).monomials == ((0, 0, 0, 0, 1, 0, 1, 1, 0),)


def test_fiber_needs_nonnegative_matrix():
    with pytest.raises(NotNormalized):
        fibers.enumerate_fiber(config.root_config("A", 3), (0, 0, 0, 2))


@given(configurations(max_d=3, max_n=6, lo=0, hi=2), st.lists(st.integers(0, 2), min_size=6, max_size=6))
def test_fiber_matches_box_scan(c, u):
    b = c.degree_of(u[: c.n])
    expect = sorted(oracles.brute_fiber(c.matrix, b), reverse=True)
    assert list(fibers.enumerate_fiber(c, b).monomials) == expect


def test_minimal_generators_example1(data):
    c = load(data, "example1.config")
    assert strs(fibers.minimal_generators(c)) == ["x1*x3 - x2*x4", "x3*x4*x6*x9 - x5^2*x7*x8"]


def test_minimal_generators_example2(data):
    c = load(data, "example2.config")
    got = fibers.minimal_generators(c)
    want = ["x5*x7 - x6*x8", "x1*x3 - x2*x4", "x3*x4*x10 - x5*x8*x9"]
    assert len(got) == 3
    for text in want:
        b = parse_binomial(text, 10)
        assert any(g.same_up_to_sign(b) for g in got)


@pytest.mark.parametrize("tiebreak", ["support", "lex", "reverse"])
def test_degree_multiset_does_not_depend_on_tiebreak(data, tiebreak):
    c = load(data, "example2.config")
    ref = fibers.degree_multiset(c, fibers.minimal_generators(c))
    assert fibers.degree_multiset(c, fibers.minimal_generators(c, tiebreak=tiebreak)) == ref


def _by_degree(c, gens):
    out = {}
    for g in gens:
        d = c.degree_of(g.plus)
        out[d] = out.get(d, 0) + 1
    return out


@given(configurations(max_d=3, max_n=6, lo=0, hi=2))
def test_minimal_generators_generate_and_match_gcd_graph(c):
    gb = toric_groebner(c)
    gens = fibers.minimal_generators(c, gb)
    if not gens:
        assert not gb.elements
        return
    again = buchberger(gens, gb.order, c.n)
    assert set(again.elements) == set(gb.elements)
    top = max(g.degree for g in gens)
    assert oracles.minimal_generator_count_by_degree(c.matrix, top + 1) == _by_degree(c, gens)


@pytest.mark.parametrize(
    "build",
    [
        lambda: config.veronese(2, 3),
        lambda: config.veronese(3, 2),
        lambda: config.squarefree_veronese(5, 2),
        lambda: config.root_config("B", 3),
    ],
)
def test_gcd_graph_oracle_on_builders(build):
    c = build()
    cn = c if c.is_nonnegative() else config.normalize_rows(c)
    gens = fibers.minimal_generators(c)
    top = max(g.degree for g in gens)
    assert oracles.minimal_generator_count_by_degree(cn.matrix, top + 1) == _by_degree(cn, gens)


def test_indispensable_and_redundant():
    v = config.veronese(2, 3)
    b = parse_binomial("x1*x4 - x2*x3", 4)
    assert fibers.is_indispensable(b, v)
    assert not fibers.is_redundant(b, v)
    sq = config.new_configuration([[1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
    big = parse_binomial("x1^2*x3^2 - x2^2*x4^2", 4)
    assert fibers.is_redundant(big, sq)
    assert not fibers.is_indispensable(big, sq)
    with pytest.raises(NotInIdeal):
        fibers.is_redundant(parse_binomial("x1 - x2", 4), sq)


def test_non_indispensable_minimal_generator():
    # the fiber of degree (1,1,1,1) holds the three perfect matchings of K4
    c = config.squarefree_veronese(4, 2)
    gens = fibers.minimal_generators(c)
    flags = [fibers.is_indispensable(g, c, gens) for g in gens]
    assert flags == [False, False]
    assert not any(fibers.is_redundant(g, c, gens) for g in gens)


def test_generates(data):
    c = load(data, "example1.config")
    gens = fibers.minimal_generators(c)
    assert fibers.generates(gens, gens) is None
    assert fibers.generates(gens[:1], gens) == gens[1]


@given(configurations(max_d=3, max_n=6, lo=0, hi=2))
def test_indispensable_implies_not_redundant(c):
    gens = fibers.minimal_generators(c)
    for g in gens:
        if fibers.is_indispensable(g, c, gens):
            assert not fibers.is_redundant(g, c, gens)


@given(configurations(max_d=3, max_n=6, lo=0, hi=2))
def test_no_minimal_generator_can_be_dropped(c):
    gens = fibers.minimal_generators(c)
    for i, g in enumerate(gens):
        rest = gens[:i] + gens[i + 1:]
        assert not ideal_contains(buchberger(rest, n=c.n), [g])


def test_circuit_of_two_triangles_and_a_path():
    # triangles 123 and 567 joined by the path 3-4-5
    edges = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)]
    g = graphs.new_graph(7, edges)
    (f,) = [x.binomial for x in circ.enumerate_circuits(g.incidence)]
    assert circ.squarefree_class(f) == circ.SquarefreeClass.NEITHER
    # the kernel has rank one, so f alone generates the ideal
    assert fibers.is_indispensable(f, g.incidence)
    assert not fibers.is_redundant(f, g.incidence)
    # the chord 3-5 creates lower circuits that already generate f
    h = graphs.new_graph(7, edges + [(3, 5)])
    assert fibers.is_redundant(Binomial(f.plus + (0,), f.minus + (0,)), h.incidence)
