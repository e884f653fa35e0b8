import pytest
from hypothesis import given

from strategies import configurations, connected_graphs
from toricirc import config, graphs, verify


def load_graph(data, name):
    return graphs.parse_graph(data(name).read_text())


def test_prop_zeroone_examples():
    rep = verify.check_prop_zeroone(config.root_config("B", 3))
    assert rep.applicable and rep.ok and rep.conditions["all_sf"]
    rep = verify.check_prop_zeroone(config.squarefree_veronese(5, 2))
    assert rep.conditions["window_01"] and rep.conditions["all_sfsf"] and rep.ok
    rep = verify.check_prop_zeroone(config.veronese(2, 3))
    assert rep.verdict == verify.NOT_APPLICABLE


@given(configurations(max_d=4, max_n=7, lo=-1, hi=1))
def test_prop_zeroone_never_violated(c):
    assert verify.check_prop_zeroone(c).ok


def test_generated_by_circuits_examples():
    assert verify.check_generated_by_circuits(config.veronese(2, 2), "sf").conditions["generated"]
    rep = verify.check_generated_by_circuits(config.veronese(2, 3), "all")
    assert not rep.conditions["generated"]
    assert rep.witness["missing_generator"] in ("x1*x4 - x2*x3", "x2*x3 - x1*x4")
    assert verify.check_generated_by_circuits(config.squarefree_veronese(4, 2), "sfsf").conditions["generated"]


@pytest.mark.parametrize("d,r", [(2, 2), (3, 2), (2, 3), (2, 4)])
def test_veronese_reports(d, r):
    rep = verify.check_veronese(d, r)
    assert rep.ok
    assert rep.conditions["generated_by_sf"] == (r == 2)


def test_root_and_squarefree_reports():
    for fam in "ABCD":
        assert verify.check_root(fam, 3).ok
    assert verify.check_squarefree_veronese(5, 2).ok


def test_graph_theorems_examples(data):
    rep = verify.check_graph_theorems(load_graph(data, "example1.graph"))
    c = rep.conditions
    assert (c["OCC"], c["(v)"], c["(i)"], c["(v')"], c["(i')"]) == (False, True, True, False, False)
    assert rep.verdict == verify.CONSISTENT
    rep = verify.check_graph_theorems(load_graph(data, "example2.graph"))
    assert (rep.conditions["OCC"], rep.conditions["(v')"], rep.conditions["(i')"]) == (False, True, True)
    assert rep.ok
    rep = verify.check_graph_theorems(graphs.new_graph(4, graphs.complete_graph(4)))
    assert rep.ok and all(v for k, v in rep.conditions.items())


@given(connected_graphs(max_vertices=6))
def test_graph_theorems_hold_on_random_graphs(g):
    rep = verify.check_graph_theorems(g)
    assert rep.ok, rep.format()
    assert verify.cross_check_graph(g).ok


def test_two_binomial():
    rep = verify.check_two_binomial_groebner(config.squarefree_veronese(4, 2))
    assert rep.applicable and rep.ok
    assert rep.conditions["leads_coprime"] and rep.conditions["pair_is_reduced_gb"]
    four = graphs.new_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert verify.check_two_binomial_groebner(four.incidence).verdict == verify.NOT_APPLICABLE


def test_two_binomial_not_applicable_example2(data):
    c = config.parse_configuration(data("example2.config").read_text())
    assert verify.check_two_binomial_groebner(c).verdict == verify.NOT_APPLICABLE


def test_corpus_counts():
    # connected labeled graphs: 1 on two vertices, 4 on three, 38 on four
    assert sum(1 for _ in verify.corpus_graphs(3, "exhaustive")) == 5
    assert sum(1 for _ in verify.corpus_graphs(4, "exhaustive")) == 43
    with pytest.raises(ValueError):
        list(verify.corpus_graphs(7, "exhaustive"))


def test_corpus_run_small():
    rep = verify.corpus_run(4, "exhaustive")
    assert rep.stats == {"graphs": 43, "violations": 0}
    assert rep.verdict == verify.CONSISTENT


def test_random_corpus_is_deterministic():
    a = [g.edges for g in verify.random_connected_graphs(7, 5, 11)]
    b = [g.edges for g in verify.random_connected_graphs(7, 5, 11)]
    assert a == b and len(a) == 5


def test_report_format():
    rep = verify.TheoremReport("demo")
    rep.conditions["x"] = True
    rep.expect("x holds", True)
    rep.expect("y holds", False)
    text = rep.format()
    assert "x: true" in text and "FAILED: y holds" in text and text.endswith("verdict: violation")
