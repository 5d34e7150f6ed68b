import pytest

import toricreg


def test_graph_parsing():
    g = toricreg.parse_graph("parallel(3,3,5)")
    assert g.num_vertices == 10
    assert g.num_edges == 11
    assert toricreg.parse_graph("cycle(4)").is_simple()


def test_degree_and_points():
    assert toricreg.degree("cycle(3)", 5) == 16
    assert toricreg.count_points("cycle(3)", 5) == 16
    assert toricreg.degree("edges(0-1,2-3)", 3) == 2


def test_regularity_methods_agree():
    profile = toricreg.regularity_rank("parallel(1,2)", 3)
    assert profile["regularity"] == 2
    assert profile["values"] == [1, 3, 4]
    assert toricreg.regularity_sieve("parallel(1,2)", 3) == 2
    value, rule, _ = toricreg.formula("parallel(1,2)", 3)
    assert (value, rule) == (2, "parallel-odd-even-pair")
    assert toricreg.reg_parallel([3, 3, 5], 5) == 12


def test_membership():
    assert not toricreg.binomial_in_ideal("path(2)", 3, [1, 0], [0, 1])
    assert toricreg.in_ideal_plus_edge("path(2)", 3, [1, 1], 0)
    assert not toricreg.in_ideal_plus_edge("path(2)", 3, [0, 1], 0)


def test_report_and_cli():
    r = toricreg.report("cycle(4)", 3, bounds=True)
    assert r["agreement"] is True
    assert r["methods"]["rank"]["value"] == 1
    code, out, _ = toricreg.run_command(["member", "path(2)", "-q", "3", "--monomial", "1,1", "--mod-edge", "1"])
    assert code == 0
    assert out.strip() == "IN (I(X), t_1)"


def test_errors_carry_kind():
    with pytest.raises(toricreg.Error) as info:
        toricreg.parse_graph("parallel(3)")
    assert info.value.kind == "InvalidSpec"
    with pytest.raises(ValueError):
        toricreg.count_points("cycle(4)", 6)
