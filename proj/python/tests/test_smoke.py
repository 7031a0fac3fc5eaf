from fractions import Fraction

import pytest

import okpack


def test_cycle_round_trip():
    g = okpack.cycle(4)
    text = okpack.to_edge_list(g)
    assert text == "4 4\n0 1\n1 2\n2 3\n0 3\n"
    assert okpack.from_edge_list(text) == g


def test_bad_edge_list_raises_value_error():
    with pytest.raises(ValueError):
        okpack.from_edge_list("3 2\n0 1\n")


def test_gk_counts_and_certificate():
    g, labels = okpack.gk(4)
    assert g.order == 2**4 + 4 - 1
    assert g.size == 2**5 - 3
    assert len(labels["star_ids"]) == 4
    assert okpack.is_fvs(g, okpack.gk_fvs_certificate(4))
    assert len(okpack.exact_fvs(g)) == 3


def test_log_fvs_shape():
    g, _ = okpack.gk(8)
    r = okpack.log_fvs(g)
    assert set(r) == {"fvs", "phases", "input_rank", "valid"}
    assert r["valid"]
    assert okpack.is_fvs(g, r["fvs"])


def test_rich_ratio_is_fraction():
    v, ratio = okpack.rich_ratio(okpack.cycle(5))
    assert v == 0
    assert ratio == Fraction(2, 1)


def test_mis_agrees_with_oracle():
    g = okpack.forest_plus_edges(16, 2, 3, 11)
    size = len(okpack.brute_mis(g))
    vertices, stats = okpack.qmis(g)
    assert len(vertices) == size
    assert stats["nodes_expanded"] >= 1
    x = okpack.log_fvs(g)["fvs"]
    assert len(okpack.mis_via_fvs(g, x)) == size


def test_three_coloring():
    coloring, _ = okpack.three_coloring(okpack.cycle(7))
    assert coloring is not None and set(coloring.values()) <= {1, 2, 3}
    none, _ = okpack.three_coloring(okpack.complete(4))
    assert none is None


def test_budget_error_is_catchable():
    g = okpack.cycle(4)
    for _ in range(3):
        g = okpack.Graph(g.order + 4, g.edges + [(g.order + i, g.order + (i + 1) % 4) for i in range(4)])
    with pytest.raises(okpack.SearchLimitError):
        okpack.qmis(g, max_q=1)
