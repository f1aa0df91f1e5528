import pytest

import d2c


def test_parse_write_round_trip():
    g = d2c.parse_graph6("Bg")
    assert g.n == 3
    assert g.m == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 2)
    assert not g.has_edge(0, 2)
    assert d2c.write_graph6(g) == "Bg"

    h = d2c.Graph(3, [(0, 1), (1, 2)])
    assert h == g
    assert d2c.parse_edge_list("3 2\n0 1\n1 2\n") == g


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        d2c.parse_graph6("B")
    with pytest.raises(ValueError):
        d2c.parse_edge_list("1 1\n0 0\n")


def test_decide_yes_and_no():
    yes = d2c.decide(d2c.parse_graph6("A_"))
    assert yes["verdict"] == "YES"
    assert yes["witness"] == [1, 2]
    assert d2c.verify_distinguishing(d2c.parse_graph6("A_"), yes["witness"])

    no = d2c.decide(d2c.parse_graph6("Bg"))
    assert no["verdict"] == "NO"
    assert no["reason"]["kind"] == "ComponentNotDistinguishable"
    assert no["reason"]["nta"] == [2, 1, 0]

    odd = d2c.decide(d2c.Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert odd["reason"]["kind"] == "NonBipartite"
    assert len(odd["reason"]["cycle"]) == 3


def test_decide_matches_brute_force():
    for record in ["@", "A?", "A_", "B?", "BW", "Bw", "C`", "Ch"]:
        g = d2c.parse_graph6(record)
        assert (d2c.decide(g)["verdict"] == "YES") == d2c.brute_chi_d_le_2(g)


def test_brute_force_threshold():
    big = d2c.Graph(12)
    with pytest.raises(RuntimeError):
        d2c.brute_chi_d_le_2(big)
    assert not d2c.brute_chi_d_le_2(big, threshold=12)


def test_reductions():
    fwd = d2c.ga_to_cc(d2c.parse_graph6("A_"))
    assert fwd["case"] == "subdivided"
    assert not fwd["complemented"]
    assert d2c.write_graph6(fwd["graph"]) == "BW"
    assert fwd["source_edges"] == [(0, 1)]

    bwd = d2c.cc_to_ga(d2c.parse_graph6("Ch"))
    assert bwd["case"] == "balanced"
    assert bwd["graph"].n == 7
    assert (bwd["a"], bwd["b"], bwd["c"]) == (4, 5, 6)
    assert bwd["x_class"] == [0, 2]
    assert d2c.has_nta(bwd["graph"]) is None


def test_iso_and_canon():
    p3a = d2c.parse_graph6("Bg")
    p3b = d2c.parse_graph6("BW")
    phi = d2c.are_isomorphic(p3a, p3b)
    assert phi is not None
    assert sorted(phi) == [0, 1, 2]
    assert d2c.are_isomorphic(p3a, d2c.parse_graph6("Bw")) is None

    assert d2c.canonical_key(p3a) == d2c.canonical_key(p3b)
    assert d2c.canonical_key(p3a) != d2c.canonical_key(d2c.parse_graph6("Bw"))

    assert d2c.has_nta(p3a) == [2, 1, 0]
    assert d2c.has_nta(d2c.parse_graph6("@")) is None


def test_bipartition():
    even = d2c.bipartition(d2c.parse_graph6("Bg"))
    assert even["bipartite"]
    assert even["colors"] == [1, 2, 1]

    odd = d2c.bipartition(d2c.Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not odd["bipartite"]
    assert len(odd["odd_cycle"]) == 3
