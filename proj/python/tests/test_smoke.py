import itertools
import random

import pytest

import wcprod


def brute_maximal_sizes(g):
    n = g.order
    adj = [set(g.neighbors(v)) for v in range(n)]
    sizes = set()
    for mask in range(1 << n):
        s = {v for v in range(n) if mask >> v & 1}
        if any(adj[u] & s for u in s):
            continue
        if all(v in s or adj[v] & s for v in range(n)):
            sizes.add(len(s))
    return sizes


def brute_product(g, h):
    m = h.order
    edges = [
        (a * m + b, c * m + d)
        for (a, c) in g.edges()
        for (b, d) in h.edges()
    ]
    edges += [(a * m + d, c * m + b) for (a, c) in g.edges() for (b, d) in h.edges()]
    return wcprod.Graph(g.order * m, edges)


def test_graph_round_trip():
    g = wcprod.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4
    assert g.edge_count == 3
    assert wcprod.Graph.from_graph6(g.graph6()) == g
    assert wcprod.Graph.parse("path:4") == g
    assert wcprod.family("cycle:7") == wcprod.Graph.parse("FhCKG")
    assert repr(wcprod.family("complete:3")) == "Graph('Bw')"


def test_reports_match_brute_force():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = wcprod.Graph(n, edges)
        sizes = brute_maximal_sizes(g)
        r = wcprod.well_covered_report(g)
        assert r["alpha"] == max(sizes) == wcprod.alpha(g)
        assert r["i"] == min(sizes) == wcprod.i_number(g)
        assert r["well_covered"] == (len(sizes) == 1) == wcprod.is_well_covered(g)
        assert len(wcprod.maximal_independent_sets(g)) >= 1


def test_products():
    rng = random.Random(8)
    for _ in range(20):
        gs = []
        for _ in range(2):
            n = rng.randint(1, 4)
            gs.append(wcprod.Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]))
        assert wcprod.direct_product(*gs) == brute_product(*gs)

    k3 = wcprod.family("complete:3")
    assert wcprod.is_well_covered(wcprod.direct_product(k3, k3))
    assert not wcprod.is_well_covered(wcprod.direct_product(k3, wcprod.family("complete:4")))


def test_kn_alpha_i():
    h = wcprod.family("h:4,2")
    r = wcprod.kn_alpha_i(h, 3)
    assert r["i"] == r["alpha"] == 12
    assert r["engine"] == "partition"
    big = wcprod.kn_alpha_i(wcprod.family("cycle:9"), 8)
    assert big["alpha"] >= 32
    with pytest.raises(wcprod.CapacityError):
        wcprod.kn_alpha_i(wcprod.family("cycle:9"), 8, node_budget=5)


def test_claims():
    ids = wcprod.claim_ids()
    assert "wc_direct" in ids and "berge" in ids
    v = wcprod.verify_claim("wc_direct", wcprod.family("complete:3"), wcprod.family("complete:3"))
    assert v["status"] == "holds"
    v = wcprod.verify_claim("h_family_product", wcprod.family("h:4,2"), clique=3)
    assert v["status"] == "holds"
    report = wcprod.run_suite(max_n=3)
    assert report["counterexamples_total"] == 0
    assert report["instances"] > 0


def test_errors():
    with pytest.raises(wcprod.ParseError):
        wcprod.family("h:4;2")
    with pytest.raises(wcprod.GraphError):
        wcprod.family("cycle:2")
    with pytest.raises(wcprod.Error):
        wcprod.verify_claim("missing", wcprod.family("complete:2"))
    with pytest.raises(wcprod.CapacityError):
        wcprod.direct_product(wcprod.family("cycle:9"), wcprod.family("cycle:8"))
