"""Smoke tests for the python bindings."""

import pytest

eh = pytest.importorskip("eh_certify")


def test_constants_exact_values():
    sched = eh.constants(1, 0, 0)
    assert sched["ell"] == "3"
    assert sched["alpha"] == "1/270"
    assert eh.constants(2, 1, 1)["ell"] == "38"


def test_graph_basics():
    g = eh.Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    co = eh.complement(g)
    assert co.adjacent(0, 2)
    assert not co.adjacent(0, 1)


def test_caterpillar_recognition():
    p5 = eh.make_caterpillar(1, 1, 4)
    assert eh.is_caterpillar(p5) is not None
    assert eh.shape_for(eh.make_caterpillar(3, 2, 2)) == (3, 2, 2)

    spider = eh.Graph(
        10,
        [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
    )
    assert eh.is_caterpillar(spider) is None


def test_find_induced():
    c5 = eh.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    p4 = eh.make_caterpillar(1, 1, 3)
    emb = eh.find_induced(c5, p4)
    assert emb is not None
    assert eh.find_induced_naive(c5, p4) is not None
    p5 = eh.make_caterpillar(1, 1, 4)
    assert eh.find_induced(c5, p5) is None


def test_dichotomy_two_cliques_roundtrip():
    g, sidecar = eh.gen_two_cliques(30, seed=0)
    ok, reason = eh.verify_certificate(g, sidecar)
    assert ok, reason

    cert, report = eh.dichotomy(
        g, eh.make_caterpillar(1, 1, 3), seed=1, ell=2, eps="24/25"
    )
    assert report["verified"] is True
    ok, reason = eh.verify_certificate(g, cert)
    assert ok, reason
    assert cert["kind"] == "anti_pair"


def test_planted_pattern_found():
    g, sidecar = eh.gen_planted_caterpillar(2, 1, 2, 50, seed=4)
    assert eh.verify_certificate(g, sidecar)[0]
    cert, report = eh.dichotomy(g, eh.make_caterpillar(2, 1, 2), seed=2)
    assert cert["kind"] == "induced_pattern"
    assert eh.verify_certificate(g, cert)[0]


def test_generator_determinism():
    a = eh.gen_gnp(40, "1/2", 7)
    b = eh.gen_gnp(40, "1/2", 7)
    assert a.edges() == b.edges()
    assert a.edges() != eh.gen_gnp(40, "1/2", 8).edges()


def test_diagnostic_failure_raises():
    g = eh.gen_gnp(10, "1/5", 1)
    with pytest.raises(Exception, match="diagnost|colour|schedule|subset"):
        eh.dichotomy(g, eh.make_caterpillar(1, 1, 1), budget=0)
