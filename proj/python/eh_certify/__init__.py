"""Certificate engine for the strong Erdos-Hajnal dichotomy on caterpillars.

The heavy lifting lives in the C++ extension; this package adds small JSON
conveniences so certificates and reports come back as dicts.
"""

import json as _json

from ._core import (
    DiagnosticFailure,
    Graph,
    complement,
    find_induced,
    find_induced_naive,
    gen_bounded_degree,
    gen_gnp,
    is_caterpillar,
    make_caterpillar,
    max_anti_pair_bruteforce,
    shape_for,
)
from . import _core

__all__ = [
    "DiagnosticFailure",
    "Graph",
    "complement",
    "constants",
    "dichotomy",
    "find_induced",
    "find_induced_naive",
    "gen_bounded_degree",
    "gen_gnp",
    "gen_planted_bipartite_hole",
    "gen_planted_caterpillar",
    "gen_two_cliques",
    "is_caterpillar",
    "make_caterpillar",
    "max_anti_pair_bruteforce",
    "shape_for",
    "verify_certificate",
]


def constants(h, d, t):
    """Exact-rational constant schedule for shape (h, d, t), as a dict."""
    return _json.loads(_core.constants(h, d, t))


def dichotomy(graph, pattern, seed=0, ell=None, eps=None, budget=200000):
    """Run the certificate pipeline; returns (certificate, report) dicts."""
    cert, report = _core.dichotomy(graph, pattern, seed, ell, eps, budget)
    return _json.loads(cert), _json.loads(report)


def verify_certificate(graph, certificate):
    """Verify a certificate (dict or JSON string) against a graph."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.verify_certificate(graph, certificate)


def gen_two_cliques(n, seed=0):
    g, cert = _core.gen_two_cliques(n, seed)
    return g, _json.loads(cert)


def gen_planted_caterpillar(h, d, t, n, seed=0):
    g, cert = _core.gen_planted_caterpillar(h, d, t, n, seed)
    return g, _json.loads(cert)


def gen_planted_bipartite_hole(n, frac="1/4", seed=0):
    g, cert = _core.gen_planted_bipartite_hole(n, frac, seed)
    return g, _json.loads(cert)
