"""Exact computations with maximal green sequences.

Thin convenience layer over the _greenwalk extension: the extension
returns JSON strings (the same documents the CLI prints); this package
parses them into plain dicts.  All numbers are exact -- rationals appear
as strings "p/q".
"""

import json as _json

try:
    from . import _greenwalk as _ext  # installed layout: module inside the package
except ImportError:
    import _greenwalk as _ext  # build-tree layout: module on PYTHONPATH

__all__ = [
    "run_walk",
    "enumerate_mgs",
    "solve_crossing",
    "verify_charge_order",
    "rotate_cfho",
    "strict_feasible",
    "torsion_lattice",
    "oracle_chains",
    "verify_cfho",
    "hn_filtration",
    "verify_induction",
    "cmatrices",
]


def run_walk(n, arrows, seq):
    """Run a green mutation walk; raises RuntimeError on a non-green step."""
    return _json.loads(_ext.run_walk(n, arrows, seq))


def enumerate_mgs(n, arrows, max_len=24, limit=1000):
    return _json.loads(_ext.enumerate_mgs(n, arrows, max_len, limit))


def solve_crossing(n, bricks, beta=None):
    if beta is None:
        beta = ["1"] * n
    return _json.loads(_ext.solve_crossing(n, bricks, [str(b) for b in beta]))


def verify_charge_order(n, bricks, alpha, beta):
    return _ext.verify_charge_order(n, bricks, [str(a) for a in alpha], [str(b) for b in beta])


def rotate_cfho(n, arrows, bricks, k, variant="reflection"):
    return _json.loads(_ext.rotate_cfho(n, arrows, bricks, k, variant))


def strict_feasible(n, rows):
    return _json.loads(_ext.strict_feasible(n, rows))


def torsion_lattice(type_a):
    return _json.loads(_ext.torsion_lattice(type_a))


def oracle_chains(type_a):
    return _json.loads(_ext.oracle_chains(type_a))


def verify_cfho(type_a, intervals):
    return _json.loads(_ext.verify_cfho(type_a, intervals))


def hn_filtration(type_a, summands, alpha, beta):
    return _json.loads(
        _ext.hn_filtration(type_a, summands, [str(a) for a in alpha], [str(b) for b in beta])
    )


def verify_induction(type_a, chain_bricks, alpha, beta):
    return _json.loads(
        _ext.verify_induction(type_a, chain_bricks, [str(a) for a in alpha], [str(b) for b in beta])
    )


def cmatrices(type_a):
    return _json.loads(_ext.cmatrices(type_a))
