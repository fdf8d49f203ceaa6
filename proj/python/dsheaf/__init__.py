"""Exact invariants of modular curves of D-elliptic sheaves over F_q(T).

Thin wrapper over the compiled module: decimal strings become int, rational
strings become Fraction, JSON payloads become dicts.
"""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "chi",
    "classify",
    "count_places_of_degree",
    "genus",
    "invariants",
    "places",
    "run_cli",
    "scan",
    "shimura_genus",
    "table",
    "zeta_constants",
]

_RATIONAL_FIELDS = ("mass", "ratio")


def _revive_report(report):
    for key in _RATIONAL_FIELDS:
        if key in report:
            report[key] = Fraction(report[key])
    return report


def count_places_of_degree(q, degree):
    return int(_core.count_places_of_degree(q, degree))


def places(q, max_degree, include_infinity=True):
    return _core.places(q, max_degree, include_infinity)


def genus(q, degrees=None, polys=None):
    return int(_core.genus(q, list(degrees or []), list(polys or [])))


def chi(q, degrees=None, polys=None, level=None, level_exp=1):
    return int(_core.chi(q, list(degrees or []), list(polys or []), level,
                         level_exp))


def classify(q, degrees=None, polys=None):
    return _core.classify(q, list(degrees or []), list(polys or []))


def invariants(q, degrees=None, polys=None, o=None):
    raw = _core.invariants_json(q, list(degrees or []), list(polys or []), o)
    return _revive_report(json.loads(raw))


def scan(q, o, max_disc_degree, cardinality=None):
    raw = _core.scan_json(q, o, max_disc_degree, cardinality)
    return [_revive_report(report) for report in json.loads(raw)]


def table(q, o="T", max_genus=50, reference_path=None):
    return json.loads(_core.table_json(q, o, max_genus, reference_path))


def shimura_genus(d):
    return int(_core.shimura_genus(d))


def zeta_constants(q):
    zeta_z, zeta_a = _core.zeta_constants(q)
    return Fraction(zeta_z), Fraction(zeta_a)


def run_cli(args):
    return _core.run_cli(list(args))
