"""Exact computer algebra for quadratic Gorenstein rings and Koszulness certificates.

The heavy lifting lives in the C++ extension ``socle._core``; the wrappers here
decode its JSON reports into plain dictionaries.
"""

import json as _json

from socle import _core

__all__ = [
    "family_report",
    "modified_c6_report",
    "ideal_report",
    "groebner_basis",
    "normal_form",
    "annihilator",
    "contract",
    "hilbert",
    "pfaffians",
    "link_report",
    "tensor_report",
]


def family_report(c, field="gf:32003", order="grevlex", steps=4, slack=2):
    """Ideal, Betti table, h-vector and Koszulness certificates for the cyclic family."""
    return _json.loads(_core.family_report(c, field, order, steps, slack))


def modified_c6_report(steps=4, slack=2):
    """The modified codimension-6 example, certified over the rationals."""
    return _json.loads(_core.modified_c6_report(steps, slack))


def ideal_report(nvars, field, generators, order="grevlex", steps=4, slack=2):
    return _json.loads(_core.ideal_report(nvars, field, list(generators), order, steps, slack))


def groebner_basis(nvars, field, generators, order="grevlex"):
    return _core.groebner_basis(nvars, field, list(generators), order)


def normal_form(nvars, field, generators, poly, order="grevlex"):
    return _core.normal_form(nvars, field, list(generators), poly, order)


def annihilator(nvars, field, inverse_poly):
    return _core.annihilator(nvars, field, inverse_poly)


def contract(nvars, field, poly, inverse_poly):
    return _core.contract(nvars, field, poly, inverse_poly)


def hilbert(nvars, field, generators, order="grevlex"):
    return _json.loads(_core.hilbert(nvars, field, list(generators), order))


def pfaffians(nvars, field, upper_rows):
    return _core.pfaffians(nvars, field, [list(r) for r in upper_rows])


def link_report(nvars, field, ci, ideal):
    return _json.loads(_core.link_report(nvars, field, list(ci), list(ideal)))


def tensor_report(nvars_a, a, nvars_b, b, field="gf:32003", steps=3, slack=2):
    return _json.loads(_core.tensor_report(nvars_a, list(a), nvars_b, list(b), field, steps, slack))
