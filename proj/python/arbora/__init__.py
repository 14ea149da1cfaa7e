"""Exact ramification of iterated preimage fields on P^1(Q).

The compiled core exposes the map type plus the main operations; exact
integers travel as decimal strings and structured results as dicts.
"""

from ._core import (
    BudgetError,
    Map,
    discriminant,
    factor_integer,
    factor_poly,
    is_exceptional,
    lemma12_search,
    newton_polygon,
    orbit_values,
    parse_map,
    pcf_check,
    predicted_bad_set,
    preimage_poly,
    ramification_report,
    ramification_report_json,
    resultant,
    squarefree_part,
    verify_dupont,
    verify_tchebyshev,
)

__all__ = [
    "BudgetError",
    "Map",
    "discriminant",
    "factor_integer",
    "factor_poly",
    "is_exceptional",
    "lemma12_search",
    "newton_polygon",
    "orbit_values",
    "parse_map",
    "pcf_check",
    "predicted_bad_set",
    "preimage_poly",
    "ramification_report",
    "ramification_report_json",
    "resultant",
    "squarefree_part",
    "verify_dupont",
    "verify_tchebyshev",
]
