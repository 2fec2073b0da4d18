"""Exact spectral toolkit for signed graphs with two eigenvalues off ±1.

Core objects: `SignedGraph` (immutable {-1,0,+1} adjacency), the
switching algebra, exact integer characteristic polynomials and
characteristic triples, the built-in family catalog with cospectrality
and spectral-determination queries, verification suites for the
classical claims about these families, and a brute-force enumeration
oracle for small orders.
"""

from .backend import BACKEND_NAME
from .catalog import (
    Catalog,
    CatalogEntry,
    build_catalog,
    cospectral_mates,
    is_dss,
)
from .families import (
    FAMILY_IDS,
    FamilyParameterError,
    FamilySpec,
    construct,
    display,
    instances_up_to,
    is_sign_symmetric,
    parse_spec,
    predicted_triple,
)
from .graphs import (
    SignedGraph,
    add_isolated_edges,
    disjoint_union,
    is_connected,
    negate,
    relabel,
    switch,
    underlying_components,
)
from .isomorphism import (
    is_switching_isomorphic,
    is_switching_isomorphic_exhaustive,
    switching_isomorphism_witness,
)
from .spectral import (
    CharPoly,
    CharTriple,
    GMembership,
    Membership,
    NotInGPrimeError,
    char_poly,
    classify,
    extract_pm1,
    triple_of,
)

__all__ = [
    "BACKEND_NAME",
    "Catalog",
    "CatalogEntry",
    "CharPoly",
    "CharTriple",
    "FAMILY_IDS",
    "FamilyParameterError",
    "FamilySpec",
    "GMembership",
    "Membership",
    "NotInGPrimeError",
    "SignedGraph",
    "add_isolated_edges",
    "build_catalog",
    "char_poly",
    "classify",
    "construct",
    "cospectral_mates",
    "disjoint_union",
    "display",
    "extract_pm1",
    "instances_up_to",
    "is_connected",
    "is_dss",
    "is_sign_symmetric",
    "is_switching_isomorphic",
    "is_switching_isomorphic_exhaustive",
    "negate",
    "parse_spec",
    "predicted_triple",
    "relabel",
    "switch",
    "switching_isomorphism_witness",
    "triple_of",
    "underlying_components",
]

__version__ = "0.1.0"
