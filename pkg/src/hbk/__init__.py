"""Exact decision procedures for the handlebody-knots ``V^k_tau``.

Obtained from the handcuff graph 4_1 (optionally twisted ``k`` times) by
tau-tangle replacement at a trivalent vertex.
"""
from .catalog import Catalog, CatalogEntry, default_catalog, lookup, verify, verify_all
from .contfrac import (
    InfiniteValue,
    ModZClass,
    TwistWord,
    cf_eval,
    cf_expand,
    is_one_over_n,
    matrix_oracle_eval,
    modz_normalize,
)
from .engine import (
    AnnulusCensus,
    Chirality,
    Count,
    HbkSpec,
    SymmetryGroup,
    census,
    chirality,
    equivalent,
    equivalent_up_to_mirror,
    exterior_homeomorphic,
    exterior_verdict,
    is_irreducible,
    mirror_spec,
    symmetry_group,
    verdict_or,
)
from .grammar import ParseError, format_spec, parse_spec
from .tangle import (
    CompositeTau,
    InvalidConnectivity,
    KnotLabel,
    RationalTau,
    Status,
    TrivialTangle,
    Verdict,
    Vertex,
    endpoint_pairing,
    is_atoroidal,
    mirror,
    star,
    tangle_equiv,
    validate_rational,
)

__version__ = "0.1.0"
