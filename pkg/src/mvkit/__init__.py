"""Finite MV-algebras, their derivations, and brute-force claim audits."""
from .algebra import (
    AxiomReport,
    ElementSet,
    Morphism,
    MvAlgebra,
    boolean_center,
    build_algebra,
    chain,
    derived_op,
    direct_product,
    find_isomorphism,
    identity_suite,
    is_boolean,
    leq,
    validate_axioms,
)
from .campaign import CLAIMS, run_campaign, summarize
from .catalog import CatalogEntry, cross_check_catalog, generate_catalog
from .derivations import (
    UnaryMap,
    canonical_map,
    classify_map,
    enumerate_maps,
    fix_and_kernel,
    is_galois_pair,
    prime_ideal_derivation,
    residual_adjoint,
)
from .errors import (
    DimensionError,
    InvariantError,
    MvError,
    ParseError,
    PreconditionError,
    RangeError,
    SizeGuardError,
)
from .ideals import classify_subset, ideals, prime_ideals, principal_downset, principal_upset, quotient
from .io import parse_algebra, parse_map, read_algebra, read_map, serialize_algebra, serialize_map
from .verdict import COUNTEREXAMPLE, HOLDS, NOT_APPLICABLE, ClaimVerdict

__version__ = "0.1.0"
