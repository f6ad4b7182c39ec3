"""Exact computations with free hyperplane arrangements over cyclotomic fields."""

from free_arrangements.arrangement import Arrangement, LinearForm, Restriction, Subspace, arrangement_make
from free_arrangements.cache import Cache
from free_arrangements.caches import HashCache
from free_arrangements.catalog import (
    Family,
    FamilySpec,
    boolean,
    braid,
    coxeter_b,
    coxeter_d,
    family,
    monomial,
    parse_arrangement_file,
    random_arrangement,
    write_arrangement,
)
from free_arrangements.configuration import Configuration, load
from free_arrangements.derivation import (
    Derivation,
    degreewise_dim_oracle,
    derivation_module,
    determinant,
    euler_derivation,
    hilbert_prediction,
    is_free,
    membership_test,
    q_surjective,
    restriction_map,
    saito_check,
    vee,
)
from free_arrangements.errors import (
    ArrangementError,
    CertificateError,
    ChainError,
    DimensionError,
    FieldMismatchError,
    LatticeError,
    NotHomogeneousError,
    ParseError,
    PreconditionError,
    ZeroFormError,
)
from free_arrangements.field import CycloField, CycloNum, field_make
from free_arrangements.freeness import (
    addition_deletion_pattern,
    chain_verify,
    deletion_free_via_q,
    exponent_obstruction,
    is_hereditarily_free,
    is_inductively_free,
)
from free_arrangements.lattice import IntersectionLattice, IntPoly, characteristic_poly, intersection_lattice, poincare_poly
from free_arrangements.module import ModVec, Submodule, minimal_generators, module_intersect, syzygy_basis
from free_arrangements.parser import Parser
from free_arrangements.parsers import ArrangementParser, BasisFile, BasisParser
from free_arrangements.polynomial import MultiPoly
from free_arrangements.report import ChainStep, FreenessReport, HereditaryReport, InductiveChain, NodeReport
from free_arrangements.verdict import Verdict


__all__: list[str] = [
    "Arrangement",
    "LinearForm",
    "Restriction",
    "Subspace",
    "arrangement_make",
    "Cache",
    "HashCache",
    "Family",
    "FamilySpec",
    "boolean",
    "braid",
    "coxeter_b",
    "coxeter_d",
    "family",
    "monomial",
    "parse_arrangement_file",
    "random_arrangement",
    "write_arrangement",
    "Configuration",
    "load",
    "Derivation",
    "degreewise_dim_oracle",
    "derivation_module",
    "determinant",
    "euler_derivation",
    "hilbert_prediction",
    "is_free",
    "membership_test",
    "q_surjective",
    "restriction_map",
    "saito_check",
    "vee",
    "ArrangementError",
    "CertificateError",
    "ChainError",
    "DimensionError",
    "FieldMismatchError",
    "LatticeError",
    "NotHomogeneousError",
    "ParseError",
    "PreconditionError",
    "ZeroFormError",
    "CycloField",
    "CycloNum",
    "field_make",
    "addition_deletion_pattern",
    "chain_verify",
    "deletion_free_via_q",
    "exponent_obstruction",
    "is_hereditarily_free",
    "is_inductively_free",
    "IntersectionLattice",
    "IntPoly",
    "characteristic_poly",
    "intersection_lattice",
    "poincare_poly",
    "ModVec",
    "Submodule",
    "minimal_generators",
    "module_intersect",
    "syzygy_basis",
    "Parser",
    "ArrangementParser",
    "BasisFile",
    "BasisParser",
    "MultiPoly",
    "ChainStep",
    "FreenessReport",
    "HereditaryReport",
    "InductiveChain",
    "NodeReport",
    "Verdict",
]
