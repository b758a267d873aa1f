"""Exact cohomology rings, characteristic classes and rigidity classifiers
for generalized Bott towers."""

from ._backend import HAVE_COMPILED, compiled_enabled
from .bundles import (
    bundles_isomorphic,
    find_zero_column,
    is_trivial,
    total_chern_bundle,
)
from .charclasses import (
    CharClassReport,
    char_class_report,
    p1_b3,
    sq_component,
    steenrod_square,
    stiefel_whitney,
    tangent_chern,
    tangent_pontrjagin,
    verify_pontrjagin_preservation,
    wu_classes,
)
from .classify import (
    DIFFEOMORPHIC,
    DISTINCT,
    UNKNOWN,
    ProductObstruction,
    ProductWitness,
    TwoStageWitness,
    Verdict,
    classify_2stage,
    classify_3stage,
    is_product_cohomology,
    q_product_b3,
)
from .errors import (
    BottcohError,
    BundleHypothesisError,
    DomainMismatchError,
    FiltrationError,
    RingMismatchError,
    TowerFormatError,
    UnverifiedMapError,
)
from .ring import (
    BottRing,
    CohomologyClass,
    IsoWitness,
    RingMap,
    apply_map,
    build_ring,
    graded_rank,
    integrate,
    multiply,
    normal_form,
    power,
    verify_map,
)
from .scalars import GF2, QQ, ZZ, ModularDomain
from .search import iso_search, square_zero_elements
from .towers import (
    LineBundleSum,
    StageSpec,
    TowerSpec,
    bott_tower_3,
    dualize_stage,
    hirzebruch,
    load_bundle,
    load_tower,
    normalize_stage,
    product_tower,
    validate_bundle,
    validate_tower,
)

__version__ = "0.1.0"

__all__ = [
    "BottRing",
    "BottcohError",
    "BundleHypothesisError",
    "CharClassReport",
    "CohomologyClass",
    "DIFFEOMORPHIC",
    "DISTINCT",
    "DomainMismatchError",
    "FiltrationError",
    "GF2",
    "HAVE_COMPILED",
    "IsoWitness",
    "LineBundleSum",
    "ModularDomain",
    "ProductObstruction",
    "ProductWitness",
    "QQ",
    "RingMap",
    "RingMismatchError",
    "StageSpec",
    "TowerFormatError",
    "TowerSpec",
    "TwoStageWitness",
    "UNKNOWN",
    "UnverifiedMapError",
    "Verdict",
    "ZZ",
    "apply_map",
    "bott_tower_3",
    "build_ring",
    "bundles_isomorphic",
    "char_class_report",
    "classify_2stage",
    "classify_3stage",
    "compiled_enabled",
    "dualize_stage",
    "find_zero_column",
    "graded_rank",
    "hirzebruch",
    "integrate",
    "is_product_cohomology",
    "is_trivial",
    "iso_search",
    "load_bundle",
    "load_tower",
    "multiply",
    "normal_form",
    "normalize_stage",
    "p1_b3",
    "power",
    "product_tower",
    "q_product_b3",
    "sq_component",
    "square_zero_elements",
    "steenrod_square",
    "stiefel_whitney",
    "tangent_chern",
    "tangent_pontrjagin",
    "total_chern_bundle",
    "validate_bundle",
    "validate_tower",
    "verify_map",
    "verify_pontrjagin_preservation",
    "wu_classes",
]
