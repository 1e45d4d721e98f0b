"""Exact slope geography for Lefschetz-fibration monodromy factorizations.

The package builds classical mapping-class-group relator families as
explicit positive Dehn-twist words, computes Euler characteristic and
signature of the corresponding fibrations by two independent routes
(closed-form ledger arithmetic and an exact Meyer-cocycle evaluation of
the actual word), and replays the high-slope, iterated-limit, and
slope-approximation constructions.
"""

from .errors import (
    BudgetExceeded,
    CatalogError,
    GenusMismatchError,
    ParameterError,
    SlopeforgeError,
    SubstitutionError,
    TrivialityError,
    WordParseError,
)
from .surface import (
    Curve,
    CurveCatalog,
    SurfaceContext,
    default_catalog,
    intersection_number,
    load_catalog,
    save_catalog,
    standard_chain_classes,
    validate_catalog,
)
from .symplectic import (
    SymplecticMatrix,
    evaluate,
    is_homologically_trivial,
    symplectic_transporter,
    transvection,
)
from .words import (
    Relator,
    TwistLetter,
    TwistWord,
    build_relator,
    fiber_sum,
    global_conjugate,
    hurwitz_move,
    hurwitz_move_inverse,
    parse_word,
    serialize_word,
    substitute,
)
from .meyer import (
    SignatureReport,
    form_signature,
    meyer_cocycle,
    relator_signature_delta,
    signature_of_word,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CatalogError",
    "Curve",
    "CurveCatalog",
    "GenusMismatchError",
    "ParameterError",
    "Relator",
    "SignatureReport",
    "SlopeforgeError",
    "SubstitutionError",
    "SurfaceContext",
    "SymplecticMatrix",
    "TrivialityError",
    "TwistLetter",
    "TwistWord",
    "WordParseError",
    "build_relator",
    "default_catalog",
    "evaluate",
    "fiber_sum",
    "form_signature",
    "global_conjugate",
    "hurwitz_move",
    "hurwitz_move_inverse",
    "intersection_number",
    "is_homologically_trivial",
    "load_catalog",
    "meyer_cocycle",
    "parse_word",
    "relator_signature_delta",
    "save_catalog",
    "serialize_word",
    "signature_of_word",
    "standard_chain_classes",
    "substitute",
    "symplectic_transporter",
    "transvection",
    "validate_catalog",
]
