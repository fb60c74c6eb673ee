"""hopfkit: exact structure-constant computations for finite-dimensional
Hopf algebras over prime fields GF(p).

The package is organized bottom-up:

    linalg      exact GF(p) matrices and canonical subspaces
    algebra     associative unital algebras from multiplication tensors
    hopf        coalgebra/Hopf axioms, duality, filtration, graded algebra
    inclusions  Hopf subalgebras, normality, quotients, freeness, series
    rlie        restricted Lie algebras and enveloping algebras
    cobar       cobar complex, Hochschild cohomology, extension elements
    catalog     all classified connected/local entries in dimension p, p^2
    schema      JSON interchange documents
    cli         command-line entry points
"""

from .errors import (
    HopfkitError,
    InputError,
    NotHopfError,
    OperationCancelled,
    ResourceLimitError,
    TheoremViolation,
    UnsupportedOperation,
)

__all__ = [
    "HopfkitError",
    "InputError",
    "NotHopfError",
    "OperationCancelled",
    "ResourceLimitError",
    "TheoremViolation",
    "UnsupportedOperation",
]

__version__ = "0.1.0"
