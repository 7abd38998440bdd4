"""Exact structure-constant computations for Doi-Hopf data.

Modules:

* :mod:`doihopf.linalg` exact fields, matrices and affine solution spaces
* :mod:`doihopf.hopf` algebras, coalgebras, Hopf algebras and their validators
* :mod:`doihopf.datum` Doi-Hopf data, modules and the adjoint functors
* :mod:`doihopf.smash` smash and Koppinen products and the actions on Hom(C, A)
* :mod:`doihopf.integrals` the integral spaces V1..V5, W1 and conversions
* :mod:`doihopf.maschke` separability verdicts and splitting lifts
* :mod:`doihopf.gallery` named examples and special data
* :mod:`doihopf.io` / :mod:`doihopf.cli` file format and command line
"""

from .linalg import GF, QQ, AffineSolutionSpace, Field, FieldError, Matrix, field_from_desc, solve_affine
from .hopf import (
    HopfAlgebra,
    StructAlgebra,
    StructCoalgebra,
    ValidationError,
    ValidationReport,
    validate_algebra,
    validate_coalgebra,
    validate_hopf,
)
from .datum import (
    ComoduleAlgebra,
    DoiHopfDatum,
    DoiHopfModule,
    ModuleCoalgebra,
    ca_module,
    check_morphism,
    induced_module,
    make_datum,
    make_module,
    validate_datum,
    validate_module,
)
from .smash import build_koppinen, build_smash
from .integrals import IntegralSpace, compute_dual_integrals, compute_space, convert, classical_integrals
from .maschke import (
    Functor,
    Separable,
    SeparabilityVerdict,
    decide_separability,
    dual_integral_from_separability_idempotent,
    lift_retraction,
    lift_section,
    nu_component,
)

__version__ = "0.1.0"
