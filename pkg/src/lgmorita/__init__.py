"""Matrix factorizations of polynomials and Morita contexts of Landau-Ginzburg models."""

from .errors import (
    ConstantPotential,
    DocumentError,
    DoesNotDivide,
    IdentityViolation,
    IndexOutOfRange,
    LGError,
    NotAFactorization,
    NotAMorphism,
    NotSquare,
    ParseError,
    PolynomialMismatch,
    ShapeMismatch,
    SourceTargetMismatch,
    TargetTooSmall,
    UnknownToken,
    ZeroDivisor,
    ZeroPolynomial,
)
from .homotopy import (
    GradedMorphism,
    Homotopy,
    NotFoundUpToD,
    compose,
    morphism_space,
    search_homotopy,
    verify_homotopy,
    verify_morphism,
)
from .koszul import ThetaWord, build_delta, contract, delta_factorization, pi_apply, pi_matrices, theta_basis, wedge
from .matrix import PolyMatrix, det, kron, transpose
from .mf import (
    MatrixFactorization,
    PadVariant,
    commute_check,
    det_divides_power,
    det_power_quotient,
    make,
    pad,
    tensor_determinants,
    transpose_mf,
    trivial,
    yoshino_tensor,
)
from .morita import (
    LGObject,
    LGOneMorphism,
    MoritaContext,
    Report,
    corollary_check,
    make_context,
    necessary_condition,
    non_sufficiency_witness,
    one_morphism,
    trivial_context,
    verify_triangles,
    zero_determinant_check,
)
from .ring import Polynomial, Variable, divided_difference, exact_divide, identify_primes, prime_shift
from .serialize import dumps, loads
from .text import parse_polynomial, print_polynomial

__version__ = "0.1.0"
