"""Exact Hankel-type determinants and divisibility checks for binomial-sum
sequences.

The package generates seven families of combinatorial sequences in exact
arbitrary-precision arithmetic, evaluates Hankel determinants with three
independent engines, and machine-verifies a registry of divisibility,
parity, congruence, and positivity claims about them.
"""
from ._backend import BACKEND
from .exact import InexactDivisionError, exact_div
from .hankel import (
    DetResult,
    IntegerMatrix,
    MinorViolation,
    QuotientCheck,
    all_minors_nonneg,
    build_hankel,
    det,
    det_bareiss,
    det_dodgson,
    det_laplace,
    leading_principal_minors,
    quotient_check,
)
from .reports import ReportEntry, VerificationReport, Witness
from .sequences import (
    Family,
    SequenceId,
    SequenceTerms,
    domb,
    franel,
    prefix,
    term,
    term_by_recurrence,
)
from .transforms import (
    binom_convolution,
    binom_sq_convolution,
    binomial_transform,
    inverse_binomial_transform,
    iterated_transform,
)
from .verify import (
    CLAIM_IDS,
    REGISTRY,
    CongruenceClaim,
    probe_positivity_conjecture,
    run_all,
    run_claim,
    verify_congruence,
    verify_franel_prime_congruences,
    verify_theorem_1_1,
    verify_theorem_1_2,
    verify_theorem_1_3,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CLAIM_IDS",
    "CongruenceClaim",
    "DetResult",
    "Family",
    "InexactDivisionError",
    "IntegerMatrix",
    "MinorViolation",
    "QuotientCheck",
    "REGISTRY",
    "ReportEntry",
    "SequenceId",
    "SequenceTerms",
    "VerificationReport",
    "Witness",
    "all_minors_nonneg",
    "binom_convolution",
    "binom_sq_convolution",
    "binomial_transform",
    "build_hankel",
    "det",
    "det_bareiss",
    "det_dodgson",
    "det_laplace",
    "domb",
    "exact_div",
    "franel",
    "inverse_binomial_transform",
    "iterated_transform",
    "leading_principal_minors",
    "prefix",
    "probe_positivity_conjecture",
    "quotient_check",
    "run_all",
    "run_claim",
    "term",
    "term_by_recurrence",
    "verify_congruence",
    "verify_franel_prime_congruences",
    "verify_theorem_1_1",
    "verify_theorem_1_2",
    "verify_theorem_1_3",
    "__version__",
]
