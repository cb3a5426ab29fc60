"""Run-vector calculus for binary sequences.

Exact integer tooling for finite {-1,+1} sequences: run-length
encoding, aperiodic and periodic autocorrelations, the run-structure
sign calculus and run vector, machine-checkable verifiers for the
structural results built on them, and pruned exhaustive searches that
enumerate and classify Barker sequences of odd length.
"""

from .lemmalab import (
    BalancedProfile,
    BarkerPredictions,
    SweepRecord,
    SweepReport,
    Verdict,
    balanced_profile,
    balanced_run_tuples,
    barker_predictions,
    check_lemma,
    check_p_odd,
    delta_autocorrelation,
    sweep,
    theorem1_residual,
    verify_prop_skew_balanced,
)
from .search import (
    ClassificationReport,
    SearchSpec,
    brute_force_barker,
    canonical_form,
    canonical_representatives,
    classify_odd_barker,
    counts_csv,
    enumerate_balanced_rles,
    enumerate_barker,
    find_barker_sequences,
)
from .seqcore import (
    AutocorrelationProfile,
    BinarySequence,
    ParseError,
    RunLengthEncoding,
    RunStructure,
    RunVector,
    all_sequences,
    aperiodic_autocorrelations,
    autocorrelation_profile,
    decode_rle,
    encode_rle,
    f_eval,
    is_balanced,
    is_barker,
    is_skew_symmetric,
    periodic_autocorrelations,
    run_structure,
    run_vector,
    run_vector_of,
    u_k,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrelationProfile",
    "BalancedProfile",
    "BarkerPredictions",
    "BinarySequence",
    "ClassificationReport",
    "ParseError",
    "RunLengthEncoding",
    "RunStructure",
    "RunVector",
    "SearchSpec",
    "SweepRecord",
    "SweepReport",
    "Verdict",
    "all_sequences",
    "aperiodic_autocorrelations",
    "autocorrelation_profile",
    "balanced_profile",
    "balanced_run_tuples",
    "barker_predictions",
    "brute_force_barker",
    "canonical_form",
    "canonical_representatives",
    "check_lemma",
    "check_p_odd",
    "classify_odd_barker",
    "counts_csv",
    "decode_rle",
    "delta_autocorrelation",
    "encode_rle",
    "enumerate_balanced_rles",
    "enumerate_barker",
    "f_eval",
    "find_barker_sequences",
    "is_balanced",
    "is_barker",
    "is_skew_symmetric",
    "periodic_autocorrelations",
    "run_structure",
    "run_vector",
    "run_vector_of",
    "sweep",
    "theorem1_residual",
    "u_k",
    "verify_prop_skew_balanced",
]
