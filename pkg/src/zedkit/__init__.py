"""Toolkit for the zero exemplar distance problem on genomes with duplicate
genes: exact solvers and polynomial special cases for ordered and unordered
genomes, mandatory-symbol LCS, and executable 3SAT hardness gadgets."""

from .errors import (
    CapExceededError,
    FamilyMismatchError,
    MissingWeightError,
    ParseDiagnostic,
    ParseError,
    PreconditionViolatedError,
    SearchTimeoutError,
    ZedError,
)
from .model import (
    Alphabet,
    CertificateCheck,
    InstanceClass,
    SeqGenome,
    SetGenome,
    classify_instance,
    occurrence_profile,
    verify_seq_certificate,
)
from .sat import (
    Assignment,
    CnfFormula,
    GeneNameTable,
    Literal,
    assignment_from_seq_certificate,
    assignment_from_set_certificate,
    brute_force_sat,
    eval_assignment,
    reduce_3sat_to_seq_zed,
    reduce_3sat_to_set_zed,
    seq_certificate_from_assignment,
    set_certificate_from_assignment,
)
from .seq import (
    SeqDecision,
    WeightAssignment,
    elcs_exact_oracle,
    elcs_feasible,
    elcs_special,
    is_subsequence,
    lcs,
    weighted_lcs,
    zed_one_side_duplicate_free,
    zed_seq_exact,
    zed_seq_special,
)
from .sets import (
    IntersectionGraph,
    Matching,
    SetDecision,
    build_intersection_graph,
    max_weight_bipartite_matching,
    pad_to_equal_k,
    verify_set_certificate,
    zed_set_exact,
    zed_set_fpt,
    zed_set_matching,
)

__all__ = [
    "Alphabet",
    "Assignment",
    "CapExceededError",
    "CertificateCheck",
    "CnfFormula",
    "FamilyMismatchError",
    "GeneNameTable",
    "InstanceClass",
    "IntersectionGraph",
    "Literal",
    "Matching",
    "MissingWeightError",
    "ParseDiagnostic",
    "ParseError",
    "PreconditionViolatedError",
    "SearchTimeoutError",
    "SeqDecision",
    "SeqGenome",
    "SetDecision",
    "SetGenome",
    "WeightAssignment",
    "ZedError",
    "assignment_from_seq_certificate",
    "assignment_from_set_certificate",
    "brute_force_sat",
    "build_intersection_graph",
    "classify_instance",
    "elcs_exact_oracle",
    "elcs_feasible",
    "elcs_special",
    "eval_assignment",
    "is_subsequence",
    "lcs",
    "max_weight_bipartite_matching",
    "occurrence_profile",
    "pad_to_equal_k",
    "reduce_3sat_to_seq_zed",
    "reduce_3sat_to_set_zed",
    "seq_certificate_from_assignment",
    "set_certificate_from_assignment",
    "verify_seq_certificate",
    "verify_set_certificate",
    "weighted_lcs",
    "zed_one_side_duplicate_free",
    "zed_seq_exact",
    "zed_seq_special",
    "zed_set_exact",
    "zed_set_fpt",
    "zed_set_matching",
]
