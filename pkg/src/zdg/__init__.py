"""Zero-divisor graphs of Z_n: exact degree structure via divisor classes,
Euler circuit/trail decisions and tours, and claim audits against a
brute-force oracle."""
from zdg._kernels import BACKEND
from zdg.audit import (
    ClaimAuditRecord,
    ClaimId,
    Reading,
    audit_claim,
    audit_classification,
    claim_predicates,
)
from zdg.convention import Convention
from zdg.errors import (
    DomainError,
    EmptyGraphError,
    InconsistencyError,
    NoCircuitError,
    NoTrailError,
    TooLargeError,
    UnsupportedConventionError,
    ZDGError,
)
from zdg.eulerian import (
    EulerTour,
    EulerVerdict,
    euler_verdict_explicit,
    euler_verdict_fast,
    find_euler_circuit,
    find_euler_trail,
    validate_tour,
)
from zdg.explicit import (
    Complete,
    CompleteBipartite,
    ExplicitGraph,
    Other,
    build_graph,
    degree_sequence,
    edge_count,
    recognize_structure,
    zero_divisors,
)
from zdg.numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_squarefree,
    proper_divisor_classes_domain,
)
from zdg.quotient import (
    DegreeProfile,
    DivisorClassGraph,
    build_quotient,
    class_degree,
    degree_profile,
    expand_class,
    quotient_connected,
    quotient_edge_count,
)

__version__ = "0.1.0"
