"""Machine-checkable versions of the claimed Eulerian results for Gamma(Z_n).

Every claim is split into sub-assertions that can be evaluated at concrete
parameters. Computed values come from the divisor-class path; whenever the
graph is small enough it is also built explicitly and the two routes must
agree, otherwise :class:`InconsistencyError` is raised.

Sets named in the claims (A, B, A_i, A_{p^i}, ...) are mapped to
gcd classes: the set of "multiples of X" becomes the class gcd(n, x) = X.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, prod

from zdg import quotient as qt
from zdg.convention import Convention
from zdg.errors import InconsistencyError, ZDGError
from zdg.eulerian import EulerVerdict, euler_verdict_explicit, euler_verdict_fast
from zdg.explicit import (
    MAX_EDGES,
    Complete,
    CompleteBipartite,
    build_graph,
    recognize_structure,
)
from zdg.numtheory import euler_phi, factorize, is_prime

EULERIAN = "eulerian"
NOT_EULERIAN = "not-eulerian"

# explicit cross-check only below this many vertices
ORACLE_MAX_VERTICES = 20_000


class ClaimId(str, enum.Enum):
    THM_3_1 = "THM-3.1"
    THM_3_2 = "THM-3.2"
    THM_3_3 = "THM-3.3"
    THM_4_1 = "THM-4.1"
    THM_4_2 = "THM-4.2"
    THM_4_3 = "THM-4.3"
    CLASS_FINAL = "CLASS-FINAL"

    @classmethod
    def parse(cls, value: "str | ClaimId") -> "ClaimId":
        if isinstance(value, ClaimId):
            return value
        key = value.strip().upper()
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown claim {value!r}; choose from {[c.value for c in cls]}")

    def __str__(self):
        return self.value


class Reading(str, enum.Enum):
    """Whether "Eulerian" means a closed circuit or any Euler trail."""

    CIRCUIT = "circuit"
    TRAIL = "trail"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SubAssertion:
    key: str
    statement: str
    domain: str


_PREDICATES: dict[ClaimId, tuple[SubAssertion, ...]] = {
    ClaimId.THM_3_1: (
        SubAssertion("structure", "Gamma(Z_{p^2}) is the complete graph K_{p-1}", "p prime"),
        SubAssertion("eulerian", "Gamma(Z_{p^2}) is Eulerian iff p > 2", "p prime"),
        SubAssertion("vertex_degree", "every vertex of Gamma(Z_{p^2}) has degree p-1", "p prime"),
    ),
    ClaimId.THM_3_2: (
        SubAssertion("eulerian", "Gamma(Z_{p^3}) is not Eulerian", "p prime"),
        SubAssertion("size_A", "class of p has p(p-1) members", "p prime"),
        SubAssertion("size_B", "class of p^2 has p-1 members", "p prime"),
        SubAssertion("degree_A", "members of the class of p have degree p-1", "p prime"),
        SubAssertion("degree_B", "members of the class of p^2 have degree p^2-2", "p prime"),
        SubAssertion(
            "set_A_literal",
            "{kp : 1 <= k <= p^2-1, k does not divide p} is the class of p",
            "p prime",
        ),
    ),
    ClaimId.THM_3_3: (
        SubAssertion("eulerian", "Gamma(Z_{p^m}) is not Eulerian", "p prime, m >= 2"),
        SubAssertion(
            "size_A_i", "class of p^i has p^(m-i) - p^(m-i-1) members", "1 <= i <= m-1"
        ),
        SubAssertion(
            "degree_A_i_upper",
            "reading 1: class of p^i has degree p^i - 2 for i >= ceil(m/2)",
            "ceil(m/2) <= i <= m-1",
        ),
        SubAssertion(
            "degree_A_i_uniform",
            "reading 2: every class p^i has degree p^(m-1) - 2",
            "1 <= i <= m-1",
        ),
    ),
    ClaimId.THM_4_1: (
        SubAssertion(
            "structure", "Gamma(Z_pq) is complete bipartite K_{p-1,q-1}", "p < q primes"
        ),
        SubAssertion(
            "eulerian_odd",
            "Gamma(Z_pq) is Eulerian when p and q are odd",
            "p < q odd primes",
        ),
        SubAssertion("not_eulerian_even", "Gamma(Z_pq) is not Eulerian when 2 in {p, q}", "p = 2"),
    ),
    ClaimId.THM_4_2: (
        SubAssertion(
            "eulerian", "Gamma(Z_{p^a q^b}) is not Eulerian", "p < q primes, a, b >= 2"
        ),
        SubAssertion("size_A_p^i", "class of p^i has p^i - 1 members", "1 <= i <= a"),
        SubAssertion("size_A_q^j", "class of q^j has q^j - 1 members", "1 <= j <= b"),
        SubAssertion(
            "size_A_p^iq^j",
            "class of p^i q^j has (p^i - 1)(q^j - 1) members",
            "1 <= i <= a, 1 <= j <= b, (i, j) != (a, b)",
        ),
        SubAssertion(
            "degree_A_p^iq^j",
            "class of p^i q^j has degree p^i q^j - 2",
            "1 <= i <= a, 1 <= j <= b, (i, j) != (a, b)",
        ),
    ),
    ClaimId.THM_4_3: (
        SubAssertion(
            "eulerian", "Gamma(Z_n) is not Eulerian when every exponent is >= 2", "all a_i >= 2"
        ),
        SubAssertion(
            "size_multiples",
            "the nonzero multiples of n / p_i^a_i number p_i^a_i - 1",
            "each prime p_i",
        ),
        SubAssertion(
            "degree_p^a", "class of p_i^a_i has degree p_i^a_i - 1", "each p_i, k >= 2"
        ),
        SubAssertion(
            "degree_p^a_odd", "that degree p_i^a_i - 1 is odd", "each p_i, k >= 2"
        ),
    ),
    ClaimId.CLASS_FINAL: (
        SubAssertion(
            "eulerian",
            "composite n is Eulerian iff n = p^2 or n = pq (p, q odd)",
            "composite n",
        ),
    ),
}


def claim_predicates(claim: "ClaimId | str") -> tuple[SubAssertion, ...]:
    return _PREDICATES[ClaimId.parse(claim)]


@dataclass(frozen=True)
class ClaimAuditRecord:
    claim: ClaimId
    assertion: str
    instance: dict
    convention: Convention
    reading: Reading
    expected: object
    computed: object
    agrees: bool
    witness: dict | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim.value,
            "assertion": self.assertion,
            "instance": self.instance,
            "convention": self.convention.value,
            "reading": self.reading.value,
            "expected": self.expected,
            "computed": self.computed,
            "agrees": self.agrees,
            "witness": self.witness,
            "error": self.error,
        }


# cross-checked primitives ---------------------------------------------------------


def _materializable(n: int, limit: int) -> bool:
    q = qt.build_quotient(n)
    return q.vertex_count <= limit and qt.quotient_edge_count(n, q) <= MAX_EDGES


@lru_cache(maxsize=8192)
def checked_verdict(n: int, convention: Convention, oracle_limit: int = ORACLE_MAX_VERTICES):
    """Fast verdict, confirmed against the explicit graph when that is small enough.

    Returns ``(verdict, oracle_checked)``.
    """
    fast = euler_verdict_fast(n, convention)
    if not _materializable(n, oracle_limit):
        return fast, False
    slow = euler_verdict_explicit(build_graph(n, convention))
    if slow != fast:
        raise InconsistencyError(f"fast and explicit verdicts differ for n={n}: {fast} vs {slow}")
    return fast, True


@lru_cache(maxsize=4096)
def checked_structure(n: int, oracle_limit: int = ORACLE_MAX_VERTICES) -> str:
    fast = qt.recognize_structure_fast(n)
    if _materializable(n, oracle_limit):
        slow = recognize_structure(build_graph(n))
        if slow != fast:
            raise InconsistencyError(f"structure differs for n={n}: {fast} vs {slow}")
    return str(fast)


def holds(verdict: EulerVerdict, reading: Reading) -> bool:
    return verdict.circuit_exists if reading is Reading.CIRCUIT else verdict.trail_exists


def _odd_witness(n: int, convention: Convention) -> dict | None:
    """Smallest odd-degree class, if any."""
    prof = qt.degree_profile(n, convention)
    for e in prof.entries:
        if e.degree % 2:
            return {"class": e.d, "size": e.size, "degree": e.degree}
    return None


def _eulerian_witness(n: int, verdict: EulerVerdict, reading: Reading) -> dict:
    w: dict = {"odd_degree_vertex_count": verdict.odd_degree_vertex_count}
    if verdict.degenerate:
        w["reason"] = "no edges"
        return w
    if not verdict.connected:
        w["reason"] = "disconnected"
    odd = _odd_witness(n, verdict.convention)
    if odd is not None:
        w["odd_class"] = odd
    elif holds(verdict, reading):
        w["reason"] = "all degrees even"
    return w


# record builders ---------------------------------------------------------------


class _Ctx:
    def __init__(self, claim, convention, reading, oracle_limit):
        self.claim = claim
        self.convention = convention
        self.reading = reading
        self.oracle_limit = oracle_limit
        self.records: list[ClaimAuditRecord] = []

    def add(self, assertion, instance, expected, computed, witness=None):
        agrees = expected == computed
        if not agrees and witness is None:
            witness = {"expected": expected, "computed": computed}
        self.records.append(
            ClaimAuditRecord(
                self.claim, assertion, dict(instance), self.convention, self.reading,
                expected, computed, agrees, witness,
            )
        )

    def fail(self, assertion, instance, expected, exc: Exception):
        self.records.append(
            ClaimAuditRecord(
                self.claim, assertion, dict(instance), self.convention, self.reading,
                expected, None, False, {"error": type(exc).__name__}, str(exc),
            )
        )

    def eulerian(self, assertion, instance, n, expected_eulerian: bool):
        expected = EULERIAN if expected_eulerian else NOT_EULERIAN
        try:
            verdict, checked = checked_verdict(n, self.convention, self.oracle_limit)
        except InconsistencyError:
            raise
        except ZDGError as exc:
            # e.g. loop1, where parity says nothing about tours
            self.fail(assertion, instance, expected, exc)
            return
        ok = holds(verdict, self.reading)
        computed = EULERIAN if ok else NOT_EULERIAN
        witness = None
        if not ok or computed != expected:
            witness = _eulerian_witness(n, verdict, self.reading)
            witness["oracle_checked"] = checked
        self.add(assertion, instance, expected, computed, witness)

    def size(self, assertion, instance, n, d, expected):
        computed = euler_phi(n // d)
        w = None if computed == expected else {"class": d, "claimed": expected, "computed": computed}
        self.add(assertion, instance, expected, computed, w)

    def degree(self, assertion, instance, n, d, expected):
        computed = qt.class_degree(n, d, self.convention)
        w = None if computed == expected else {"class": d, "claimed": expected, "computed": computed}
        self.add(assertion, instance, expected, computed, w)


def _need_prime(*ps):
    for p in ps:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")


def _audit_3_1(ctx, inst):
    p = inst["p"]
    _need_prime(p)
    n = p * p
    ctx.add("structure", inst, str(Complete(p - 1)), checked_structure(n, ctx.oracle_limit))
    ctx.eulerian("eulerian", inst, n, p > 2)
    ctx.degree("vertex_degree", inst, n, p, p - 1)


def _audit_3_2(ctx, inst):
    p = inst["p"]
    _need_prime(p)
    n = p**3
    ctx.eulerian("eulerian", inst, n, False)
    ctx.size("size_A", inst, n, p, p * (p - 1))
    ctx.size("size_B", inst, n, p * p, p - 1)
    ctx.degree("degree_A", inst, n, p, p - 1)
    ctx.degree("degree_B", inst, n, p * p, p * p - 2)
    # the set-builder condition read literally ("k does not divide p") rather
    # than as "p does not divide k"
    literal = [k * p for k in range(1, p * p) if p % k]
    members = qt.expand_class(n, p)
    same = literal == members
    ctx.add(
        "set_A_literal", inst, True, same,
        None if same else {
            "literal_size": len(literal),
            "class_size": len(members),
            "literal_not_in_class": [x for x in literal if x not in set(members)][:5],
        },
    )


def _audit_3_3(ctx, inst):
    p, m = inst["p"], inst["m"]
    _need_prime(p)
    if m < 2:
        raise ValueError("m must be >= 2")
    n = p**m
    ctx.eulerian("eulerian", inst, n, False)
    for i in range(1, m):
        sub = {**inst, "i": i}
        ctx.size("size_A_i", sub, n, p**i, p ** (m - i) - p ** (m - i - 1))
        if i >= ceil(m / 2):
            ctx.degree("degree_A_i_upper", sub, n, p**i, p**i - 2)
        ctx.degree("degree_A_i_uniform", sub, n, p**i, p ** (m - 1) - 2)


def _audit_4_1(ctx, inst):
    p, q = inst["p"], inst["q"]
    _need_prime(p, q)
    if p >= q:
        raise ValueError("need p < q")
    n = p * q
    ctx.add(
        "structure", inst, str(CompleteBipartite(p - 1, q - 1)), checked_structure(n, ctx.oracle_limit)
    )
    if p == 2:
        ctx.eulerian("not_eulerian_even", inst, n, False)
    else:
        ctx.eulerian("eulerian_odd", inst, n, True)


def _audit_4_2(ctx, inst):
    p, q, a, b = inst["p"], inst["q"], inst["alpha"], inst["beta"]
    _need_prime(p, q)
    if p >= q or a < 2 or b < 2:
        raise ValueError("need p < q and alpha, beta >= 2")
    n = p**a * q**b
    ctx.eulerian("eulerian", inst, n, False)
    for i in range(1, a + 1):
        ctx.size("size_A_p^i", {**inst, "i": i}, n, p**i, p**i - 1)
    for j in range(1, b + 1):
        ctx.size("size_A_q^j", {**inst, "j": j}, n, q**j, q**j - 1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            if (i, j) == (a, b):
                continue
            sub = {**inst, "i": i, "j": j}
            d = p**i * q**j
            ctx.size("size_A_p^iq^j", sub, n, d, (p**i - 1) * (q**j - 1))
            ctx.degree("degree_A_p^iq^j", sub, n, d, d - 2)


def _audit_4_3(ctx, inst):
    n = inst["n"]
    fac = factorize(n)
    if any(e < 2 for e in fac.exponents):
        raise ValueError(f"{n} = {fac} has an exponent below 2")
    ctx.eulerian("eulerian", inst, n, False)
    if len(fac) < 2:
        # n / p^a = 1: the "multiples" are all of Z_n, not a set of zero divisors
        return
    q = qt.build_quotient(n)
    for p, a in fac:
        pa = p**a
        sub = {**inst, "p": p, "alpha": a}
        step = n // pa
        computed = sum(c.size for c in q.classes if c.d % step == 0)
        ctx.add("size_multiples", sub, pa - 1, computed)
        ctx.degree("degree_p^a", sub, n, pa, pa - 1)
        deg = qt.class_degree(n, pa, ctx.convention)
        parity = "odd" if deg % 2 else "even"
        ctx.add(
            "degree_p^a_odd", sub, "odd", parity,
            None if parity == "odd" else {"class": pa, "degree": deg},
        )


def claimed_eulerian(n: int) -> bool:
    """Membership in the claimed Eulerian set p^2 or pq, with p, q odd."""
    fac = factorize(n)
    if any(p == 2 for p in fac.primes):
        return False
    return fac.exponents in ((2,), (1, 1))


def claimed_eulerian_literal(n: int) -> bool:
    """The classification read literally: any p^2 or any pq with p < q."""
    return factorize(n).exponents in ((2,), (1, 1))


def _audit_final(ctx, inst):
    n = inst["n"]
    if n < 4 or is_prime(n):
        raise ValueError(f"{n} is not composite")
    ctx.eulerian("eulerian", inst, n, claimed_eulerian(n))


_RUNNERS = {
    ClaimId.THM_3_1: _audit_3_1,
    ClaimId.THM_3_2: _audit_3_2,
    ClaimId.THM_3_3: _audit_3_3,
    ClaimId.THM_4_1: _audit_4_1,
    ClaimId.THM_4_2: _audit_4_2,
    ClaimId.THM_4_3: _audit_4_3,
    ClaimId.CLASS_FINAL: _audit_final,
}


def _primes_upto(k: int) -> list[int]:
    return [p for p in range(2, k + 1) if is_prime(p)]


def default_instances(
    claim: "ClaimId | str", pmax: int = 13, emax: int = 4, nmax: int = 200
) -> list[dict]:
    claim = ClaimId.parse(claim)
    ps = _primes_upto(pmax)
    if claim in (ClaimId.THM_3_1, ClaimId.THM_3_2):
        return [{"p": p} for p in ps]
    if claim is ClaimId.THM_3_3:
        return [{"p": p, "m": m} for p in ps for m in range(3, max(emax, 3) + 1)]
    if claim is ClaimId.THM_4_1:
        return [{"p": p, "q": q} for p, q in itertools.combinations(ps, 2)]
    if claim is ClaimId.THM_4_2:
        return [
            {"p": p, "q": q, "alpha": a, "beta": b}
            for p, q in itertools.combinations(ps, 2)
            for a in range(2, emax + 1)
            for b in range(2, emax + 1)
        ]
    if claim is ClaimId.THM_4_3:
        out = set()
        for k in (1, 2, 3):
            for primes in itertools.combinations(ps[:4], k):
                for exps in itertools.product(range(2, emax + 1), repeat=k):
                    out.add(prod(p**e for p, e in zip(primes, exps)))
        return [{"n": n} for n in sorted(out)]
    return [{"n": n} for n in range(4, nmax + 1) if not is_prime(n)]


def audit_claim(
    claim: "ClaimId | str",
    instances: list[dict] | None = None,
    convention: Convention = Convention.NO_LOOPS,
    reading: Reading | str = Reading.CIRCUIT,
    oracle_limit: int = ORACLE_MAX_VERTICES,
) -> list[ClaimAuditRecord]:
    """Evaluate every sub-assertion of ``claim`` at each instance.

    An instance outside the claim's domain yields an error record; it does
    not abort the run.
    """
    claim = ClaimId.parse(claim)
    ctx = _Ctx(claim, Convention.parse(convention), Reading(reading), oracle_limit)
    if instances is None:
        instances = default_instances(claim)
    run = _RUNNERS[claim]
    for inst in instances:
        start = len(ctx.records)
        try:
            run(ctx, inst)
        except InconsistencyError:
            raise
        except (ValueError, KeyError, ZDGError) as exc:
            del ctx.records[start:]
            ctx.fail("domain", inst, None, exc)
    return ctx.records


# classification sweep --------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    n_max: int
    convention: Convention
    reading: Reading
    computed_eulerian: list[int]
    claimed_eulerian: list[int]
    false_positives: list[int]
    false_negatives: list[int]
    literal_false_positives: list[int]
    oracle_checked_upto: int
    errors: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "convention": self.convention.value,
            "reading": self.reading.value,
            "computed_eulerian": self.computed_eulerian,
            "claimed_eulerian": self.claimed_eulerian,
            "false_positives": self.false_positives,
            "false_negatives": self.false_negatives,
            "literal_false_positives": self.literal_false_positives,
            "oracle_checked_upto": self.oracle_checked_upto,
            "errors": {str(k): v for k, v in self.errors.items()},
        }


def audit_classification(
    n_max: int,
    convention: Convention = Convention.NO_LOOPS,
    reading: Reading | str = Reading.CIRCUIT,
    oracle_limit: int = ORACLE_MAX_VERTICES,
) -> ClassificationReport:
    """Diff the true Eulerian set of composite n <= n_max against the claimed one.

    false positives: claimed Eulerian but not; false negatives: Eulerian but
    missing from the claimed set.
    """
    convention = Convention.parse(convention)
    reading = Reading(reading)
    computed, claimed, literal, errors = [], [], [], {}
    checked_upto = 3
    all_checked = True
    for n in range(4, n_max + 1):
        if is_prime(n):
            continue
        try:
            verdict, checked = checked_verdict(n, convention, oracle_limit)
        except InconsistencyError:
            raise
        except ZDGError as exc:
            errors[n] = str(exc)
            continue
        all_checked = all_checked and checked
        if all_checked:
            checked_upto = n
        if holds(verdict, reading):
            computed.append(n)
        if claimed_eulerian(n):
            claimed.append(n)
        if claimed_eulerian_literal(n):
            literal.append(n)
    cset = set(computed)
    return ClassificationReport(
        n_max=n_max,
        convention=convention,
        reading=reading,
        computed_eulerian=computed,
        claimed_eulerian=claimed,
        false_positives=[n for n in claimed if n not in cset],
        false_negatives=[n for n in computed if n not in set(claimed)],
        literal_false_positives=[n for n in literal if n not in cset],
        oracle_checked_upto=checked_upto,
        errors=errors,
    )


def records_json(records: list[ClaimAuditRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)
