import json

import pytest

import oracle
from zdg.audit import (
    ClaimId,
    Reading,
    audit_claim,
    audit_classification,
    claim_predicates,
    default_instances,
    records_json,
)
from zdg.convention import Convention
from zdg.errors import DomainError
from zdg.numtheory import euler_phi, is_prime, is_squarefree


def _one(records, assertion):
    (rec,) = [r for r in records if r.assertion == assertion]
    return rec


def test_bipartite_pair_agrees():
    recs = audit_claim(ClaimId.THM_4_1, [{"p": 3, "q": 5}])
    assert recs and all(r.agrees for r in recs)
    assert _one(recs, "eulerian_odd").computed == "eulerian"


def test_square_of_prime_disagrees_with_witness():
    rec = _one(audit_claim("THM-3.1", [{"p": 5}]), "eulerian")
    assert not rec.agrees
    assert rec.expected == "eulerian" and rec.computed == "not-eulerian"
    assert rec.witness["odd_class"] == {"class": 5, "size": 4, "degree": 3}


def test_cube_claim_agrees_with_odd_witness():
    rec = _one(audit_claim("THM-3.2", [{"p": 3}]), "eulerian")
    assert rec.agrees and rec.computed == "not-eulerian"
    assert rec.witness["odd_class"]["class"] == 9 and rec.witness["odd_class"]["degree"] == 7


def test_every_claim_yields_records():
    for claim in ClaimId:
        assert claim_predicates(claim)
        assert audit_claim(claim)


def test_claim_id_parsing():
    assert ClaimId.parse("thm-4.2") is ClaimId.THM_4_2
    assert ClaimId.parse("CLASS-FINAL") is ClaimId.CLASS_FINAL
    with pytest.raises(ValueError):
        ClaimId.parse("THM-9.9")


@pytest.mark.parametrize("claim", [ClaimId.THM_3_2, ClaimId.THM_4_2, ClaimId.THM_4_3])
def test_not_eulerian_claims_hold_with_witness(claim):
    recs = [r for r in audit_claim(claim) if r.assertion == "eulerian"]
    assert recs
    for r in recs:
        assert r.agrees, r.to_dict()
        params = [v for k, v in r.instance.items() if k in ("p", "q", "n")]
        if all(v % 2 for v in params):
            odd = r.witness["odd_class"]
            assert odd["degree"] % 2 == 1 and odd["size"] > 0
        else:
            assert "odd_class" in r.witness or r.witness["reason"] == "no edges"


def test_not_eulerian_instances_cover_requested_ranges():
    inst = default_instances(ClaimId.THM_4_2, pmax=13, emax=4)
    assert {i["alpha"] for i in inst} == {2, 3, 4}
    assert {i["q"] for i in inst} == {3, 5, 7, 11, 13}


def test_cardinalities_agree_where_formula_is_phi_based():
    for claim, keys in [
        (ClaimId.THM_3_2, ("size_A", "size_B")),
        (ClaimId.THM_3_3, ("size_A_i",)),
        (ClaimId.THM_4_3, ("size_multiples",)),
    ]:
        recs = [r for r in audit_claim(claim) if r.assertion in keys]
        assert recs and all(r.agrees for r in recs), claim


def test_mixed_power_cardinalities_are_computed_from_classes():
    # computed values are phi(n/d); the claimed ones are reported alongside
    for r in audit_claim(ClaimId.THM_4_2, [{"p": 3, "q": 5, "alpha": 2, "beta": 2}]):
        if r.assertion.startswith("size_"):
            d = r.witness["class"] if r.witness else None
            if d is not None:
                assert r.computed == euler_phi(225 // d)
    rec = [r for r in audit_claim(ClaimId.THM_4_2) if r.assertion.startswith("size_")]
    assert any(not r.agrees for r in rec)


def test_out_of_domain_instance_is_error_record():
    recs = audit_claim("THM-4.1", [{"p": 4, "q": 5}, {"p": 3, "q": 7}])
    assert recs[0].assertion == "domain" and recs[0].error and not recs[0].agrees
    assert all(r.error is None for r in recs[1:])


def test_audit_is_deterministic():
    a = records_json(audit_claim("THM-4.3"))
    b = records_json(audit_claim("THM-4.3"))
    assert a == b
    json.loads(a)


def test_classification_50():
    rep = audit_classification(50)
    assert rep.computed_eulerian == [15, 21, 33, 35, 39]
    assert {9, 25, 49} <= set(rep.false_positives)
    assert rep.oracle_checked_upto == 50


def test_classification_200():
    rep = audit_classification(200)
    expected = [n for n in range(4, 201) if n % 2 and not is_prime(n) and is_squarefree(n)]
    assert rep.computed_eulerian == expected
    assert rep.false_positives == [9, 25, 49, 121, 169]
    assert rep.false_negatives == [105, 165, 195]
    assert rep.oracle_checked_upto == 200 and not rep.errors


def test_classification_trail_reading():
    rep = audit_classification(50, reading=Reading.TRAIL)
    assert 9 in rep.computed_eulerian and 25 not in rep.computed_eulerian
    expected = [n for n in oracle.composites(4, 50) if oracle.Graph(n).verdict()["trail"]]
    assert rep.computed_eulerian == expected


def test_loop_convention_audit_runs():
    rep = audit_classification(60, Convention.LOOP_COUNTS_2)
    assert rep.convention is Convention.LOOP_COUNTS_2
    assert 4 in rep.computed_eulerian  # the lone vertex carries a loop


def test_loop1_audit_reports_errors():
    recs = audit_claim("THM-4.1", [{"p": 3, "q": 5}], convention=Convention.LOOP_COUNTS_1)
    assert _one(recs, "structure").agrees
    assert "UnsupportedConvention" in _one(recs, "eulerian_odd").witness["error"]


def test_domain_error_type():
    assert issubclass(DomainError, ValueError)


def test_literal_set_builder_reading_is_reported():
    recs = audit_claim("THM-3.2", [{"p": 3}, {"p": 5}])
    lit = [r for r in recs if r.assertion == "set_A_literal"]
    assert len(lit) == 2 and not any(r.agrees for r in lit)
    # p = 3: same size, but 18 = 2 * 9 belongs to the class of 9
    assert lit[0].witness["literal_size"] == lit[0].witness["class_size"] == 6
    assert lit[0].witness["literal_not_in_class"] == [18]
