import pytest

import rectify


def test_rectify_golden_qi():
    doc = rectify.rectify([1, 5], 13, 2)
    assert doc["flags"]["verified"] is True
    assert doc["tower"]["degree"] == "2"
    assert doc["tower"]["generators"][0]["anchor"] == "5"


def test_rectify_round_trip_verify():
    doc = rectify.rectify([3, 7], 11, 2)
    assert doc["flags"]["verified"] is True
    rep = rectify.verify_document(doc)
    assert rep["verified"] is True
    assert int(rep["relations_checked"]) > 0


def test_bound_abort_raises():
    with pytest.raises(rectify.BoundAbortError):
        rectify.rectify([3, 7], 11, 3)


def test_force_degrades_to_unverified():
    doc = rectify.rectify([3, 7], 11, 3, force=True)
    assert doc["flags"]["verified"] is False


def test_lift_linear():
    doc = rectify.lift_linear([1, 2], 100003, 2)
    assert doc["guaranteed"] is True
    assert int(doc["multiplier"]) % 100003 == 1


def test_resultant_and_subresultant():
    assert rectify.resultant("x1^2 - 3*x1 + 2", "x1^2 - 4*x1 + 3") == "0"
    s1 = rectify.subresultant("x1^2 - 3*x1 + 2", "x1^2 - 4*x1 + 3", 1, 1)
    assert s1 in ("-x1 + 1", "x1 - 1", "- x1 + 1")


def test_chain_mersenne_round_trip():
    doc = rectify.special_chain(127, "mersenne")
    assert int(doc["target"]) == 127
    assert rectify.verify_chain(doc) is True
    generic = rectify.build_chain(127, 3)
    assert rectify.verify_chain(generic) is True


def test_adversarial_set():
    doc = rectify.adversarial_set(127, 3)
    assert doc["witness_verified"] is True
    assert len(doc["set"]) >= 2
    residues = {int(s["value"]) % 127 for s in doc["witness"]["steps"]}
    assert {int(a) for a in doc["set"]} == residues


def test_transfer_sumproduct():
    doc = rectify.transfer_report([2, 3], 1009, "sumproduct")
    assert doc["all_equal"] is True
    assert doc["verified"] is True


def test_demos():
    pts, lines, inc = rectify.sharpness_lattice(512)
    assert (pts, lines, inc) == (128, 64, 256)
    assert rectify.sparse_square_terms("x1^2 + x1 + 1") == (3, 5)
