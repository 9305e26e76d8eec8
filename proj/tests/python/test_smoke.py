"""Smoke tests for the python bindings."""

import os

import pytest

import ainf

DATA = os.environ.get("AINF_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def path(name):
    return os.path.join(DATA, name)


def test_load_and_inspect():
    alg = ainf.load_algebra(path("tri2.alg"))
    assert alg.name == "tri2"
    assert alg.basis == [("e11", 0), ("e22", 0), ("e12", 1)]
    assert alg.has_delta
    assert not alg.has_pairing
    assert alg.validate() == []


def test_parse_and_serialize_round_trip():
    alg = ainf.load_algebra(path("dual.alg"))
    again = ainf.parse_algebra(alg.serialize())
    assert again.serialize() == alg.serialize()


def test_koszul_sign():
    assert ainf.koszul_sign(1, [1]) == -1
    assert ainf.koszul_sign(1, [0, 0]) == 1
    assert ainf.koszul_sign(2, [3]) == 1


def test_derived_op_values():
    alg = ainf.load_algebra(path("tri2.alg"))
    m2 = ainf.derived_op(alg, 2)
    assert m2[("e11", "e22")] == {"e12": "-1"}
    assert ainf.derived_op(alg, 3) == {}


def test_theorem_checks():
    alg = ainf.load_algebra(path("tri2.alg"))
    arity, table = ainf.stasheff_defect_max(alg, 6)
    assert arity is None and table == {}
    assert ainf.associative_order(alg) == 2
    assert ainf.compat_holds(alg)
    assert ainf.induced_on_cohomology_zero(alg)

    nonsq = ainf.load_algebra(path("nonsq.alg"))
    assert ainf.assoc_vs_delta_square_max(nonsq, 5) is None


def test_delta_cohomology():
    alg = ainf.load_algebra(path("tri2.alg"))
    classes = ainf.delta_cohomology(alg)
    assert classes == [(0, {"e11": "1"})]


def test_hochschild_dims():
    dual = ainf.load_algebra(path("dual.alg"))
    assert ainf.hochschild_dims(dual, 3) == [2, 1, 1, 1]
    mat2 = ainf.load_algebra(path("mat2.alg"))
    assert ainf.hochschild_dims(mat2, 2) == [1, 0, 0]
    with pytest.raises(Exception):
        ainf.hochschild_dims(ainf.load_algebra(path("tri2.alg")), 2)


def test_run_suite():
    rc, text = ainf.run_suite("order", path("tri2.alg"))
    assert rc == 0
    assert "CHECK associative_order cap=6 PASS order=2" in text

    rc, text = ainf.run_suite("all", path("corrupt.alg"))
    assert rc == 1
    assert "FAIL" in text

    rc, text = ainf.run_suite("hochschild", path("tri2.alg"))
    assert rc == 2


def test_missing_input_exits_2():
    rc, text = ainf.run_suite("validate", path("no_such_file.alg"))
    assert rc == 2
    assert "input error" in text


def test_invalid_algebra_exits_2():
    rc, text = ainf.run_suite("order", path("corrupt.alg"))
    assert rc == 2
    assert "invalid algebra" in text
