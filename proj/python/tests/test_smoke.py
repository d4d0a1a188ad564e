from fractions import Fraction

import pytest

import bpba


def test_figure1_reference_is_one():
    z = bpba.partition_function(bpba.figure1(), [1, 1, 1, 1], [1, 1, 1, 1])
    assert z == {"direct": Fraction(1), "aba": Fraction(1), "cba": Fraction(1)}


def test_methods_agree_on_figure1():
    spec = bpba.figure1()
    configs = bpba.all_configs(4)
    direct = bpba.partition_functions(spec, configs, "direct")
    assert len(direct) == 256
    assert bpba.partition_functions(spec, configs, "aba") == direct
    assert bpba.partition_functions(spec, configs, "cba") == direct
    assert all(isinstance(z, Fraction) for z in direct)


def test_boundary_line():
    spec = {"n": 1, "lines": [{"start": 2, "end": 1, "reflected": True, "rapidity": "1/3"}], "q": "2"}
    assert bpba.partition_function(spec, [2], [2], "cba") == Fraction(5, 7)


def test_roots_and_q():
    spec = bpba.init8()
    roots = bpba.bethe_roots(spec)
    assert len(roots) == 4
    for z in roots:
        assert bpba.q_function(spec, z) == 0
    z = Fraction(3, 8)
    assert bpba.q_function(spec, z) == bpba.q_function(spec, -z - 1)


def test_states_are_invariant():
    spec = bpba.figure1()
    for route in ("direct", "aba", "cba"):
        state = bpba.invariant_state(spec, route)
        assert state["L"] == 8
        assert bpba.is_invariant(spec, state, Fraction(2, 9))


def test_plan_replays():
    plan = bpba.plan_moves(bpba.figure1())
    assert plan["moves"]
    assert all(isinstance(m["arg"], Fraction) for m in plan["moves"])


def test_validate_and_errors():
    assert bpba.validate(bpba.figure1()) == (True, [])
    bad = {"n": 1, "lines": [{"start": 2, "end": 1, "reflected": False, "rapidity": "1"}], "q": "1"}
    ok, violations = bpba.validate(bad)
    assert not ok and violations
    with pytest.raises(bpba.ParseError):
        bpba.validate({"n": 1})
    with pytest.raises(bpba.Error):
        bpba.partition_function(bpba.figure1(), [1, 3, 1, 1], [1, 1, 1, 1], "direct")


def test_verify_suite():
    (result,) = bpba.verify("weights", draws=5, seed=3)
    assert result["name"] == "weights"
    assert result["failures"] == []
