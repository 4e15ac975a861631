import pytest
from hypothesis import given
from hypothesis import strategies as st

from fermat_invariants.relations import (
    DEGENERATION_NOTE,
    RULE_H_EQ,
    InvariantReport,
    InvariantStatus,
    check_calabi_yau_bound,
    infer,
    reconcile_height,
)
from fermat_invariants.residue import InvalidInput
from fermat_invariants.surface import HeightClass


def test_k3_ordinary():
    rep = infer(0, 1, 20)
    assert rep.b.kind == "exact" and rep.b.value == 0
    assert rep.h.value == 1
    assert DEGENERATION_NOTE in rep.notes


def test_a_two_is_infinite():
    rep = infer(2, 4, 45)
    assert rep.b.kind == rep.h.kind == "infinite"
    assert str(rep.b) == str(rep.h) == "inf"


def test_a_one_interval_or_infinite():
    rep = infer(1, 4, 45)
    assert rep.b.finite == (1, 45) and rep.b.infinite
    assert rep.h.finite == (5, 49) and rep.h.infinite
    assert rep.b.kind == "interval_or_infinite"
    assert str(rep.h) == "5..49|inf"


def test_rigid_calabi_yau_with_a_one():
    rep = infer(1, 1, 0)
    assert rep.b.kind == rep.h.kind == "infinite"
    assert check_calabi_yau_bound(rep)


def test_pg_gt_one_conflict_note():
    rep = infer(0, 4, 45)
    assert rep.h.value == 4
    noted = reconcile_height(rep, HeightClass.ONE)
    assert any(n.startswith("conflict") for n in noted.notes)
    assert noted.h.value == 4
    k3 = reconcile_height(infer(0, 1, 20), HeightClass.ONE)
    assert not any(n.startswith("conflict") for n in k3.notes)


def test_calabi_yau_bound():
    assert check_calabi_yau_bound(infer(0, 1, 20))
    assert check_calabi_yau_bound(infer(1, 1, 20))
    synthetic = InvariantReport(
        a=InvariantStatus.exact(1, "given"),
        b=InvariantStatus.exact(24, "synthetic"),
        h=InvariantStatus.exact(25, RULE_H_EQ),
        p_g=1, h_n_minus_1_1=20,
    )
    assert not check_calabi_yau_bound(synthetic)
    with pytest.raises(InvalidInput):
        check_calabi_yau_bound(infer(0, 4, 45))


def test_report_enforces_shift():
    with pytest.raises(InvalidInput):
        InvariantReport(
            a=InvariantStatus.exact(0, "given"),
            b=InvariantStatus.exact(0, "x"),
            h=InvariantStatus.exact(3, "x"),
            p_g=1, h_n_minus_1_1=20,
        )


def test_negative_inputs_rejected():
    with pytest.raises(InvalidInput):
        infer(-1, 1, 1)
    with pytest.raises(InvalidInput):
        infer(0, -1, 1)


def test_status_forms():
    assert InvariantStatus.interval(3, 3, "r").kind == "exact"
    assert InvariantStatus.unknown().kind == "unknown"
    assert str(InvariantStatus.unknown()) == "unknown"
    with pytest.raises(InvalidInput):
        InvariantStatus((4, 2), False, "r")


def _values(status, cap=500):
    vals = set()
    if status.finite:
        vals |= set(range(status.finite[0], status.finite[1] + 1))
    if status.infinite:
        vals.add("inf")
    return vals


@given(st.integers(0, 6), st.integers(0, 30), st.integers(0, 60))
def test_h_is_b_translate(a, p_g, h11):
    rep = infer(a, p_g, h11)
    shifted = {v if v == "inf" else v + p_g for v in _values(rep.b)}
    assert shifted == _values(rep.h)


@given(st.integers(0, 30), st.integers(0, 60))
def test_a_classes_disjoint(p_g, h11):
    sets = [_values(infer(a, p_g, h11).b) for a in (0, 1, 2)]
    assert not sets[0] & sets[1] and not sets[0] & sets[2]
    # a = 1 and a >= 2 may share only the value oo
    assert sets[1] & sets[2] <= {"inf"}
