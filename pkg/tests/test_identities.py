import pytest

from qverify.identities import (
    IDENTITIES,
    BudgetError,
    build_side,
    get_identity,
    plus_ac_product,
    pochhammer,
    pochhammer_inverse,
    theta_top,
)
from qverify.partitions import enumerate_partitions
from qverify.series import Window, compare, from_terms, mul, one_minus, term

# Windows on which every identity is checked in the ordinary test run.
STANDARD = {
    "eq1": Window(8, -5, 4, 8),
    "eq3": Window(10, 0, 0, 10),
    "eq5-corrected": Window(8, 0, 5, 0, 8),
    "partial-theta": Window(12, 0, 10),
    "gf-R": Window(8, 0, 6, 0, 8),
    "gf-A1": Window(8, 0, 6, 0, 8),
    "gf-A2": Window(8, 0, 6, 0, 8),
    "s3-Ssum": Window(8, -5, 4, 8),
    "s3-B1sum": Window(8, -5, 4, 8),
    "s3-Fixsum-corrected": Window(8, -1, 6, 8),
}


def test_registry_is_complete():
    assert set(IDENTITIES) == set(STANDARD) | {"eq5-printed"}
    assert [i.id for i in IDENTITIES.values() if not i.holds] == ["eq5-printed"]


@pytest.mark.parametrize("identity_id", sorted(STANDARD))
def test_true_identities_hold(identity_id):
    w = STANDARD[identity_id]
    cmp = compare(build_side(identity_id, "LHS", w), build_side(identity_id, "RHS", w), w)
    assert cmp.equal, cmp.mismatches[:5]


@pytest.mark.parametrize("identity_id", sorted(IDENTITIES))
def test_documented_minimal_window_runs(identity_id):
    w = Window(**IDENTITIES[identity_id].minimal_window)
    build_side(identity_id, "LHS", w)
    build_side(identity_id, "RHS", w)


def test_eq1_anchor_at_q1():
    w = Window(1, -2, 2, 2)
    assert build_side("eq1", "LHS", w).coefficient(q=1) == 1
    assert build_side("eq1", "RHS", w).coefficient(q=1) == 1


def test_eq1_constant_term():
    w = Window(0, -2, 2, 2)
    for side in ("LHS", "RHS"):
        assert build_side("eq1", side, w).terms() == {(0, 0, 0, 0): 1}


def test_eq3_rhs_order_one():
    rhs = build_side("eq3", "RHS", Window(1, 0, 0, 1))
    assert rhs.coefficient(q=1, b=0) == 1
    assert rhs.coefficient(q=1, b=1) == 0


def test_partial_theta_anchors():
    w = Window(1, 0, 4)
    for side in ("LHS", "RHS"):
        s = build_side("partial-theta", side, w)
        assert {e: x for e, x in s.items() if e[0] == 0} == {(0, 0, 0, 0): 1, (0, 1, 0, 0): -1}
        assert {e: x for e, x in s.items() if e[0] == 1} == {(1, 2, 0, 0): 1}


def test_gf_r_constant_slice_is_geometric_in_a():
    s = build_side("gf-R", "RHS", Window(3, 0, 5, 0, 3))
    assert {e: x for e, x in s.items() if e[0] == 0} == {(0, j, 0, 0): 1 for j in range(6)}


def test_eq5_printed_falls_short_by_the_plus_ac_product():
    w = Window(8, 0, 6, 0, 8)
    printed = build_side("eq5-printed", "LHS", w)
    corrected = build_side("eq5-corrected", "LHS", w)
    assert compare(printed - corrected, -plus_ac_product(w), w).equal
    rhs = build_side("eq5-printed", "RHS", w)
    assert compare(rhs - printed, plus_ac_product(w), w).equal


def test_plus_ac_product_low_orders():
    # By hand: (1 + acq)(1 + acq^2)... = 1 + acq + acq^2 + (ac + a^2c^2) q^3 + ...
    p = plus_ac_product(Window(3, 0, 3, 0, 3))
    assert p.terms() == {
        (0, 0, 0, 0): 1,
        (1, 1, 0, 1): 1,
        (2, 1, 0, 1): 1,
        (3, 1, 0, 1): 1,
        (3, 2, 0, 2): 1,
    }


def test_euler_pochhammer_against_distinct_partitions():
    w = Window(12)
    euler = pochhammer(term(1, w, q=1), None, w)
    raw: dict = {}
    for p in enumerate_partitions(12, "distinct-positive"):
        key = (p.weight, 0, 0, 0)
        raw[key] = raw.get(key, 0) + (-1) ** p.length
    assert euler == from_terms(raw, w)
    assert [euler.coefficient(q=k) for k in range(6)] == [1, -1, -1, 0, 0, 1]


def test_pochhammer_finite_cases():
    w = Window(4, 0, 3)
    a = term(1, w, a=1)
    assert pochhammer(a, 0, w).terms() == {(0, 0, 0, 0): 1}
    expected = mul(one_minus(1, w, a=1), one_minus(1, w, q=1, a=1))
    assert pochhammer(a, 2, w) == expected


def test_pochhammer_inverse_undoes_pochhammer():
    w = Window(6, 0, 0, 3)
    b = term(1, w, q=1, b=1)
    assert compare(mul(pochhammer(b, 3, w), pochhammer_inverse(b, 3, w)), from_terms({(0, 0, 0, 0): 1}, w), w).equal


def test_budget_is_enforced():
    with pytest.raises(BudgetError, match="a_min"):
        build_side("eq1", "LHS", Window(12))
    n_star = theta_top(12)
    assert n_star == 4
    build_side("eq1", "LHS", Window(12, -(n_star + 1), 0, 2))


def test_unknown_identity():
    with pytest.raises(BudgetError, match="unknown identity"):
        get_identity("eq9")


def test_bad_side_name():
    with pytest.raises(ValueError):
        build_side("eq3", "middle", Window(1))
