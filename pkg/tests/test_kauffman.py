"""The brute-force bracket oracle and its targeted variant."""

import pytest

from catlattice import kauffman as K
from catlattice import laurent as L
from catlattice import states as S


def test_loop_weight():
    assert K.LOOP_WEIGHT == {-2: -1, 2: -1}


def test_smooth_single_crossing():
    neg = K.smooth(((-1,),))
    assert S.render_state(neg.state) == "cat(1,1): T1-L1, R1-B1"
    assert neg.loops == 0
    pos = K.smooth(((1,),))
    assert S.render_state(pos.state) == "cat(1,1): T1-R1, L1-B1"
    assert pos.loops == 0


def test_smooth_loop_counting():
    # -+ over +- closes one loop in the middle of the square
    res = K.smooth(((-1, 1), (1, -1)))
    assert res.loops == 1
    # the alternating 3x3 checkerboard closes two
    res33 = K.smooth(((1, -1, 1), (-1, 1, -1), (1, -1, 1)))
    assert res33.loops == 2


@pytest.mark.parametrize(
    "grid, msg",
    [
        ((), "grid must have at least one row and column"),
        (((),), "grid must have at least one row and column"),
        (((1,), (1, -1)), "grid is not rectangular"),
        (((2,),), "bad marker"),
        (((0,),), "bad marker"),
    ],
)
def test_smooth_validation(grid, msg):
    with pytest.raises(ValueError, match=msg):
        K.smooth(grid)


def test_every_grid_lands_on_a_catalan_state():
    import itertools

    for bits in itertools.product((1, -1), repeat=4):
        grid = (bits[:2], bits[2:])
        res = K.smooth(grid)
        assert res.state.is_catalan
        assert S.is_realizable(res.state)


def test_bracket_table_matches_plain_enumeration():
    for m, n in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2)]:
        fold = K.bracket_table(m, n)
        plain = K.bracket_table_by_enumeration(m, n)
        assert fold == plain, (m, n)


def test_bracket_table_support_is_the_realizable_set():
    for m, n in [(2, 2), (2, 3)]:
        table = K.bracket_table(m, n)
        support = {C for C, v in table.items() if not L.is_zero(v)}
        realizable = {
            C for C in S.enumerate_catalan(m, n) if S.is_realizable(C)
        }
        assert support == realizable


def test_bracket_table_total_weight():
    # summing all entries recovers the bracket of the whole tangle summed
    # over closures; at A = 1 every grid weighs (-2)^loops, so the total
    # must be an integer-valued check independent of the fold order
    table = K.bracket_table(2, 2)
    total_at_one = sum(sum(v.values()) for v in table.values())
    by_enum = K.bracket_table_by_enumeration(2, 2)
    assert total_at_one == sum(sum(v.values()) for v in by_enum.values())


def test_oracle_coefficient_and_cache():
    C = S.parse_state("cat(2,2): T1-L1, T2-R1, L2-B1, R2-B2")
    assert L.render(K.oracle_coefficient(C)) == "A^-2 + A^2"
    t1 = K.bracket_table(2, 2)
    t2 = K.bracket_table(2, 2)
    assert t1 is not t2 or t1 == t2  # table contents stable
    # unrealizable states get the zero polynomial
    X = S.parse_state("cat(1,2): T1-T2, L1-R1, B1-B2")
    assert K.oracle_coefficient(X) == L.ZERO


def test_budget_guard():
    C = S.parse_state("cat(2,2): T1-L1, T2-R1, L2-B1, R2-B2")
    with pytest.raises(
        K.BudgetError,
        match="oracle budget exceeded: a 2x2 grid needs 4 bits, budget is 3",
    ):
        K.oracle_coefficient(C, budget_bits=3)
    # an explicit budget wide enough lets the same call through
    assert K.oracle_coefficient(C, budget_bits=4) == {-2: 1, 2: 1}


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("ORACLE_BUDGET_BITS", "2")
    C = S.parse_state("cat(2,2): T1-L1, T2-R1, L2-B1, R2-B2")
    with pytest.raises(K.BudgetError, match="budget is 2"):
        K.oracle_coefficient(C)
    # an explicit argument wins over the environment
    assert K.oracle_coefficient(C, budget_bits=4) == {-2: 1, 2: 1}


@pytest.mark.parametrize("m, n", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_targeted_fold_matches_oracle(m, n):
    for C in S.enumerate_catalan(m, n):
        assert K.bracket_coefficient_at(C) == K.oracle_coefficient(C), (
            S.render_state(C)
        )


def test_targeted_fold_rejects_open_connections():
    strip = S.new_connection(0, 4, 2, [(("T", 1), ("T", 2)),
                                       (("T", 3), ("B", 1)),
                                       (("T", 4), ("B", 2))])
    with pytest.raises(ValueError, match="connection is not a Catalan state"):
        K.bracket_coefficient_at(strip)
