"""Alternative theorems: every call returns exactly one verifying branch."""

import random
from fractions import Fraction

import pytest

from extlp import (
    BOT,
    TOP,
    DimensionError,
    ExtMatrix,
    ExtVector,
    PreconditionError,
    dual_infeasibility_search,
    farkas_bartl,
    solve_equality,
    solve_extended,
    solve_inequality,
    solve_inequality_neg,
    system_preconditions,
    verify_dual_eq,
    verify_dual_ext,
    verify_dual_ineq,
    verify_primal_eq,
    verify_primal_ext,
    verify_primal_ineq,
)
from extlp.oracle import oracle_feasible_point


def random_system(rng: random.Random, max_dim: int = 4, bound: int = 3):
    m = rng.randint(0, max_dim)
    n = rng.randint(0, max_dim)
    a = [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(rng.randint(-bound, bound)) for _ in range(m)]
    return a, b, n


# --- core recursion ---


def test_identity_columns_give_the_target_back():
    out = farkas_bartl([(1, 0), (0, 1)], (3, 4))
    assert out.is_primal and out.x == (3, 4)


def test_empty_functional_list_zero_target():
    out = farkas_bartl([], ())
    assert out.is_primal and out.x == ()


def test_empty_functional_list_nonzero_target():
    out = farkas_bartl([], (2,))
    assert out.is_dual and verify_dual_eq([], (2,), out.y)


def test_arity_mismatch_rejected():
    with pytest.raises(DimensionError):
        farkas_bartl([(1,), (2, 3)], (1, 2))


# --- equality systems ---


def test_equality_contradictory_rows():
    # x = 1 and x = 2 cannot both hold
    out = solve_equality([[1], [1]], [1, 2])
    assert out.is_dual
    assert verify_dual_eq([[1], [1]], [1, 2], out.y)


def test_equality_solvable_system():
    a = [[2, 1], [1, 1]]
    b = [3, 2]
    out = solve_equality(a, b)
    assert out.is_primal and out.x == (1, 1)
    assert verify_primal_eq(a, b, out.x)


def test_equality_width_of_an_empty_system():
    out = solve_equality([], [], ncols=3)
    assert out.is_primal and out.x == (0, 0, 0)
    # without ncols an empty matrix is read as zero columns
    assert solve_equality([], []).x == ()
    with pytest.raises(DimensionError):
        solve_equality([[1, 2]], [1], ncols=3)


def test_equality_negative_solution_goes_dual():
    # x = -1 has no nonnegative solution
    a = [[1]]
    b = [-1]
    out = solve_equality(a, b)
    assert out.is_dual and verify_dual_eq(a, b, out.y)


# --- inequality systems ---


def test_inequality_two_resource_rows():
    a = [[-27, -90], [-1300, -1150]]
    b = [-30, -700]
    out = solve_inequality(a, b)
    assert out.is_primal and out.x == (Fraction(10, 9), 0)
    assert verify_primal_ineq(a, b, out.x)


def test_inequality_infeasible_band():
    # x <= 1 together with x >= 2
    a = [[1], [-1]]
    b = [1, -2]
    out = solve_inequality(a, b)
    assert out.is_dual and verify_dual_ineq(a, b, out.y)


def test_inequality_neg_shares_the_witness_semantics():
    a = [[1], [-1]]
    b = [1, -2]
    out = solve_inequality_neg(a, b)
    assert out.is_dual
    # y >= 0 with (-A^T) y <= 0 and b.y < 0
    y = out.y
    assert all(t >= 0 for t in y)
    assert -(y[0] - y[1]) <= 0
    assert b[0] * y[0] + b[1] * y[1] < 0


def test_exactly_one_branch_on_random_systems():
    rng = random.Random(99)
    for _ in range(60):
        a, b, n = random_system(rng)
        out = solve_inequality(a, b, ncols=n)
        point = oracle_feasible_point(a, b, ncols=n)
        if out.is_primal:
            assert verify_primal_ineq(a, b, out.x)
            assert point is not None
        else:
            assert verify_dual_ineq(a, b, out.y)
            assert point is None


def test_equality_branches_agree_with_double_inequality_oracle():
    rng = random.Random(4)
    for _ in range(60):
        a, b, n = random_system(rng, max_dim=3, bound=2)
        out = solve_equality(a, b, ncols=n)
        # Ax = b, x >= 0 encoded as Ax <= b and -Ax <= -b
        both = [row[:] for row in a] + [[-v for v in row] for row in a]
        rhs = b + [-v for v in b]
        point = oracle_feasible_point(both, rhs, ncols=n)
        assert out.is_primal == (point is not None)


# --- infeasibility search ---


def test_search_returns_none_on_feasible_systems():
    assert dual_infeasibility_search([[-27, -90], [-1300, -1150]], [-30, -700]) is None
    assert dual_infeasibility_search([[-1]], [-1]) is None


def test_search_certifies_infeasible_systems():
    a = [[1], [-1]]
    b = [1, -2]
    y = dual_infeasibility_search(a, b)
    assert y is not None and verify_dual_ineq(a, b, y)


# --- extended systems ---


def ext_system(a_rows, b_vals):
    a = ExtMatrix(a_rows, ncols=len(a_rows[0]) if a_rows else 0)
    return a, ExtVector(b_vals)


def test_preconditions_flag_offending_rows_and_cols():
    a, b = ext_system([["bot", "top"]], [0])
    assert system_preconditions(a, b) == {"mixed_row": (0,)}
    a, b = ext_system([["bot"], ["top"]], [0, 0])
    assert system_preconditions(a, b) == {"mixed_col": (0,)}
    a, b = ext_system([["top"]], ["top"])
    assert system_preconditions(a, b) == {"top_row_top_rhs": (0,)}
    a, b = ext_system([["bot"]], ["bot"])
    assert system_preconditions(a, b) == {"bot_row_bot_rhs": (0,)}
    with pytest.raises(PreconditionError) as err:
        solve_extended(*ext_system([["bot", "top"]], [0]))
    assert err.value.violations == {"mixed_row": (0,)}


def test_extended_finite_passthrough():
    a, b = ext_system([[-27, -90], [-1300, -1150]], [-30, -700])
    out = solve_extended(a, b)
    assert out.is_primal and out.x == (Fraction(10, 9), 0)
    assert verify_primal_ext(a, b, out.x)


def test_extended_masked_rows_keep_full_width():
    # every row dies, so the witness must still cover all three columns
    a, b = ext_system([["bot", "bot", "bot"]], [5])
    out = solve_extended(a, b)
    assert out.is_primal and out.x == (0, 0, 0)
    assert verify_primal_ext(a, b, out.x)


def test_extended_top_columns_are_pinned_to_zero():
    a, b = ext_system([["top", -1]], [-2])
    out = solve_extended(a, b)
    assert out.is_primal
    assert out.x[0] == 0 and out.x[1] >= 2
    assert verify_primal_ext(a, b, out.x)


def test_extended_bot_rhs_certified_by_zero_vector():
    # a surviving bot on the right admits the all-zero dual witness:
    # the zero weight keeps bot absorbing, so b.y = bot < 0
    a, b = ext_system([[-1]], ["bot"])
    out = solve_extended(a, b)
    assert out.is_dual and out.y == (0,)
    assert verify_dual_ext(a, b, out.y)
    # the unit indicator is not a certificate here: (-A^T) e_0 = 1 > 0
    assert not verify_dual_ext(a, b, (1,))


def test_extended_bot_rhs_mixed_with_finite_rows():
    a, b = ext_system([[1], [2]], [3, "bot"])
    out = solve_extended(a, b)
    assert out.is_dual and out.y == (0, 0)
    assert verify_dual_ext(a, b, out.y)


def test_extended_finite_residual_infeasible():
    # dead bot row on top, contradictory finite row below
    a, b = ext_system([["bot"], [0]], [0, -1])
    out = solve_extended(a, b)
    assert out.is_dual and out.y == (0, 1)
    assert verify_dual_ext(a, b, out.y)


def test_extended_random_systems_verify():
    rng = random.Random(12)
    pool = [BOT, TOP] + [Fraction(k) for k in range(-3, 4)]
    trials = 0
    while trials < 120:
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        rows = [[rng.choice(pool) for _ in range(n)] for _ in range(m)]
        rhs = [rng.choice(pool) for _ in range(m)]
        a = ExtMatrix(rows, ncols=n)
        b = ExtVector(rhs)
        if system_preconditions(a, b):
            continue
        trials += 1
        out = solve_extended(a, b)
        if out.is_primal:
            assert verify_primal_ext(a, b, out.x)
        else:
            assert verify_dual_ext(a, b, out.y)
