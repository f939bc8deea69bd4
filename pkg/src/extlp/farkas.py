"""Constructive alternative-theorem solvers with checkable certificates.

Every solver returns a :class:`FarkasOutcome`: either a primal witness or a
dual certificate, never both, never neither.  Witnesses are exact rational
vectors and can be re-checked with the ``verify_*`` functions; the test
suites do exactly that on every output.

The ground solver :func:`farkas_bartl` decides, for rational functionals
``rows[0..n-1]`` and ``target`` on Q^d, between

* primal: ``x >= 0`` with ``sum_i x[i] * rows[i] == target``, and
* dual: ``y`` with ``rows[i] . y >= 0`` for all i and ``target . y < 0``,

by recursion on the number of functionals.  The inequality and extended
solvers are reductions to it that carry their certificates back along the
reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, PreconditionError, TheoremViolationError
from .extfield import BOT, TOP, ZERO, ExtValue
from .extlinalg import (
    ExtMatrix,
    ExtVector,
    dot_weig,
    le_vec,
    mul_weig,
    neg_transpose,
    rat_dot,
    rat_mat_vec,
    rat_transpose,
    rat_vector,
    scatter,
)

__all__ = [
    "FarkasOutcome",
    "farkas_bartl",
    "solve_equality",
    "solve_inequality",
    "solve_inequality_neg",
    "solve_extended",
    "system_preconditions",
    "MIXED_ROW",
    "MIXED_COL",
    "TOP_ROW_TOP_RHS",
    "BOT_ROW_BOT_RHS",
    "verify_primal_eq",
    "verify_dual_eq",
    "verify_primal_ineq",
    "verify_dual_ineq",
    "verify_primal_ext",
    "verify_dual_ext",
    "dual_infeasibility_search",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True, slots=True)
class FarkasOutcome:
    """Exactly one of a primal witness ``x`` or a dual certificate ``y``."""

    x: tuple[Fraction, ...] | None
    y: tuple[Fraction, ...] | None

    def __post_init__(self):
        if (self.x is None) == (self.y is None):
            raise ValueError("outcome must carry exactly one witness")

    @classmethod
    def primal(cls, x: Sequence[Fraction]) -> "FarkasOutcome":
        return cls(tuple(x), None)

    @classmethod
    def dual(cls, y: Sequence[Fraction]) -> "FarkasOutcome":
        return cls(None, tuple(y))

    @property
    def is_primal(self) -> bool:
        return self.x is not None

    @property
    def is_dual(self) -> bool:
        return self.y is not None


def farkas_bartl(rows: Sequence[Sequence], target: Sequence) -> FarkasOutcome:
    """Decide the alternative for rational functionals on Q^d.

    Returns ``primal(x)`` with ``x >= 0``, ``sum_i x[i]*rows[i] == target``,
    or ``dual(y)`` with ``rows[i].y >= 0`` for every i and ``target.y < 0``.
    Recursion depth equals ``len(rows)``.
    """
    b = rat_vector(target)
    d = len(b)
    rs = [rat_vector(r) for r in rows]
    for i, r in enumerate(rs):
        if len(r) != d:
            raise DimensionError(f"functional {i} has arity {len(r)}, target has {d}")
    return _bartl(rs, b)


def _bartl(rows: list[tuple[Fraction, ...]], b: tuple[Fraction, ...]) -> FarkasOutcome:
    if not rows:
        # no functionals: primal iff the target is the zero functional,
        # otherwise a signed basis vector witnesses target.y < 0
        for k, t in enumerate(b):
            if t != 0:
                y = [_F0] * len(b)
                y[k] = -_F1 if t > 0 else _F1
                return FarkasOutcome.dual(y)
        return FarkasOutcome.primal(())

    m = len(rows) - 1
    head, last = rows[:m], rows[m]
    out = _bartl(head, b)
    if out.is_primal:
        # the last functional is not needed: give it weight zero
        return FarkasOutcome.primal(out.x + (_F0,))

    yp = out.y
    t = rat_dot(last, yp)
    if t >= 0:
        return out

    # last.yp < 0: normalize so the last functional takes value 1 on y,
    # then project it out of the head functionals and the target
    y = tuple(v / t for v in yp)
    b_y = rat_dot(b, y)
    head_y = [rat_dot(r, y) for r in head]
    reduced = [
        tuple(rk - ry * lk for rk, lk in zip(r, last))
        for r, ry in zip(head, head_y)
    ]
    reduced_b = tuple(bk - b_y * lk for bk, lk in zip(b, last))
    out2 = _bartl(reduced, reduced_b)

    if out2.is_primal:
        x_last = b_y - sum((ry * xi for ry, xi in zip(head_y, out2.x)), _F0)
        if x_last < 0:
            raise TheoremViolationError(
                f"constructed weight for the last functional is negative: {x_last}"
            )
        return FarkasOutcome.primal(out2.x + (x_last,))

    w = out2.y
    s = rat_dot(last, w)
    return FarkasOutcome.dual(tuple(wk - s * yk for wk, yk in zip(w, y)))


def solve_equality(a: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> FarkasOutcome:
    """Alternative for ``A x == b, x >= 0`` over exact rationals.

    Primal: ``x >= 0`` with ``A x == b``.  Dual: ``y`` (any sign) with
    ``A^T y >= 0`` and ``b . y < 0``.  The columns of ``A`` are handed to
    :func:`farkas_bartl` as functionals on the row space.  ``ncols`` is
    only needed when ``A`` has no rows (the width is ambiguous there).
    """
    mat = [rat_vector(row) for row in a]
    rhs = rat_vector(b)
    if len(rhs) != len(mat):
        raise DimensionError(f"{len(mat)} rows vs {len(rhs)} rhs entries")
    if mat:
        width = len(mat[0])
        if ncols is not None and ncols != width:
            raise DimensionError(f"ncols {ncols} does not match row width {width}")
        ncols = width
    elif ncols is None:
        ncols = 0
    cols = rat_transpose(mat, ncols=ncols) if mat else ((),) * ncols
    return farkas_bartl(cols, rhs)


def solve_inequality(a: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> FarkasOutcome:
    """Alternative for ``A x <= b, x >= 0`` over exact rationals.

    Reduces to :func:`solve_equality` on ``(I | A)`` and drops the slack
    block from a primal witness; the identity columns force the dual
    certificate to be nonnegative, so it passes through unchanged.
    """
    mat = [rat_vector(row) for row in a]
    rhs = rat_vector(b)
    if len(mat) != len(rhs):
        raise DimensionError(f"{len(mat)} rows vs {len(rhs)} rhs entries")
    if mat:
        width = len(mat[0])
        if ncols is not None and ncols != width:
            raise DimensionError(f"ncols {ncols} does not match row width {width}")
        ncols = width
    elif ncols is None:
        ncols = 0
    n = len(mat)
    aug = [
        tuple(_F1 if i == j else _F0 for j in range(n)) + mat[i]
        for i in range(n)
    ]
    out = solve_equality(aug, rhs, ncols=n + ncols)
    if out.is_primal:
        return FarkasOutcome.primal(out.x[n:])
    return out


def solve_inequality_neg(a: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> FarkasOutcome:
    """Same alternative as :func:`solve_inequality`, same witnesses.

    Only the reading of the dual certificate differs: ``(-A^T) y <= 0``
    instead of ``A^T y >= 0``, which is the form the extended solver embeds
    into.  Over finite entries the two conditions coincide.
    """
    return solve_inequality(a, b, ncols=ncols)


MIXED_ROW = "mixed_row"
MIXED_COL = "mixed_col"
TOP_ROW_TOP_RHS = "top_row_top_rhs"
BOT_ROW_BOT_RHS = "bot_row_bot_rhs"


def system_preconditions(a: ExtMatrix, b: ExtVector) -> dict[str, tuple[int, ...]]:
    """Violations of the four hypotheses :func:`solve_extended` needs.

    Keys are condition names, values the offending row/column indices; only
    violated conditions appear.
    """
    mixed_rows = []
    top_top, bot_bot = [], []
    for i in range(a.nrows):
        row = a[i]
        has_bot = any(e.is_bot for e in row)
        has_top = any(e.is_top for e in row)
        if has_bot and has_top:
            mixed_rows.append(i)
        if has_top and b[i].is_top:
            top_top.append(i)
        if has_bot and b[i].is_bot:
            bot_bot.append(i)
    mixed_cols = []
    for j in range(a.ncols):
        col = [a[i][j] for i in range(a.nrows)]
        if any(e.is_bot for e in col) and any(e.is_top for e in col):
            mixed_cols.append(j)
    out: dict[str, tuple[int, ...]] = {}
    if mixed_rows:
        out[MIXED_ROW] = tuple(mixed_rows)
    if mixed_cols:
        out[MIXED_COL] = tuple(mixed_cols)
    if top_top:
        out[TOP_ROW_TOP_RHS] = tuple(top_top)
    if bot_bot:
        out[BOT_ROW_BOT_RHS] = tuple(bot_bot)
    return out


def solve_extended(a: ExtMatrix, b: ExtVector) -> FarkasOutcome:
    """Alternative for ``A x <= b`` with extended entries.

    Primal: finite ``x >= 0`` with ``mul_weig(A, x) <= b``.  Dual: finite
    ``y >= 0`` with ``mul_weig(neg_transpose(A), y) <= 0`` and
    ``dot_weig(b, y) < 0``.

    Requires the four named hypotheses of :func:`system_preconditions`;
    violations raise :class:`PreconditionError`.  The solve itself masks
    tautological rows (a bot entry in A, or a top right-hand side), then
    columns carrying top in a surviving row (their variables are forced to
    zero), then dispatches on the residual:

    * a surviving bot right-hand side makes the system unsatisfiable, and
      ``y = 0`` is a certificate: ``0 * bot == bot`` gives ``b . y == bot < 0``
      while ``(-A^T) y`` is entrywise 0 or bot;
    * otherwise the residual is all finite and goes to
      :func:`solve_inequality_neg`, whose witness is re-expanded with zeros
      at the masked positions.
    """
    if a.nrows != len(b):
        raise DimensionError(f"{a.nrows} rows vs {len(b)} rhs entries")
    bad = system_preconditions(a, b)
    if bad:
        names = ", ".join(sorted(bad))
        raise PreconditionError(f"extended system hypotheses violated: {names}", bad)

    keep_rows = [
        i
        for i in range(a.nrows)
        if not b[i].is_top and not any(e.is_bot for e in a[i])
    ]
    keep_cols = [
        j for j in range(a.ncols) if not any(a[i][j].is_top for i in keep_rows)
    ]

    if any(b[i].is_bot for i in keep_rows):
        return FarkasOutcome.dual((_F0,) * a.nrows)

    sub = [
        tuple(a[i][j].finite_value for j in keep_cols)
        for i in keep_rows
    ]
    rhs = [b[i].finite_value for i in keep_rows]
    out = solve_inequality_neg(sub, rhs, ncols=len(keep_cols))
    if out.is_primal:
        return FarkasOutcome.primal(scatter(out.x, keep_cols, a.ncols))
    return FarkasOutcome.dual(scatter(out.y, keep_rows, a.nrows))


def verify_primal_eq(a: Sequence[Sequence], b: Sequence, x: Sequence) -> bool:
    """``x >= 0`` and ``A x == b`` over rationals."""
    xs = rat_vector(x)
    if any(v < 0 for v in xs):
        return False
    return rat_mat_vec([rat_vector(r) for r in a], xs) == tuple(rat_vector(b))


def verify_dual_eq(a: Sequence[Sequence], b: Sequence, y: Sequence) -> bool:
    """``A^T y >= 0`` and ``b . y < 0`` over rationals; ``y`` may have any sign."""
    ys = rat_vector(y)
    mat = [rat_vector(r) for r in a]
    ncols = len(mat[0]) if mat else 0
    cols = rat_transpose(mat, ncols=ncols)
    if any(rat_dot(col, ys) < 0 for col in cols):
        return False
    return rat_dot(rat_vector(b), ys) < 0


def verify_primal_ineq(a: Sequence[Sequence], b: Sequence, x: Sequence) -> bool:
    """``x >= 0`` and ``A x <= b`` over rationals."""
    xs = rat_vector(x)
    if any(v < 0 for v in xs):
        return False
    lhs = rat_mat_vec([rat_vector(r) for r in a], xs)
    return all(l <= r for l, r in zip(lhs, rat_vector(b)))


def verify_dual_ineq(a: Sequence[Sequence], b: Sequence, y: Sequence) -> bool:
    """``y >= 0``, ``A^T y >= 0`` and ``b . y < 0`` over rationals."""
    ys = rat_vector(y)
    if any(v < 0 for v in ys):
        return False
    return verify_dual_eq(a, b, ys)


def verify_primal_ext(a: ExtMatrix, b: ExtVector, x: Sequence) -> bool:
    """Finite ``x >= 0`` with ``mul_weig(A, x) <= b``."""
    xs = rat_vector(x)
    if any(v < 0 for v in xs):
        return False
    return le_vec(mul_weig(a, xs), b)


def verify_dual_ext(a: ExtMatrix, b: ExtVector, y: Sequence) -> bool:
    """Finite ``y >= 0`` with ``mul_weig(-A^T, y) <= 0`` and ``dot_weig(b, y) < 0``."""
    ys = rat_vector(y)
    if any(v < 0 for v in ys):
        return False
    zero = ExtVector([ZERO] * a.ncols)
    if not le_vec(mul_weig(neg_transpose(a), ys), zero):
        return False
    return dot_weig(b, ys) < ZERO


def dual_infeasibility_search(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Search for ``y >= 0`` with ``A^T y >= 0`` and ``b . y < 0``; None if there is none.

    The strict system is homogeneous in ``y``, so it is solvable iff the
    non-strict reformulation ``-A^T y <= 0, b . y <= -1, y >= 0`` is; that
    one is decided by :func:`solve_inequality`.
    """
    mat = [rat_vector(r) for r in a]
    rhs = rat_vector(b)
    ncols = len(mat[0]) if mat else 0
    cols = rat_transpose(mat, ncols=ncols)
    sys_rows = [tuple(-v for v in col) for col in cols]
    sys_rows.append(tuple(rhs))
    sys_rhs = [_F0] * ncols + [Fraction(-1)]
    out = solve_inequality(sys_rows, sys_rhs)
    if out.is_primal:
        if not verify_dual_ineq(mat, rhs, out.x):
            raise TheoremViolationError("search returned a non-verifying certificate")
        return out.x
    return None
