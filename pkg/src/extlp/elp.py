"""Extended linear programs: validity screening, duality, exact optima.

A program ``(A, b, c)`` asks to minimize ``dot_weig(c, x)`` over finite
``x >= 0`` with ``mul_weig(A, x) <= b``; entries of ``A``, ``b``, ``c`` may
be ``bot`` or ``top``.  The dual swaps the roles: ``dualize`` sends
``(A, b, c)`` to ``(-A^T, c, b)`` and is an involution.

Validity is six index-level conditions that rule out the degenerate
infinity placements under which duality breaks (the counterexample fixtures
in the tests show each one failing individually).  All solving goes through
the certificate solvers in :mod:`extlp.farkas`; for a two-sided-feasible
valid program a single combined-system certificate pins both optima at
once, with value sum exactly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionError,
    InvalidProgramError,
    PreconditionError,
    TheoremViolationError,
)
from .extfield import BOT, TOP, ZERO, ExtValue, as_ext, as_rational
from .extlinalg import (
    ExtMatrix,
    ExtVector,
    dot_weig,
    le_vec,
    mul_weig,
    neg_transpose,
    rat_vector,
)
from .farkas import (
    BOT_ROW_BOT_RHS,
    MIXED_COL,
    MIXED_ROW,
    TOP_ROW_TOP_RHS,
    solve_extended,
    system_preconditions,
)

__all__ = [
    "ExtendedLP",
    "ValidELP",
    "ValidityReport",
    "validate",
    "dualize",
    "CONDITIONS",
    "DUAL_CONDITION_SWAP",
    "TOP_COL_BOT_COST",
    "BOT_COL_TOP_COST",
    "is_solution",
    "reaches",
    "is_feasible",
    "is_unbounded",
    "is_bounded_by",
    "Optimum",
    "optimum",
    "optimum_pair",
    "opposites_opt",
    "weak_duality_check",
    "strong_duality_check",
    "telemetry",
]

TOP_COL_BOT_COST = "top_col_bot_cost"
BOT_COL_TOP_COST = "bot_col_top_cost"

# all six validity conditions, and how dualization permutes them
CONDITIONS = (
    MIXED_ROW,
    MIXED_COL,
    BOT_ROW_BOT_RHS,
    TOP_COL_BOT_COST,
    TOP_ROW_TOP_RHS,
    BOT_COL_TOP_COST,
)
DUAL_CONDITION_SWAP = {
    MIXED_ROW: MIXED_COL,
    MIXED_COL: MIXED_ROW,
    BOT_ROW_BOT_RHS: TOP_COL_BOT_COST,
    TOP_COL_BOT_COST: BOT_ROW_BOT_RHS,
    TOP_ROW_TOP_RHS: BOT_COL_TOP_COST,
    BOT_COL_TOP_COST: TOP_ROW_TOP_RHS,
}

# counters for solver paths that the theory says are unreachable; tests
# assert they stay zero
telemetry = {"block_dual_scaled": 0}


@dataclass(frozen=True)
class ExtendedLP:
    """Minimize ``c . x`` over finite ``x >= 0`` subject to ``A x <= b``."""

    A: ExtMatrix
    b: ExtVector
    c: ExtVector

    def __post_init__(self):
        c = self.c if isinstance(self.c, ExtVector) else ExtVector(self.c)
        b = self.b if isinstance(self.b, ExtVector) else ExtVector(self.b)
        a = self.A if isinstance(self.A, ExtMatrix) else ExtMatrix(self.A, ncols=len(c))
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if len(b) != a.nrows:
            raise DimensionError(f"b has {len(b)} entries for {a.nrows} rows")
        if len(c) != a.ncols:
            raise DimensionError(f"c has {len(c)} entries for {a.ncols} columns")

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape


@dataclass(frozen=True)
class ValidityReport:
    """Per-condition violating indices; a valid program has all six empty."""

    mixed_row: tuple[int, ...]
    mixed_col: tuple[int, ...]
    bot_row_bot_rhs: tuple[int, ...]
    top_col_bot_cost: tuple[int, ...]
    top_row_top_rhs: tuple[int, ...]
    bot_col_top_cost: tuple[int, ...]

    @property
    def is_valid(self) -> bool:
        return not self.failed()

    def as_dict(self) -> dict[str, tuple[int, ...]]:
        return {name: getattr(self, name) for name in CONDITIONS}

    def failed(self) -> dict[str, tuple[int, ...]]:
        return {name: idx for name, idx in self.as_dict().items() if idx}


def validate(p: ExtendedLP) -> ValidityReport:
    """Screen a program against the six validity conditions.

    Row conditions look at ``A`` together with ``b``, column conditions at
    ``A`` together with ``c``:

    * no row of ``A`` may contain both bot and top (``mixed_row``), and no
      column either (``mixed_col``);
    * a row whose ``b`` entry is bot must not carry bot in ``A``
      (``bot_row_bot_rhs``), and dually for top against a top ``b`` entry
      (``top_row_top_rhs``);
    * a column whose ``c`` entry is bot must not carry top in ``A``
      (``top_col_bot_cost``), and dually (``bot_col_top_cost``).
    """
    a, b, c = p.A, p.b, p.c
    sys_bad = system_preconditions(a, b)
    top_col_bot_cost = []
    bot_col_top_cost = []
    for j in range(a.ncols):
        col = [a[i][j] for i in range(a.nrows)]
        if c[j].is_bot and any(e.is_top for e in col):
            top_col_bot_cost.append(j)
        if c[j].is_top and any(e.is_bot for e in col):
            bot_col_top_cost.append(j)
    return ValidityReport(
        mixed_row=sys_bad.get(MIXED_ROW, ()),
        mixed_col=sys_bad.get(MIXED_COL, ()),
        bot_row_bot_rhs=sys_bad.get(BOT_ROW_BOT_RHS, ()),
        top_col_bot_cost=tuple(top_col_bot_cost),
        top_row_top_rhs=sys_bad.get(TOP_ROW_TOP_RHS, ()),
        bot_col_top_cost=tuple(bot_col_top_cost),
    )


@dataclass(frozen=True)
class ValidELP(ExtendedLP):
    """An :class:`ExtendedLP` that passed validity screening at construction."""

    def __post_init__(self):
        super().__post_init__()
        report = validate(self)
        if not report.is_valid:
            raise InvalidProgramError(report)


def _as_valid(p: ExtendedLP) -> ValidELP:
    if isinstance(p, ValidELP):
        return p
    return ValidELP(p.A, p.b, p.c)


def dualize(p: ExtendedLP) -> ExtendedLP:
    """The dual program ``(-A^T, c, b)``; preserves (and re-checks) validity."""
    cls = ValidELP if isinstance(p, ValidELP) else ExtendedLP
    return cls(neg_transpose(p.A), p.c, p.b)


def is_solution(p: ExtendedLP, x: Sequence) -> bool:
    """Whether finite ``x >= 0`` satisfies every constraint row."""
    xs = rat_vector(x)
    if any(v < 0 for v in xs):
        return False
    return le_vec(mul_weig(p.A, xs), p.b)


def reaches(p: ExtendedLP, x: Sequence) -> ExtValue:
    """The objective value of a solution; non-solutions are rejected."""
    xs = rat_vector(x)
    if not is_solution(p, xs):
        raise PreconditionError("reaches: x is not a solution")
    return dot_weig(p.c, xs)


def is_feasible(p: ExtendedLP) -> bool:
    """Whether some solution reaches a value other than top.

    Any bot entry in ``c`` forces every solution's value to bot (the zero
    scale does not clear a bot), so feasibility is plain solvability there.
    Otherwise a value differs from top exactly when the variables at
    top-cost columns are zero, and validity guarantees those columns carry
    no bot in ``A``, so they can be dropped outright.
    """
    p = _as_valid(p)
    a = p.A
    if not any(e.is_bot for e in p.c):
        keep = [j for j in range(a.ncols) if not p.c[j].is_top]
        if len(keep) != a.ncols:
            a = ExtMatrix(
                (ExtVector(row[j] for j in keep) for row in a.rows),
                ncols=len(keep),
            )
    return solve_extended(a, p.b).is_primal


def is_unbounded(p: ExtendedLP) -> bool:
    """Feasible with no finite lower bound; decided through dual feasibility."""
    p = _as_valid(p)
    return is_feasible(p) and not is_feasible(dualize(p))


@dataclass(frozen=True)
class Optimum:
    """The optimum of a program: a value, or absent.

    ``top`` encodes infeasibility, ``bot`` unboundedness, a finite value an
    attained optimum.  ``absent`` never occurs for valid programs; it exists
    so that the raw reference path can share the type.
    """

    value: ExtValue | None

    @classmethod
    def of(cls, v) -> "Optimum":
        return cls(as_ext(v))

    @classmethod
    def absent(cls) -> "Optimum":
        return cls(None)

    @property
    def is_absent(self) -> bool:
        return self.value is None

    def __str__(self):
        return "absent" if self.value is None else str(self.value)


def opposites_opt(p: Optimum, q: Optimum) -> bool:
    """Both present and exactly negatives of each other (endpoints swap)."""
    if p.is_absent or q.is_absent:
        return False
    return p.value == -q.value


def _duality_block(p: ValidELP) -> tuple[ExtMatrix, ExtVector]:
    """The combined system whose solutions are pairs of mutually-bounding
    solutions: rows ``[A | 0] <= b``, ``[0 | -A^T] <= c``, ``[c | b] <= 0``."""
    a = p.A
    i_n, j_n = a.shape
    neg_t = neg_transpose(a)
    rows = []
    for i in range(i_n):
        rows.append(ExtVector(tuple(a[i]) + (ZERO,) * i_n))
    for j in range(j_n):
        rows.append(ExtVector((ZERO,) * j_n + tuple(neg_t[j])))
    rows.append(ExtVector(tuple(p.c) + tuple(p.b)))
    rhs = ExtVector(tuple(p.b) + tuple(p.c) + (ZERO,))
    return ExtMatrix(rows, ncols=i_n + j_n), rhs


def _both_feasible_values(p: ValidELP, d: ValidELP) -> tuple[ExtValue, ExtValue]:
    """Optimal values of a two-sided-feasible pair from one certificate."""
    i_n, j_n = p.A.shape
    block, rhs = _duality_block(p)
    out = solve_extended(block, rhs)
    if out.is_primal:
        x, y = out.x[:j_n], out.x[j_n:]
        val_p = dot_weig(p.c, x)
        val_d = dot_weig(p.b, y)
        if val_p + val_d != ZERO or not val_p.is_finite:
            raise TheoremViolationError(
                f"combined certificate has value sum {val_p + val_d}, expected 0"
            )
        return val_p, val_d
    # Dual certificate of the combined system: unreachable for a
    # two-sided-feasible valid program.  With a positive scale entry the
    # rescaled parts still verify as solutions, which contradicts weak
    # duality; surface that loudly rather than guessing an optimum.
    w = out.y
    z = w[-1]
    if z > 0:
        telemetry["block_dual_scaled"] += 1
        x = tuple(v / z for v in w[i_n : i_n + j_n])
        y = tuple(v / z for v in w[:i_n])
        solution_pair = is_solution(p, x) and is_solution(d, y)
        val_sum = dot_weig(p.c, x) + dot_weig(p.b, y)
        raise TheoremViolationError(
            "combined system returned a scalable certificate "
            f"(verifying solution pair: {solution_pair}, value sum {val_sum} < 0) "
            "contradicting weak duality"
        )
    raise TheoremViolationError(
        "combined system returned a certificate with zero scale entry "
        "for a two-sided-feasible program"
    )


def _optimum_pair_known(p: ValidELP, d: ValidELP, fp: bool, fd: bool) -> tuple[Optimum, Optimum]:
    if not fp and not fd:
        return Optimum.of(TOP), Optimum.of(TOP)
    if not fp:
        return Optimum.of(TOP), Optimum.of(BOT)
    if not fd:
        return Optimum.of(BOT), Optimum.of(TOP)
    val_p, val_d = _both_feasible_values(p, d)
    return Optimum.of(val_p), Optimum.of(val_d)


def optimum_pair(p: ExtendedLP) -> tuple[Optimum, Optimum]:
    """Optima of a valid program and its dual, sharing the solver work."""
    p = _as_valid(p)
    d = dualize(p)
    return _optimum_pair_known(p, d, is_feasible(p), is_feasible(d))


def optimum(p: ExtendedLP) -> Optimum:
    """The exact optimum of a valid program.

    top when infeasible, bot when feasible with infeasible dual (that is,
    unbounded), otherwise an attained finite value.  Never absent.
    """
    return optimum_pair(p)[0]


def is_bounded_by(p: ExtendedLP, r) -> bool:
    """Whether every reached value is at least the rational ``r``.

    An infeasible program is bounded by anything; an unbounded one by
    nothing; otherwise the optimum is attained and decides the comparison.
    """
    opt = optimum(p).value
    if opt.is_top:
        return True
    if opt.is_bot:
        return False
    return as_rational(r) <= opt.finite_value


def weak_duality_check(p: ExtendedLP, x: Sequence, y: Sequence) -> bool:
    """Evaluate ``c . x + b . y >= 0`` for a solution pair.

    ``x`` must solve ``p`` and ``y`` its dual (else PreconditionError).  For
    valid programs the inequality always holds; on invalid ones it can fail,
    which is what the counterexample fixtures demonstrate.
    """
    xs = rat_vector(x)
    ys = rat_vector(y)
    if not is_solution(p, xs):
        raise PreconditionError("weak_duality_check: x does not solve the primal")
    if not is_solution(dualize(p), ys):
        raise PreconditionError("weak_duality_check: y does not solve the dual")
    return dot_weig(p.c, xs) + dot_weig(p.b, ys) >= ZERO


def strong_duality_check(p: ExtendedLP) -> bool:
    """Whether the optima of a valid program and its dual are exact opposites.

    Requires at least one feasible side; with both sides infeasible the
    optima are both top, the theorem does not apply, and this raises
    PreconditionError.
    """
    p = _as_valid(p)
    d = dualize(p)
    fp = is_feasible(p)
    fd = is_feasible(d)
    if not fp and not fd:
        raise PreconditionError(
            "strong_duality_check: both the program and its dual are infeasible"
        )
    opt_p, opt_d = _optimum_pair_known(p, d, fp, fd)
    return opposites_opt(opt_p, opt_d)
