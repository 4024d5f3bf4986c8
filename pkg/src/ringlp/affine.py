"""The primal-dual affine program model and its exact identities.

A program over a ring R is the data (A, b, c, d) with A an m x n matrix.
The primal side maximizes f(x) = c.x - d subject to A x <= b, x >= 0; the
dual side minimizes g(y) = y.b - d subject to y A >= c, y >= 0. Slacks are
t = b - A x and s = y A - c.

Two identities hold for ALL x, y (feasible or not), in every instance
including the non-commutative one, under the left-multiplication
convention of :mod:`ringlp.linalg`:

* key equation:      s.x - g(y) = y.(-t) - f(x)
* duality equation:  g(y) - f(x) = s.x + y.t   (Tucker's duality equation)

Weak duality (g >= f on feasible pairs) follows because every summand of
s.x + y.t is a product of nonnegatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, unique
from typing import Optional

from .errors import DimensionMismatch, RingMismatch
from .linalg import (
    RMatrix,
    RVector,
    covec_apply,
    dot_left,
    mat_apply,
    matrix,
    vec_add,
    vec_neg,
    vec_sub,
    vector,
)
from .reports import CheckReport, TrialSummary
from .rings import (
    RingElement,
    RingId,
    add,
    is_zero,
    sign,
    sub,
    to_text,
)
from .sampling import Sampler

__all__ = [
    "ProgramData",
    "SlackPair",
    "ViolationKind",
    "FeasibilityVerdict",
    "primal_slack",
    "dual_slack",
    "slack_pair",
    "is_primal_feasible",
    "is_dual_feasible",
    "eval_f",
    "eval_g",
    "key_equation_residual",
    "duality_equation_residual",
    "gap",
    "assert_weak_duality",
    "random_program",
    "identity_trials",
    "identity_program_trials",
    "weak_duality_trials",
]


@dataclass(frozen=True)
class ProgramData:
    """The tuple (A, b, c, d) over one ring; A is rows x cols."""

    ring: RingId
    A: RMatrix
    b: RVector
    c: RVector
    d: RingElement

    def __post_init__(self):
        for part_ring in (self.A.ring, self.b.ring, self.c.ring, self.d.ring):
            if part_ring is not self.ring:
                raise RingMismatch("program components must share one ring")
        if len(self.b) != self.A.rows:
            raise DimensionMismatch(
                f"b has length {len(self.b)}, expected {self.A.rows}"
            )
        if len(self.c) != self.A.cols:
            raise DimensionMismatch(
                f"c has length {len(self.c)}, expected {self.A.cols}"
            )
        if self.A.rows < 1 or self.A.cols < 1:
            raise DimensionMismatch("program needs at least one row and one column")

    @property
    def rows(self) -> int:
        return self.A.rows

    @property
    def cols(self) -> int:
        return self.A.cols


@dataclass(frozen=True)
class SlackPair:
    """Primal slack t = b - A x and dual slack s = y A - c for one (x, y)."""

    t: RVector
    s: RVector


@unique
class ViolationKind(Enum):
    NEGATIVE_VARIABLE = "NEGATIVE_VARIABLE"
    SLACK_NEGATIVE = "SLACK_NEGATIVE"


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Feasible, or the first violation found (indices are 0-based)."""

    feasible: bool
    violated_row: Optional[int] = None
    violation_kind: Optional[ViolationKind] = None

    def as_dict(self) -> dict:
        out: dict = {"feasible": self.feasible}
        if not self.feasible:
            out["violated_row"] = self.violated_row
            out["violation_kind"] = self.violation_kind.value
        return out


def primal_slack(P: ProgramData, x: RVector) -> RVector:
    """t = b - A x, exact."""
    return vec_sub(P.b, mat_apply(P.A, x))


def dual_slack(P: ProgramData, y: RVector) -> RVector:
    """s = y A - c componentwise, exact."""
    return vec_sub(covec_apply(y, P.A), P.c)


def slack_pair(P: ProgramData, x: RVector, y: RVector) -> SlackPair:
    return SlackPair(t=primal_slack(P, x), s=dual_slack(P, y))


def _first_negative(v: RVector) -> Optional[int]:
    for i, e in enumerate(v):
        if sign(e) < 0:
            return i
    return None


def is_primal_feasible(P: ProgramData, x: RVector) -> FeasibilityVerdict:
    """x >= 0 and A x <= b, both non-strict."""
    i = _first_negative(x)
    if i is not None:
        return FeasibilityVerdict(False, i, ViolationKind.NEGATIVE_VARIABLE)
    j = _first_negative(primal_slack(P, x))
    if j is not None:
        return FeasibilityVerdict(False, j, ViolationKind.SLACK_NEGATIVE)
    return FeasibilityVerdict(True)


def is_dual_feasible(P: ProgramData, y: RVector) -> FeasibilityVerdict:
    """y >= 0 and y A >= c, both non-strict."""
    j = _first_negative(y)
    if j is not None:
        return FeasibilityVerdict(False, j, ViolationKind.NEGATIVE_VARIABLE)
    i = _first_negative(dual_slack(P, y))
    if i is not None:
        return FeasibilityVerdict(False, i, ViolationKind.SLACK_NEGATIVE)
    return FeasibilityVerdict(True)


def eval_f(P: ProgramData, x: RVector) -> RingElement:
    """Primal objective c.x - d."""
    return sub(dot_left(P.c, x), P.d)


def eval_g(P: ProgramData, y: RVector) -> RingElement:
    """Dual objective y.b - d."""
    return sub(dot_left(y, P.b), P.d)


def key_equation_residual(P: ProgramData, x: RVector, y: RVector) -> RingElement:
    """[s.x - g(y)] - [y.(-t) - f(x)]; exactly zero for every x, y."""
    s = dual_slack(P, y)
    t = primal_slack(P, x)
    lhs = sub(dot_left(s, x), eval_g(P, y))
    rhs = sub(dot_left(y, vec_neg(t)), eval_f(P, x))
    return sub(lhs, rhs)


def duality_equation_residual(P: ProgramData, x: RVector, y: RVector) -> RingElement:
    """[g(y) - f(x)] - [s.x + y.t]; exactly zero for every x, y."""
    s = dual_slack(P, y)
    t = primal_slack(P, x)
    direct = sub(eval_g(P, y), eval_f(P, x))
    via_slacks = add(dot_left(s, x), dot_left(y, t))
    return sub(direct, via_slacks)


def gap(P: ProgramData, x: RVector, y: RVector) -> RingElement:
    """g(y) - f(x)."""
    return sub(eval_g(P, y), eval_f(P, x))


def assert_weak_duality(P: ProgramData, x: RVector, y: RVector) -> CheckReport:
    """For a feasible pair: sign(gap) >= 0 and gap = s.x + y.t, exactly.

    A failure flags an implementation bug (the inequality is a theorem for
    ordered rings); infeasible inputs make the check not applicable.
    """
    pv = is_primal_feasible(P, x)
    dv = is_dual_feasible(P, y)
    if not (pv.feasible and dv.feasible):
        which = []
        if not pv.feasible:
            which.append("x is not primal-feasible")
        if not dv.feasible:
            which.append("y is not dual-feasible")
        return CheckReport(
            "weak_duality",
            passed=True,
            applicable=False,
            details=("not applicable: " + "; ".join(which),),
        )
    g_val = gap(P, x, y)
    cross = add(dot_left(dual_slack(P, y), x), dot_left(y, primal_slack(P, x)))
    sign_ok = sign(g_val) >= 0
    cross_ok = g_val == cross
    details = [f"gap = {to_text(g_val)}", f"s.x + y.t = {to_text(cross)}"]
    if not sign_ok:
        details.append("IMPLEMENTATION BUG: negative gap on a feasible pair")
    if not cross_ok:
        details.append("IMPLEMENTATION BUG: gap differs from s.x + y.t")
    return CheckReport("weak_duality", sign_ok and cross_ok, True, tuple(details))


# ---------------------------------------------------------------------------
# randomized trial loops (documented samplers; deterministic given the seed)


def _sample_vector(sampler: Sampler, ring: RingId, n: int, nonneg: bool = False) -> RVector:
    draw = sampler.sample_nonneg if nonneg else sampler.sample
    return vector(ring, (draw(ring) for _ in range(n)))


def random_program(
    sampler: Sampler, ring: RingId, max_rows: int = 3, max_cols: int = 3
) -> ProgramData:
    """A random program with 1..max_rows x 1..max_cols sampled entries."""
    m = sampler.draw_int(1, max_rows)
    n = sampler.draw_int(1, max_cols)
    A = matrix(ring, ((sampler.sample(ring) for _ in range(n)) for _ in range(m)))
    b = _sample_vector(sampler, ring, m)
    c = _sample_vector(sampler, ring, n)
    return ProgramData(ring, A, b, c, sampler.sample(ring))


def identity_trials(P: ProgramData, trials: int, seed: int) -> TrialSummary:
    """Check both residuals vanish on random (x, y), feasible or not."""
    sampler = Sampler(seed)
    failures = 0
    first = None
    for _ in range(trials):
        x = _sample_vector(sampler, P.ring, P.cols)
        y = _sample_vector(sampler, P.ring, P.rows)
        kr = key_equation_residual(P, x, y)
        dr = duality_equation_residual(P, x, y)
        if not (is_zero(kr) and is_zero(dr)):
            failures += 1
            if first is None:
                first = (
                    f"x={[to_text(e) for e in x]} y={[to_text(e) for e in y]} "
                    f"key={to_text(kr)} duality={to_text(dr)}"
                )
    return TrialSummary("identity_residuals", trials, failures, first)


def identity_program_trials(
    ring: RingId, trials: int, seed: int, max_rows: int = 3, max_cols: int = 3
) -> TrialSummary:
    """Like identity_trials but with a fresh random program per trial."""
    sampler = Sampler(seed)
    failures = 0
    first = None
    for _ in range(trials):
        P = random_program(sampler, ring, max_rows, max_cols)
        x = _sample_vector(sampler, ring, P.cols)
        y = _sample_vector(sampler, ring, P.rows)
        kr = key_equation_residual(P, x, y)
        dr = duality_equation_residual(P, x, y)
        if not (is_zero(kr) and is_zero(dr)):
            failures += 1
            if first is None:
                first = f"key={to_text(kr)} duality={to_text(dr)}"
    return TrialSummary("identity_residuals", trials, failures, first)


def weak_duality_trials(
    ring: RingId, trials: int, seed: int, max_rows: int = 3, max_cols: int = 3
) -> TrialSummary:
    """sign(gap) >= 0 on pairs that are feasible by construction.

    Feasibility is forced, not searched for: draw x >= 0 and set
    b := A x + nonnegative noise, draw y >= 0 and set
    c := y A - nonnegative noise.
    """
    sampler = Sampler(seed)
    failures = 0
    first = None
    for _ in range(trials):
        m = sampler.draw_int(1, max_rows)
        n = sampler.draw_int(1, max_cols)
        A = matrix(ring, ((sampler.sample(ring) for _ in range(n)) for _ in range(m)))
        x = _sample_vector(sampler, ring, n, nonneg=True)
        y = _sample_vector(sampler, ring, m, nonneg=True)
        t_noise = _sample_vector(sampler, ring, m, nonneg=True)
        s_noise = _sample_vector(sampler, ring, n, nonneg=True)
        b = vec_add(mat_apply(A, x), t_noise)
        c = vec_sub(covec_apply(y, A), s_noise)
        P = ProgramData(ring, A, b, c, sampler.sample(ring))
        report = assert_weak_duality(P, x, y)
        if not (report.applicable and report.passed):
            failures += 1
            if first is None:
                first = "; ".join(report.details)
    return TrialSummary("weak_duality", trials, failures, first)
