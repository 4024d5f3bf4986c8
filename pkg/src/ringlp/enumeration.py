"""Brute-force exact certification over bounded boxes.

Variables range over a finite grid starting at 0 (the sign constraint
already rules out negatives): for INT each variable takes values 0..N; for
RAT and ODDRAT the grid is every numerator 0..N*D over every denominator
1..D (odd denominators only for ODDRAT), deduplicated and sorted.

The oracle never claims more than it checked. Statuses carry a scope flag:
EXHAUSTIVE only when the caller supplies an analytic note arguing the box
is sufficient (shipped constructions do), otherwise BOX_LIMITED. A
feasible best point touching the box's upper face is reported as
FEASIBLE_UNBOUNDED_IN_BOX since a larger box might improve it.
FEASIBLE_BOUNDED exists to mirror the four-way joint classification
(feasible and bounded yet attaining no optimum); a finite grid always
attains its best, so box scans never emit it.

Ties between equal-objective points are broken toward the
lexicographically smallest witness, so results do not depend on scan
order; partitioned (parallel) scans merge to the same answer.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Callable, Optional

from .affine import (
    ProgramData,
    eval_f,
    eval_g,
    gap,
    is_dual_feasible,
    is_primal_feasible,
)
from .errors import UnsupportedRing
from .linalg import RVector
from .reports import CheckReport
from .rings import (
    Ordering,
    RingElement,
    RingId,
    compare,
    from_int,
    from_rational,
    sub,
    to_text,
)

__all__ = [
    "BoxSpec",
    "StatusKind",
    "Scope",
    "ProgramStatus",
    "EdtReport",
    "candidate_values",
    "enumerate_primal",
    "enumerate_dual",
    "feasible_primal_points",
    "feasible_dual_points",
    "certify_optimal_pair",
    "classify_edt",
]

_ENUMERABLE = (RingId.INT, RingId.RAT, RingId.ODDRAT)
_MAX_POINTS = 5_000_000


@dataclass(frozen=True)
class BoxSpec:
    """Finite search box: bound N, and denominator bound D for rationals."""

    bound: int
    denominator_bound: Optional[int] = None

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("box bound must be a positive integer")
        if self.denominator_bound is not None and self.denominator_bound < 1:
            raise ValueError("denominator bound must be a positive integer")


@unique
class StatusKind(Enum):
    INFEASIBLE = "INFEASIBLE"
    FEASIBLE_UNBOUNDED_IN_BOX = "FEASIBLE_UNBOUNDED_IN_BOX"
    FEASIBLE_BOUNDED = "FEASIBLE_BOUNDED"
    OPTIMAL = "OPTIMAL"


@unique
class Scope(Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    BOX_LIMITED = "BOX_LIMITED"


@dataclass(frozen=True)
class ProgramStatus:
    kind: StatusKind
    scope: Scope
    witness: Optional[RVector] = None
    value: Optional[RingElement] = None
    note: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "scope": self.scope.value,
            "witness": None if self.witness is None else [to_text(e) for e in self.witness],
            "value": None if self.value is None else to_text(self.value),
            "note": self.note,
        }


@dataclass(frozen=True)
class EdtReport:
    """Joint primal/dual outcome against the four classical cases."""

    case: Optional[int]
    violation: bool
    primal: ProgramStatus
    dual: ProgramStatus
    gap_value: Optional[RingElement]
    details: str

    def as_dict(self) -> dict:
        return {
            "case": self.case,
            "violation": self.violation,
            "primal": self.primal.as_dict(),
            "dual": self.dual.as_dict(),
            "gap": None if self.gap_value is None else to_text(self.gap_value),
            "details": self.details,
        }


def candidate_values(ring: RingId, box: BoxSpec) -> tuple[RingElement, ...]:
    """The per-variable grid, ascending."""
    if ring is RingId.INT:
        return tuple(from_int(ring, v) for v in range(box.bound + 1))
    if ring not in _ENUMERABLE:
        raise UnsupportedRing(f"{ring.value} is not exhaustively enumerable")
    d_bound = box.denominator_bound or 1
    dens = [d for d in range(1, d_bound + 1) if ring is RingId.RAT or d % 2 == 1]
    values = sorted(
        {Fraction(num, den) for den in dens for num in range(box.bound * d_bound + 1)}
    )
    return tuple(from_rational(ring, q) for q in values)


def _better(
    maximize: bool,
    value: RingElement,
    witness: tuple[RingElement, ...],
    best_value: Optional[RingElement],
    best_witness: Optional[tuple[RingElement, ...]],
) -> bool:
    if best_value is None:
        return True
    c = compare(value, best_value)
    if c is (Ordering.GT if maximize else Ordering.LT):
        return True
    if c is Ordering.EQ:
        for a, b in zip(witness, best_witness):
            cc = compare(a, b)
            if cc is not Ordering.EQ:
                return cc is Ordering.LT
    return False


def _scan(
    P: ProgramData,
    points,
    feasible: Callable[[ProgramData, RVector], object],
    objective: Callable[[ProgramData, RVector], RingElement],
    maximize: bool,
):
    any_feasible = False
    best_value = None
    best_witness = None
    for w in points:
        vec = RVector(P.ring, w)
        if not feasible(P, vec).feasible:
            continue
        any_feasible = True
        value = objective(P, vec)
        if _better(maximize, value, w, best_value, best_witness):
            best_value = value
            best_witness = w
    return any_feasible, best_value, best_witness


def _merge(maximize: bool, left, right):
    l_feas, l_val, l_wit = left
    r_feas, r_val, r_wit = right
    if l_val is None:
        return (l_feas or r_feas, r_val, r_wit)
    if r_val is None or not _better(maximize, r_val, r_wit, l_val, l_wit):
        return (l_feas or r_feas, l_val, l_wit)
    return (l_feas or r_feas, r_val, r_wit)


def _enumerate(
    P: ProgramData,
    box: BoxSpec,
    primal_side: bool,
    analytic_note: Optional[str],
    workers: int,
) -> ProgramStatus:
    if P.ring not in _ENUMERABLE:
        raise UnsupportedRing(
            f"{P.ring.value} is not exhaustively enumerable (only int, rat, oddrat)"
        )
    values = candidate_values(P.ring, box)
    nvars = P.cols if primal_side else P.rows
    if len(values) ** nvars > _MAX_POINTS:
        raise ValueError("search box too large for exhaustive scan")
    feasible = is_primal_feasible if primal_side else is_dual_feasible
    objective = eval_f if primal_side else eval_g
    points = itertools.product(values, repeat=nvars)
    if workers <= 1:
        found = _scan(P, points, feasible, objective, primal_side)
    else:
        # stripe the grid over the workers; the merge is order-independent
        pts = list(points)
        stripes = [pts[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda stripe: _scan(P, stripe, feasible, objective, primal_side),
                    stripes,
                )
            )
        found = results[0]
        for part in results[1:]:
            found = _merge(primal_side, found, part)
    any_feasible, best_value, best_witness = found
    if not any_feasible:
        if analytic_note:
            return ProgramStatus(
                StatusKind.INFEASIBLE, Scope.EXHAUSTIVE, note=analytic_note
            )
        return ProgramStatus(
            StatusKind.INFEASIBLE, Scope.BOX_LIMITED, note="no feasible point in box"
        )
    witness = RVector(P.ring, best_witness)
    if analytic_note:
        return ProgramStatus(
            StatusKind.OPTIMAL, Scope.EXHAUSTIVE, witness, best_value, analytic_note
        )
    face = values[-1]
    if any(e == face for e in best_witness):
        return ProgramStatus(
            StatusKind.FEASIBLE_UNBOUNDED_IN_BOX,
            Scope.BOX_LIMITED,
            witness,
            best_value,
            note="best in-box point lies on the box face; a larger box may improve it",
        )
    return ProgramStatus(StatusKind.OPTIMAL, Scope.BOX_LIMITED, witness, best_value)


def enumerate_primal(
    P: ProgramData,
    box: BoxSpec,
    analytic_note: Optional[str] = None,
    workers: int = 1,
) -> ProgramStatus:
    """Exhaustive in-box maximization of f over feasible points."""
    return _enumerate(P, box, True, analytic_note, workers)


def enumerate_dual(
    P: ProgramData,
    box: BoxSpec,
    analytic_note: Optional[str] = None,
    workers: int = 1,
) -> ProgramStatus:
    """Exhaustive in-box minimization of g over feasible points."""
    return _enumerate(P, box, False, analytic_note, workers)


def feasible_primal_points(P: ProgramData, box: BoxSpec) -> list[RVector]:
    values = candidate_values(P.ring, box)
    out = []
    for w in itertools.product(values, repeat=P.cols):
        vec = RVector(P.ring, w)
        if is_primal_feasible(P, vec).feasible:
            out.append(vec)
    return out


def feasible_dual_points(P: ProgramData, box: BoxSpec) -> list[RVector]:
    values = candidate_values(P.ring, box)
    out = []
    for w in itertools.product(values, repeat=P.rows):
        vec = RVector(P.ring, w)
        if is_dual_feasible(P, vec).feasible:
            out.append(vec)
    return out


def certify_optimal_pair(
    P: ProgramData,
    box: BoxSpec,
    x_star: Optional[RVector] = None,
    y_star: Optional[RVector] = None,
    workers: int = 1,
) -> CheckReport:
    """Confirm the given points are feasible and unbeaten inside the box.

    Either side may be omitted; the other side's enumeration status is
    still reported. When both are given the report includes their gap.
    """
    if x_star is None and y_star is None:
        raise ValueError("at least one candidate point is required")
    primal_status = enumerate_primal(P, box, workers=workers)
    dual_status = enumerate_dual(P, box, workers=workers)
    ok = True
    details: list[str] = []
    if x_star is not None:
        verdict = is_primal_feasible(P, x_star)
        if not verdict.feasible:
            ok = False
            details.append(
                f"primal candidate infeasible ({verdict.violation_kind.value} "
                f"at index {verdict.violated_row})"
            )
        else:
            fx = eval_f(P, x_star)
            if primal_status.value is not None and compare(fx, primal_status.value) is Ordering.LT:
                ok = False
                details.append(
                    f"in-box point {[to_text(e) for e in primal_status.witness]} beats "
                    f"the primal candidate: f = {to_text(primal_status.value)} > {to_text(fx)}"
                )
            else:
                details.append(f"primal candidate unbeaten in box, f = {to_text(fx)}")
    else:
        details.append(f"primal side: {primal_status.kind.value}")
    if y_star is not None:
        verdict = is_dual_feasible(P, y_star)
        if not verdict.feasible:
            ok = False
            details.append(
                f"dual candidate infeasible ({verdict.violation_kind.value} "
                f"at index {verdict.violated_row})"
            )
        else:
            gy = eval_g(P, y_star)
            if dual_status.value is not None and compare(gy, dual_status.value) is Ordering.GT:
                ok = False
                details.append(
                    f"in-box point {[to_text(e) for e in dual_status.witness]} beats "
                    f"the dual candidate: g = {to_text(dual_status.value)} < {to_text(gy)}"
                )
            else:
                details.append(f"dual candidate unbeaten in box, g = {to_text(gy)}")
    else:
        details.append(f"dual side: {dual_status.kind.value}")
    if x_star is not None and y_star is not None:
        details.append(f"gap = {to_text(gap(P, x_star, y_star))}")
    return CheckReport("certify_optimal_pair", ok, True, tuple(details))


_CASE_TEXT = {
    1: "case 1: both sides infeasible",
    2: "case 2: primal infeasible, dual improves up to the box face",
    3: "case 3: dual infeasible, primal improves up to the box face",
    4: "case 4: both sides attain an in-box optimum",
}


def classify_edt(
    P: ProgramData,
    box: BoxSpec,
    primal_note: Optional[str] = None,
    dual_note: Optional[str] = None,
    workers: int = 1,
) -> EdtReport:
    """Map the joint in-box outcome onto the classical four-way split.

    Combinations outside the four cases (e.g. one side infeasible while
    the other attains an optimum) are reported as a VIOLATION, which is
    exactly the expected finding on non-division rings.
    """
    primal = enumerate_primal(P, box, primal_note, workers)
    dual = enumerate_dual(P, box, dual_note, workers)
    pk, dk = primal.kind, dual.kind
    case: Optional[int] = None
    gap_value: Optional[RingElement] = None
    if pk is StatusKind.INFEASIBLE and dk is StatusKind.INFEASIBLE:
        case = 1
    elif pk is StatusKind.INFEASIBLE and dk is StatusKind.FEASIBLE_UNBOUNDED_IN_BOX:
        case = 2
    elif dk is StatusKind.INFEASIBLE and pk is StatusKind.FEASIBLE_UNBOUNDED_IN_BOX:
        case = 3
    elif pk is StatusKind.OPTIMAL and dk is StatusKind.OPTIMAL:
        case = 4
        gap_value = sub(dual.value, primal.value)
    if case is not None:
        details = _CASE_TEXT[case]
        if case == 4:
            details += f"; gap = {to_text(gap_value)}"
        return EdtReport(case, False, primal, dual, gap_value, details)
    details = (
        f"VIOLATION: primal {pk.value} with dual {dk.value} matches none of the "
        "four classical cases"
    )
    return EdtReport(None, True, primal, dual, None, details)
