"""Report records returned by checkers and verification suites.

Reports carry verdicts, never raise: a failed check is content. All ring
elements inside reports are rendered in the canonical text grammar so the
records are JSON-able and re-parseable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rings import RingId


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check.

    ``passed`` is meaningful only when ``applicable`` is true; checks whose
    hypothesis is not met report ``applicable=False`` and pass vacuously.
    """

    name: str
    passed: bool
    applicable: bool = True
    details: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "applicable": self.applicable,
            "details": list(self.details),
        }


@dataclass(frozen=True)
class AxiomViolation:
    kind: str
    witnesses: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "witnesses": list(self.witnesses)}


@dataclass(frozen=True)
class AxiomReport:
    """Result of the seeded ordered-ring axiom suite."""

    ring: RingId
    sample_count: int
    seed: int
    trichotomy_checks: int
    closure_checks: int
    violations: tuple[AxiomViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "ring": self.ring.value,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "trichotomy_checks": self.trichotomy_checks,
            "closure_checks": self.closure_checks,
            "violations": [v.as_dict() for v in self.violations],
            "passed": self.passed,
        }


@dataclass(frozen=True)
class TrialSummary:
    """Aggregate of a randomized trial loop (identities, weak duality, ...)."""

    name: str
    trials: int
    failures: int
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "passed": self.passed,
        }
