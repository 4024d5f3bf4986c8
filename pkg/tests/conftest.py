from __future__ import annotations

import pathlib

import pytest
from hypothesis import HealthCheck, settings

from ringlp import ProgramData, RingId, int_matrix, int_vector, from_int

settings.register_profile(
    "ringlp",
    settings(
        max_examples=60,
        deadline=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
    ),
)
settings.load_profile("ringlp")

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ALL_RINGS = tuple(RingId)
COMMUTATIVE_RINGS = (RingId.INT, RingId.RAT, RingId.ODDRAT, RingId.POLY)


def make_gap_program(ring: RingId = RingId.INT, a: int = 2) -> ProgramData:
    """The 1x1 program A=[a], b=[1], c=[1], d=0."""
    return ProgramData(
        ring,
        int_matrix(ring, [[a]]),
        int_vector(ring, [1]),
        int_vector(ring, [1]),
        from_int(ring, 0),
    )


def make_edt_program(ring: RingId = RingId.INT, a: int = 2) -> ProgramData:
    """The 2x1 program A=[a, -a]^T, b=[1, -1], c=[0], d=0."""
    return ProgramData(
        ring,
        int_matrix(ring, [[a], [-a]]),
        int_vector(ring, [1, -1]),
        int_vector(ring, [0]),
        from_int(ring, 0),
    )


@pytest.fixture
def gap_int() -> ProgramData:
    return make_gap_program()


@pytest.fixture
def edt_int() -> ProgramData:
    return make_edt_program()
