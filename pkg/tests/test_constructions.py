from fractions import Fraction

import pytest

from ringlp import (
    BundleKind,
    InfeasibleSide,
    Magnitude,
    NoSmallestPositive,
    NotAPositiveNonUnit,
    POLY_X,
    PreconditionViolated,
    RingId,
    SKEW_X,
    SKEW_Y,
    Sampler,
    SequenceRole,
    StepLosesFeasibility,
    add,
    classify_magnitude,
    dual_decreasing_sequence,
    dual_decreasing_step,
    eval_g,
    from_int,
    from_rational,
    gap,
    gap_program,
    infeasible_optimal_program,
    int_vector,
    is_dual_feasible,
    is_primal_feasible,
    is_zero,
    magnitude_gap_check,
    mul,
    no_central_between_check,
    one,
    primal_improving_sequence,
    primal_improving_step,
    sign,
    strong_duality_counterexample,
    sub,
    vector,
    verify_bundle,
    zero_vector,
)

from conftest import make_gap_program


# ---------------------------------------------------------------------------
# gap_program


def test_gap_program_int_matches_the_shipped_fixture(gap_int):
    bundle = gap_program(RingId.INT, from_int(RingId.INT, 2))
    assert bundle.kind is BundleKind.GAP
    assert bundle.program == gap_int
    assert all(c.passed for c in bundle.checks)


def test_gap_program_rejects_units_and_negatives():
    with pytest.raises(NotAPositiveNonUnit):
        gap_program(RingId.RAT, from_rational(RingId.RAT, 2))
    with pytest.raises(NotAPositiveNonUnit):
        gap_program(RingId.INT, from_int(RingId.INT, -2))
    with pytest.raises(NotAPositiveNonUnit):
        gap_program(RingId.INT, from_int(RingId.INT, 1))


def test_gap_program_poly_feasible_primal_points_are_exactly_zero():
    bundle = gap_program(RingId.POLY, POLY_X)
    P = bundle.program
    assert is_primal_feasible(P, zero_vector(RingId.POLY, 1)).feasible
    sampler = Sampler(42)
    for _ in range(100):
        v = vector(RingId.POLY, [sampler.sample_positive(RingId.POLY)])
        # any positive v drives x*v above 1 by degree, breaking A x <= b
        assert not is_primal_feasible(P, v).feasible
    assert all(c.passed for c in bundle.checks)


def test_gap_program_skew_claim_on_sampled_pairs():
    bundle = gap_program(RingId.SKEW, SKEW_X)
    P = bundle.program
    assert is_dual_feasible(P, vector(RingId.SKEW, [one(RingId.SKEW)])).feasible
    for x in bundle.primal_witnesses:
        assert is_zero(sub(gap(P, x, bundle.dual_witnesses[0]), one(RingId.SKEW)))
        for y in bundle.dual_witnesses:
            assert sign(gap(P, x, y)) == 1
    assert all(c.passed for c in bundle.checks)


def test_division_ring_control_closes_the_gap():
    # the same data over the rationals stops being a counterexample
    P = make_gap_program(RingId.RAT)
    half = vector(RingId.RAT, [from_rational(RingId.RAT, 1, 2)])
    assert is_primal_feasible(P, half).feasible
    assert is_dual_feasible(P, half).feasible
    assert is_zero(gap(P, half, half))


# ---------------------------------------------------------------------------
# strong duality counterexample


def test_strong_duality_counterexample_int_two(gap_int):
    bundle = strong_duality_counterexample(RingId.INT, from_int(RingId.INT, 2))
    assert bundle.kind is BundleKind.STRONG_DUALITY_GAP
    assert bundle.program == gap_int
    assert bundle.primal_optimum == int_vector(RingId.INT, [0])
    assert bundle.dual_optimum == int_vector(RingId.INT, [1])
    assert bundle.gap_value == from_int(RingId.INT, 1)
    assert all(c.passed for c in bundle.checks)


def test_strong_duality_counterexample_int_three():
    bundle = strong_duality_counterexample(RingId.INT, from_int(RingId.INT, 3))
    assert bundle.primal_optimum == int_vector(RingId.INT, [0])
    assert bundle.dual_optimum == int_vector(RingId.INT, [1])
    assert bundle.gap_value == from_int(RingId.INT, 1)
    assert all(c.passed for c in bundle.checks)


def test_strong_duality_counterexample_rejects_units():
    with pytest.raises(NotAPositiveNonUnit):
        strong_duality_counterexample(RingId.RAT, from_rational(RingId.RAT, 2))


def test_strong_duality_counterexample_needs_smallest_positive():
    with pytest.raises(NoSmallestPositive):
        strong_duality_counterexample(RingId.ODDRAT, from_rational(RingId.ODDRAT, 2))


# ---------------------------------------------------------------------------
# infeasible/optimal programs


def test_infeasible_optimal_primal_side(edt_int):
    bundle = infeasible_optimal_program(
        RingId.INT, from_int(RingId.INT, 2), InfeasibleSide.PRIMAL_INFEASIBLE
    )
    assert bundle.kind is BundleKind.INFEASIBLE_OPTIMAL_PRIMAL
    assert bundle.program == edt_int
    assert bundle.dual_optimum == int_vector(RingId.INT, [0, 0])
    assert is_zero(eval_g(bundle.program, bundle.dual_optimum))
    assert all(c.passed for c in bundle.checks)


def test_infeasible_optimal_poly_variant():
    bundle = infeasible_optimal_program(
        RingId.POLY, POLY_X, InfeasibleSide.PRIMAL_INFEASIBLE
    )
    P = bundle.program
    assert bundle.dual_optimum == zero_vector(RingId.POLY, 2)
    assert is_dual_feasible(P, bundle.dual_optimum).feasible
    # x*v = 1 is impossible by degree, so no sampled point is primal-feasible
    sampler = Sampler(17)
    for _ in range(100):
        v = vector(RingId.POLY, [sampler.sample_nonneg(RingId.POLY)])
        assert not is_primal_feasible(P, v).feasible
    assert any("claimed (not machine-certified)" in n for n in bundle.notes)


def test_infeasible_optimal_transposed(edt_int):
    bundle = infeasible_optimal_program(
        RingId.INT, from_int(RingId.INT, 2), InfeasibleSide.DUAL_INFEASIBLE
    )
    assert bundle.kind is BundleKind.INFEASIBLE_OPTIMAL_DUAL
    P = bundle.program
    # transpose of A with b and c swapped
    assert P.rows == 1 and P.cols == 2
    assert P.b == int_vector(RingId.INT, [0])
    assert P.c == int_vector(RingId.INT, [1, -1])
    assert bundle.primal_optimum == int_vector(RingId.INT, [0, 0])
    assert all(c.passed for c in bundle.checks)


def test_infeasible_optimal_oddrat():
    bundle = infeasible_optimal_program(
        RingId.ODDRAT, from_rational(RingId.ODDRAT, 2), InfeasibleSide.PRIMAL_INFEASIBLE
    )
    # 2x = 1 needs 1/2, which has an even denominator
    assert not is_primal_feasible(
        bundle.program, vector(RingId.ODDRAT, [from_rational(RingId.ODDRAT, 1, 3)])
    ).feasible
    assert all(c.passed for c in bundle.checks)


# ---------------------------------------------------------------------------
# non-achieving: primal improving sequence


def test_improving_step_closed_form_over_oddrat():
    a = from_rational(RingId.ODDRAT, 2)
    z = from_rational(RingId.ODDRAT, 1, 3)
    x = from_rational(RingId.ODDRAT, 0)
    for k in range(1, 22):
        x = primal_improving_step(a, z, x)
        expected = Fraction(3**k - 1, 2 * 3**k)
        assert x.payload == expected
        assert x.payload.denominator % 2 == 1  # stays inside the ring


def test_improving_step_rejects_the_boundary():
    a = from_rational(RingId.RAT, 2)
    z = from_rational(RingId.RAT, 1, 3)
    with pytest.raises(PreconditionViolated):
        primal_improving_step(a, z, from_rational(RingId.RAT, 1, 2))  # a*x = 1


def test_improving_step_rejects_nonpositive_z():
    a = from_rational(RingId.RAT, 2)
    with pytest.raises(PreconditionViolated):
        primal_improving_step(a, from_rational(RingId.RAT, 0), from_rational(RingId.RAT, 0))


@pytest.mark.parametrize(
    "ring,a_q,z_q",
    [
        (RingId.RAT, Fraction(2, 3), Fraction(1, 2)),
        (RingId.ODDRAT, Fraction(2), Fraction(1, 3)),
        (RingId.POLY, Fraction(3, 4), Fraction(1, 2)),
    ],
)
def test_improving_step_factorization_on_valid_inputs(ring, a_q, z_q):
    a = from_rational(ring, a_q)
    z = from_rational(ring, z_q)
    o = one(ring)
    x = from_int(ring, 0)
    for _ in range(10):
        nxt = primal_improving_step(a, z, x)
        lhs = sub(o, mul(a, nxt))
        rhs = mul(sub(o, mul(a, z)), sub(o, mul(a, x)))
        assert lhs == rhs
        assert sign(sub(nxt, x)) == 1
        x = nxt


def test_improving_step_identity_in_skew_operand_order():
    # the factorization is pure algebra; it must hold for arbitrary skew
    # elements with exactly this operand order
    sampler = Sampler(23)
    o = one(RingId.SKEW)
    for _ in range(100):
        a = sampler.sample(RingId.SKEW)
        z = sampler.sample(RingId.SKEW)
        x = sampler.sample(RingId.SKEW)
        nxt = add(x, mul(z, sub(o, mul(a, x))))
        lhs = sub(o, mul(a, nxt))
        rhs = mul(sub(o, mul(a, z)), sub(o, mul(a, x)))
        assert lhs == rhs


def test_primal_improving_sequence_bundle():
    bundle = primal_improving_sequence(
        RingId.ODDRAT,
        from_rational(RingId.ODDRAT, 2),
        from_rational(RingId.ODDRAT, 1, 3),
        steps=21,
    )
    seq = bundle.sequence
    assert seq.role is SequenceRole.PRIMAL_IMPROVING
    assert len(seq.points) == 22
    for k, value in enumerate(seq.objective_values):
        assert value.payload == Fraction(3**k - 1, 2 * 3**k)
    assert all(c.passed for c in bundle.checks)


def test_primal_improving_sequence_needs_room_below_one():
    with pytest.raises(PreconditionViolated):
        primal_improving_sequence(
            RingId.INT, from_int(RingId.INT, 2), from_int(RingId.INT, 1)
        )


# ---------------------------------------------------------------------------
# non-achieving: dual decreasing sequence


@pytest.mark.parametrize("ring,a", [(RingId.POLY, POLY_X), (RingId.SKEW, SKEW_X)])
def test_dual_decreasing_sequence_halves_forever(ring, a):
    bundle = dual_decreasing_sequence(ring, a, from_rational(ring, 1, 2), steps=21)
    seq = bundle.sequence
    assert seq.role is SequenceRole.DUAL_DECREASING
    assert len(seq.points) == 22
    for k, value in enumerate(seq.objective_values):
        assert value == from_rational(ring, 1, 2**k)
        assert is_dual_feasible(bundle.program, seq.points[k]).feasible
    assert all(c.passed for c in bundle.checks)


def test_dual_decreasing_step_infeasibility_is_caught():
    # scaling y = [1] by 1/3 drops 2*y below the constraint threshold:
    # the claim "a*y*p > 1" genuinely fails here (2 * 1/3 = 2/3 < 1)
    P = make_gap_program(RingId.ODDRAT)
    y = vector(RingId.ODDRAT, [one(RingId.ODDRAT)])
    with pytest.raises(StepLosesFeasibility) as excinfo:
        dual_decreasing_step(P, y, from_rational(RingId.ODDRAT, 1, 3))
    assert excinfo.value.row == 0


def test_dual_decreasing_step_preconditions():
    P = make_gap_program(RingId.POLY)
    y = vector(RingId.POLY, [one(RingId.POLY)])
    with pytest.raises(PreconditionViolated):
        dual_decreasing_step(P, y, from_int(RingId.POLY, 2))  # p >= 1
    with pytest.raises(PreconditionViolated):
        dual_decreasing_step(P, zero_vector(RingId.POLY, 1), from_rational(RingId.POLY, 1, 2))


def test_dual_decreasing_sequence_needs_a_fractional_p():
    with pytest.raises(PreconditionViolated):
        dual_decreasing_sequence(
            RingId.INT, from_int(RingId.INT, 2), from_int(RingId.INT, 1)
        )


# ---------------------------------------------------------------------------
# center and magnitude checks


def test_no_central_between_for_the_generators():
    report = no_central_between_check(SKEW_X, SKEW_Y, from_rational(RingId.SKEW, 3, 4))
    assert report.passed
    assert any("oriented" in d for d in report.details)


def test_no_central_between_on_500_sampled_constants():
    sampler = Sampler(9)
    for _ in range(500):
        z = sampler.sample_central(RingId.SKEW)
        assert no_central_between_check(SKEW_X, SKEW_Y, z).passed


def test_no_central_between_vacuous_on_commutative_rings():
    sampler = Sampler(12)
    for _ in range(100):
        a = sampler.sample_positive(RingId.RAT)
        b = sampler.sample_positive(RingId.RAT)
        z = sampler.sample(RingId.RAT)
        assert no_central_between_check(a, b, z).passed


def test_no_central_between_preconditions():
    with pytest.raises(PreconditionViolated):
        no_central_between_check(
            from_int(RingId.SKEW, -1), SKEW_Y, from_int(RingId.SKEW, 1)
        )
    with pytest.raises(PreconditionViolated):
        no_central_between_check(SKEW_X, SKEW_Y, SKEW_X)  # x is not central


def test_magnitude_gap_int_pair():
    report = magnitude_gap_check(from_int(RingId.INT, 2), from_int(RingId.INT, 3))
    assert report.applicable and report.passed
    assert any("ZERO" in d for d in report.details)


def test_magnitude_gap_vacuous_on_the_skew_generators():
    report = magnitude_gap_check(SKEW_X, SKEW_Y)
    assert not report.applicable
    assert report.passed
    assert classify_magnitude(mul(SKEW_X, SKEW_Y)) is Magnitude.INFINITE


@pytest.mark.parametrize("ring", [RingId.INT, RingId.RAT, RingId.ODDRAT, RingId.POLY])
def test_magnitude_gap_zero_on_commutative_pairs(ring):
    sampler = Sampler(88)
    for _ in range(100):
        a = sampler.sample_positive(ring)
        b = sampler.sample_positive(ring)
        report = magnitude_gap_check(a, b)
        assert report.passed


# ---------------------------------------------------------------------------
# bundle re-verification


def test_every_bundle_kind_re_verifies():
    bundles = [
        gap_program(RingId.INT, from_int(RingId.INT, 2)),
        gap_program(RingId.SKEW, SKEW_X),
        strong_duality_counterexample(RingId.INT, from_int(RingId.INT, 2)),
        infeasible_optimal_program(
            RingId.INT, from_int(RingId.INT, 2), InfeasibleSide.PRIMAL_INFEASIBLE
        ),
        infeasible_optimal_program(
            RingId.INT, from_int(RingId.INT, 2), InfeasibleSide.DUAL_INFEASIBLE
        ),
        primal_improving_sequence(
            RingId.ODDRAT,
            from_rational(RingId.ODDRAT, 2),
            from_rational(RingId.ODDRAT, 1, 3),
        ),
        dual_decreasing_sequence(RingId.POLY, POLY_X, from_rational(RingId.POLY, 1, 2)),
    ]
    for bundle in bundles:
        for report in verify_bundle(bundle):
            assert report.passed, (bundle.kind, report.name, report.details)


def test_certificate_dict_is_jsonable():
    import json

    bundle = strong_duality_counterexample(RingId.INT, from_int(RingId.INT, 2))
    from ringlp import certificate_dict

    blob = json.dumps(certificate_dict(bundle), sort_keys=True)
    assert '"STRONG_DUALITY_GAP"' in blob
    assert '"gap": "1"' in blob
