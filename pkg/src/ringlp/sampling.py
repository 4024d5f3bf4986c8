"""Deterministic element sampling and the ordered-ring axiom suite.

The pseudorandom source is a 64-bit linear congruential generator fixed by
the constants below (Knuth's MMIX parameters) so that equal seeds produce
identical streams everywhere:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64

Bounded draws take the top 32 bits of the new state modulo the range size.
Documented size bounds: INT is uniform in [-1000, 1000]; RAT and ODDRAT
draw numerators in [-1000, 1000] and denominators in [1, 50], ODDRAT
redrawing the denominator until it is odd; POLY draws degree <= 4 with
rational coefficients on the RAT bounds; SKEW draws at most 5 monomials
with y- and x-degree <= 3.
"""

from __future__ import annotations

from fractions import Fraction

from .reports import AxiomReport, AxiomViolation
from .rings import (
    RingId,
    RingElement,
    add,
    from_rational,
    from_int,
    mul,
    neg,
    poly,
    sign,
    skew,
    to_text,
    zero,
)

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1

INT_BOUND = 1000
DEN_BOUND = 50
POLY_MAX_DEGREE = 4
SKEW_MAX_TERMS = 5
SKEW_MAX_DEGREE = 3


class Lcg:
    """The fixed 64-bit linear congruential generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state

    def below(self, n: int) -> int:
        return (self.next_u64() >> 32) % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


class Sampler:
    """Stateful element source; equal seeds yield equal streams."""

    def __init__(self, seed: int):
        self._lcg = Lcg(seed)

    def draw_int(self, lo: int, hi: int) -> int:
        return self._lcg.int_in(lo, hi)

    def _rational(self) -> Fraction:
        num = self._lcg.int_in(-INT_BOUND, INT_BOUND)
        den = self._lcg.int_in(1, DEN_BOUND)
        return Fraction(num, den)

    def _odd_rational(self) -> Fraction:
        num = self._lcg.int_in(-INT_BOUND, INT_BOUND)
        den = self._lcg.int_in(1, DEN_BOUND)
        while den % 2 == 0:
            den = self._lcg.int_in(1, DEN_BOUND)
        return Fraction(num, den)

    def sample(self, ring: RingId) -> RingElement:
        if ring is RingId.INT:
            return from_int(ring, self._lcg.int_in(-INT_BOUND, INT_BOUND))
        if ring is RingId.RAT:
            return from_rational(ring, self._rational())
        if ring is RingId.ODDRAT:
            return from_rational(ring, self._odd_rational())
        if ring is RingId.POLY:
            degree = self._lcg.int_in(0, POLY_MAX_DEGREE)
            return poly([self._rational() for _ in range(degree + 1)])
        count = self._lcg.int_in(0, SKEW_MAX_TERMS)
        acc: dict[tuple[int, int], Fraction] = {}
        for _ in range(count):
            n = self._lcg.int_in(0, SKEW_MAX_DEGREE)
            m = self._lcg.int_in(0, SKEW_MAX_DEGREE)
            q = self._rational()
            acc[(n, m)] = acc.get((n, m), Fraction(0)) + q
        return skew(acc)

    def sample_nonneg(self, ring: RingId) -> RingElement:
        e = self.sample(ring)
        return neg(e) if sign(e) < 0 else e

    def sample_positive(self, ring: RingId) -> RingElement:
        while True:
            e = self.sample_nonneg(ring)
            if sign(e) == 1:
                return e

    def sample_central(self, ring: RingId) -> RingElement:
        """A central element: any sample in commutative rings, a constant in SKEW."""
        if ring is not RingId.SKEW:
            return self.sample(ring)
        return from_rational(ring, self._rational())


def verify_order_axioms(ring: RingId, sample_count: int, seed: int) -> AxiomReport:
    """Seeded check of trichotomy and positivity closure on sampled pairs.

    Trichotomy is checked as sign-consistency: sign(e) lies in {-1, 0, +1},
    equals 0 exactly for the zero element, and flips under negation.
    Closure: positive a, b must give positive a+b and a*b. Violations are
    report content with witnesses, never exceptions.
    """
    if sample_count <= 0:
        raise ValueError("sample_count must be positive")
    sampler = Sampler(seed)
    z = zero(ring)
    violations: list[AxiomViolation] = []
    trichotomy_checks = 0
    closure_checks = 0
    for _ in range(sample_count):
        a = sampler.sample(ring)
        b = sampler.sample(ring)
        for e in (a, b):
            trichotomy_checks += 1
            s = sign(e)
            if s not in (-1, 0, 1) or (s == 0) != (e == z) or sign(neg(e)) != -s:
                violations.append(AxiomViolation("trichotomy", (to_text(e),)))
        if sign(a) == 1 and sign(b) == 1:
            closure_checks += 1
            if sign(add(a, b)) != 1:
                violations.append(
                    AxiomViolation("additive-closure", (to_text(a), to_text(b)))
                )
            if sign(mul(a, b)) != 1:
                violations.append(
                    AxiomViolation("multiplicative-closure", (to_text(a), to_text(b)))
                )
    return AxiomReport(
        ring=ring,
        sample_count=sample_count,
        seed=seed,
        trichotomy_checks=trichotomy_checks,
        closure_checks=closure_checks,
        violations=tuple(violations),
    )
