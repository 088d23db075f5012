"""Exact flat-band detection and the orbit-deletion inheritance check.

A flat band of a labeled periodic graph is an energy lam0 with
(lam - lam0) dividing the dispersion polynomial.  Writing the dispersion
as a sum of z-monomials times univariate lam-polynomials, lam0 is a flat
band exactly when every one of those lam-polynomials vanishes at lam0,
so the flat-band set is the root set of their gcd.  Working with the gcd
keeps irrational and complex flat bands visible (as irreducible factors)
without ever leaving rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import unipoly
from .floquet import dispersion_polynomial, induced_dispersion
from .graph import Labeling, PeriodicGraph
from .laurent import LaurentPoly, WeightVector
from .polytope import projected_face_normals, face_of
from .sampling import random_labeling, rng_for


@dataclass(frozen=True)
class IrreducibleFactor:
    """Monic factor of the flat-band polynomial with no rational root."""

    coefficients: tuple[Fraction, ...]
    multiplicity: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class FlatBandReport:
    """Flat-band polynomial g with its factorization over Q.

    ``rational_roots`` lists (energy, multiplicity) pairs sorted by
    energy; ``verified`` records, per root, that dividing the dispersion
    by (lam - energy) left no remainder.  Irrational and complex flat
    bands show up in ``irreducible_factors``.
    """

    flatband_poly: tuple[Fraction, ...]
    rational_roots: tuple[tuple[Fraction, int], ...]
    irreducible_factors: tuple[IrreducibleFactor, ...]
    verified: tuple[bool, ...]

    @property
    def flat_band_count(self) -> int:
        """Number of flat bands over C, counted with multiplicity."""
        return len(self.flatband_poly) - 1

    @property
    def has_flat_band(self) -> bool:
        return self.flat_band_count > 0


def lam_polynomial_at(poly: LaurentPoly, z_part: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Ascending lam-coefficients multiplying one z-monomial."""
    out = [Fraction(0)] * (poly.lam_degree + 1)
    for key, coeff in poly.items():
        if key[:-1] == z_part:
            out[key[-1]] = coeff
    return unipoly.normalize(out)


def _check_monic_in_lam(poly: LaurentPoly) -> int:
    degree = poly.lam_degree
    if degree < 1:
        raise ValueError("dispersion must have positive lam degree")
    lead = poly.lam_coefficient(degree)
    zero = (0,) * (poly.dimension + 1)
    if set(lead.support()) != {zero} or abs(lead.coefficient(zero)) != 1:
        raise ValueError("input is not monic (up to sign) in lam")
    return degree


def flat_bands(dispersion: LaurentPoly) -> FlatBandReport:
    """All energies whose linear factor divides the dispersion.

    The gcd runs over the lam-polynomials attached to each z-monomial,
    with an early exit once it collapses to 1.  Every rational root is
    re-verified by synthetic division of the full dispersion.
    """
    degree = _check_monic_in_lam(dispersion)
    z_parts = sorted({key[:-1] for key in dispersion.support()})
    g: tuple[Fraction, ...] = ()
    for z_part in z_parts:
        g = unipoly.gcd(g, lam_polynomial_at(dispersion, z_part))
        if len(g) == 1:
            break
    if not g:
        raise AssertionError("dispersion with no terms slipped through")
    if len(g) - 1 > degree:
        raise AssertionError("flat-band polynomial exceeds the lam degree")

    roots, others = unipoly.factor_rational(g)
    verified = []
    for root, multiplicity in roots:
        quotient = dispersion
        ok = True
        for _ in range(multiplicity):
            try:
                quotient = quotient.divide_by_linear(root)
            except ValueError:
                ok = False
                break
        verified.append(ok)
    return FlatBandReport(
        flatband_poly=g,
        rational_roots=tuple(roots),
        irreducible_factors=tuple(
            IrreducibleFactor(coefficients=c, multiplicity=m) for c, m in others
        ),
        verified=tuple(verified),
    )


def flat_bands_of(graph: PeriodicGraph, labeling: Labeling) -> FlatBandReport:
    return flat_bands(dispersion_polynomial(graph, labeling))


@dataclass(frozen=True)
class GenericFlatBandDecision:
    """Unanimous verdict over independent random labelings.

    ``has_flat_band`` is None when the trials disagreed, which flags an
    unlucky non-generic draw; rerun with a different seed.
    """

    has_flat_band: bool | None
    consistent: bool
    trials: int
    seed: int | str
    reports: tuple[FlatBandReport, ...]


def generic_flat_band_decision(graph: PeriodicGraph, trials: int = 5,
                               seed: int | str = 0
                               ) -> GenericFlatBandDecision:
    """Decide whether flat bands persist for random rational labelings."""
    if trials < 1:
        raise ValueError("at least one trial is required")
    reports = []
    for t in range(trials):
        labeling = random_labeling(graph, rng_for(seed, "decision", t))
        reports.append(flat_bands_of(graph, labeling))
    answers = {report.has_flat_band for report in reports}
    consistent = len(answers) == 1
    return GenericFlatBandDecision(
        has_flat_band=answers.pop() if consistent else None,
        consistent=consistent,
        trials=trials,
        seed=seed,
        reports=tuple(reports),
    )


@dataclass(frozen=True)
class InheritanceResult:
    """Flat bands shared by the graph and one orbit-deleted subgraph."""

    deleted_orbit: int
    shared_roots: tuple[Fraction, ...]
    shared_poly: tuple[Fraction, ...]


def inheritance_check(graph: PeriodicGraph, labeling: Labeling, orbit: int
                      ) -> InheritanceResult:
    """Compare flat bands before and after deleting one orbit.

    Returns the rational flat-band energies common to both dispersions,
    plus the gcd of the two flat-band polynomials, whose nonlinear part
    captures shared irrational bands.
    """
    if graph.num_orbits < 2:
        raise ValueError("orbit deletion needs at least two orbits")
    if not 0 <= orbit < graph.num_orbits:
        raise ValueError(f"orbit {orbit} out of range")
    keep = [v for v in range(graph.num_orbits) if v != orbit]
    full = flat_bands(dispersion_polynomial(graph, labeling))
    reduced = flat_bands(induced_dispersion(graph, labeling, keep))
    reduced_roots = {root for root, _ in reduced.rational_roots}
    shared = tuple(root for root, _ in full.rational_roots if root in reduced_roots)
    return InheritanceResult(
        deleted_orbit=orbit,
        shared_roots=shared,
        shared_poly=unipoly.gcd(full.flatband_poly, reduced.flatband_poly),
    )


def vertical_segment_face_witness(graph: PeriodicGraph, labeling: Labeling
                                  ) -> tuple[WeightVector, LaurentPoly] | None:
    """Face of the dispersion support collapsing to one off-axis z-monomial.

    Preconditions: the labeling has a flat band and the graph has no
    support-zero fundamental domain (otherwise the question is empty or
    trivial).  Scans proper faces of the support through the z-projection
    and returns the first whose members all share one nonzero z-part; on
    such a face the facial polynomial reads z^a * p(lam), and every
    rational flat-band energy is checked to be a root of p.
    """
    from .graph import has_support_zero_domain

    dispersion = dispersion_polynomial(graph, labeling)
    report = flat_bands(dispersion)
    if not report.has_flat_band:
        raise ValueError("labeling has no flat band; nothing to witness")
    if has_support_zero_domain(graph):
        raise ValueError("graph has a support-zero fundamental domain")

    support = dispersion.support()
    z_parts = {p[:-1] for p in support}
    zero = (0,) * graph.dimension
    candidates = sorted(projected_face_normals(z_parts))
    for normal in candidates:
        w = normal + (0,)
        descriptor = face_of(support, w)
        member_z = {p[:-1] for p in descriptor.members}
        if len(member_z) != 1 or zero in member_z:
            continue
        for root, multiplicity in report.rational_roots:
            p = lam_polynomial_at(dispersion, next(iter(member_z)))
            for _ in range(multiplicity):
                quotient, remainder = unipoly.synthetic_divide(p, root)
                if remainder != 0:
                    raise ArithmeticError(
                        f"facial polynomial not divisible by flat band {root}"
                    )
                p = quotient
        facial = LaurentPoly(
            dispersion.dimension,
            {key: dispersion.coefficient(key) for key in descriptor.members},
        )
        return WeightVector(w), facial
    return None
