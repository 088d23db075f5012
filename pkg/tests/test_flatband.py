"""Flat-band extraction, generic decisions, inheritance, face witnesses."""

from fractions import Fraction

import pytest

from flatbands import unipoly
from flatbands.flatband import (
    flat_bands,
    flat_bands_of,
    generic_flat_band_decision,
    inheritance_check,
    lam_polynomial_at,
    vertical_segment_face_witness,
)
from flatbands.floquet import dispersion_polynomial
from flatbands.graph import Labeling, PeriodicGraph
from flatbands.laurent import LaurentPoly, format_poly
from flatbands.sampling import random_labeling, random_periodic_graph, rng_for

F = Fraction


def test_lam_polynomial_at(lieb_graph, lieb_labeling):
    d = dispersion_polynomial(lieb_graph, lieb_labeling)
    assert lam_polynomial_at(d, (0, 0)) == (F(0), F(4), F(0), F(-1))
    assert lam_polynomial_at(d, (1, 0)) == (F(0), F(1))
    assert lam_polynomial_at(d, (2, 2)) == ()


def test_lieb_flat_band(lieb_graph, lieb_labeling):
    report = flat_bands_of(lieb_graph, lieb_labeling)
    assert report.flatband_poly == (F(0), F(1))
    assert report.rational_roots == ((F(0), 1),)
    assert report.verified == (True,)
    assert report.irreducible_factors == ()
    assert report.flat_band_count == 1
    assert report.has_flat_band


def test_no_flat_band_for_single_chain():
    g = PeriodicGraph(1, 1, [(0, 0, (1,))])
    lab = Labeling(g, [0], {(0, 0, (1,)): 1})
    report = flat_bands_of(g, lab)
    assert report.flatband_poly == (F(1),)
    assert not report.has_flat_band
    assert report.rational_roots == ()


def test_momentum_free_graph_is_all_flat():
    # no offsets at all: every eigenvalue branch is constant in z
    g = PeriodicGraph(1, 2, [(0, 1, (0,))])
    lab = Labeling(g, [0, 1], {(0, 1, (0,)): 1})
    report = flat_bands_of(g, lab)
    # det = (0 - lam)(1 - lam) - 1 = lam^2 - lam - 1, irrational roots
    assert report.flatband_poly == (F(-1), F(-1), F(1))
    assert report.rational_roots == ()
    assert len(report.irreducible_factors) == 1
    factor = report.irreducible_factors[0]
    assert factor.coefficients == (F(-1), F(-1), F(1))
    assert factor.multiplicity == 1
    assert factor.degree == 2
    assert report.flat_band_count == 2


def test_repeated_flat_band_multiplicity():
    g = PeriodicGraph(1, 2)
    lab = Labeling(g, [3, 3], {})
    report = flat_bands_of(g, lab)
    assert report.rational_roots == ((F(3), 2),)
    assert report.verified == (True, )
    assert report.flat_band_count == 2


def test_flat_bands_rejects_non_monic():
    z = LaurentPoly.z_var(1, 0)
    lam = LaurentPoly.lam(1)
    with pytest.raises(ValueError):
        flat_bands(z * lam - 1)  # lam-leading coefficient is z
    with pytest.raises(ValueError):
        flat_bands(LaurentPoly.constant(1, 2))


def test_flatband_poly_divides_every_slice():
    for trial in range(20):
        rng = rng_for("divides", trial)
        g = random_periodic_graph(rng)
        lab = random_labeling(g, rng)
        d = dispersion_polynomial(g, lab)
        report = flat_bands(d)
        g_poly = report.flatband_poly
        if unipoly.degree(g_poly) < 1:
            continue
        for z_part in {key[:-1] for key in d.support()}:
            _, rem = unipoly.divmod_exact(lam_polynomial_at(d, z_part), g_poly)
            assert rem == ()


def test_generic_decision_lieb(lieb_graph):
    decision = generic_flat_band_decision(lieb_graph, trials=4, seed=11)
    assert decision.consistent
    assert decision.has_flat_band is False
    assert len(decision.reports) == 4
    assert all(not r.has_flat_band for r in decision.reports)


def test_generic_decision_flat_graph():
    g = PeriodicGraph(1, 2, [(0, 1, (0,))])
    decision = generic_flat_band_decision(g, trials=3, seed=0)
    assert decision.consistent
    assert decision.has_flat_band is True


def test_generic_decision_validates_trials(lieb_graph):
    with pytest.raises(ValueError):
        generic_flat_band_decision(lieb_graph, trials=0)


class TestInheritance:
    def test_lieb_band_is_not_inherited(self, lieb_graph, lieb_labeling):
        result = inheritance_check(lieb_graph, lieb_labeling, 0)
        assert result.deleted_orbit == 0
        assert result.shared_roots == ()
        assert result.shared_poly == (F(1),)

    def test_isolated_orbit_band_survives_deletion(self, lieb_graph):
        # Lieb plus a decoupled orbit at potential 0; deleting orbit 3
        # keeps the lam = 0 flat band of the Lieb part
        g = PeriodicGraph(2, 4, lieb_graph.sorted_edges())
        lab = Labeling(g, [0, 0, 0, 0], {e: 1 for e in g.sorted_edges()})
        result = inheritance_check(g, lab, 3)
        assert result.shared_roots == (F(0),)
        assert result.shared_poly == (F(0), F(1))

    def test_argument_validation(self, lieb_graph, lieb_labeling):
        with pytest.raises(ValueError):
            inheritance_check(lieb_graph, lieb_labeling, 5)
        g = PeriodicGraph(1, 1, [(0, 0, (1,))])
        lab = Labeling(g, [0], {(0, 0, (1,)): 1})
        with pytest.raises(ValueError):
            inheritance_check(g, lab, 0)


class TestVerticalSegmentFaceWitness:
    def test_lieb_witness(self, lieb_graph, lieb_labeling):
        found = vertical_segment_face_witness(lieb_graph, lieb_labeling)
        assert found is not None
        normal, facial = found
        assert normal.components == (-1, 0, 0)
        assert format_poly(facial) == "z1*lam"

    def test_needs_a_flat_band(self):
        g = PeriodicGraph(1, 1, [(0, 0, (1,))])
        lab = Labeling(g, [0], {(0, 0, (1,)): 1})
        with pytest.raises(ValueError):
            vertical_segment_face_witness(g, lab)

    def test_rejects_support_zero_domain(self):
        g = PeriodicGraph(1, 2, [(0, 1, (0,))])
        lab = Labeling(g, [0, 1], {(0, 1, (0,)): 1})
        with pytest.raises(ValueError):
            vertical_segment_face_witness(g, lab)
