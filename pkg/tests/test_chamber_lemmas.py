import math

import numpy as np
import pytest

from cheegerlab.arc_geometry import signed_area, transform_curve
from cheegerlab.chamber_lemmas import (
    DiskChain,
    chain_from_dict,
    chain_region_area,
    chain_to_dict,
    monte_carlo_area,
    phi,
    pocket_outline,
    random_chain,
    reference_areas,
    run_chain_sweep,
    tangency_geometry,
    verify_chain_bound,
)
from cheegerlab.errors import GenerationError, ValidationError

PI = math.pi
SQRT3 = math.sqrt(3.0)


def triangle_chain(radius=1.0):
    side = 2.0 * radius
    return DiskChain(
        np.array([[0, 0], [side, 0], [side / 2, side * SQRT3 / 2]]),
        [radius] * 3, "closed",
    )


class TestReferenceAreas:
    def test_values_at_unit_radius(self):
        delta, wedge, corner = reference_areas(1.0)
        assert delta == pytest.approx(0.1612545, abs=1e-7)
        assert wedge == pytest.approx(0.4292037, abs=1e-7)
        assert corner == pytest.approx(0.6848533, abs=1e-7)

    def test_closed_forms(self):
        delta, wedge, corner = reference_areas(2.0)
        assert delta == pytest.approx(2.0 * (2 * SQRT3 - PI), abs=1e-12)
        assert wedge == pytest.approx(4.0 * (2.0 - PI / 2.0), abs=1e-12)
        assert corner == pytest.approx(4.0 * (3 * SQRT3 - PI) / 3.0, abs=1e-12)

    def test_wedge_monte_carlo_cross_check(self):
        wd = DiskChain(np.array([[-1, 1], [1, 1]]), [1, 1], "half_plane")
        mc = monte_carlo_area(wd, samples=2_000_000)
        _, wedge, _ = reference_areas(1.0)
        assert abs(mc.area - wedge) <= 3.0 * mc.sample_error

    def test_nonpositive_radius(self):
        with pytest.raises(ValidationError):
            reference_areas(0.0)


class TestChainRegionArea:
    def test_three_tangent_unit_disks(self):
        rep = chain_region_area(triangle_chain())
        delta, _, _ = reference_areas(1.0)
        assert rep.method == "decomposition"
        assert rep.area == pytest.approx(delta, abs=1e-12)

    def test_square_chain(self):
        sq = DiskChain(np.array([[0, 0], [2, 0], [2, 2], [0, 2]]), [1, 1, 1, 1], "closed")
        rep = chain_region_area(sq)
        assert rep.area == pytest.approx(4.0 - PI, abs=1e-12)

    def test_wedge_fixture(self):
        wd = DiskChain(np.array([[-1, 1], [1, 1]]), [1, 1], "half_plane")
        rep = chain_region_area(wd)
        assert rep.area == pytest.approx(2.0 - PI / 2.0, abs=1e-12)

    def test_half_plane_lemma_optimum(self):
        hp = DiskChain(np.array([[-1, 1], [0, 1 + SQRT3], [1, 1]]), [1, 1, 1], "half_plane")
        delta, wedge, _ = reference_areas(1.0)
        rep = chain_region_area(hp)
        assert rep.area == pytest.approx(delta + wedge, abs=1e-12)
        assert rep.area == pytest.approx(0.5904577, abs=1e-6)

    def test_monte_carlo_within_three_sigma(self):
        for chain, expected in [
            (triangle_chain(), reference_areas(1.0)[0]),
            (DiskChain(np.array([[0, 0], [2, 0], [2, 2], [0, 2]]), [1, 1, 1, 1], "closed"), 4 - PI),
        ]:
            mc = monte_carlo_area(chain, samples=1_000_000)
            assert abs(mc.area - expected) <= 3.0 * mc.sample_error

    def test_pocket_outline_matches_decomposition(self):
        for flavor in ("closed", "half_plane", "sector"):
            for i in range(6):
                chain = random_chain(flavor, 3 + i % 3, seed=[7, i])
                outline_area = signed_area(pocket_outline(chain))
                rep = chain_region_area(chain)
                assert outline_area == pytest.approx(rep.area, rel=1e-10, abs=1e-12)

    def test_shrinking_middle_radius_decreases_area(self):
        # D1, D3 fixed and tangent; the enclosed area grows with the middle radius
        areas = []
        for r2 in (1.0, 1.15, 1.3, 1.45):
            x0, y0, _, _ = tangency_geometry(1.0, r2, 1.0)
            chain = DiskChain(np.array([[0, 0], [x0, y0], [2, 0]])[[0, 1, 2]], [1.0, r2, 1.0], "closed")
            areas.append(chain_region_area(chain).area)
        assert all(a < b for a, b in zip(areas, areas[1:]))

    def test_dilation_scaling(self):
        small = triangle_chain(1.0)
        big = triangle_chain(2.5)
        assert chain_region_area(big).area == pytest.approx(
            2.5 ** 2 * chain_region_area(small).area, rel=1e-12
        )

    def test_invalid_chain_rejected(self):
        with pytest.raises(ValidationError):
            DiskChain(np.array([[0, 0], [1, 0], [0.5, 1]]), [1, 1, 1], "closed")


class TestTangencyGeometry:
    def test_symmetric_tangent_anchors(self):
        x0, y0, d1, d3 = tangency_geometry(1.0, 1.0, 1.0)
        assert (x0, y0) == (pytest.approx(1.0), pytest.approx(SQRT3))
        assert d1 == pytest.approx(1.0 / (2.0 * SQRT3), abs=1e-12)
        assert d1 == pytest.approx(0.2886751, abs=1e-7)
        assert d3 == pytest.approx(d1, abs=1e-15)

    def test_separated_anchors(self):
        x0, y0, d1, d3 = tangency_geometry(1.0, 1.0, 1.0, l=3.0)
        assert x0 == pytest.approx(1.5, abs=1e-12)
        assert y0 == pytest.approx(math.sqrt(1.75), abs=1e-12)
        assert y0 == pytest.approx(1.3228757, abs=1e-7)
        assert d1 > 0 and d3 > 0

    @pytest.mark.parametrize("with_l", [False, True])
    def test_matches_finite_differences(self, with_l):
        rng = np.random.default_rng(17)
        step = 1e-6
        for _ in range(150):
            r1, r2, r3 = rng.uniform(0.4, 2.5, 3)
            l = float(r1 + r3 + rng.uniform(0.05, 1.5)) if with_l else None
            if with_l and l >= r1 + r3 + 2 * r2:
                continue
            x0, y0, d1, d3 = tangency_geometry(r1, r2, r3, l)
            assert d1 > 0 and d3 > 0
            span = l if with_l else r1 + r3

            def angles(rr2):
                x, y, _, _ = tangency_geometry(r1, rr2, r3, l)
                return math.atan2(y, x), math.atan2(y, span - x)

            up1, up3 = angles(r2 + step)
            dn1, dn3 = angles(r2 - step)
            assert d1 == pytest.approx((up1 - dn1) / (2 * step), rel=2e-5, abs=1e-5)
            assert d3 == pytest.approx((up3 - dn3) / (2 * step), rel=2e-5, abs=1e-5)

    def test_domain_errors(self):
        with pytest.raises(ValidationError):
            tangency_geometry(1.0, 1.0, 1.0, l=1.5)  # l <= r1 + r3
        with pytest.raises(ValidationError):
            tangency_geometry(1.0, 0.05, 1.0, l=4.0)  # middle disk cannot reach
        with pytest.raises(ValidationError):
            tangency_geometry(-1.0, 1.0, 1.0)


class TestPhi:
    def test_pentagon_minimum(self):
        ts = np.linspace(0.0, PI / 3.0, 20001)
        vals = [phi("pentagon", float(t)) for t in ts]
        assert min(vals) == pytest.approx(0.5 + SQRT3 / 4.0, abs=1e-8)
        assert phi("pentagon", PI / 3.0) == pytest.approx(0.5 + SQRT3 / 4.0, abs=1e-10)
        assert np.argmin(vals) == len(ts) - 1  # minimum attained at pi/3
        assert phi("pentagon", PI / 3.0) == pytest.approx(0.9330127, abs=1e-7)

    def test_quadrilateral_degenerates_to_sine(self):
        for t in np.linspace(0.05, 2.5, 30):
            assert phi("quadrilateral", float(t), aux=1.0) == pytest.approx(math.sin(t), abs=1e-12)

    def test_sector_value(self):
        assert phi("sector", PI / 2.0, aux=1.0) == pytest.approx(2.0 + SQRT3, abs=1e-10)
        assert phi("sector", PI / 2.0, aux=2.0) == pytest.approx(4.0 * (2.0 + SQRT3), abs=1e-10)
        assert phi("sector", PI / 2.0, aux=1.0) == pytest.approx(3.7320508, abs=1e-7)

    def test_interval_errors(self):
        with pytest.raises(ValidationError):
            phi("pentagon", 1.5)
        with pytest.raises(ValidationError):
            phi("sector", 2.0, aux=1.0)
        with pytest.raises(ValidationError):
            phi("quadrilateral", 0.5)  # missing aux

    def test_quadrilateral_derivative_sign_matches_root_structure(self):
        # phi' >= 0 iff 4 cos^2 t - 4 l cos t + l^2 - 1 <= 0; roots (l +- 1)/2
        step = 1e-7
        for l in (1.0, 1.2, 1.5, 1.8):
            t_hi = math.acos(min(1.0, (l - 1.0) / 2.0))
            for t in np.linspace(0.05, min(t_hi + 0.5, PI - 0.05), 25):
                t = float(t)
                try:
                    d = (phi("quadrilateral", t + step, aux=l) - phi("quadrilateral", t - step, aux=l)) / (2 * step)
                except ValidationError:
                    continue
                y = math.cos(t)
                poly = 4.0 * y * y - 4.0 * l * y + l * l - 1.0
                if abs(poly) > 1e-3:
                    assert (d >= 0) == (poly <= 0), (l, t, d, poly)


class TestVerifyChainBound:
    def test_closed_equality_case(self):
        rep = verify_chain_bound(triangle_chain())
        assert rep.holds
        assert rep.area == pytest.approx(rep.bound, abs=1e-12)

    def test_half_plane_optimum(self):
        hp = DiskChain(np.array([[-1, 1], [0, 1 + SQRT3], [1, 1]]), [1, 1, 1], "half_plane")
        rep = verify_chain_bound(hp)
        assert rep.holds
        assert rep.area == pytest.approx(rep.bound, abs=1e-12)

    def test_m2_rejected(self):
        wd = DiskChain(np.array([[-1, 1], [1, 1]]), [1, 1], "half_plane")
        with pytest.raises(ValidationError):
            verify_chain_bound(wd)

    @pytest.mark.parametrize("flavor", ["closed", "half_plane", "sector"])
    def test_random_sweep_no_violations(self, flavor):
        _, violations = run_chain_sweep(flavor, 120, seed=23)
        assert violations == []


class TestRandomChain:
    def test_determinism(self):
        a = random_chain("half_plane", 5, seed=99)
        b = random_chain("half_plane", 5, seed=99)
        assert np.array_equal(a.centers, b.centers)
        assert np.array_equal(a.radii, b.radii)

    def test_validity_by_construction(self):
        for flavor in ("closed", "half_plane", "sector"):
            chain = random_chain(flavor, 6, seed=1)
            assert chain.m == 6
            assert chain.warnings == ()

    def test_sector_tangencies(self):
        chain = random_chain("sector", 4, seed=5)
        assert chain.centers[0, 1] == pytest.approx(chain.radii[0], abs=1e-9)
        d = chain.centers[-1, 0] * math.sin(PI / 3) - chain.centers[-1, 1] * math.cos(PI / 3)
        assert d == pytest.approx(chain.radii[-1], abs=1e-9)

    def test_bad_arguments(self):
        with pytest.raises(ValidationError):
            random_chain("moebius", 4, seed=0)
        with pytest.raises(ValidationError):
            random_chain("closed", 2, seed=0)


class TestJson:
    def test_round_trip(self):
        chain = random_chain("sector", 4, seed=11)
        d = chain_to_dict(chain)
        back = chain_from_dict(d)
        assert np.allclose(back.centers, chain.centers)
        assert np.allclose(back.radii, chain.radii)
        assert len(d["lines"]) == 2
