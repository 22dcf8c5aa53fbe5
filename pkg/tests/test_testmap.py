import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from equipart.errors import TrivialSolution
from equipart.geometry import (Configuration, OrientedHyperplane, act, elements,
                               hyperplane_from_roots, popcount)
from equipart.measures import DiscreteMeasure, IntervalMeasure, bisector_defect, orthant_masses
from equipart.report import random_singular_configuration
from equipart.testmap import (act_on_test_vector, bisector_product, dft_component, dft_components,
                              full_test_map, orthant_basis_components, shielding_check, sign_matrix)


def _plane(rng, mu, orient=None):
    roots = sorted(rng.uniform(mu.lo, mu.hi, mu.d))
    return hyperplane_from_roots(roots, orient or int(rng.choice([-1, 1])), mu.d)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_sign_matrix_squares_to_scaled_identity(k):
    H = sign_matrix(k)
    assert np.array_equal(H @ H, (1 << k) * np.eye(1 << k, dtype=int))


def test_dft_examples():
    rng = np.random.default_rng(0)
    mu = IntervalMeasure(3, 0.0, 2.0)
    c = Configuration(3, tuple(_plane(rng, mu) for _ in range(3)))
    assert dft_component(mu, c, 0) == pytest.approx(mu.total)
    one = Configuration(3, (c.planes[0],))
    assert dft_component(mu, one, 1) == pytest.approx(bisector_defect(mu, c.planes[0]))


def test_shield_value_for_equal_planes_is_one_for_unit_mass():
    rng = np.random.default_rng(1)
    mu = IntervalMeasure(5, 0.0, 1.0)
    h = _plane(rng, mu)
    c = Configuration(5, (h, h, _plane(rng, mu)))
    assert dft_component(mu, c, 0b011) == pytest.approx(1.0, abs=1e-12)


def test_orthant_basis_examples():
    rng = np.random.default_rng(2)
    mu = IntervalMeasure(4, -1.0, 1.0)
    c = Configuration(4, tuple(_plane(rng, mu) for _ in range(3)))
    coeffs = orthant_basis_components(mu, c)
    assert coeffs.sum() == pytest.approx(0.0, abs=1e-12)
    # change of basis: the sign transform of the orthant coefficients is the DFT
    assert np.allclose((sign_matrix(3) @ coeffs)[1:], dft_components(mu, c)[1:], atol=1e-12)
    # an empty orthant contributes -total/8
    h = c.planes[0]
    same = Configuration(4, (h, h, c.planes[2]))
    coeffs = orthant_basis_components(mu, same)
    assert coeffs[0b001] == pytest.approx(-mu.total / 8)


def test_bisector_product_examples():
    mu = IntervalMeasure(1, 0.0, 1.0)
    half = hyperplane_from_roots([0.5], 1, 1)
    up = OrientedHyperplane((1.0, 0.0))
    assert bisector_product(mu, Configuration(1, (half, up, up))) == pytest.approx(0.0)
    assert bisector_product(mu, Configuration(1, (up, up, up))) == pytest.approx(1.0)
    q = hyperplane_from_roots([0.25], 1, 1)
    c = Configuration(1, (q, up, up))
    flipped = Configuration(1, (q.antipode(), up, up))
    assert bisector_product(mu, flipped) == pytest.approx(-bisector_product(mu, c))


def test_test_map_vanishes_on_realized_zero_and_not_generically():
    from equipart.obstruction import ProblemSpec, enumerate_orbits, realize

    z = realize(enumerate_orbits(ProblemSpec(5, 3, ("F", "F", "B"))).representatives[0])
    mus = [IntervalMeasure(5, a, b) for a, b in z.intervals]
    assert full_test_map(z.configuration, mus[:2], mus[2]).norm < 1e-9
    rng = np.random.default_rng(3)
    c = Configuration(5, tuple(_plane(rng, mus[0]) for _ in range(3)))
    tv = full_test_map(c, mus[:2], mus[2])
    assert tv.norm > 1e-3
    assert len(tv.dft[0]) == 7


def test_trivial_solution_refused():
    rng = np.random.default_rng(4)
    mu = IntervalMeasure(2, 0.0, 1.0)
    c = Configuration(2, (_plane(rng, mu),))
    with pytest.raises(TrivialSolution, match="trivial"):
        full_test_map(c, [])


def test_shield_on_coincident_planes_equals_total():
    rng = np.random.default_rng(5)
    mu = IntervalMeasure(5, 0.0, 3.0)
    h = _plane(rng, mu)
    c = Configuration(5, (h, h, _plane(rng, mu)))
    tv = full_test_map(c, [mu])
    # component I = 011 sits at position 2 of the I != 0 block
    assert tv.dft[0][2] == pytest.approx(mu.total)


def test_shielding_check_cases():
    rng = np.random.default_rng(6)
    mu = IntervalMeasure(5, 0.0, 1.0)
    h, g = _plane(rng, mu), _plane(rng, mu)
    eq = shielding_check(mu, Configuration(5, (h, h, g)), 0b011)
    assert eq.case == "equal" and eq.shielded and eq.value == pytest.approx(1.0, abs=1e-12)
    anti = shielding_check(mu, Configuration(5, (h, h.antipode(), g)), 0b011)
    assert anti.case == "antipodal" and anti.value == pytest.approx(-1.0, abs=1e-12)
    none = shielding_check(mu, Configuration(5, (h, g, g)), 0b011)
    assert none.case == "not-applicable" and not none.shielded and none.value is None
    odd = shielding_check(mu, Configuration(5, (h, h, g)), 0b001)
    assert odd.case == "not-applicable"


def test_equivariance_of_the_test_map_over_the_whole_group():
    rng = np.random.default_rng(7)
    nus = [IntervalMeasure(4, 0.0, 2.0), IntervalMeasure(4, 2.5, 3.5)]
    bis = IntervalMeasure(4, 4.0, 5.0)
    c = Configuration(4, tuple(_plane(rng, IntervalMeasure(4, 0.0, 5.0)) for _ in range(3)))
    base = full_test_map(c, nus, bis)
    for g in elements(3):
        lhs = full_test_map(act(g, c), nus, bis)
        rhs = act_on_test_vector(g, base)
        assert np.allclose(lhs.vector, rhs.vector, atol=1e-12)
        assert np.allclose(lhs.orthant, rhs.orthant, atol=1e-12)
        assert rhs.bisector[0] == pytest.approx((-1) ** popcount(g.flips) * base.bisector[0])


def test_equivariance_with_discrete_measure():
    rng = np.random.default_rng(8)
    d = 3
    pts = DiscreteMeasure(tuple((tuple(rng.standard_normal(d)), float(rng.uniform(0.5, 1)))
                                for _ in range(30)))
    c = Configuration(d, tuple(OrientedHyperplane(tuple(rng.standard_normal(d + 1)))
                               for _ in range(3)))
    base = full_test_map(c, [pts])
    for g in list(elements(3))[::7]:
        assert np.allclose(full_test_map(act(g, c), [pts]).vector,
                           act_on_test_vector(g, base).vector, atol=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.booleans(), st.floats(0.1, 5.0))
def test_singular_configurations_are_shielded(seed, antipodal, length):
    rng = np.random.default_rng(seed)
    mu = IntervalMeasure(5, 0.0, length)
    c = random_singular_configuration(rng, mu, 3, antipodal)
    tv = full_test_map(c, [mu])
    assert tv.norm > 0
    assert abs(tv.dft[0][2]) == pytest.approx(mu.total, rel=1e-12)
