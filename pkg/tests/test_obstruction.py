import dataclasses
import itertools
from fractions import Fraction

import numpy as np
import pytest

from equipart.errors import ChartBreakdown, DegenerateIntervals, InfeasibleSpec
from equipart.geometry import act, elements
from equipart.graycode import canonical_pattern, flip_counts, flip_sequences
from equipart.measures import IntervalMeasure, bisector_defect, orthant_masses
from equipart.obstruction import (CASE_COUNTS, ProblemSpec, case_counts, corollary_pipeline,
                                  default_intervals, enumerate_orbits, enumerate_patterns,
                                  jacobian_nondegenerate, match_table, pattern_from_configuration,
                                  perturbation_parity_invariance, realize, reference_sequence,
                                  verify_all)
from oracles import brute_force_orbits

FFB = ProblemSpec(5, 3, ("F", "F", "B"))


@pytest.fixture(scope="module")
def report():
    return enumerate_orbits(FFB)


@pytest.fixture(scope="module")
def zeros(report):
    return [realize(p) for p in report.representatives]


def test_infeasible_spec_explains_the_count():
    with pytest.raises(InfeasibleSpec, match="k\\*d = 15"):
        enumerate_orbits(ProblemSpec(5, 3, ("F", "F")))


def test_parse():
    assert ProblemSpec.parse(5, 3, "F,F,B") == FFB
    with pytest.raises(ValueError):
        ProblemSpec.parse(5, 3, "F,X")


def test_thirteen_orbits(report):
    assert report.orbit_count == 13
    assert report.theta == 1
    assert all(s == 1 for s in report.stabilizers)


def test_small_and_large_censuses():
    r = enumerate_orbits(ProblemSpec(3, 2, ("F", "F")))
    assert (r.orbit_count, r.theta) == (1, 1)
    r7 = enumerate_orbits(ProblemSpec(7, 3, ("F", "F", "F")))
    assert r7.theta == 0
    assert r7.orbit_count == 60


def _feasible_specs(max_intervals=4):
    for k in (1, 2, 3):
        for d in range(1, 8):
            for n in range(1, max_intervals + 1):
                for kinds in itertools.product("FB", repeat=n):
                    spec = ProblemSpec(d, k, kinds)
                    try:
                        spec.check()
                    except InfeasibleSpec:
                        continue
                    yield spec


def test_enumerator_agrees_with_brute_force_oracle():
    specs = list(_feasible_specs())
    assert ProblemSpec(7, 3, ("F", "F", "F")) in specs and FFB in specs
    for spec in specs:
        r = enumerate_orbits(spec)
        orbits, raw_all_starts = brute_force_orbits(spec.d, spec.k, spec.constraints)
        assert r.orbit_count == orbits, spec
        # start pinned to 0 versus all 2^k starts
        assert r.raw_count * (1 << spec.k) == raw_all_starts, spec


def test_census_orbit_consistency():
    import math

    for spec in (FFB, ProblemSpec(3, 2, ("F", "F")), ProblemSpec(7, 3, ("F", "F", "F"))):
        r = enumerate_orbits(spec)
        assert r.raw_count == sum(math.factorial(spec.k) // s for s in r.stabilizers)


def test_match_table_rows(report):
    rows = match_table(report)
    by_pair = {(r.i1_type, r.i2_type): r.count for r in rows}
    assert by_pair[((4, 2, 1), (1, 2, 4))] == 1
    assert by_pair[((3, 3, 1), (2, 2, 3))] == 2
    assert sum(r.count for r in rows) == 13
    assert case_counts(rows) == CASE_COUNTS


def test_reference_sequences_have_sorted_counts():
    for counts in [(4, 2, 1), (3, 3, 1), (3, 2, 2)]:
        seq = reference_sequence(counts)
        assert tuple(seq.count(i) for i in range(3)) == counts


def test_csv_columns(report):
    rows = report.csv_rows()
    assert rows[0] == ("orbit_id", "i1_type", "i2_type", "bisector_index", "claim_case")
    assert len(rows) == 14


def test_every_orbit_realizes(zeros):
    intervals = default_intervals(FFB.constraints, 3)
    assert intervals == [(0, 8), (9, 17), (18, 20)]
    for z in zeros:
        assert z.residual < 1e-9
        assert z.exact_residual == 0
        nu1, nu2, nu3 = (IntervalMeasure(5, a, b) for a, b in z.intervals)
        assert np.allclose(orthant_masses(nu1, z.configuration), 1.0, atol=1e-9)
        assert np.allclose(orthant_masses(nu2, z.configuration), 1.0, atol=1e-9)
        assert min(abs(bisector_defect(nu3, h)) for h in z.configuration.planes) < 1e-9
        assert z.crossings == tuple(sorted(z.crossings))


def test_walk_round_trip_for_every_pattern():
    for spec in (FFB, ProblemSpec(3, 2, ("F", "F"))):
        for p in enumerate_patterns(spec):
            z = realize(p)
            back = pattern_from_configuration(z.configuration, z.intervals, spec.constraints)
            assert back == p


def test_realize_on_rational_intervals():
    p = enumerate_orbits(FFB).representatives[7]
    ivs = [(Fraction(-3, 2), Fraction(5, 3)), (2, Fraction(23, 7)), (4, 9)]
    z = realize(p, ivs)
    assert z.residual < 1e-9 and z.exact_residual == 0


def test_overlapping_intervals_refused():
    p = enumerate_orbits(FFB).representatives[0]
    with pytest.raises(DegenerateIntervals):
        realize(p, [(0, 8), (7, 15), (16, 18)])


def test_zeros_are_equivariant(report, zeros):
    for idx in (0, 5, 11):
        z, p = zeros[idx], report.representatives[idx]
        for g in elements(3):
            moved = act(g, z.configuration)
            assert pattern_from_configuration(moved, z.intervals, FFB.constraints) == p.act(g)


def test_jacobians_nondegenerate(zeros):
    for z in zeros:
        assert jacobian_nondegenerate(z).ok


def test_duplicated_crossing_is_degenerate(zeros):
    z = zeros[0]
    chart = list(range(15))
    chart[14] = 13
    bad = dataclasses.replace(z, chart=tuple(chart))
    check = jacobian_nondegenerate(bad)
    assert not check.ok
    assert abs(check.det_estimate) < 1e-6


def test_determinant_stable_under_step_halving(zeros):
    for z in zeros[:4]:
        a = jacobian_nondegenerate(z, 1e-5).det_estimate
        b = jacobian_nondegenerate(z, 5e-6).det_estimate
        assert abs(a - b) <= 0.1 * abs(a)


def test_chart_breakdown_after_retries(zeros):
    with pytest.raises(ChartBreakdown):
        jacobian_nondegenerate(zeros[0], step_scale=5.0)


def test_verify_all_is_order_independent():
    serial = verify_all(ProblemSpec(3, 2, ("F", "F")))
    parallel = verify_all(ProblemSpec(3, 2, ("F", "F")), workers=3)
    assert [jc.det_estimate for _, jc in serial] == [jc.det_estimate for _, jc in parallel]


def test_corollary_pipeline():
    res = corollary_pipeline(IntervalMeasure(5, 0.0, 16.0))
    assert np.allclose(res.masses, 1.0, rtol=1e-9)
    assert len(res.planes) == 4 and res.theta == 1
    from equipart.geometry import Configuration

    mu = IntervalMeasure(5, 0.0, 16.0)
    for perm in itertools.permutations(range(4)):
        c = Configuration(5, tuple(res.planes[i] for i in perm))
        assert sorted(orthant_masses(mu, c)) == pytest.approx(sorted(res.masses), abs=1e-12)


def test_corollary_other_measures():
    res = corollary_pipeline(IntervalMeasure(5, -2.0, 3.0), IntervalMeasure(5, 7.0, 7.5), 6)
    assert np.allclose(res.masses, 5.0 / 16, rtol=1e-9)
    with pytest.raises(ValueError):
        corollary_pipeline(IntervalMeasure(4, 0.0, 1.0))


def test_perturbation_invariance_small():
    r = perturbation_parity_invariance(FFB, trials=5, seed=1)
    assert r and set(r.counts) == {13} and set(r.thetas) == {1}
    r2 = perturbation_parity_invariance(ProblemSpec(3, 2, ("F", "F")), trials=10, seed=2)
    assert r2 and set(r2.counts) == {1}


def test_overlapping_placement_rejected_before_trials():
    good = [(0, 8), (9, 17), (18, 20)]
    bad = [(0, 8), (5, 17), (18, 20)]
    with pytest.raises(DegenerateIntervals):
        perturbation_parity_invariance(FFB, placements=[good, bad])


def test_flip_types_cover_cases(report):
    types = {c.i1_type for c in report.classifications}
    assert types == {tuple(sorted(flip_counts(s), reverse=True)) for s in flip_sequences(3)}
    assert {c.case for c in report.classifications} == set(range(1, 8))
    assert all(canonical_pattern(p) == p for p in report.representatives)


def test_far_placement_hits_float_conditioning_limit():
    # clustered crossings near t = 9: the exact construction is still perfect
    # but rounding the unit coefficient vector moves roots by ~1e-9
    p = next(q for q in enumerate_patterns(FFB)
             if q.steps == ((0, 1, 0, 2, 0, 1, 0), (2, 1, 2, 0, 2, 1, 2), (1,)))
    far = [(5.472020515547705, 6.698906850824718), (8.364374377110053, 9.386861807897123),
           (10.436830809948425, 11.412549424020199)]
    from equipart.errors import RealizationFailed

    with pytest.raises(RealizationFailed, match="exact residual 0,"):
        realize(p, far)
    z = realize(p, far, tol=1e-7)
    assert z.exact_residual == 0 and 1e-9 < z.residual < 1e-7


@pytest.mark.parametrize("text", ["FFB", "F,F,B", "F F B", "f, f, b"])
def test_problem_spec_parse_forms(text):
    assert ProblemSpec.parse(5, 3, text) == FFB
