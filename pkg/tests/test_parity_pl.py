from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from equipart.errors import GenericityError, InvalidSymmetry, NonTransverseRay, ShieldViolation
from equipart.parity_pl import (DecompositionPiece, PLCycle, PLManifoldMap, RaySpec,
                                adversarial_instance, antipodal_vertex_map, boundary_identity,
                                bu_check, bu_reduction, decompose_parity, frontier,
                                hemisphere_pieces, hemispheres, kuhn_cube, load_mesh,
                                random_generic_map, ray_parity, save_mesh, symmetric_cancel,
                                zero_parity)


def segment(a, b):
    return PLManifoldMap(1, [(0, 1)], [(a,), (b,)])


def test_segment_examples():
    assert zero_parity(segment(-1, 1)) == 1
    assert zero_parity(segment(2, 3)) == 0
    with pytest.raises(GenericityError):
        zero_parity(segment(0, 3))


def test_constant_map_has_no_zeros():
    g = kuhn_cube(2)
    m = PLManifoldMap(2, g.simplices, [(1, 2)] * len(g.coords), g.coords)
    bi = boundary_identity(m)
    assert (bi.lhs, bi.rhs) == (0, 0)


def test_pseudomanifold_checks():
    with pytest.raises(ValueError):
        PLManifoldMap(2, [(0, 1, 2), (0, 1, 3), (0, 1, 4)], [(1, 0)] * 5)
    with pytest.raises(ValueError):
        PLManifoldMap(2, [(0, 1)], [(1, 0)] * 2)
    g = kuhn_cube(2)
    m = PLManifoldMap(2, g.simplices, [(1, 0)] * 9, g.coords)
    assert len(m.boundary) == 8
    with pytest.raises(ValueError):
        PLManifoldMap(2, g.simplices, [(1, 0)] * 9, g.coords, boundary=m.boundary[:-1])


def test_kuhn_cube_is_centrally_symmetric():
    for n in (1, 2, 3):
        g = kuhn_cube(n)
        idx = g.index()
        simplices = set(g.simplices)
        for s in g.simplices:
            image = tuple(sorted(idx[tuple(-x for x in g.coords[v])] for v in s))
            assert image in simplices


def _loop(values):
    n = len(values)
    return PLCycle(2, tuple((i, (i + 1) % n) for i in range(n)), tuple(values))


def test_planar_loops():
    around = _loop([(1, 0), (0, 1), (-1, 0), (0, -1)])
    away = _loop([(3, 1), (4, 1), (4, 2), (3, 2)])
    assert ray_parity(around, RaySpec((1, 2))) == 1
    assert ray_parity(away, RaySpec((1, 2))) == 0


def test_ray_independence():
    around = _loop([(2, 0), (1, 3), (-2, 1), (-1, -2), (1, -3)])
    rng = np.random.default_rng(4)
    for _ in range(100):
        v = tuple(rng.standard_normal(2))
        assert ray_parity(around, RaySpec(v)) == 1


def test_non_transverse_ray_is_jittered_deterministically():
    around = _loop([(1, 0), (0, 1), (-1, 0), (0, -1)])
    # the ray (1, 0) passes through a vertex image
    with pytest.raises(NonTransverseRay, match="jitter"):
        ray_parity(around, RaySpec((1, 0)), jitter=False)
    assert ray_parity(around, RaySpec((1, 0))) == 1
    assert ray_parity(around, RaySpec((1, 0))) == ray_parity(around, RaySpec((1, 0)))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 3))
def test_boundary_identity_on_random_maps(seed, n):
    m = random_generic_map(n, np.random.default_rng(seed))
    bi = boundary_identity(m)
    assert bi.equal


def test_ray_parity_ray_independent_on_a_manifold():
    m = random_generic_map(3, np.random.default_rng(5), odd_boundary=True)
    rng = np.random.default_rng(6)
    got = {ray_parity(m, RaySpec(tuple(rng.standard_normal(3)))) for _ in range(100)}
    assert got == {zero_parity(m)}


def _min_face_distance(m):
    # oracle: distance from 0 to the image of every (n-1)-face, by brute
    # force over sub-faces with least-squares projection
    best = np.inf
    for f in m.faces(m.n - 1):
        pts = np.asarray(m.points(f), dtype=float)
        for r in range(1, len(pts) + 1):
            import itertools

            for sub in itertools.combinations(range(len(pts)), r):
                P = pts[list(sub)]
                if r == 1:
                    best = min(best, np.linalg.norm(P[0]))
                    continue
                A = (P[1:] - P[0]).T
                lam, *_ = np.linalg.lstsq(A, -P[0], rcond=None)
                if np.all(lam >= 0) and lam.sum() <= 1:
                    best = min(best, np.linalg.norm(P[0] + A @ lam))
    return best


def test_zero_parity_stable_under_small_interior_perturbations():
    rng = np.random.default_rng(8)
    for trial in range(100):
        n = trial % 3 + 1
        m = random_generic_map(n, rng, size=2 if n == 3 else 4)
        half = max(abs(x) for c in m.coords for x in c)
        interior = [i for i, c in enumerate(m.coords) if all(abs(x) < half for x in c)]
        v = interior[int(rng.integers(len(interior)))]
        radius = _min_face_distance(m) / 2
        delta = rng.standard_normal(n)
        delta *= radius * float(rng.uniform(0, 0.999)) / np.linalg.norm(delta)
        values = list(m.values)
        values[v] = tuple(float(x) + float(dx) for x, dx in zip(values[v], delta))
        assert zero_parity(m.with_values(values)) == zero_parity(m)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_borsuk_ulam_parity(n):
    r = bu_check(n, seed=3, trials=20)
    assert r.ok and set(r.parities) == {1}


def _transverse_odd_map(n, rng):
    # random boundary-odd map whose axis rays are transverse at every level
    while True:
        m = random_generic_map(n, rng, odd_boundary=True)
        try:
            bu_reduction(m)
        except (GenericityError, NonTransverseRay, ShieldViolation):
            continue
        return m


def test_reduction_chain_is_all_ones():
    m = _transverse_odd_map(3, np.random.default_rng(9))
    steps = bu_reduction(m)
    assert [s.n for s in steps] == [3, 2, 1]
    assert all(s.zero_parity == s.ray_parity == 1 for s in steps)
    assert all(s.hemisphere_parity == 1 for s in steps[:-1])


def test_hemispheric_decomposition_sums_to_total():
    for seed in range(10):
        m = random_generic_map(2 + seed % 2, np.random.default_rng(seed), odd_boundary=True)
        try:
            res = decompose_parity(m, hemisphere_pieces(m))
        except ShieldViolation:
            continue
        assert res.equal and res.total == 1


def test_single_piece_is_boundary_identity():
    m = random_generic_map(2, np.random.default_rng(10))
    res = decompose_parity(m, [DecompositionPiece(m.boundary)])
    bi = boundary_identity(m)
    assert res.parities == (bi.rhs,) and res.total == bi.lhs


def test_adversarial_unshielded_instance_is_refused():
    m, pieces = adversarial_instance()
    # the instance is otherwise fine: both global counts exist and agree
    assert boundary_identity(m).equal
    with pytest.raises(ShieldViolation):
        decompose_parity(m, pieces)
    shielded = [DecompositionPiece(p.facets, shield=0) for p in pieces]
    with pytest.raises(ShieldViolation):
        decompose_parity(m, shielded)


def test_valid_shield_is_accepted():
    m = _transverse_odd_map(2, np.random.default_rng(12))
    pieces = hemisphere_pieces(m)
    rprime = {v: m.values[v][0] for f in frontier(pieces[0].facets, m.boundary) for v in f}
    if all(x != 0 for x in rprime.values()):
        res = decompose_parity(m, [DecompositionPiece(p.facets, shield=0) for p in pieces])
        assert res.equal


def test_pieces_must_partition_the_boundary():
    m = random_generic_map(2, np.random.default_rng(13))
    with pytest.raises(ValueError):
        decompose_parity(m, [DecompositionPiece(m.boundary[:3])])


def test_antipodal_cancel_reduces_to_hemisphere():
    m = random_generic_map(2, np.random.default_rng(14), odd_boundary=True)
    up, down = hemispheres(m, 1)
    sc = symmetric_cancel(m, up, down, antipodal_vertex_map(m), 1)
    assert sc.consistent and sc.value == 1


def _even_last_coordinate(m):
    # r' odd, r'' even on the boundary: the a = 0 mechanism
    beta = antipodal_vertex_map(m)
    half = max(abs(x) for c in m.coords for x in c)
    values = list(m.values)
    for v, w in beta.items():
        if v < w and any(abs(x) == half for x in m.coords[v]):
            values[w] = tuple(-x for x in values[v][:-1]) + (values[v][-1],)
    return m.with_values(values)


def test_symmetric_last_coordinate_gives_zero():
    rng = np.random.default_rng(15)
    done = with_zeros = 0
    while done < 5:
        m = _even_last_coordinate(random_generic_map(2, rng, odd_boundary=True))
        try:
            m.check_generic()
            up, down = hemispheres(m, 1)
            sc = symmetric_cancel(m, up, down, antipodal_vertex_map(m), 0)
        except (GenericityError, ShieldViolation, NonTransverseRay):
            continue
        assert sc.value == 0 and sc.direct == 0
        if _has_zero(m, up):
            # the sign relation for a = 1 must then fail
            with_zeros += 1
            with pytest.raises(InvalidSymmetry):
                symmetric_cancel(m, up, down, antipodal_vertex_map(m), 1)
        done += 1
    assert with_zeros > 0


def _has_zero(m, facets):
    from equipart._linalg import origin_in_hull

    return any(origin_in_hull([m.values[v][:-1] for v in f]) for f in facets)


def test_identity_beta_on_zero_free_piece():
    g = kuhn_cube(2)
    m = PLManifoldMap(2, g.simplices, [(1, 1)] * 9, g.coords)
    up, _ = hemispheres(m, 1)
    sc = symmetric_cancel(m, up, up, {v: v for v in range(9)}, 1)
    assert sc.value == 0 and sc.direct == 0


def test_beta_must_map_halves():
    m = random_generic_map(2, np.random.default_rng(16), odd_boundary=True)
    up, down = hemispheres(m, 1)
    with pytest.raises(InvalidSymmetry):
        symmetric_cancel(m, up, down, {v: v for v in range(len(m.values))}, 1)
    with pytest.raises(ValueError):
        symmetric_cancel(m, up, down, antipodal_vertex_map(m), 2)


def test_exact_and_float_paths_agree():
    m = random_generic_map(3, np.random.default_rng(17))
    as_float = m.with_values([tuple(float(x) for x in v) for v in m.values])
    as_frac = m.with_values([tuple(Fraction(x, 3) for x in v) for v in m.values])
    assert zero_parity(m) == zero_parity(as_float) == zero_parity(as_frac)


def test_mesh_json_round_trip(tmp_path):
    m = random_generic_map(2, np.random.default_rng(18))
    path = tmp_path / "m.json"
    save_mesh(m, path)
    back = load_mesh(path)
    assert back == m
