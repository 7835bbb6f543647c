"""Fan construction, point location, smoothness, and the two build routes."""

import itertools
import json

import pytest

from cyclic_wonderful.fan import (
    Cone,
    build_fan,
    build_fan_stellar,
    cone_dim,
    fans_equal,
    is_smooth_cone,
    locate_point,
    ray_vector,
    support_decomposition,
)
from cyclic_wonderful.lattice import (
    ArrangementSpec,
    BuildingSet,
    Chain,
    DecoratedSubset,
    chain_intersect,
    enumerate_chains,
)
from cyclic_wonderful.sampling import Lcg, sample_mixed_points
from cyclic_wonderful.serialize import fan_from_dict, fan_to_dict


def ds(*pairs):
    return DecoratedSubset.of(pairs)


def chain(sets, deco):
    return Chain.of(sets, deco)


# --- ray vectors -------------------------------------------------------------


def test_ray_vector_basis_cases():
    spec = ArrangementSpec(3, 2)
    assert ray_vector(ds((1, 1)), spec) == (0, 1, 0, 0)  # -1 = 2 mod 3
    assert ray_vector(ds((1, 0)), spec) == (-1, -1, 0, 0)


def test_ray_vector_sum_case():
    spec = ArrangementSpec(2, 2)
    assert ray_vector(ds((1, 0), (2, 1)), spec) == (-1, 1)


def test_ray_vector_rejects_empty_and_out_of_range():
    spec = ArrangementSpec(2, 2)
    with pytest.raises(ValueError):
        ray_vector(DecoratedSubset(()), spec)
    with pytest.raises(ValueError):
        ray_vector(ds((3, 0)), spec)


# --- direct construction -----------------------------------------------------


def test_fan_3_1_has_three_rays_and_no_2_cones():
    spec = ArrangementSpec(3, 1)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert sorted(fan.rays.values()) == [(-1, -1), (0, 1), (1, 0)]
    assert max(c.dim for c in fan.cones.values()) == 1


def test_fan_2_2_counts():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert len(fan.rays) == 8
    assert sum(1 for c in fan.cones.values() if c.dim == 2) == 8


def test_fan_2_2_labeled_cone():
    # the 2-cone of the chain {2} < {1,2} with residues a(1)=1, a(2)=0
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    cone = fan.cone(chain([(2,), (1, 2)], {1: 1, 2: 0}))
    e20 = ray_vector(ds((2, 0)), spec)
    pair = ray_vector(ds((1, 1), (2, 0)), spec)
    assert set(cone.rays) == {e20, pair} == {(0, -1), (1, -1)}


def test_build_fan_rejects_unvalidated_building_set():
    spec = ArrangementSpec(2, 2)
    raw = BuildingSet(BuildingSet.maximal(spec).elements, spec, validated=False)
    with pytest.raises(ValueError):
        build_fan(spec, raw)


def test_fan_closed_under_faces():
    spec = ArrangementSpec(3, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    for label in fan.cones:
        for size in range(len(label)):
            for sub in itertools.combinations(label, size):
                assert frozenset(sub) in fan.cones


def test_cone_dim_equals_chain_length():
    for r, n in [(2, 2), (3, 2)]:
        spec = ArrangementSpec(r, n)
        fan = build_fan(spec, BuildingSet.maximal(spec))
        for cone in fan.cones.values():
            assert cone_dim(cone) == len(cone.label)


# --- stellar construction ----------------------------------------------------


def test_stellar_2_1_performs_no_subdivisions():
    spec = ArrangementSpec(2, 1)
    g = BuildingSet.maximal(spec)
    assert g.elements == BuildingSet.singletons(spec).elements
    assert fans_equal(build_fan(spec, g), build_fan_stellar(spec, g))


@pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (2, 3)])
def test_stellar_equals_direct(r, n):
    spec = ArrangementSpec(r, n)
    g = BuildingSet.maximal(spec)
    assert fans_equal(build_fan(spec, g), build_fan_stellar(spec, g))


def test_stellar_of_2_2_subdivides_the_four_product_cones():
    # the product fan has 4 two-dimensional cones; each gains one interior ray
    spec = ArrangementSpec(2, 2)
    fan = build_fan_stellar(spec, BuildingSet.maximal(spec))
    pair_rays = {
        ray_vector(ds((1, a), (2, b)), spec) for a in (0, 1) for b in (0, 1)
    }
    assert pair_rays == {(-1, -1), (-1, 1), (1, -1), (1, 1)}
    assert pair_rays <= set(fan.rays.values())


def test_stellar_requires_all_singletons():
    spec = ArrangementSpec(2, 2)
    partial = BuildingSet(
        frozenset(d for d in BuildingSet.maximal(spec).elements if d.size == 2),
        spec,
        validated=True,
    )
    with pytest.raises(ValueError):
        build_fan_stellar(spec, partial)


def test_fans_equal_basics():
    spec = ArrangementSpec(2, 2)
    g = BuildingSet.maximal(spec)
    fan = build_fan(spec, g)
    assert fans_equal(fan, fan)
    product = build_fan(spec, BuildingSet.singletons(spec))
    assert not fans_equal(fan, product)


# --- point location ----------------------------------------------------------


def test_locate_origin_is_the_empty_chain():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert locate_point(fan, (0, 0)) == Chain.empty()


def test_locate_a_ray_point():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert locate_point(fan, (-1, 1)) == chain([(1, 2)], {1: 0, 2: 1})


def test_locate_interior_point_of_a_2_cone():
    spec = ArrangementSpec(3, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    located = locate_point(fan, (0, 3, 0, 1))  # 3 e_1^2 + e_2^2
    assert located == chain([(1,), (1, 2)], {1: 1, 2: 1})


def test_locate_outside_the_support():
    spec = ArrangementSpec(3, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert locate_point(fan, (1, 1, 0, 0)) is None


def test_locate_checks_dimension():
    spec = ArrangementSpec(3, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    with pytest.raises(ValueError):
        locate_point(fan, (1, 0))


# --- smoothness --------------------------------------------------------------


def test_single_primitive_ray_is_smooth():
    assert is_smooth_cone(Cone(((1, 0),), (ds((1, 1)),)))


def test_smooth_2_cone_example():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    cone = fan.cone(chain([(1,), (1, 2)], {1: 0, 2: 0}))
    assert set(cone.rays) == {(-1, 0), (-1, -1)}
    assert is_smooth_cone(cone)


def test_index_two_sublattice_is_not_smooth():
    synthetic = Cone(((2, 0), (0, 1)), (ds((1, 0)), ds((2, 0))))
    assert not is_smooth_cone(synthetic)


@pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (4, 2)])
def test_all_maximal_cones_smooth(r, n):
    spec = ArrangementSpec(r, n)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    assert all(is_smooth_cone(c) for c in fan.maximal_cones)


# --- cone intersection law ---------------------------------------------------


def test_cone_intersection_law_exhaustive_2_2():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    chains = list(enumerate_chains(spec, spec.n))
    for a, b in itertools.product(chains, repeat=2):
        expected = fan.cone(chain_intersect(a, b))
        cone_a, cone_b = fan.cone(a), fan.cone(b)
        assert all(cone_a.contains(g) and cone_b.contains(g) for g in expected.rays)
        for g in cone_a.rays:
            assert cone_b.contains(g) == expected.contains(g)
        for g in cone_b.rays:
            assert cone_a.contains(g) == expected.contains(g)


# --- support decomposition ---------------------------------------------------


def test_support_decomposition_reads_directions():
    spec = ArrangementSpec(3, 2)
    assert support_decomposition((0, 3, 0, 1), spec) == [(3, 2), (1, 2)]
    assert support_decomposition((-2, -2, 0, 0), spec) == [(2, 0), (0, None)]
    assert support_decomposition((1, 1, 0, 0), spec) is None


def test_completeness_for_r_2():
    for n in (1, 2, 3):
        spec = ArrangementSpec(2, n)
        fan = build_fan(spec, BuildingSet.maximal(spec))
        rng = Lcg(0)
        for p in sample_mixed_points(rng, spec, 200):
            assert locate_point(fan, p) is not None


def test_incompleteness_for_r_3():
    spec = ArrangementSpec(3, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    rng = Lcg(0)
    points = sample_mixed_points(rng, spec, 100)
    assert any(locate_point(fan, p) is None for p in points)


# --- JSON round trip ---------------------------------------------------------


@pytest.mark.parametrize("r,n", [(2, 2), (3, 2)])
def test_fan_json_round_trip(r, n):
    spec = ArrangementSpec(r, n)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    payload = json.loads(json.dumps(fan_to_dict(fan)))
    rebuilt = fan_from_dict(payload)
    assert fans_equal(fan, rebuilt)


def test_fan_json_schema_fields():
    spec = ArrangementSpec(2, 2)
    fan = build_fan(spec, BuildingSet.maximal(spec))
    payload = fan_to_dict(fan)
    assert payload["r"] == 2 and payload["n"] == 2
    assert payload["basis"] == ["e_1^1", "e_2^1"]
    assert {"id", "subset", "vector"} <= set(payload["rays"][0])
    assert {"dim", "ray_ids", "chain"} <= set(payload["cones"][0])
