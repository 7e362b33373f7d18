"""Geometry: distances, wait-time model, fixtures, and generators."""

import itertools
import math

import numpy as np
import pytest

from droneprivacy import (
    UNIT_FIXTURE_MOTION,
    MotionModel,
    distance_matrix,
    generate,
    parse_route,
    site_order,
    unit_square_fixture,
    wait_times,
)
from droneprivacy.fixtures import UNIT_SQUARE_TABLE, WAIT_TOLERANCE
from conftest import abstract_scenario


def test_unit_square_distances():
    fixture = unit_square_fixture("diagonal")
    matrix = distance_matrix(fixture)
    labels = site_order(fixture)
    assert matrix.shape == (4, 4)
    assert np.allclose(matrix, matrix.T)
    assert np.allclose(np.diag(matrix), 0.0)
    # v1 to its diagonally opposite customer a1
    v1 = labels.index(fixture.vendors[0])
    a1 = labels.index(fixture.customers[0])
    v2 = labels.index(fixture.vendors[1])
    assert matrix[v1, a1] == pytest.approx(math.sqrt(2))
    assert matrix[v1, v2] == pytest.approx(1.0)


def test_distance_matrix_triangle_inequality():
    scenario = generate("uniform", 5, n_decoys=2, seed=11)
    matrix = distance_matrix(scenario)
    size = matrix.shape[0]
    for i, j, k in itertools.permutations(range(size), 3):
        assert matrix[i, j] <= matrix[i, k] + matrix[k, j] + 1e-9


@pytest.mark.parametrize("row", UNIT_SQUARE_TABLE, ids=lambda r: r.tag)
def test_unit_square_waits_match_reference_table(row):
    fixture = unit_square_fixture(row.config)
    report = wait_times(row.route, fixture, UNIT_FIXTURE_MOTION)
    for actual, expected in zip(report.waits, row.waits):
        assert abs(actual - expected) <= WAIT_TOLERANCE
    assert abs(report.average - row.avg_wait) <= WAIT_TOLERANCE


def test_wait_includes_prior_stop_durations():
    # 1200 m at 20 m/s plus one completed pickup stop of 60 s
    from droneprivacy import CustomerSite, Scenario, VendorSite

    scenario = Scenario(
        vendors=(VendorSite(1, 0.0, 0.0),),
        customers=(CustomerSite(1, 1200.0, 0.0, vendor_id=1),),
    )
    report = wait_times(parse_route("v1,a1"), scenario, MotionModel(speed=20.0, stop_duration=60.0))
    assert report.waits == (120.0,)


def test_waits_ignore_suffix_stops():
    scenario = abstract_scenario(2, n_decoys=1)
    motion = MotionModel(speed=10.0, stop_duration=30.0)
    base = wait_times(parse_route("v1,v2,a1,a2"), scenario, motion)
    extended = wait_times(parse_route("v1,v2,a1,a2,d1"), scenario, motion)
    assert base.waits == extended.waits


def test_average_wait_is_the_mean():
    scenario = generate("uniform", 6, seed=5)
    motion = MotionModel()
    route = parse_route("v1,v2,a2,v3,a3,a1,v4,v5,a4,v6,a6,a5")
    report = wait_times(route, scenario, motion)
    mean = sum(report.waits) / len(report.waits)
    assert abs(report.average - mean) <= 1e-12 * max(1.0, abs(mean))


def test_generators_are_deterministic_in_seed():
    for topology in ("uniform", "two_clusters", "hub_spoke", "linear"):
        first = generate(topology, 6, n_decoys=2, seed=42)
        second = generate(topology, 6, n_decoys=2, seed=42)
        assert first == second
        different = generate(topology, 6, n_decoys=2, seed=43)
        assert first != different


def test_uniform_sites_stay_in_the_square():
    scenario = generate("uniform", 8, n_decoys=2, seed=3, extent_m=2000.0)
    for site in site_order(scenario):
        assert 0.0 <= site.x <= 2000.0
        assert 0.0 <= site.y <= 2000.0


def test_two_clusters_separation_guarantee():
    scenario = generate("two_clusters", 6, seed=9, extent_m=20000.0, separation=5000.0)
    vendors = [(v.x, v.y) for v in scenario.vendors]
    customers = [(c.x, c.y) for c in scenario.customers]

    def dist(p, q):
        return math.hypot(p[0] - q[0], p[1] - q[1])

    max_intra = max(
        max((dist(p, q) for p, q in itertools.combinations(vendors, 2)), default=0.0),
        max((dist(p, q) for p, q in itertools.combinations(customers, 2)), default=0.0),
    )
    min_inter = min(dist(p, q) for p in vendors for q in customers)
    assert max_intra < min_inter


def test_two_clusters_rejects_oversized_radius():
    with pytest.raises(ValueError):
        generate("two_clusters", 3, seed=0, separation=1000.0, cluster_radius=600.0)


def test_linear_sites_stay_in_the_corridor():
    scenario = generate("linear", 6, n_decoys=1, seed=4, extent_m=8000.0, corridor_width=120.0)
    for site in site_order(scenario):
        assert abs(site.y - 4000.0) <= 120.0


def test_hub_spoke_radii():
    scenario = generate("hub_spoke", 5, n_decoys=1, seed=6, extent_m=10000.0)
    center = (5000.0, 5000.0)
    for vendor in scenario.vendors:
        assert math.hypot(vendor.x - center[0], vendor.y - center[1]) <= 1000.0 + 1e-9
    for customer in scenario.customers:
        r = math.hypot(customer.x - center[0], customer.y - center[1])
        assert 3000.0 - 1e-9 <= r <= 4500.0 + 1e-9


def test_generate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate("uniform", 0)
    with pytest.raises(ValueError):
        generate("uniform", 3, extent_m=-1.0)
    with pytest.raises(ValueError):
        generate("nowhere", 3)
    with pytest.raises(ValueError):
        generate("uniform", 3, corridor_width=5.0)  # parameter from another topology


def test_motion_model_bounds():
    with pytest.raises(ValueError):
        MotionModel(speed=0.0)
    with pytest.raises(ValueError):
        MotionModel(stop_duration=-0.5)


def test_unknown_fixture_config_rejected():
    with pytest.raises(ValueError):
        unit_square_fixture("mirrored")
