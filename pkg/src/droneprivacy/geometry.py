"""Scenario geometry: generators, distances, and the customer wait-time model.

Generators are pure functions of their seed and parameters (PCG64 via
``numpy.random.default_rng``); the saved scenario file, not the seed, is the
interchange artifact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .model import CustomerSite, Route, Scenario, VendorSite, validate_structure

Topology = Literal["uniform", "two_clusters", "hub_spoke", "linear"]


@dataclass(frozen=True)
class MotionModel:
    """Travel model: constant speed, fixed per-stop service time, Euclidean legs."""

    speed: float = 20.0
    stop_duration: float = 60.0

    def __post_init__(self):
        if self.speed <= 0:
            raise ValueError("speed must be positive")
        if self.stop_duration < 0:
            raise ValueError("stop duration must be non-negative")


UNIT_FIXTURE_MOTION = MotionModel(speed=1.0, stop_duration=0.0)
"""Motion used with the unit-square fixtures: time equals distance traveled."""


@dataclass(frozen=True)
class WaitReport:
    """Per-order waits (seconds) in scenario order position, plus their mean."""

    waits: tuple[float, ...]
    average: float
    customer_ids: tuple[int, ...]


def wait_times(route: Route, scenario: Scenario, motion: MotionModel, *, check: bool = True) -> WaitReport:
    """Wait of each customer: elapsed time from the route's first stop.

    The clock starts at zero at the first stop (no depot leg).  Every stop
    completed before reaching a customer contributes ``stop_duration``; every
    leg contributes ``distance / speed``.  A customer's own service time is
    not part of its wait.
    """
    if check:
        result = validate_structure(route, scenario)
        if not result.ok:
            raise ValueError(f"invalid route at stop {result.index}: {result.message}")
    waits: dict[int, float] = {}
    stops = route.stops
    t = 0.0
    px, py = scenario.position_of(stops[0])
    for stop in stops[1:]:
        x, y = scenario.position_of(stop)
        t += motion.stop_duration + math.hypot(x - px, y - py) / motion.speed
        if stop.kind == "a":
            waits[stop.sid] = t
        px, py = x, y
    ordered = tuple(waits[c.id] for c in scenario.customers)
    return WaitReport(
        waits=ordered,
        average=sum(ordered) / len(ordered),
        customer_ids=tuple(c.id for c in scenario.customers),
    )


def site_order(scenario: Scenario) -> tuple:
    """Fixed site ordering used by :func:`distance_matrix`: real vendors, decoys, customers."""
    return tuple(scenario.real_vendors) + tuple(scenario.decoy_vendors) + tuple(scenario.customers)


def distance_matrix(scenario: Scenario) -> np.ndarray:
    """Symmetric Euclidean distances (meters) over :func:`site_order`."""
    sites = site_order(scenario)
    coords = np.array([(s.x, s.y) for s in sites], dtype=float)
    diff = coords[:, None, :] - coords[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def unit_square_fixture(config: Literal["diagonal", "adjacent"]) -> Scenario:
    """Two orders on the corners of a unit square (meters).

    ``diagonal`` places each vendor diagonally opposite its own customer;
    ``adjacent`` places each vendor next to its own customer.  Use
    :data:`UNIT_FIXTURE_MOTION` so that wait equals distance traveled.
    """
    if config == "diagonal":
        v1, v2 = (0.0, 0.0), (1.0, 0.0)
        a1, a2 = (1.0, 1.0), (0.0, 1.0)
    elif config == "adjacent":
        v1, v2 = (0.0, 0.0), (1.0, 1.0)
        a1, a2 = (0.0, 1.0), (1.0, 0.0)
    else:
        raise ValueError(f"unknown unit-square config {config!r}")
    return Scenario(
        vendors=(VendorSite(1, *v1), VendorSite(2, *v2)),
        customers=(CustomerSite(1, *a1, vendor_id=1), CustomerSite(2, *a2, vendor_id=2)),
    )


def generate(
    topology: Topology,
    n: int,
    n_decoys: int = 0,
    seed: int = 0,
    extent_m: float = 5000.0,
    **params,
) -> Scenario:
    """Generate a random scenario on one of the supported map topologies.

    Sites are drawn in a fixed order (real vendors, decoys, customers) so the
    result is fully determined by ``(topology, n, n_decoys, seed, extent_m,
    params)``.

    Topology parameters (all meters):

    * ``two_clusters``: ``separation`` (gap between the two discs, default
      ``0.4 * extent``) and ``cluster_radius`` (default ``separation / 4``,
      must stay below ``separation / 2`` so the clusters cannot overlap the
      gap).
    * ``hub_spoke``: ``hub_radius`` (default ``0.1 * extent``), ``ring_inner``
      and ``ring_outer`` (defaults ``0.3`` / ``0.45 * extent``).
    * ``linear``: ``corridor_width`` (default ``0.02 * extent``); sites hug a
      horizontal axis with alternating side offsets.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n_decoys < 0:
        raise ValueError("decoy count must be non-negative")
    if extent_m <= 0:
        raise ValueError("extent must be positive")
    rng = np.random.default_rng(seed)

    if topology == "uniform":
        vendor_xy = [_uniform_point(rng, extent_m) for _ in range(n + n_decoys)]
        customer_xy = [_uniform_point(rng, extent_m) for _ in range(n)]
    elif topology == "two_clusters":
        separation = float(params.pop("separation", 0.4 * extent_m))
        radius = float(params.pop("cluster_radius", separation / 4))
        if separation <= 0:
            raise ValueError("separation must be positive")
        if not 0 < radius < separation / 2:
            raise ValueError("cluster_radius must be in (0, separation / 2)")
        mid = extent_m / 2
        vendor_center = (mid - separation / 2 - radius, mid)
        customer_center = (mid + separation / 2 + radius, mid)
        vendor_xy = [_disc_point(rng, vendor_center, radius) for _ in range(n + n_decoys)]
        customer_xy = [_disc_point(rng, customer_center, radius) for _ in range(n)]
    elif topology == "hub_spoke":
        hub_radius = float(params.pop("hub_radius", 0.1 * extent_m))
        ring_inner = float(params.pop("ring_inner", 0.3 * extent_m))
        ring_outer = float(params.pop("ring_outer", 0.45 * extent_m))
        if not 0 < hub_radius <= ring_inner < ring_outer:
            raise ValueError("need 0 < hub_radius <= ring_inner < ring_outer")
        center = (extent_m / 2, extent_m / 2)
        vendor_xy = [_disc_point(rng, center, hub_radius) for _ in range(n + n_decoys)]
        customer_xy = [_annulus_point(rng, center, ring_inner, ring_outer) for _ in range(n)]
    elif topology == "linear":
        corridor = float(params.pop("corridor_width", 0.02 * extent_m))
        if corridor <= 0:
            raise ValueError("corridor_width must be positive")
        axis_y = extent_m / 2
        vendor_xy = [
            _corridor_point(rng, extent_m, axis_y, corridor, side=(1 if i % 2 == 0 else -1))
            for i in range(n + n_decoys)
        ]
        customer_xy = [
            _corridor_point(rng, extent_m, axis_y, corridor, side=(-1 if i % 2 == 0 else 1))
            for i in range(n)
        ]
    else:
        raise ValueError(f"unknown topology {topology!r}")
    if params:
        raise ValueError(f"unknown parameters for topology {topology}: {sorted(params)}")

    vendors = [VendorSite(i + 1, *vendor_xy[i]) for i in range(n)]
    vendors += [VendorSite(i + 1, *vendor_xy[n + i], decoy=True) for i in range(n_decoys)]
    customers = [CustomerSite(i + 1, *customer_xy[i], vendor_id=i + 1) for i in range(n)]
    return Scenario(vendors=tuple(vendors), customers=tuple(customers))


def _uniform_point(rng, extent):
    return (float(rng.uniform(0, extent)), float(rng.uniform(0, extent)))


def _disc_point(rng, center, radius):
    r = radius * math.sqrt(rng.uniform())
    theta = rng.uniform(0, 2 * math.pi)
    return (center[0] + r * math.cos(theta), center[1] + r * math.sin(theta))


def _annulus_point(rng, center, inner, outer):
    r = math.sqrt(rng.uniform(inner**2, outer**2))
    theta = rng.uniform(0, 2 * math.pi)
    return (center[0] + r * math.cos(theta), center[1] + r * math.sin(theta))


def _corridor_point(rng, extent, axis_y, corridor, side):
    x = float(rng.uniform(0, extent))
    offset = float(rng.uniform(0, corridor))
    return (x, axis_y + side * offset)
