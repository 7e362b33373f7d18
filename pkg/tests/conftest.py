"""Shared test helpers: small scenario builders, a random valid-route walker,
and an independent permutation-filter enumerator used as a counting oracle.
"""

from __future__ import annotations

import itertools
import random

from droneprivacy import CustomerSite, Route, Scenario, Stop, VendorSite


def abstract_scenario(n: int, n_decoys: int = 0) -> Scenario:
    """Orders 1..n and decoys 1..n_decoys on a simple grid."""
    vendors = [VendorSite(i + 1, float(100 * i), 0.0) for i in range(n)]
    vendors += [VendorSite(i + 1, float(100 * i), 50.0, decoy=True) for i in range(n_decoys)]
    customers = [CustomerSite(i + 1, float(100 * i), 200.0, vendor_id=i + 1) for i in range(n)]
    return Scenario(vendors=tuple(vendors), customers=tuple(customers))


def random_valid_route(
    scenario: Scenario, capacity: int, decoy_budget: int, rng: random.Random
) -> Route:
    """Uniformly-ish random valid route built by random feasible choices."""
    n = scenario.n
    picked: set[int] = set()
    dropped: set[int] = set()
    decoys_left = [d.id for d in scenario.decoy_vendors][:]
    budget = decoy_budget
    aboard = 0
    path: list[Stop] = []
    vendor_of_order = {i: scenario.orders[i][0].id for i in range(n)}
    customer_of_order = {i: scenario.orders[i][1].id for i in range(n)}
    while len(dropped) < n:
        choices: list[Stop] = []
        if aboard < capacity:
            choices += [Stop("v", vendor_of_order[i]) for i in range(n) if i not in picked]
        if budget > 0:
            choices += [Stop("d", d) for d in decoys_left]
        choices += [
            Stop("a", customer_of_order[i]) for i in range(n) if i in picked and i not in dropped
        ]
        stop = rng.choice(choices)
        path.append(stop)
        if stop.kind == "v":
            picked.add(scenario.order_index_by_vendor[stop.sid])
            aboard += 1
        elif stop.kind == "d":
            decoys_left.remove(stop.sid)
            budget -= 1
        else:
            dropped.add(scenario.order_index[stop.sid])
            aboard -= 1
    return Route(tuple(path))


def _filter_is_valid(stops: tuple[Stop, ...], scenario: Scenario, capacity: int) -> bool:
    """Validity check written independently of the library's validator."""
    vendor_of_customer = {c.id: c.vendor_id for c in scenario.customers}
    seen_v: set[int] = set()
    aboard = 0
    for stop in stops:
        if stop.kind == "v":
            aboard += 1
            if aboard > capacity:
                return False
            seen_v.add(stop.sid)
        elif stop.kind == "a":
            if vendor_of_customer[stop.sid] not in seen_v:
                return False
            aboard -= 1
    return True


def brute_force_routes(scenario: Scenario, capacity: int, decoy_budget: int = 0) -> set[tuple[Stop, ...]]:
    """All valid routes by filtering raw permutations (slow; n <= 4)."""
    base = [Stop("v", v.id) for v in scenario.real_vendors]
    base += [Stop("a", c.id) for c in scenario.customers]
    decoy_ids = [d.id for d in scenario.decoy_vendors]
    found: set[tuple[Stop, ...]] = set()
    for k in range(decoy_budget + 1):
        for combo in itertools.combinations(decoy_ids, k):
            stops = base + [Stop("d", d) for d in combo]
            for perm in itertools.permutations(stops):
                if _filter_is_valid(perm, scenario, capacity):
                    found.add(perm)
    return found
