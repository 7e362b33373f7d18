"""Exact per-order matching risk of a route, computed run by run.

The risk of order ``i`` is the probability that a third-party observer of the
drone's trajectory correctly matches customer ``i`` to its vendor.  It is
computed by walking the route's alternating vendor/customer runs:

* Each pickup adds an item to the payload.  A decoy pickup adds a *phantom*
  item: the observer cannot tell it apart from a real pickup, so it inflates
  the apparent payload, but it is never droppable and always survives.
* At the start of a customer run the apparent payload size is frozen.  Every
  customer served inside the run has its risk divided by that size (the
  chance the correct item was the one handed over).
* Orders still aboard after the run are multiplied by the fraction of the
  apparent payload that survived the run: the chance their item was not
  handed to somebody else.

All arithmetic is exact rational; floats appear only at serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import Route, Scenario, validate_structure


@dataclass(frozen=True)
class RiskReport:
    """Per-order risks in scenario order position, with their max and mean."""

    risks: tuple[Fraction, ...]
    worst_case: Fraction
    average: Fraction
    customer_ids: tuple[int, ...]

    @classmethod
    def from_risks(cls, risks: Sequence[Fraction], customer_ids: Sequence[int]) -> "RiskReport":
        risks = tuple(risks)
        return cls(
            risks=risks,
            worst_case=worst_case_risk(risks),
            average=average_risk(risks),
            customer_ids=tuple(customer_ids),
        )


def worst_case_risk(risks: Sequence[Fraction]) -> Fraction:
    """Maximum entry of a non-empty risk vector."""
    if not risks:
        raise ValueError("risk vector is empty")
    return max(risks)


def average_risk(risks: Sequence[Fraction]) -> Fraction:
    """Exact arithmetic mean of a non-empty risk vector."""
    if not risks:
        raise ValueError("risk vector is empty")
    return Fraction(sum(risks), len(risks))


def privacy_risks(route: Route, scenario: Scenario, *, check: bool = True) -> RiskReport:
    """Compute the exact risk of every order on ``route``.

    The route must satisfy precedence and completeness; capacity is the
    caller's concern (it does not change the result).  Risks are reported for
    real orders only; decoy stops have no risk entry.
    """
    if check:
        result = validate_structure(route, scenario)
        if not result.ok:
            raise ValueError(f"invalid route at stop {result.index}: {result.message}")
    order_of_vendor = scenario.order_index_by_vendor
    order_of_customer = scenario.order_index
    n = scenario.n
    # Risks accumulate as integer numerator/denominator pairs; one reduction at the end.
    nums = [1] * n
    dens = [1] * n
    aboard: list[int] = []
    phantoms = 0
    stops = route.stops
    i, total = 0, len(stops)
    while i < total:
        while i < total and stops[i].kind != "a":
            if stops[i].kind == "v":
                aboard.append(order_of_vendor[stops[i].sid])
            else:
                phantoms += 1
            i += 1
        payload_at_run_start = len(aboard) + phantoms
        while i < total and stops[i].kind == "a":
            pos = order_of_customer[stops[i].sid]
            dens[pos] *= payload_at_run_start
            aboard.remove(pos)
            i += 1
        survivors = len(aboard) + phantoms
        if aboard and survivors != payload_at_run_start:
            for pos in aboard:
                nums[pos] *= survivors
                dens[pos] *= payload_at_run_start
    risks = tuple(Fraction(nu, de) for nu, de in zip(nums, dens))
    return RiskReport.from_risks(risks, tuple(c.id for c in scenario.customers))
