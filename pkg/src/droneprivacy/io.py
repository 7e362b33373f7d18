"""Serialization: scenario JSON files, result CSVs, exact rational strings.

Rationals cross file boundaries as ``"num/den"`` strings so exactness
survives; decimal renderings are display-only.  All writers are
deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .geometry import MotionModel
from .model import CustomerSite, Scenario, VendorSite
from .search import ParetoFront

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ScenarioFile:
    """On-disk scenario: sites in meters plus an optional motion model."""

    scenario: Scenario
    name: str = "scenario"
    motion: MotionModel | None = None


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def scenario_file_to_dict(sf: ScenarioFile) -> dict:
    data = {
        "format_version": FORMAT_VERSION,
        "name": sf.name,
        "units": "meters",
        "vendors": [
            {"id": v.id, "x": v.x, "y": v.y, "decoy": v.decoy} for v in sf.scenario.vendors
        ],
        "customers": [
            {"id": c.id, "x": c.x, "y": c.y, "vendor_id": c.vendor_id}
            for c in sf.scenario.customers
        ],
    }
    if sf.motion is not None:
        data["motion"] = {
            "speed_mps": sf.motion.speed,
            "stop_duration_s": sf.motion.stop_duration,
        }
    return data


def scenario_file_from_dict(data: dict) -> ScenarioFile:
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported scenario format_version {version!r}")
    vendors = tuple(
        VendorSite(id=int(v["id"]), x=float(v["x"]), y=float(v["y"]), decoy=bool(v.get("decoy", False)))
        for v in data["vendors"]
    )
    customers = tuple(
        CustomerSite(id=int(c["id"]), x=float(c["x"]), y=float(c["y"]), vendor_id=int(c["vendor_id"]))
        for c in data["customers"]
    )
    motion = None
    if "motion" in data:
        motion = MotionModel(
            speed=float(data["motion"]["speed_mps"]),
            stop_duration=float(data["motion"]["stop_duration_s"]),
        )
    return ScenarioFile(scenario=Scenario(vendors=vendors, customers=customers),
                        name=str(data.get("name", "scenario")), motion=motion)


def save_scenario(sf: ScenarioFile, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scenario_file_to_dict(sf), indent=2) + "\n")


def load_scenario(path: str | Path) -> ScenarioFile:
    return scenario_file_from_dict(json.loads(Path(path).read_text()))


FRONT_CSV_COLUMNS = (
    "n", "c", "n_d", "route", "avg_risk", "worst_risk", "avg_wait", "heuristic_tag", "multiplicity",
)


def front_csv_rows(front: ParetoFront, scenario: Scenario, capacity: int, decoy_budget: int):
    for point in front.points:
        e = point.evaluation
        yield {
            "n": scenario.n,
            "c": capacity,
            "n_d": decoy_budget,
            "route": e.route.tokens,
            "avg_risk": format_fraction(e.avg_risk),
            "worst_risk": format_fraction(e.worst_risk),
            "avg_wait": repr(e.avg_wait),
            "heuristic_tag": e.heuristic_tag or "",
            "multiplicity": point.multiplicity,
        }


def write_front_csv(front: ParetoFront, scenario: Scenario, capacity: int, decoy_budget: int, out) -> None:
    """Write a front to a path or text stream using the fixed column set."""
    _write_csv(out, FRONT_CSV_COLUMNS, front_csv_rows(front, scenario, capacity, decoy_budget))


SWEEP_CSV_COLUMNS = ("n", "c", "n_d", "min_avg_risk", "min_avg_risk_decimal")


def write_sweep_csv(table: dict[tuple[int, int, int], Fraction], out) -> None:
    """Write a (n, c, n_d) -> minimum average risk table, rows sorted by cell."""
    rows = (
        {
            "n": n, "c": c, "n_d": n_d,
            "min_avg_risk": format_fraction(value),
            "min_avg_risk_decimal": f"{float(value):.9g}",
        }
        for (n, c, n_d), value in sorted(table.items())
    )
    _write_csv(out, SWEEP_CSV_COLUMNS, rows)


def _write_csv(out, columns, rows) -> None:
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="") as handle:
            _write_csv(handle, columns, rows)
        return
    writer = csv.DictWriter(out, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
