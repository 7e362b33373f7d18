"""Tour of the three routing heuristics and their closed-form risk profiles.

For six orders: every split point, every reversal depth, and every stuffing
capacity, with the capacity each one needs.  Then one of each is bound to a
two-cluster map to show that instantiation only reorders stops inside groups
and never changes the risks.
"""

from droneprivacy import (
    DroneSpec,
    HeuristicParams,
    closed_form_risks,
    evaluate,
    generate,
    instantiate_template,
    privacy_risks,
    template_for,
)

N = 6


def show(params: HeuristicParams):
    report = closed_form_risks(params)
    risks = " ".join(f"{str(r):>5}" for r in report.risks)
    print(f"  {params.label:<18} cap>={params.required_capacity}  "
          f"risks [{risks}]  avg {report.average}  worst {report.worst_case}")


def main():
    print(f"closed forms for n = {N}\n")
    print("split: two aggregated batches")
    for k in range(1, N):
        show(HeuristicParams("split", N, k=k, l=N - k))
    print("\nreversal: aggregate, swap the last k pickups with the first k drops")
    for k in range(0, N // 2 + 1):
        show(HeuristicParams("reversal", N, k=k))
    print("\nstuffing: keep the drone full at capacity c (first in, first out)")
    for c in range(1, N + 1):
        show(HeuristicParams("stuffing", N, c=c))

    print("\nbinding three of them to a two-cluster map (seed 1):")
    scenario = generate("two_clusters", N, seed=1)
    drone = DroneSpec(capacity=N)
    for params in (
        HeuristicParams("split", N, k=3, l=3),
        HeuristicParams("reversal", N, k=1),
        HeuristicParams("stuffing", N, c=3),
    ):
        route = instantiate_template(template_for(params), scenario, drone)
        evaluation = evaluate(route, scenario, drone, tag=params.label)
        assert privacy_risks(route, scenario).risks == closed_form_risks(params).risks
        print(f"  {params.label:<18} route {route.tokens}")
        print(f"  {'':<18} avg risk {evaluation.avg_risk}, avg wait {evaluation.avg_wait:.0f} s")


if __name__ == "__main__":
    main()
