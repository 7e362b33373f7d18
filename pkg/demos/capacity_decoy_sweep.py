"""How order count, drone capacity, and decoy stops move the best average risk.

Risk depends only on route structure, so these tables are geometry-free:
each cell is the exact minimum average risk over every valid route.  Capacity
curves flatten at 1/n, more orders help any drone with capacity above one,
and decoys close the gap between small and large drones.
"""

from droneprivacy import min_avg_risk_sweep


def show_table(table, n_values, c_values, n_d):
    header = "  n:" + "".join(f"{n:>8}" for n in n_values)
    print(header)
    for c in c_values:
        row = "".join(f"{str(table[(n, c, n_d)]):>8}" for n in n_values)
        print(f"  c={c}{row}")


def main():
    n_values = list(range(1, 6))
    c_values = list(range(1, 5))

    print("minimum average risk, no decoys:")
    table = min_avg_risk_sweep(n_values, c_values, [0])
    show_table(table, n_values, c_values, 0)

    print("\nminimum average risk at n = 4, decoy budget 0..3:")
    decoy_table = min_avg_risk_sweep([4], c_values, range(0, 4))
    header = " nd:" + "".join(f"{d:>8}" for d in range(0, 4))
    print(header)
    for c in c_values:
        row = "".join(f"{str(decoy_table[(4, c, d)]):>8}" for d in range(0, 4))
        print(f"  c={c}{row}")

    print("\ncapacity advantage of c=4 over c=1 at n = 4, by decoy budget:")
    for d in range(0, 4):
        gap = decoy_table[(4, 1, d)] - decoy_table[(4, 4, d)]
        print(f"  budget {d}: gap {gap} ({float(gap):.3f})")


if __name__ == "__main__":
    main()
