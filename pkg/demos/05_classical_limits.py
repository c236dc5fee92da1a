#!/usr/bin/env python3
# As q -> 1 every bound must approach its classical counterpart: the
# Fekete-Szego maximum max{1, |3-4mu|}, the Hankel bound 1, the convex
# coefficient bound 1, and c_n -> prod_{k=2..n}(k - 2 alpha)/(n-1)!.
from qschlicht.explorer import run_limit_sweep

for row in run_limit_sweep((0.9, 0.99, 0.999), alpha=0.0):
    print(f"q = {row['q']}:")
    mu0 = [r for r in row["fekete_szego"] if r["mu"] == [0.0, 0.0]][0]
    print(f"  fs bound (mu=0): {mu0['bound']:.6f}  target {mu0['target']}  "
          f"err {mu0['abs_err']:.2e}")
    hk = row["hankel"]
    print(f"  hankel bound:    {hk['bound']:.6f}  target {hk['target']}  "
          f"err {hk['abs_err']:.2e}")
    b4 = row["bieberbach"][2]
    print(f"  |a_4| bound:     {b4['bound']:.6f}  target {b4['target']}  "
          f"err {b4['abs_err']:.2e}")

# With alpha = 0.5 the c_n limit is 1 for every n.
print("\nalpha = 0.5, q = 0.9999:")
for cr in run_limit_sweep((0.9999,), alpha=0.5)[0]["c_n"]:
    print(f"  c_{cr['n']} = {cr['c_n']:.6f}  target {cr['target']:.6f}  "
          f"err {cr['abs_err']:.2e}")
