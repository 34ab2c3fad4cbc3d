"""Applications: wiretap secrecy capacities, divergence bounds, budget curves.

Run from the repository root:

    python demos/secrecy_and_bounds.py
"""

import numpy as np

import bisochan as bc

rng = np.random.default_rng(3)
raw = rng.uniform(0.05, 1.0, size=(3, 2))
w = bc.BisoChannel(raw / raw.sum())
eta = bc.eta_kl_biso(w)
cap = bc.capacity_biso(w)
print(f"channel pairs: {w.pairs.round(4).tolist()}")
print(f"eta_kl = {eta:.6f}   capacity = {cap:.6f}")

print("\n=== Wiretap secrecy against the matched extremes ===")
# Main channel BEC(1 - eta), eavesdropper w: the BEC is less noisy, so the
# secrecy capacity is the capacity difference eta - C(w).
print(f"C_s(BEC(1-eta), w) = {bc.secrecy_capacity_vs_bec(w):.6f}")
# Main channel w, eavesdropper the matched BSC: w is less noisy.
print(f"C_s(w, BSC((1-sqrt(eta))/2)) = {bc.secrecy_capacity_vs_bsc(w):.6f}")

print("\n=== Worst-case output f-divergence, sandwiched by leakage ===")
flat = w.to_channel()
leak = bc.maximal_leakage(flat)
print(f"maximal leakage = {leak:.6f} nats")
for gen in (bc.tv_generator(), bc.chi2_generator(), bc.kl_generator()):
    bounds = bc.f_divergence_output_bounds(gen, leak)
    rows = bc.f_divergence(gen, flat.rows[0], flat.rows[1])
    upper = "unbounded" if bounds.upper_unbounded else f"{bounds.upper:.6f}"
    print(f"{gen.name:5s}: lower {bounds.lower:.6f} <= rows {rows:.6f} <= upper {upper}")

print("\n=== Information under an input budget ===")
# The matched BSC gives the exact lower curve and the matched BEC the exact
# upper curve; the upper one is flat at eta once the budget reaches one bit.
print(" t     lower    upper")
for t in np.linspace(0.0, 1.5, 11):
    pt = bc.fi_curve_bounds(w, float(t))
    print(f"{t:4.2f}  {pt.lower:.6f}  {pt.upper:.6f}")
print(f"general-channel upper bound for Z(0.4) at t=0.7: {bc.fi_upper_bound(bc.make_z(0.4), 0.7):.6f}")
