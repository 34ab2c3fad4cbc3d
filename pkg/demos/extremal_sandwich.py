"""Extremal BSC/BEC representatives and the explicit degrading maps between them.

Run from the repository root:

    python demos/extremal_sandwich.py
"""

import numpy as np

import bisochan as bc

rng = np.random.default_rng(7)
raw = rng.uniform(0.05, 1.0, size=(3, 2))
channel = bc.BisoChannel(raw / raw.sum())
print("channel pairs:", channel.pairs.round(4).tolist())

print("\n=== Matched representatives for each coefficient class ===")
for kind in ("eta_kl", "alpha", "capacity"):
    m = bc.match_extremal(channel, kind)
    print(f"{kind:9s} value={m.channel_class.value:.6f}  BSC p={m.bsc_p:.6f}  BEC eps={m.bec_eps:.6f}")

print("\n=== The sandwich in the matching order ===")
eta = bc.eta_kl_biso(channel)
bec = bc.canonicalize_biso(bc.make_bec(1 - eta))
bsc = bc.canonicalize_biso(bc.make_bsc(bc.match_extremal(channel, "eta_kl").bsc_p))
print(f"BEC above (less noisy): {bc.is_less_noisy(bec, channel).relation}")
print(f"BSC below (less noisy): {bc.is_less_noisy(channel, bsc).relation}")

alpha = bc.doeblin_alpha(channel.to_channel())
print(f"BEC above (degradable): {bc.is_degraded(bc.make_bec(alpha), channel.to_channel()).relation}")
print(f"BSC below (degradable): {bc.is_degraded(channel.to_channel(), bc.make_bsc(alpha / 2)).relation}")

print("\n=== The indicator map collapses the channel onto its matched BSC ===")
# Each output votes for its more likely input; the composition is exactly
# BSC(alpha / 2), no linear programming needed.
dmap = bc.bsc_degrading_map(channel)
print("votes for input 0 (flat output order):", dmap.entries[:, 0].tolist())
print("composed rows:")
print(bc.compose(channel.to_channel(), dmap).rows)

print("\n=== Dimension-3 channels of one class are always comparable ===")
from bisochan.checks import random_dim3_equal_alpha, random_dim3_equal_eta

eta0 = 0.3
f3 = random_dim3_equal_eta(rng, eta0)
g3 = random_dim3_equal_eta(rng, eta0)
fwd = bc.dim3_less_noisy_compare(f3, g3)
bwd = bc.dim3_less_noisy_compare(g3, f3)
print(f"f pairs {f3.pairs.round(4).tolist()}  g pairs {g3.pairs.round(4).tolist()}")
print(f"f >= g: {fwd.relation}   g >= f: {bwd.relation}")
print(f"ratios: {fwd.witness.rho_first:.6f} vs {fwd.witness.rho_second:.6f} (smaller dominates)")

alpha0 = 0.55
fa = random_dim3_equal_alpha(rng, alpha0)
ga = random_dim3_equal_alpha(rng, alpha0)
deg = bc.dim3_degrading_map(fa, ga)
err = np.abs(bc.compose(deg.upper, deg.map).rows - deg.lower.rows).max()
print(f"\nequal-alpha pair: explicit degrading map (swapped={deg.swapped})")
print(deg.map.entries)
print(f"composition error: {err:.2e}")

print("\n=== Reverse coefficients: the weakest dominated BSC per order ===")
rev = bc.reverse_coefficients(channel)
print(f"alpha_rev = {rev.alpha_rev:.9f}  (= 1 - eta_tv)")
print(f"beta_rev  = {rev.beta_rev:.9f}  (= 1 - eta_kl)")
print(f"gamma_rev = {rev.gamma_rev:.9f}  (= capacity)")
print(f"bisection confirms alpha_rev: {bc.verify_reverse_alpha(channel):.9f}")
print(f"bisection confirms beta_rev:  {bc.verify_reverse_beta(channel):.9f}")

print("\n=== General binary channels get a channel-dependent two-output target ===")
z = bc.make_z(0.35)
target, zmap = bc.general_binary_dominated(z)
print("Z(0.35) collapses onto:")
print(target.rows)
print(f"Doeblin coefficient preserved: {bc.doeblin_alpha(z):.6f} -> {bc.doeblin_alpha(target):.6f}")
