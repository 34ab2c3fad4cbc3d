"""Tour of the channel coefficients: contraction, Doeblin, leakage, capacity.

Run from the repository root after installing the package:

    python demos/contraction_tour.py
"""

import numpy as np

import bisochan as bc


def show(name, channel):
    rep = bc.coefficient_report(channel)
    print(f"\n{name}")
    print(f"  rows: {np.array_str(bc.as_channel(channel).rows, precision=4)}")
    print(f"  eta_kl = {rep.eta_kl:.6f}   eta_tv = {rep.eta_tv:.6f}")
    print(f"  alpha  = {rep.doeblin_alpha:.6f}   alpha_max = {rep.alpha_max:.6f}")
    print(f"  leakage = {rep.maximal_leakage:.6f} nats = {rep.maximal_leakage_bits:.6f} bits")
    print(f"  capacity = {rep.capacity:.6f} bits")


print("=== Named channels ===")
show("BSC(0.1)", bc.make_bsc(0.1))
show("BEC(0.3)", bc.make_bec(0.3))
show("Z(0.4)", bc.make_z(0.4))

print("\n=== Closed form vs. scalar optimizer ===")
# For symmetric-output channels the KL contraction coefficient has a closed
# form over the output pairs; the general binary formula needs a 1-D search
# over the reference input bias, which lands on 1/2 for symmetric channels.
rng = np.random.default_rng(0)
raw = rng.uniform(0.05, 1.0, size=(3, 2))
biso = bc.BisoChannel(raw / raw.sum())
closed = bc.eta_kl_biso(biso)
eta, qstar = bc.eta_kl_binary_argmax(biso.to_channel())
print(f"pairs: {biso.pairs.round(4).tolist()}")
print(f"closed form: {closed:.12f}")
print(f"optimizer:   {eta:.12f}  (maximizer q* = {qstar:.6f})")

print("\n=== The coefficient chain for binary channels ===")
# For any binary-input channel the total-variation contraction coefficient,
# the Doeblin coefficient, the max-Doeblin coefficient, and maximal leakage
# are all the same number in different clothes.
z = bc.make_z(0.25)
print(f"eta_tv        = {bc.eta_tv(z):.12f}")
print(f"1 - alpha     = {1 - bc.doeblin_alpha(z):.12f}")
print(f"alpha_max - 1 = {bc.alpha_max(z) - 1:.12f}")
print(f"e^L - 1       = {np.expm1(bc.maximal_leakage(z)):.12f}")

print("\n=== Capacity check against the Z-channel closed form ===")
for q in (0.2, 0.5, 0.8):
    closed = np.log2(1 + 2 ** (-bc.h2(q) / (1 - q)))
    print(f"Z({q}): optimizer {bc.capacity_binary(bc.make_z(q)):.9f}   closed {closed:.9f}")
