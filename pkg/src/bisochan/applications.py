"""Wiretap secrecy capacities, f-divergence output bounds, and budgeted-information bounds.

All formulas anchor a BISO channel to the BSC/BEC sharing one of its
coefficients, so each output is a closed-form expression in the channel's
contraction coefficient, Doeblin coefficient, or capacity.
"""

import math
from dataclasses import dataclass

from .channels import BisoChannel, Channel, canonicalize_biso
from .coefficients import capacity_biso, eta_kl_biso, eta_kl_binary, h2, h2_inv, binary_convolution
from .errors import LeakageOutOfRangeError, NotBisoError

_LN2 = math.log(2.0)


def _as_biso(channel):
    if isinstance(channel, BisoChannel):
        return channel
    return canonicalize_biso(channel)


def secrecy_capacity_vs_bec(w):
    """Secrecy capacity of the contraction-matched BEC main channel against eavesdropper w.

    Equals eta_KL(w) - C(w).  Nonnegative for every BISO channel; a negative
    value would flag a violation of the less-noisy ordering and is returned
    as computed rather than clipped.
    """
    b = _as_biso(w)
    return eta_kl_biso(b) - capacity_biso(b)


def secrecy_capacity_vs_bsc(w):
    """Secrecy capacity of main channel w against its contraction-matched BSC eavesdropper.

    Equals C(w) - 1 + h2((1 - sqrt(eta_KL(w))) / 2); returned as computed,
    negatives flagged to the caller by sign.
    """
    b = _as_biso(w)
    eta = eta_kl_biso(b)
    p = (1.0 - math.sqrt(eta)) / 2.0
    return capacity_biso(b) - 1.0 + h2(p)


# ----------------------------------------------------------------------
# f-divergence output bounds from maximal leakage
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class OutputDivergenceBounds:
    """Bounds on the worst-case output f-divergence of a channel.

    Unbounded sides carry +inf in the value and True in the matching flag;
    no sentinel other than the explicit flag is used for control flow.
    """

    lower: float
    upper: float
    lower_unbounded: bool
    upper_unbounded: bool


def f_divergence_output_bounds(gen, leakage_nats):
    """Sandwich the worst-case output f-divergence using maximal leakage.

    The supremum over input-law pairs of D_f between the two output
    distributions is reached at the rows.  Degrading onto the matched BSC
    and from the matched BEC gives

        lower = row divergence of BSC((2 - e^L) / 2)
        upper = row divergence of BEC(2 - e^L) = (e^L - 1) (f(0) + f'(inf))

    where f'(inf) = lim f(t)/t.  The upper bound is unbounded whenever f(0)
    or f'(inf) is infinite.

    Parameters
    ----------
    gen : FDivergenceGenerator
    leakage_nats : float
        Maximal leakage L in nats; requires 1 < e^L < 2.
    """
    el = math.exp(float(leakage_nats))
    if not 1.0 < el < 2.0:
        raise LeakageOutOfRangeError(f"need 1 < e^L < 2, got e^L = {el!r}")
    scale = el - 1.0

    lo_small = (2.0 - el) / el
    lo_large = el / (2.0 - el)
    lower = (el / 2.0) * gen(lo_small) + (1.0 - el / 2.0) * gen(lo_large)
    lower_unbounded = math.isinf(lower)

    if gen.f0 is None or gen.slope_at_inf is None:
        return OutputDivergenceBounds(float(lower), math.inf, lower_unbounded, True)
    upper = scale * (gen.f0 + gen.slope_at_inf)
    return OutputDivergenceBounds(float(lower), float(upper), lower_unbounded, False)


# ----------------------------------------------------------------------
# Budgeted-information curve bounds
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FICurveBounds:
    """Bounds on the best-possible processed information at input budget t (bits)."""

    t: float
    lower: float
    upper: float


def fi_upper_bound(channel, t):
    """Upper bound eta * min(t, 1); valid for general binary-input channels."""
    t = float(t)
    if t < 0.0:
        raise LeakageOutOfRangeError(f"budget t must be nonnegative, got {t!r}")
    if isinstance(channel, BisoChannel):
        eta = eta_kl_biso(channel)
    elif isinstance(channel, Channel):
        try:
            eta = eta_kl_biso(canonicalize_biso(channel))
        except NotBisoError:
            eta = eta_kl_binary(channel)
    else:
        raise TypeError(f"expected Channel or BisoChannel, got {type(channel).__name__}")
    return eta * min(t, 1.0)


def fi_curve_bounds(w, t):
    """Lower and upper bounds on the budgeted-information curve of a BISO channel.

    lower = 1 - h2(p_eta * h2_inv(max(1 - t, 0))) with p_eta = (1 - sqrt(eta)) / 2,
    the exact curve of the contraction-matched BSC; upper = eta * min(t, 1),
    the exact curve of the matched BEC.
    """
    t = float(t)
    if t < 0.0:
        raise LeakageOutOfRangeError(f"budget t must be nonnegative, got {t!r}")
    b = _as_biso(w)
    eta = eta_kl_biso(b)
    p_eta = (1.0 - math.sqrt(eta)) / 2.0
    residual = h2_inv(max(1.0 - t, 0.0))
    lower = 1.0 - h2(binary_convolution(p_eta, residual))
    upper = eta * min(t, 1.0)
    return FICurveBounds(t, float(lower), float(upper))
