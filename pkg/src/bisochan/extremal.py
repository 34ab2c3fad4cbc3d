"""Extremal BSC/BEC representatives and explicit degrading maps.

For a BISO channel, the BSC and BEC sharing its capacity, KL contraction
coefficient, or Doeblin coefficient bound it from below and above in the
matching partial order.  This module constructs those representatives, the
explicit indicator map onto the matched BSC, the dimension-3 comparability
tests and degrading maps, and the reverse (BSC-anchored) coefficients.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channels import (
    BisoChannel,
    Channel,
    DegradingMap,
    as_channel,
    canonicalize_biso,
    compose,
    make_bsc,
)
from .coefficients import (
    capacity_biso,
    capacity_binary,
    doeblin_alpha,
    eta_kl_binary,
    eta_kl_biso,
    eta_tv,
    h2,
    h2_inv,
)
from .errors import (
    ClassMismatchError,
    DimensionTooLargeError,
    NotBisoError,
    ParameterOutOfRangeError,
)
from .orders import OrderVerdict, is_degraded, is_less_noisy, is_more_capable
from .search import bisect_threshold

KINDS = ("capacity", "eta_kl", "alpha")


@dataclass(frozen=True)
class ChannelClass:
    """A channel class: all channels sharing one coefficient value."""

    kind: str
    value: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterOutOfRangeError(f"unknown class kind {self.kind!r}")
        if not 0.0 <= self.value <= 1.0:
            raise ParameterOutOfRangeError(f"class constant must lie in [0, 1], got {self.value!r}")


@dataclass(frozen=True)
class ExtremalMatch:
    """BSC and BEC parameters matching one coefficient of a channel."""

    channel_class: ChannelClass
    bsc_p: float
    bec_eps: float


def channel_class(channel, kind):
    """Compute the class constant of a channel for the given kind."""
    if kind == "alpha":
        value = doeblin_alpha(channel)
    elif kind == "eta_kl":
        try:
            value = eta_kl_biso(canonicalize_biso(as_channel(channel)))
        except NotBisoError:
            value = eta_kl_binary(channel)
    elif kind == "capacity":
        try:
            value = capacity_biso(canonicalize_biso(as_channel(channel)))
        except NotBisoError:
            value = capacity_binary(channel)
    else:
        raise ParameterOutOfRangeError(f"unknown class kind {kind!r}")
    return ChannelClass(kind, float(value))


def match_extremal(channel, kind):
    """BSC/BEC parameters with the same coefficient as the channel.

    eta_kl:   p = (1 - sqrt(eta)) / 2 (the p <= 1/2 branch), eps = 1 - eta.
    alpha:    p = alpha / 2, eps = alpha.
    capacity: p = h2_inv(1 - C), eps = 1 - C.
    """
    cls = channel_class(channel, kind)
    c = cls.value
    if kind == "eta_kl":
        p = (1.0 - math.sqrt(c)) / 2.0
        eps = 1.0 - c
    elif kind == "alpha":
        p = c / 2.0
        eps = c
    else:
        p = h2_inv(1.0 - c)
        eps = 1.0 - c
    return ExtremalMatch(cls, float(p), float(eps))


# ----------------------------------------------------------------------
# Indicator map onto the Doeblin-matched BSC
# ----------------------------------------------------------------------


def bsc_degrading_map(biso):
    """Deterministic map collapsing a BISO channel onto BSC(alpha / 2).

    Each output votes for the more likely input: output +y maps to 0 when
    p_y >= p_-y, output -y maps to 0 when p_-y > p_y.  The strict inequality
    on the negative side keeps tied pairs from voting twice, so the
    composition lands exactly on the matched BSC.  Rows follow the flat
    output layout of `BisoChannel.to_channel`.
    """
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    p = biso.pairs[:, 0]
    pm = biso.pairs[:, 1]
    a_pos = (p >= pm).astype(float)
    a_neg = (pm > p).astype(float)
    # flat layout: negative labels descending from -l, then positive ascending
    a_flat = np.concatenate([a_neg[::-1], a_pos])
    return DegradingMap(np.stack([a_flat, 1.0 - a_flat], axis=1))


# ----------------------------------------------------------------------
# Dimension-3 comparability
# ----------------------------------------------------------------------


def _dim3_parts(biso, tol=1e-12):
    """Split a dimension-<=3 BISO channel into (p0, p_plus, p_minus).

    Accepts one pair, or two pairs of which the tied ones came from a
    0-split.  More than one informative (untied) pair is rejected.
    """
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    p0 = 0.0
    informative = None
    for p, pm in biso.pairs:
        if abs(p - pm) <= tol:
            p0 += p + pm
        elif informative is None:
            informative = (float(p), float(pm))
        else:
            raise DimensionTooLargeError(
                "channel has more than one informative pair; output dimension exceeds 3"
            )
    if informative is None:
        informative = (0.0, 0.0)
    return float(p0), informative[0], informative[1]


def dim3_channel(p0, p_plus, p_minus, tol=1e-9):
    """Three-output BISO channel with columns ordered (-1, 0, +1)."""
    return Channel(
        [[p_minus, p0, p_plus], [p_plus, p0, p_minus]], tol=tol
    )


def _dim3_ratio(p0, p_plus, p_minus):
    s = p_plus + p_minus
    if s <= 0.0:
        return 0.0
    return p_plus * p_minus / (s * s)


@dataclass(frozen=True)
class Dim3Ratios:
    """The two product ratios compared by the dimension-3 less-noisy test."""

    rho_first: float
    rho_second: float


def dim3_less_noisy_compare(f_biso, g_biso, eta_tol=1e-9):
    """Less-noisy verdict for two dimension-<=3 BISO channels of equal eta.

    With a single informative pair each, the grid criterion collapses to a
    comparison of rho = p_1 p_-1 / (1 - p_0)^2: the channel with the smaller
    rho dominates.  Returns the verdict for "first is less noisy than
    second"; swap the arguments for the reverse direction.
    """
    f_biso = canonicalize_biso(f_biso) if not isinstance(f_biso, BisoChannel) else f_biso
    g_biso = canonicalize_biso(g_biso) if not isinstance(g_biso, BisoChannel) else g_biso
    eta_f = eta_kl_biso(f_biso)
    eta_g = eta_kl_biso(g_biso)
    if abs(eta_f - eta_g) > eta_tol:
        raise ClassMismatchError(f"contraction coefficients differ: {eta_f!r} vs {eta_g!r}")
    rho_f = _dim3_ratio(*_dim3_parts(f_biso))
    rho_g = _dim3_ratio(*_dim3_parts(g_biso))
    ratios = Dim3Ratios(rho_f, rho_g)
    if rho_f <= rho_g + 1e-12:
        return OrderVerdict("holds", ratios)
    return OrderVerdict("fails", ratios)


@dataclass(frozen=True)
class Dim3Degradation:
    """A degrading map between two equal-alpha dimension-3 channels.

    `upper` degrades onto `lower` via `map`: compose(upper, map) == lower.
    `swapped` records whether the inputs were reordered to satisfy the
    p0 <= q0 orientation.
    """

    map: DegradingMap
    upper: Channel
    lower: Channel
    swapped: bool


def dim3_degrading_map(f_biso, g_biso, alpha_tol=1e-9):
    """Explicit degrading map between two equal-alpha dimension-<=3 channels.

    The channel with the larger 0-mass degrades onto the other.  The map is
    one of two case matrices depending on whether the informative pairs have
    matching or flipped orientation; both are row-stochastic by the shared
    total-variation constraint.
    """
    fb = canonicalize_biso(f_biso) if not isinstance(f_biso, BisoChannel) else f_biso
    gb = canonicalize_biso(g_biso) if not isinstance(g_biso, BisoChannel) else g_biso
    f_parts = _dim3_parts(fb)
    g_parts = _dim3_parts(gb)
    alpha_f = 1.0 - abs(f_parts[1] - f_parts[2])
    alpha_g = 1.0 - abs(g_parts[1] - g_parts[2])
    if abs(alpha_f - alpha_g) > alpha_tol:
        raise ClassMismatchError(f"Doeblin coefficients differ: {alpha_f!r} vs {alpha_g!r}")

    swapped = f_parts[0] > g_parts[0]
    if swapped:
        lower_parts, upper_parts = g_parts, f_parts
    else:
        lower_parts, upper_parts = f_parts, g_parts
    p0, p1, pm1 = lower_parts
    q0, q1, qm1 = upper_parts

    same_orientation = (p1 - pm1) * (q1 - qm1) >= 0.0
    if q0 <= 0.0:
        middle = [0.0, 1.0, 0.0]
    elif same_orientation:
        x = (p1 - q1) / q0
        middle = [x, p0 / q0, x]
    else:
        x = (p1 - qm1) / q0
        middle = [x, p0 / q0, x]
    if same_orientation:
        entries = [[1.0, 0.0, 0.0], middle, [0.0, 0.0, 1.0]]
    else:
        entries = [[0.0, 0.0, 1.0], middle, [1.0, 0.0, 0.0]]
    dmap = DegradingMap(entries)
    upper = dim3_channel(*upper_parts)
    lower = dim3_channel(*lower_parts)
    return Dim3Degradation(dmap, upper, lower, swapped)


# ----------------------------------------------------------------------
# Reverse coefficients (BSC-anchored)
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ReverseCoefficients:
    """Smallest dominated-BSC parameters, one per order, in their natural scale.

    alpha_rev: smallest 2p over BSCs the channel degrades onto. 1 - eta_tv.
    beta_rev:  smallest 4p(1-p) over BSCs the channel is less noisy than.
               1 - eta_kl.
    gamma_rev: capacity of the weakest dominated BSC in the more-capable
               order, i.e. 1 - h2 of the threshold parameter, which equals
               the channel capacity.
    """

    alpha_rev: float
    beta_rev: float
    gamma_rev: float


def reverse_coefficients(biso):
    """Reverse coefficients of a BISO channel via the closed identities."""
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    return ReverseCoefficients(
        alpha_rev=1.0 - eta_tv(biso),
        beta_rev=1.0 - eta_kl_biso(biso),
        gamma_rev=capacity_biso(biso),
    )


def verify_reverse_alpha(biso, xtol=2e-7):
    """Bisection for the smallest 2p with the channel degradable onto BSC(p)."""
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    flat = biso.to_channel()

    def dominated(p):
        return is_degraded(flat, make_bsc(p)).holds

    p_star = bisect_threshold(dominated, 0.0, 0.5, xtol)
    return 2.0 * p_star


def verify_reverse_beta(biso, xtol=2e-7):
    """Bisection for the smallest 4p(1-p) with the channel less noisy than BSC(p)."""
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)

    def dominated(p):
        if p >= 0.5:
            return True
        return is_less_noisy(biso, canonicalize_biso(make_bsc(p))).holds

    p_star = bisect_threshold(dominated, 0.0, 0.5, xtol)
    return 4.0 * p_star * (1.0 - p_star)


def verify_reverse_gamma(biso, grid_points=1000):
    """Grid bisection for the capacity of the weakest dominated BSC (more capable).

    The more-capable check is the expensive one, so the search runs on a
    fixed p-grid by binary search over the monotone verdict.
    """
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    flat = biso.to_channel()
    ps = np.linspace(0.0, 0.5, grid_points + 1)

    lo, hi = 0, len(ps) - 1
    if is_more_capable(flat, make_bsc(ps[lo])).holds:
        return 1.0 - h2(ps[lo])
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if is_more_capable(flat, make_bsc(ps[mid])).holds:
            hi = mid
        else:
            lo = mid
    return 1.0 - h2(ps[hi])


# ----------------------------------------------------------------------
# General binary channels
# ----------------------------------------------------------------------


def general_binary_dominated(channel):
    """A two-output channel every general binary channel degrades onto.

    Each output votes for the input whose transition probability dominates
    it; the resulting two-output channel shares the Doeblin coefficient of
    the original.  Unlike the BISO constructions, the target depends on the
    channel itself, not only on its class constant.  Returns (target, map).
    """
    ch = as_channel(channel)
    r = ch.rows[0]
    s = ch.rows[1]
    a = (s <= r).astype(float)
    dmap = DegradingMap(np.stack([a, 1.0 - a], axis=1))
    target = compose(ch, dmap)
    return target, dmap
