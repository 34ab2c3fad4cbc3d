"""Scalar functionals of binary-input channels.

Entropy utilities, f-divergences, KL and total-variation contraction
coefficients, Doeblin coefficients, maximal leakage, mutual information, and
capacity.  Entropies and capacities are in bits; maximal leakage is stored in
nats (its defining identity exp(L) = alpha_max uses the natural logarithm)
with a base-2 accessor.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import Channel, as_channel, canonicalize_biso, is_biso
from .errors import InfiniteDivergenceError, ParameterOutOfRangeError
from .search import scan_then_golden_max

_LN2 = math.log(2.0)


def h2(p):
    """Binary entropy in bits; h2(0) = h2(1) = 0."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRangeError(f"h2 argument must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def h2_inv(h):
    """Inverse of h2 on [0, 1/2], by bisection.

    The returned x satisfies |h2(x) - h| <= 1e-12.
    """
    h = float(h)
    if not 0.0 <= h <= 1.0:
        raise ParameterOutOfRangeError(f"h2_inv argument must lie in [0, 1], got {h!r}")
    if h == 0.0:
        return 0.0
    if h == 1.0:
        return 0.5
    lo, hi = 0.0, 0.5
    # h2 is strictly increasing on [0, 1/2]; 60 halvings reach the ulp scale
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if h2(mid) < h:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def binary_convolution(a, b):
    """Crossover probability of two cascaded BSCs: a*b = a(1-b) + (1-a)b."""
    a, b = float(a), float(b)
    if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
        raise ParameterOutOfRangeError("binary convolution arguments must lie in [0, 1]")
    return a * (1.0 - b) + (1.0 - a) * b


def _entropy_bits(vec):
    """Shannon entropy of a probability vector (last axis), 0 log 0 = 0."""
    v = np.asarray(vec, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(v > 0.0, -v * np.log2(np.where(v > 0.0, v, 1.0)), 0.0)
    return terms.sum(axis=-1)


# ----------------------------------------------------------------------
# Contraction and Doeblin coefficients
# ----------------------------------------------------------------------


def eta_kl_biso(biso):
    """Closed-form KL contraction coefficient of a BISO channel.

    eta = sum over pairs of (p_y - p_-y)^2 / (p_y + p_-y), with 0/0 := 0.
    """
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    p = biso.pairs[:, 0]
    q = biso.pairs[:, 1]
    s = p + q
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(s > 0.0, (p - q) ** 2 / np.where(s > 0.0, s, 1.0), 0.0)
    return float(terms.sum())


def _eta_objective_grid(rows, qs):
    """Vectorized chi^2-ratio objective over reference parameters qs in (0, 1)."""
    p0 = rows[0][None, :]
    p1 = rows[1][None, :]
    q = np.asarray(qs, dtype=float)[:, None]
    den = q * p0 + (1.0 - q) * p1
    num = (p0 - p1) ** 2 * q * (1.0 - q)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), 0.0)
    return terms.sum(axis=1)


def _eta_objective(rows, q):
    """Scalar objective with the q -> 0, 1 endpoint limits taken by continuity."""
    q = float(q)
    if q == 0.0:
        return float(rows[0][rows[1] == 0.0].sum())
    if q == 1.0:
        return float(rows[1][rows[0] == 0.0].sum())
    return float(_eta_objective_grid(rows, np.array([q]))[0])


def eta_kl_binary_argmax(channel, scan_points=1001, xtol=1e-10):
    """KL contraction coefficient of a binary-input channel, with its maximizer.

    Maximizes the chi-squared ratio over the reference input probability q by
    a uniform pre-scan followed by golden-section refinement; endpoint values
    are the continuity limits.  Returns (eta, q_star).
    """
    rows = as_channel(channel).rows

    def grid(qs):
        vals = _eta_objective_grid(rows, qs)
        if qs[0] == 0.0:
            vals[0] = _eta_objective(rows, 0.0)
        if qs[-1] == 1.0:
            vals[-1] = _eta_objective(rows, 1.0)
        return vals

    qstar, eta = scan_then_golden_max(
        lambda q: _eta_objective(rows, q), 0.0, 1.0, scan_points, xtol, f_grid=grid
    )
    return float(eta), float(qstar)


def eta_kl_binary(channel):
    """KL contraction coefficient of a binary-input channel (supremum value only)."""
    return eta_kl_binary_argmax(channel)[0]


def eta_tv(channel):
    """Dobrushin coefficient: total variation between the two rows."""
    rows = as_channel(channel).rows
    return float(0.5 * np.abs(rows[0] - rows[1]).sum())


def doeblin_alpha(channel):
    """Doeblin coefficient: sum of columnwise row minima."""
    rows = as_channel(channel).rows
    return float(np.minimum(rows[0], rows[1]).sum())


def alpha_max(channel):
    """Max-Doeblin coefficient: sum of columnwise row maxima."""
    rows = as_channel(channel).rows
    return float(np.maximum(rows[0], rows[1]).sum())


def maximal_leakage(channel):
    """Maximal leakage in nats: log of the max-Doeblin coefficient."""
    return float(math.log(alpha_max(channel)))


def maximal_leakage_bits(channel):
    return maximal_leakage(channel) / _LN2


# ----------------------------------------------------------------------
# Mutual information and capacity
# ----------------------------------------------------------------------


def mutual_information(channel, p):
    """I(X:Y) in bits for input law P(X=0) = p; clipped at 0 against roundoff."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterOutOfRangeError(f"input probability must lie in [0, 1], got {p!r}")
    return float(mutual_information_grid(channel, np.array([p]))[0])


def mutual_information_grid(channel, ps):
    """Vectorized mutual information over an array of input probabilities."""
    rows = as_channel(channel).rows
    p = np.asarray(ps, dtype=float)[:, None]
    out = p * rows[0][None, :] + (1.0 - p) * rows[1][None, :]
    hy = _entropy_bits(out)
    hyx = p[:, 0] * _entropy_bits(rows[0]) + (1.0 - p[:, 0]) * _entropy_bits(rows[1])
    return np.maximum(hy - hyx, 0.0)


def capacity_binary_argmax(channel, scan_points=1001, xtol=1e-10):
    """Capacity of a binary-input channel and its maximizing input probability."""
    ch = as_channel(channel)
    pstar, cap = scan_then_golden_max(
        lambda p: float(mutual_information_grid(ch, np.array([p]))[0]),
        0.0,
        1.0,
        scan_points,
        xtol,
        f_grid=lambda ps: mutual_information_grid(ch, ps),
    )
    return float(cap), float(pstar)


def capacity_binary(channel):
    return capacity_binary_argmax(channel)[0]


def capacity_biso(biso):
    """Closed-form capacity of a BISO channel in bits."""
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    p = biso.pairs[:, 0]
    q = biso.pairs[:, 1]
    s = p + q
    keep = s > 0.0
    delta = np.where(keep, p / np.where(keep, s, 1.0), 0.0)
    hterm = _entropy_bits(np.stack([delta, 1.0 - delta], axis=-1))
    return float(1.0 - (s * np.where(keep, hterm, 0.0)).sum())


# ----------------------------------------------------------------------
# Coefficient report
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientReport:
    """All scalar functionals of one channel; leakage is stored in nats."""

    eta_kl: float
    eta_tv: float
    doeblin_alpha: float
    alpha_max: float
    maximal_leakage: float
    capacity: float

    @property
    def maximal_leakage_bits(self):
        return self.maximal_leakage / _LN2


def coefficient_report(channel):
    """Compute every coefficient of a binary-input channel.

    BISO channels use the closed forms for eta_KL and capacity; general
    binary channels fall back to the scalar optimizers.
    """
    ch = as_channel(channel)
    if is_biso(ch):
        b = canonicalize_biso(ch)
        eta = eta_kl_biso(b)
        cap = capacity_biso(b)
    else:
        eta = eta_kl_binary(ch)
        cap = capacity_binary(ch)
    return CoefficientReport(
        eta_kl=eta,
        eta_tv=eta_tv(ch),
        doeblin_alpha=doeblin_alpha(ch),
        alpha_max=alpha_max(ch),
        maximal_leakage=maximal_leakage(ch),
        capacity=cap,
    )


# ----------------------------------------------------------------------
# f-divergences
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FDivergenceGenerator:
    """A convex generator f with f(1) = 0.

    `f0` is the limit of f at 0 and `slope_at_inf` the limit of f(t)/t as
    t -> inf; either may be None to flag +infinity.  The generator is probed
    at 1 on construction.
    """

    fn: callable
    f0: float | None
    slope_at_inf: float | None
    name: str = field(default="f")

    def __post_init__(self):
        probe = self.fn(1.0)
        if abs(probe) > 1e-12:
            raise ParameterOutOfRangeError(f"generator {self.name} has f(1) = {probe!r} != 0")

    def __call__(self, t):
        return self.fn(t)


def tv_generator():
    return FDivergenceGenerator(lambda t: 0.5 * abs(t - 1.0), f0=0.5, slope_at_inf=0.5, name="tv")


def chi2_generator():
    return FDivergenceGenerator(lambda t: (t - 1.0) ** 2, f0=1.0, slope_at_inf=None, name="chi2")


def kl_generator():
    """KL generator in bits: f(t) = t log2 t, with f(0) = 0."""

    def f(t):
        return t * math.log2(t) if t > 0.0 else 0.0

    return FDivergenceGenerator(f, f0=0.0, slope_at_inf=None, name="kl")


def f_divergence(gen, p_vec, q_vec):
    """D_f(P || Q) = sum_x Q(x) f(P(x)/Q(x)) with the usual limit conventions.

    A zero Q-atom carrying positive P-mass contributes P(x) * slope_at_inf;
    when that slope is infinite the divergence is +infinity and
    InfiniteDivergenceError is raised.
    """
    p = np.asarray(p_vec, dtype=float)
    q = np.asarray(q_vec, dtype=float)
    if p.shape != q.shape:
        raise ParameterOutOfRangeError("P and Q must have the same length")
    total = 0.0
    for pi, qi in zip(p, q):
        if qi > 0.0:
            total += qi * gen(pi / qi)
        elif pi > 0.0:
            if gen.slope_at_inf is None:
                raise InfiniteDivergenceError(
                    f"D_{gen.name}: P-atom {pi!r} on a zero Q-atom with infinite slope at infinity"
                )
            total += pi * gen.slope_at_inf
        # pi == qi == 0 contributes nothing
    return float(total)
