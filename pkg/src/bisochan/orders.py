"""Decision procedures for the channel partial orders.

Degradability is decided exactly via an LP feasibility problem; the
less-noisy and more-capable orders are decided numerically on a parameter
grid with refinement around sign changes, so near-zero margins surface as
explicit verdicts rather than being coerced.
"""

from dataclasses import dataclass

import numpy as np

from .channels import (
    BisoChannel,
    Channel,
    DegradingMap,
    as_channel,
    canonicalize_biso,
    compose,
    is_biso,
)
from .coefficients import mutual_information_grid
from .errors import DegenerateParameterError, NumericalInstabilityError
from .search import golden_section_min
from .simplex import lp_feasibility

VERDICT_TOL = 1e-9
DEFAULT_GRID = 999
_REFINE_XTOL = 1e-8


@dataclass(frozen=True)
class CriterionViolation:
    """A parameter point where a defining inequality fails, with its value."""

    parameter: float
    value: float


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Evidence that no degrading map exists.

    `multipliers` are Farkas multipliers for the LP equality rows and
    `residual` the positive phase-1 optimum.  For BISO pairs, `guessing_x`
    (when present) is an input bias at which the would-be degraded channel
    guesses strictly better, an independently checkable refutation.
    """

    multipliers: np.ndarray
    residual: float
    guessing_x: float | None = None
    guessing_gap: float | None = None


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of a partial-order query: holds, fails, or undetermined."""

    relation: str
    witness: object = None

    @property
    def holds(self):
        return self.relation == "holds"

    @property
    def fails(self):
        return self.relation == "fails"


@dataclass(frozen=True)
class CriterionProfile:
    """Samples (parameter, value) of a comparison criterion, ascending in (0, 1)."""

    parameters: np.ndarray
    values: np.ndarray


def _interior_grid(grid_size):
    if grid_size < 2:
        raise DegenerateParameterError("grid_size must be at least 2")
    return np.arange(1, grid_size + 1) / (grid_size + 1.0)


# ----------------------------------------------------------------------
# Guessing probability (min-entropy refutation tool)
# ----------------------------------------------------------------------


def guessing_probability(biso, x):
    """Probability of guessing X from Y for X ~ Ber(x) through a BISO channel.

    Sums the larger joint atom over every output symbol; degradation can only
    shrink it, so a crossing between two channels refutes degradability.
    """
    if isinstance(biso, Channel):
        biso = canonicalize_biso(biso)
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DegenerateParameterError(f"input bias must lie in [0, 1], got {x!r}")
    return float(_guessing_grid(biso, np.array([x]))[0])


def _guessing_grid(biso, xs):
    p = biso.pairs[:, 0][None, :]
    q = biso.pairs[:, 1][None, :]
    x = np.asarray(xs, dtype=float)[:, None]
    pos = np.maximum(x * p, (1.0 - x) * q)
    neg = np.maximum(x * q, (1.0 - x) * p)
    return (pos + neg).sum(axis=1)


# ----------------------------------------------------------------------
# Less-noisy order (BISO convexity criterion)
# ----------------------------------------------------------------------


def less_noisy_criterion_biso(w, v, q):
    """Signed less-noisy criterion for BISO channels at reference bias q.

    The value is the difference of the two chi-squared curvature sums; the
    first channel is less noisy than the second iff the value is >= 0 for
    every q in (0, 1).  The criterion depends only on the reference bias q
    (the primal input bias cancels), which is why no second bias argument
    exists.  Reported on the same scale as half the second derivative of the
    chi-squared difference; see `less_noisy_criterion_fd`.
    """
    q = float(q)
    if q <= 0.0 or q >= 1.0:
        raise DegenerateParameterError(f"criterion bias must lie strictly inside (0, 1), got {q!r}")
    w = canonicalize_biso(w) if not isinstance(w, BisoChannel) else w
    v = canonicalize_biso(v) if not isinstance(v, BisoChannel) else v
    return float(_criterion_grid(w, v, np.array([q]))[0])


def _curvature_sum(biso, qs):
    p = biso.pairs[:, 0][None, :]
    pm = biso.pairs[:, 1][None, :]
    s = p + pm
    keep = s > 0.0
    safe_s = np.where(keep, s, 1.0)
    delta = np.where(keep, p / safe_s, 0.0)
    weight = np.where(keep, (p - pm) ** 2 / safe_s, 0.0)
    q = np.asarray(qs, dtype=float)[:, None]
    conv = q * (1.0 - delta) + (1.0 - q) * delta
    den = conv * (1.0 - conv)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(keep & (den > 0.0), weight / np.where(den > 0.0, den, 1.0), np.inf)
        terms = np.where(keep, terms, 0.0)
    return terms.sum(axis=1)


def _criterion_grid(w, v, qs):
    return _curvature_sum(w, qs) - _curvature_sum(v, qs)


def criterion_profile(w, v, grid_size=DEFAULT_GRID):
    """Criterion samples for the pair (w, v) on the interior grid."""
    w = canonicalize_biso(w) if not isinstance(w, BisoChannel) else w
    v = canonicalize_biso(v) if not isinstance(v, BisoChannel) else v
    qs = _interior_grid(grid_size)
    return CriterionProfile(qs, _criterion_grid(w, v, qs))


def _refined_minimum(xs, vals, f):
    """Grid minimum plus golden-section refinement around dips and sign changes.

    When the grid already certifies a violation the grid argmin is returned
    as-is; refinement only hunts for shallow dips the grid might straddle.
    """
    k = int(np.argmin(vals))
    best_x, best_v = float(xs[k]), float(vals[k])
    if best_v < -VERDICT_TOL:
        return best_x, best_v
    suspicious = set()
    signs = np.sign(vals)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0.0)[0]
    suspicious.update(flips.tolist())
    suspicious.update((flips + 1).tolist())
    neg = np.nonzero(vals < 0.0)[0]
    for i in neg:
        left = vals[i - 1] if i > 0 else np.inf
        right = vals[i + 1] if i + 1 < len(vals) else np.inf
        if vals[i] <= left and vals[i] <= right:
            suspicious.add(int(i))
    if vals[0] < 0.0:
        suspicious.add(0)
    if vals[-1] < 0.0:
        suspicious.add(len(vals) - 1)
    lo_floor, hi_ceil = 1e-9, 1.0 - 1e-9
    for i in sorted(suspicious):
        a = xs[i - 1] if i > 0 else lo_floor
        b = xs[i + 1] if i + 1 < len(xs) else hi_ceil
        gx, gv = golden_section_min(f, a, b, _REFINE_XTOL)
        if gv < best_v:
            best_x, best_v = float(gx), float(gv)
    return best_x, best_v


def _verdict_from_minimum(best_x, best_v, f):
    if best_v < -VERDICT_TOL:
        check = f(best_x)
        if check < -VERDICT_TOL:
            return OrderVerdict("fails", CriterionViolation(best_x, float(check)))
        return OrderVerdict("undetermined", CriterionViolation(best_x, float(check)))
    return OrderVerdict("holds")


def is_less_noisy(w, v, grid_size=DEFAULT_GRID):
    """Decide whether the first BISO channel is less noisy than the second.

    Evaluates the convexity criterion on the interior q-grid, refines around
    sign changes, and maps the minimum to a verdict: a violation beyond 1e-9
    fails (with the violating q as witness); anything within roundoff of the
    touching minimum holds.  The criterion legitimately touches zero at
    q = 1/2 whenever the two channels share a contraction coefficient, so
    tiny negative noise there counts as holds.
    """
    w = canonicalize_biso(w) if not isinstance(w, BisoChannel) else w
    v = canonicalize_biso(v) if not isinstance(v, BisoChannel) else v
    qs = _interior_grid(grid_size)
    vals = _criterion_grid(w, v, qs)

    def f(q):
        return float(_criterion_grid(w, v, np.array([q]))[0])

    best_x, best_v = _refined_minimum(qs, vals, f)
    return _verdict_from_minimum(best_x, best_v, f)


def less_noisy_criterion_fd(w, v, p, q, step=1e-4):
    """Second derivative of the chi-squared difference for general binary channels.

    Central finite difference in the primal bias p of
    chi2(W o Ber(p) || W o Ber(q)) - chi2(V o Ber(p) || V o Ber(q)).
    Since both terms are quadratic in p, the difference is exact up to
    roundoff and independent of p.  Equals twice the BISO closed criterion.
    """
    q = float(q)
    if q <= 0.0 or q >= 1.0:
        raise DegenerateParameterError("reference bias must lie strictly inside (0, 1)")
    w = as_channel(w)
    v = as_channel(v)

    def chi2_diff(pp):
        return _chi2_outputs(w, pp, q) - _chi2_outputs(v, pp, q)

    p = float(p)
    h = step
    return (chi2_diff(p + h) - 2.0 * chi2_diff(p) + chi2_diff(p - h)) / (h * h)


def _chi2_outputs(channel, p, q):
    rows = channel.rows
    out_p = p * rows[0] + (1.0 - p) * rows[1]
    out_q = q * rows[0] + (1.0 - q) * rows[1]
    keep = out_q > 0.0
    if np.any(~keep & (out_p > 0.0)):
        return np.inf
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(keep, (out_p - out_q) ** 2 / np.where(keep, out_q, 1.0), 0.0)
    return float(terms.sum())


# ----------------------------------------------------------------------
# More-capable order
# ----------------------------------------------------------------------


def mutual_information_difference(p_channel, q_channel, x):
    """I(X:Y_P) - I(X:Y_Q) at input bias x (both channels see the same law)."""
    a = mutual_information_grid(p_channel, np.array([float(x)]))[0]
    b = mutual_information_grid(q_channel, np.array([float(x)]))[0]
    return float(a - b)


def is_more_capable(p_channel, q_channel, grid_size=DEFAULT_GRID):
    """Decide the more-capable order on an input-bias grid with refinement.

    This is a numerical decision up to grid resolution: the difference of
    mutual informations is scanned over the interior grid and dips are
    refined; a violation beyond 1e-9 fails with the witnessing bias.
    """
    p_ch = as_channel(p_channel)
    q_ch = as_channel(q_channel)
    xs = _interior_grid(grid_size)
    vals = mutual_information_grid(p_ch, xs) - mutual_information_grid(q_ch, xs)

    def f(x):
        return mutual_information_difference(p_ch, q_ch, x)

    best_x, best_v = _refined_minimum(xs, vals, f)
    return _verdict_from_minimum(best_x, best_v, f)


# ----------------------------------------------------------------------
# Degradability (exact, via LP feasibility)
# ----------------------------------------------------------------------


def is_degraded(p_channel, q_channel):
    """Decide whether the second channel is a degraded version of the first.

    Sets up the feasibility LP over the stochastic map D (row sums one,
    matching constraints P D = Q for both inputs) and solves it by phase-1
    simplex.  A feasible solve returns the witness map, which is validated
    by re-composition to 1e-8 per entry; an infeasible solve returns Farkas
    multipliers, plus a guessing-probability refutation point when both
    channels are BISO.
    """
    p_ch = as_channel(p_channel)
    q_ch = as_channel(q_channel)
    m = p_ch.n_outputs
    n = q_ch.n_outputs

    n_vars = m * n
    rows = []
    rhs = []
    for y in range(m):  # row sums
        r = np.zeros(n_vars)
        r[y * n:(y + 1) * n] = 1.0
        rows.append(r)
        rhs.append(1.0)
    for x in range(2):  # matching constraints
        for yp in range(n):
            r = np.zeros(n_vars)
            for y in range(m):
                r[y * n + yp] = p_ch.rows[x, y]
            rows.append(r)
            rhs.append(q_ch.rows[x, yp])
    result = lp_feasibility(np.array(rows), np.array(rhs))

    if result.feasible:
        witness = DegradingMap(result.x.reshape(m, n))
        recomposed = compose(p_ch, witness)
        drift = float(np.abs(recomposed.rows - q_ch.rows).max())
        if drift > 1e-8:
            raise NumericalInstabilityError(f"witness re-composition drifts by {drift:g}")
        return OrderVerdict("holds", witness)

    guess_x = guess_gap = None
    if is_biso(p_ch) and is_biso(q_ch):
        bp = canonicalize_biso(p_ch)
        bq = canonicalize_biso(q_ch)
        xs = _interior_grid(DEFAULT_GRID)
        gap = _guessing_grid(bq, xs) - _guessing_grid(bp, xs)
        k = int(np.argmax(gap))
        if gap[k] > VERDICT_TOL:
            guess_x = float(xs[k])
            guess_gap = float(gap[k])
    cert = InfeasibilityCertificate(result.certificate, result.residual, guess_x, guess_gap)
    return OrderVerdict("fails", cert)
