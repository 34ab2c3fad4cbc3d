"""Binary-input channel representations, BISO canonicalization, composition, and file I/O.

A binary-input channel is a 2 x n row-stochastic matrix.  A BISO channel is
stored in paired form: l pairs (p_y, p_-y) over the symmetric output alphabet
{+-1, ..., +-l}, with an odd "0" output split evenly into two half-columns.
The flat layout used for files and for `BisoChannel.to_channel` is

    (p_-l, ..., p_-1, p_1, ..., p_l)

i.e. row 0 reads negative labels ascending then positive labels ascending,
and row 1 is row 0 reversed.
"""

import numpy as np

from .errors import (
    ChannelFormatError,
    DimensionMismatchError,
    InvalidChannelError,
    NotBisoError,
    ParameterOutOfRangeError,
)

STRICT_TOL = 1e-12   # channels constructed in code
LOADED_TOL = 1e-9    # channels parsed from text (round-trip slack)
PAIRING_TOL = 1e-9   # column matching during BISO detection


def _as_prob_matrix(rows, tol, what="channel"):
    arr = np.array(rows, dtype=float)
    if arr.ndim != 2:
        raise InvalidChannelError(f"{what} must be a 2-D matrix, got shape {arr.shape}")
    if np.any(arr < -tol) or np.any(arr > 1.0 + tol):
        raise InvalidChannelError(f"{what} entries must lie in [0, 1] within {tol:g}")
    sums = arr.sum(axis=1)
    bad = np.nonzero(np.abs(sums - 1.0) > tol)[0]
    if bad.size:
        raise InvalidChannelError(
            f"{what} row {bad[0]} sums to {sums[bad[0]]!r}, not 1 within {tol:g}"
        )
    return np.clip(arr, 0.0, 1.0)


class Channel:
    """A binary-input channel: 2 x n row-stochastic matrix, immutable."""

    def __init__(self, rows, output_labels=None, tol=STRICT_TOL):
        arr = _as_prob_matrix(rows, tol)
        if arr.shape[0] != 2:
            raise InvalidChannelError(f"binary-input channel needs 2 rows, got {arr.shape[0]}")
        if arr.shape[1] < 1:
            raise InvalidChannelError("channel needs at least one output")
        arr.setflags(write=False)
        self.rows = arr
        if output_labels is not None:
            labels = tuple(int(v) for v in output_labels)
            if len(labels) != arr.shape[1]:
                raise DimensionMismatchError("output_labels length does not match outputs")
            self.output_labels = labels
        else:
            self.output_labels = None

    @property
    def n_outputs(self):
        return self.rows.shape[1]

    def isclose(self, other, atol=1e-12):
        return self.rows.shape == other.rows.shape and np.allclose(
            self.rows, other.rows, atol=atol, rtol=0.0
        )

    def __repr__(self):
        return f"Channel({self.rows.tolist()!r})"


class BisoChannel:
    """A BISO channel in paired form: pairs[i] = (p_y, p_-y) for y = i + 1."""

    def __init__(self, pairs, tol=STRICT_TOL):
        arr = np.array(pairs, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidChannelError(f"pairs must have shape (l, 2), got {arr.shape}")
        if arr.shape[0] < 1:
            raise InvalidChannelError("a BISO channel needs at least one pair")
        if np.any(arr < -tol) or np.any(arr > 1.0 + tol):
            raise InvalidChannelError(f"pair entries must lie in [0, 1] within {tol:g}")
        total = arr.sum()
        if abs(total - 1.0) > tol:
            raise InvalidChannelError(f"pair probabilities sum to {total!r}, not 1 within {tol:g}")
        arr = np.clip(arr, 0.0, 1.0)
        arr.setflags(write=False)
        self.pairs = arr

    @property
    def num_pairs(self):
        return self.pairs.shape[0]

    def to_channel(self):
        """Flatten to the canonical 2 x 2l layout: row 1 is row 0 reversed."""
        flat = np.concatenate([self.pairs[::-1, 1], self.pairs[:, 0]])
        return Channel([flat, flat[::-1]], tol=LOADED_TOL)

    def isclose(self, other, atol=1e-12):
        return self.pairs.shape == other.pairs.shape and np.allclose(
            self.pairs, other.pairs, atol=atol, rtol=0.0
        )

    def __repr__(self):
        return f"BisoChannel({self.pairs.tolist()!r})"


def as_channel(ch):
    """Accept a Channel or BisoChannel and return the flat Channel."""
    if isinstance(ch, BisoChannel):
        return ch.to_channel()
    if isinstance(ch, Channel):
        return ch
    raise TypeError(f"expected Channel or BisoChannel, got {type(ch).__name__}")


def _match_columns(r0, r1, tol):
    """Backtracking search for a symmetric pairing of output columns.

    Column i may pair with column j when r0[i] ~ r1[j] and r0[j] ~ r1[i];
    i may self-pair (and be split) when r0[i] ~ r1[i].  Returns a list of
    (i, j) with i == j marking splits, or None when no pairing exists.
    """
    n = len(r0)
    unmatched = list(range(n))

    def solve(remaining):
        if not remaining:
            return []
        i = remaining[0]
        rest = remaining[1:]
        # self-pairing (split) first keeps odd alphabets solvable
        if abs(r0[i] - r1[i]) <= tol:
            sub = solve(rest)
            if sub is not None:
                return [(i, i)] + sub
        for j in rest:
            if abs(r0[i] - r1[j]) <= tol and abs(r0[j] - r1[i]) <= tol:
                sub = solve([k for k in rest if k != j])
                if sub is not None:
                    return [(i, j)] + sub
        return None

    return solve(unmatched)


def canonicalize_biso(channel, tol=PAIRING_TOL):
    """Recognize a BISO channel and return its paired form.

    Parameters
    ----------
    channel : Channel or BisoChannel
        Binary-input channel to canonicalize.
    tol : float
        Tolerance for matching output columns.

    Returns
    -------
    BisoChannel
        Pairs (p_y, p_-y) in ascending y.  Channels already in the flat
        layout (row 1 equal to row 0 reversed) keep their positional pair
        order, so flatten/canonicalize round-trips exactly.  A single column
        with equal rows in an odd alphabet is split into two half-columns.
        Pairs with zero total probability are dropped.

    Raises
    ------
    NotBisoError
        If no symmetric pairing of the output columns exists within `tol`.
    """
    if isinstance(channel, BisoChannel):
        return channel
    r0 = channel.rows[0]
    r1 = channel.rows[1]
    n = channel.n_outputs

    pairs = None
    if np.all(np.abs(r1 - r0[::-1]) <= tol):
        # positional fast path: flat layout, possibly with an odd middle column
        flat = r0
        if n % 2 == 1:
            mid = n // 2
            if abs(r0[mid] - r1[mid]) > tol:
                raise NotBisoError("odd output alphabet without an equal-rows middle column")
            half = 0.5 * (r0[mid] + r1[mid]) / 2.0
            flat = np.concatenate([r0[:mid], [half, half], r0[mid + 1:]])
        l = len(flat) // 2
        pairs = [(flat[l + i], flat[l - 1 - i]) for i in range(l)]
    else:
        matching = _match_columns(r0, r1, tol)
        if matching is None:
            raise NotBisoError("no symmetric pairing of output columns exists")
        pairs = []
        for i, j in matching:
            if i == j:
                v = 0.5 * (r0[i] + r1[i])
                pairs.append((v / 2.0, v / 2.0))
            else:
                # the larger index plays the positive label, as in the flat layout
                pairs.append((r0[j], r0[i]))
        pairs.sort(key=lambda pr: (pr[0] + pr[1], pr[0]))

    kept = [pr for pr in pairs if pr[0] + pr[1] > 0.0]
    if not kept:
        raise NotBisoError("all output pairs carry zero probability")
    return BisoChannel(kept, tol=max(tol, STRICT_TOL))


def is_biso(channel):
    """True when the channel admits a symmetric output pairing."""
    try:
        canonicalize_biso(channel)
        return True
    except NotBisoError:
        return False


class DegradingMap:
    """An m x n row-stochastic post-processing map.

    Entries may drift outside [0, 1] by at most `tol` and row sums may miss 1
    by at most `tol`; anything worse is rejected.  Accepted entries are
    clamped to [0, 1] and rows renormalized to sum exactly 1.
    """

    def __init__(self, entries, tol=1e-9):
        arr = np.array(entries, dtype=float)
        if arr.ndim != 2:
            raise InvalidChannelError(f"degrading map must be 2-D, got shape {arr.shape}")
        if np.any(arr < -tol) or np.any(arr > 1.0 + tol):
            raise InvalidChannelError(f"degrading map entries drift beyond {tol:g}")
        sums = arr.sum(axis=1)
        if np.any(np.abs(sums - 1.0) > tol):
            worst = float(np.max(np.abs(sums - 1.0)))
            raise InvalidChannelError(f"degrading map row sums drift by {worst:g} > {tol:g}")
        arr = np.clip(arr, 0.0, 1.0)
        arr /= arr.sum(axis=1, keepdims=True)
        arr.setflags(write=False)
        self.entries = arr

    @property
    def shape(self):
        return self.entries.shape

    def __repr__(self):
        return f"DegradingMap({self.entries.tolist()!r})"


def identity_map(n):
    return DegradingMap(np.eye(n))


def compose(base, post):
    """Cascade a channel with a post-processing map: rows(result) = rows(base) @ post."""
    base = as_channel(base)
    mat = post.entries if isinstance(post, DegradingMap) else np.asarray(post, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != base.n_outputs:
        raise DimensionMismatchError(
            f"map has {mat.shape[0] if mat.ndim == 2 else '?'} rows, channel has "
            f"{base.n_outputs} outputs"
        )
    return Channel(base.rows @ mat, tol=STRICT_TOL)


def _check_unit(x, name):
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ParameterOutOfRangeError(f"{name} must lie in [0, 1], got {x!r}")
    return x


def make_bsc(p):
    """Binary symmetric channel with crossover probability p."""
    p = _check_unit(p, "crossover probability")
    return Channel([[1.0 - p, p], [p, 1.0 - p]])


def make_bec(eps):
    """Binary erasure channel; the middle output is the erasure symbol."""
    eps = _check_unit(eps, "erasure probability")
    return Channel([[1.0 - eps, eps, 0.0], [0.0, eps, 1.0 - eps]])


def make_z(q):
    """Z channel: input 0 is transmitted noiselessly, input 1 flips with probability q."""
    q = _check_unit(q, "flip probability")
    return Channel([[1.0, 0.0], [q, 1.0 - q]])


# ----------------------------------------------------------------------
# Text format
#
# General form:   line 1 = n, lines 2-3 = n probabilities each (rows X=0, X=1).
# BISO shorthand: one line "biso p_-l ... p_-1 p_1 ... p_l".
# '#' starts a comment; blank lines are ignored.
# ----------------------------------------------------------------------


def _content_lines(text):
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    return lines


def parse_channel(text, tol=LOADED_TOL):
    """Parse a channel from its text representation."""
    lines = _content_lines(text)
    if not lines:
        raise ChannelFormatError("empty channel description")
    first = lines[0].split()
    if first[0].lower() == "biso":
        if len(lines) != 1:
            raise ChannelFormatError("BISO shorthand must be a single line")
        try:
            flat = np.array([float(tok) for tok in first[1:]], dtype=float)
        except ValueError as exc:
            raise ChannelFormatError(f"bad probability token: {exc}") from None
        if flat.size < 2 or flat.size % 2 != 0:
            raise ChannelFormatError("BISO shorthand needs an even number of probabilities")
        return Channel([flat, flat[::-1]], tol=tol)
    if len(lines) != 3:
        raise ChannelFormatError(f"expected 3 content lines (n, row 0, row 1), got {len(lines)}")
    try:
        n = int(lines[0])
    except ValueError:
        raise ChannelFormatError(f"first line must be the output count, got {lines[0]!r}") from None
    if n < 1:
        raise ChannelFormatError(f"output count must be positive, got {n}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError as exc:
            raise ChannelFormatError(f"line {lineno}: bad probability token: {exc}") from None
        if len(row) != n:
            raise ChannelFormatError(f"line {lineno}: expected {n} probabilities, got {len(row)}")
        rows.append(row)
    return Channel(rows, tol=tol)


def load_channel(path, tol=LOADED_TOL):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_channel(fh.read(), tol=tol)


def format_channel(channel):
    """Render a channel in the general text format."""
    channel = as_channel(channel)
    lines = [str(channel.n_outputs)]
    for row in channel.rows:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def format_biso(biso):
    """Render a BISO channel in the one-line shorthand."""
    flat = np.concatenate([biso.pairs[::-1, 1], biso.pairs[:, 0]])
    return "biso " + " ".join(repr(float(v)) for v in flat) + "\n"


def save_channel(channel, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_channel(channel))
