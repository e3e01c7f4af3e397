"""The direct route: 2-adic subtraction of sigma values.

Sign convention: for d = sigma(seq) - sigma(shift), the correlation is
n - 2*w2(d) when d > 0 and 2*w2(-d) - n when d < 0.  The full distribution
is sign-symmetric, so only per-tau signed values depend on this choice.
"""

from __future__ import annotations

import json
from collections import Counter

from .errors import ShiftEqualsSequence, TauOutOfRange
from .sequences import BinarySequence, rotate_value


def sigma(seq: BinarySequence) -> int:
    """The integer whose binary digit lambda is bit lambda of the sequence."""
    return seq.value


def weight(x: int) -> int:
    """2-adic weight: number of ones in the binary expansion."""
    if x < 0:
        raise ValueError("weight is defined for nonnegative integers")
    return x.bit_count()


def arithmetic_autocorr(seq: BinarySequence, tau: int) -> int:
    """Arithmetic autocorrelation of seq at shift tau, in [-(n-2), n-2]."""
    n = seq.period
    if not 1 <= tau <= n - 1:
        raise TauOutOfRange(f"tau={tau} outside 1..{n - 1}")
    s = seq.value
    d = s - rotate_value(s, tau, n)
    if d == 0:
        raise ShiftEqualsSequence(f"shift by tau={tau} equals the sequence")
    if d > 0:
        return n - 2 * d.bit_count()
    return 2 * (-d).bit_count() - n


def distribution(seq: BinarySequence) -> dict[int, int]:
    """Multiset of arithmetic_autocorr(seq, tau) over tau = 1..n-1."""
    counts = Counter()
    for tau in range(1, seq.period):
        counts[arithmetic_autocorr(seq, tau)] += 1
    return dict(counts)


def distribution_to_json(dist: dict[int, int]) -> str:
    """JSON object {"value": multiplicity}, keys as signed decimal strings, ascending."""
    return json.dumps({str(v): dist[v] for v in sorted(dist)})


def distribution_from_json(text: str) -> dict[int, int]:
    return {int(k): v for k, v in json.loads(text).items()}
