"""The structural route: block-type decomposition of a two-row matrix.

A window of l+2 cyclic columns has type [alpha, beta; l] when its first
column is (alpha, 1-alpha), its last is (beta, 1-beta) and the l interior
columns have equal rows.  The correlation is n - 2*g where g weights the
type counts.  Counting is done by collecting unequal-column positions and
measuring cyclic gaps between consecutive ones: each adjacent pair of
unequal columns contributes exactly one window, so the scan is O(n)
instead of the O(n^2) naive window search.
"""

from __future__ import annotations

from .errors import EqualSequences, PeriodMismatch
from .sequences import BinarySequence


class BlockTypeTable:
    """Counts N(alpha, beta; l) for one pair of distinct period-n rows."""

    __slots__ = ("counts", "n")

    def __init__(self, counts: dict[tuple[int, int, int], int], n: int):
        self.counts = counts
        self.n = n

    def get(self, alpha: int, beta: int, l: int) -> int:
        return self.counts.get((alpha, beta, l), 0)

    def total(self) -> int:
        """Total windows counted; equals the number of unequal columns."""
        return sum(self.counts.values())

    def to_csv(self) -> str:
        """Debug dump: lines `alpha,beta,l,count`, nonzero entries only."""
        lines = ["alpha,beta,l,count"]
        for key in sorted(self.counts):
            lines.append(f"{key[0]},{key[1]},{key[2]},{self.counts[key]}")
        return "\n".join(lines)


def block_type_counts(a: BinarySequence, b: BinarySequence) -> BlockTypeTable:
    """Block-type counts for the matrix with rows a and b."""
    n = a.period
    if b.period != n:
        raise PeriodMismatch(f"periods differ: {n} vs {b.period}")
    abits, bbits = a.bits, b.bits
    pos = [i for i in range(n) if abits[i] != bbits[i]]
    if not pos:
        raise EqualSequences("rows are identical")
    counts: dict[tuple[int, int, int], int] = {}
    k = len(pos)
    for i in range(k):
        p = pos[i]
        q = pos[(i + 1) % k]
        key = (abits[p], abits[q], (q - p - 1) % n)
        counts[key] = counts.get(key, 0) + 1
    return BlockTypeTable(counts, n)


def g_of(table: BlockTypeTable, n: int | None = None) -> int:
    """g = sum l*(N(0,0;l)+N(0,1;l)) + sum (N(1,0;l)+N(1,1;l))."""
    g = 0
    for (alpha, _beta, l), c in table.counts.items():
        g += l * c if alpha == 0 else c
    return g


def autocorr_via_blocks(a: BinarySequence, b: BinarySequence) -> int:
    """A(M) = n - 2*g(M) for the matrix with rows a, b.

    When no column equals (1,0) the rows are swapped and the result
    negated (row swap negates the correlation).
    """
    n = a.period
    if b.period != n:
        raise PeriodMismatch(f"periods differ: {n} vs {b.period}")
    abits, bbits = a.bits, b.bits
    if not any(abits[i] == 1 and bbits[i] == 0 for i in range(n)):
        if a.bits == b.bits:
            raise EqualSequences("rows are identical")
        return -autocorr_via_blocks(b, a)
    return n - 2 * g_of(block_type_counts(a, b))
