"""Shared independent oracles: each re-derives a quantity by a different
route than the implementation under test."""

import random

import pytest

from arithcorr.gf2m import GF2m
from arithcorr.sequences import BinarySequence


def trace_by_squaring(ctx: GF2m, a: int) -> int:
    """Trace by its defining sum a + a^2 + ... + a^(2^(m-1))."""
    acc = a
    cur = a
    for _ in range(ctx.m - 1):
        cur = ctx.mul(cur, cur)
        acc ^= cur
    assert acc in (0, 1)
    return acc


def lfsr_m_sequence(ctx: GF2m) -> BinarySequence:
    """m-sequence from the LFSR recurrence with taps read off the modulus.

    For f(x) = 1 + a_1 x + ... + a_(m-1) x^(m-1) + x^m the recurrence is
    s[i+m] = a_(m-1) s[i+m-1] + ... + a_1 s[i+1] + s[i]; the initial state
    comes from the trace definition.
    """
    m, n, f = ctx.m, ctx.n, ctx.modulus
    state = []
    x = 1
    for _ in range(m):
        state.append(ctx.trace(x))
        x = ctx.mul(x, 2)
    bits = list(state)
    for i in range(n - m):
        nxt = 0
        for j in range(m):
            if f >> j & 1:
                nxt ^= bits[i + j]
        bits.append(nxt)
    return BinarySequence(bits)


def naive_block_counts(a: BinarySequence, b: BinarySequence) -> dict:
    """O(n^2) window scan straight off the block-type definition."""
    n = a.period
    counts = {}
    for lam in range(n):
        for l in range(n):
            end = lam + l + 1
            if (
                a[lam] != b[lam]
                and a[end] != b[end]
                and all(a[lam + j] == b[lam + j] for j in range(1, l + 1))
            ):
                key = (a[lam], a[end], l)
                counts[key] = counts.get(key, 0) + 1
    return counts


def eq1_direct(a: BinarySequence, b: BinarySequence) -> int:
    """Signed correlation of a pair straight from the sigma difference."""
    n = a.period
    d = a.value - b.value
    assert d != 0
    if d > 0:
        return n - 2 * d.bit_count()
    return 2 * (-d).bit_count() - n


def random_sequence(rng: random.Random, n: int) -> BinarySequence:
    return BinarySequence(rng.randrange(2) for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(0x2ADC)
