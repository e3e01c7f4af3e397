"""Arithmetic in GF(2^m) behind a verified primitive modulus.

Both GF(2)[x] polynomials and field elements are stored as plain ints:
bit i is the coefficient of x^i (respectively pi^i, for pi a root of
the modulus).  Addition is XOR, and a field element doubles as the
coefficient vector over the polynomial basis {1, pi, ..., pi^(m-1)}.
"""

from __future__ import annotations

from .errors import (
    DegreeMismatch,
    DegreeOutOfRange,
    NotIrreducible,
    NotPrimitive,
    PolynomialFormatError,
    TauOutOfRange,
    ZeroInverse,
)

MIN_DEGREE = 2
MAX_DEGREE = 24

# One standard primitive polynomial per degree (lowest-weight, lexicographically
# small taps).  Every entry is re-verified by the GF2m constructor.
PRIMITIVE_POLYS = {
    2: 0x7,       # x^2 + x + 1
    3: 0xB,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x43,      # x^6 + x + 1
    7: 0x83,      # x^7 + x + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x409,    # x^10 + x^3 + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x1053,   # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,   # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


def parse_poly(text: str) -> int:
    """Parse a polynomial given as a hex bitmask ("0xB") or exponent list ("3,1,0")."""
    text = text.strip()
    if not text:
        raise PolynomialFormatError("empty polynomial string")
    if text.lower().startswith("0x"):
        try:
            return int(text, 16)
        except ValueError:
            raise PolynomialFormatError(f"bad hex polynomial {text!r}") from None
    mask = 0
    for part in text.split(","):
        try:
            exp = int(part)
        except ValueError:
            raise PolynomialFormatError(f"bad exponent {part!r} in {text!r}") from None
        if exp < 0:
            raise PolynomialFormatError(f"negative exponent in {text!r}")
        if mask >> exp & 1:
            raise PolynomialFormatError(f"repeated exponent {exp} in {text!r}")
        mask |= 1 << exp
    return mask


def format_poly(mask: int) -> str:
    """Render a polynomial bitmask as a descending exponent list ("3,1,0")."""
    if mask <= 0:
        raise PolynomialFormatError("cannot format the zero polynomial")
    return ",".join(str(i) for i in range(mask.bit_length() - 1, -1, -1) if mask >> i & 1)


def _clmul(a: int, b: int) -> int:
    # carry-less product of two GF(2)[x] polynomials
    r = 0
    while b:
        lsb = b & -b
        r ^= a << (lsb.bit_length() - 1)
        b ^= lsb
    return r


def _polymod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    da = a.bit_length() - 1
    while da >= df and a:
        a ^= f << (da - df)
        da = a.bit_length() - 1
    return a


def _polymulmod(a: int, b: int, f: int) -> int:
    return _polymod(_clmul(a, b), f)


def _polypowmod(a: int, k: int, f: int) -> int:
    r = 1
    a = _polymod(a, f)
    while k:
        if k & 1:
            r = _polymulmod(r, a, f)
        a = _polymulmod(a, a, f)
        k >>= 1
    return r


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (adequate for n < 2^25)."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def is_irreducible(f: int) -> bool:
    """Whether f is irreducible over GF(2), via the Frobenius (Rabin) test."""
    m = f.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if not f & 1:  # divisible by x
        return False
    u = 2  # the polynomial x
    for _ in range(m):
        u = _polymulmod(u, u, f)
    if u != 2:
        return False
    for p in prime_factors(m):
        u = 2
        for _ in range(m // p):
            u = _polymulmod(u, u, f)
        if _polygcd(u ^ 2, f) != 1:
            return False
    return True


def is_primitive(f: int) -> bool:
    """Whether the root of an irreducible f generates the multiplicative group.

    Checks x^((2^m - 1)/p) != 1 mod f for every prime divisor p of 2^m - 1.
    """
    m = f.bit_length() - 1
    n = (1 << m) - 1
    for p in prime_factors(n):
        if _polypowmod(2, n // p, f) == 1:
            return False
    return True


def find_primitive_polynomials(m: int, count: int) -> list[int]:
    """Up to `count` primitive polynomials of degree m, smallest bitmasks first.

    Returns fewer than `count` when GF(2^m) has fewer primitive polynomials
    (m = 3 and m = 4 have only two each; m = 2 has one).
    """
    if not MIN_DEGREE <= m <= MAX_DEGREE:
        raise DegreeOutOfRange(f"m={m} outside {MIN_DEGREE}..{MAX_DEGREE}")
    found = []
    for mask in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(mask) and is_primitive(mask):
            found.append(mask)
            if len(found) == count:
                break
    return found


class GF2m:
    """GF(2^m) with a verified primitive modulus.

    Immutable after construction; all operations are pure.  Elements are
    ints in [0, 2^m), bit i holding the coefficient of pi^i.
    """

    __slots__ = ("m", "modulus", "n", "_trace_mask")

    def __init__(self, m: int, poly: int | None = None):
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise DegreeOutOfRange(f"m={m} outside {MIN_DEGREE}..{MAX_DEGREE}")
        if poly is None:
            try:
                poly = PRIMITIVE_POLYS[m]
            except KeyError:
                raise DegreeOutOfRange(
                    f"no built-in primitive polynomial for m={m}; supply one"
                ) from None
        if poly.bit_length() - 1 != m:
            raise DegreeMismatch(
                f"polynomial {format_poly(poly)} has degree {poly.bit_length() - 1}, expected {m}"
            )
        if not is_irreducible(poly):
            raise NotIrreducible(format_poly(poly))
        if not is_primitive(poly):
            raise NotPrimitive(format_poly(poly))
        self.m = m
        self.modulus = poly
        self.n = (1 << m) - 1
        self._trace_mask = self._basis_traces()

    def _basis_traces(self) -> int:
        # t_i = T(pi^i) by the defining sum of m-1 successive squarings
        mask = 0
        for i in range(self.m):
            cur = 1 << i
            acc = cur
            for _ in range(self.m - 1):
                cur = _polymulmod(cur, cur, self.modulus)
                acc ^= cur
            if acc not in (0, 1):
                raise NotIrreducible(format_poly(self.modulus))
            mask |= acc << i
        return mask

    def mul(self, a: int, b: int) -> int:
        """Product a*b in GF(2^m)."""
        return _polymulmod(a, b, self.modulus)

    def pow(self, a: int, k: int) -> int:
        """a^k by square-and-multiply (0^0 = 1)."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return _polypowmod(a, k, self.modulus)

    def inv(self, a: int) -> int:
        """Multiplicative inverse, by exponentiation a^(2^m - 2)."""
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        return _polypowmod(a, self.n - 1, self.modulus)

    def trace(self, a: int) -> int:
        """T(a) in {0,1}, as an inner product against the precomputed basis traces."""
        return (a & self._trace_mask).bit_count() & 1

    def expand_inverse_one_plus_pi_tau(self, tau: int) -> tuple[int, tuple[int, ...]]:
        """Basis expansion of (1 + pi^tau)^-1 as (e, (b_0, ..., b_(e-1))).

        e is the top nonzero index of the expansion (1 <= e <= m-1); the
        coefficient of pi^e is implicitly 1.
        """
        if not 1 <= tau <= self.n - 1:
            raise TauOutOfRange(f"tau={tau} outside 1..{self.n - 1}")
        el = self.inv(self.pow(2, tau) ^ 1)
        e = el.bit_length() - 1
        return e, tuple(el >> i & 1 for i in range(e))

    def __eq__(self, other):
        if not isinstance(other, GF2m):
            return NotImplemented
        return self.m == other.m and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return f"GF2m(m={self.m}, poly={format_poly(self.modulus)})"


def make_field(m: int, poly: int | None = None) -> GF2m:
    """Build a GF(2^m) context, validating irreducibility and primitivity."""
    return GF2m(m, poly)
