"""Exact q^2-analog combinatorial kernel.

Everything here is computed with arbitrary-precision rationals
(`fractions.Fraction`); there is no floating point anywhere in this
package.  The central objects are the Gaussian coefficients at base q^2,
the gamma and beta product functions built from them, and the census
count of alternating matrices by skew rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, p prime; raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power (need q >= 2)")
    n = q
    p = None
    for cand in range(2, n + 1):
        if cand * cand > n:
            p = n
            break
        if n % cand == 0:
            p = cand
            break
    assert p is not None
    e = 0
    while n > 1:
        if n % p != 0:
            raise ValueError(f"q={q} is not a prime power")
        n //= p
        e += 1
    return p, e


def is_prime_power(q: int) -> bool:
    try:
        factor_prime_power(q)
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class SchemeParams:
    """Parameters (q, t) of the space of t x t alternating matrices over F_q.

    Derived: n = floor(t/2) is the maximum skew rank, and m = t(t-1)/(2n),
    which is t-1 for even t and t for odd t.  Every formula in the package
    is driven by these four numbers.
    """

    q: int
    t: int

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError(f"t={self.t} must be >= 2")
        factor_prime_power(self.q)  # raises if q is not a prime power

    @property
    def n(self) -> int:
        return self.t // 2

    @property
    def m(self) -> int:
        return self.t * (self.t - 1) // (2 * self.n)

    @property
    def num_coords(self) -> int:
        """Dimension t(t-1)/2 of the ambient space (= n*m)."""
        return self.t * (self.t - 1) // 2


def _qpow(q: int, e: int) -> Fraction:
    """q**e as an exact rational, for any integer exponent."""
    if e >= 0:
        return Fraction(q**e)
    return Fraction(1, q ** (-e))


def gauss(q: int, x: int, k: int) -> Fraction:
    """Gaussian coefficient [x choose k] at base q^2.

    prod_{i<k} (q^{2x} - q^{2i}) / (q^{2k} - q^{2i}).  Empty product is 1.
    Zero for integer 0 <= x < k; negative x yields nonzero rationals.
    """
    if k < 0:
        raise ValueError(f"k={k} must be >= 0")
    if 0 <= x < k:
        return Fraction(0)
    num = Fraction(1)
    den = 1
    qx = _qpow(q, 2 * x)
    for i in range(k):
        q2i = q ** (2 * i)
        num *= qx - q2i
        den *= q ** (2 * k) - q2i
    return num / den


def gamma(q: int, x: int, k: int) -> Fraction:
    """prod_{i<k} (q^x - q^{2i}); 1 for k = 0."""
    if k < 0:
        raise ValueError(f"k={k} must be >= 0")
    qx = _qpow(q, x)
    out = Fraction(1)
    for i in range(k):
        out *= qx - q ** (2 * i)
    return out


def beta(q: int, x: int, k: int) -> Fraction:
    """prod_{i<k} [x-i choose 1]; 1 for k = 0."""
    if k < 0:
        raise ValueError(f"k={k} must be >= 0")
    out = Fraction(1)
    for i in range(k):
        out *= gauss(q, x - i, 1)
    return out


def sigma(i: int) -> int:
    """Triangular number i(i-1)/2."""
    if i < 0:
        raise ValueError(f"i={i} must be >= 0")
    return i * (i - 1) // 2


def xi(params: SchemeParams, s: int) -> int:
    """Number of t x t alternating matrices over F_q with skew rank s.

    Carlitz product form; 0 outside 0 <= s <= n.  Always a nonnegative
    integer (asserted, not assumed).
    """
    if s < 0 or s > params.n:
        return 0
    q, t = params.q, params.t
    num = q ** (2 * sigma(s))
    for i in range(2 * s):
        num *= q ** (t - i) - 1
    den = 1
    for i in range(1, s + 1):
        den *= q ** (2 * i) - 1
    count, rem = divmod(num, den)
    assert rem == 0 and count >= 0, f"xi({params}, {s}) is not a nonnegative integer"
    return count
