"""Generalized Krawtchouk polynomials and the (n+1) x (n+1) eigenmatrix.

Three routes to the same numbers: the generic two-parameter form P_k(x,y)
over an arbitrary rational base b, its specialization at b = q^2 (`skew_p`),
and the explicit alternating-sum form `skew_c`.  The matrix P with entries
P_k(x,n) transforms weight distributions to dual weight distributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .qcombinat import SchemeParams, gamma, gauss


def gauss_base(b: Fraction, x: int, k: int) -> Fraction:
    """Gaussian coefficient prod_{i<k} (b^x - b^i)/(b^k - b^i) at rational base b."""
    if k < 0:
        raise ValueError(f"k={k} must be >= 0")
    if 0 <= x < k:
        return Fraction(0)
    out = Fraction(1)
    for i in range(k):
        out *= (b**x - b**i) / (b**k - b**i)
    return out


def generalized_p(
    b: Fraction | int, c: Fraction | int, k: int, x: int, y: int
) -> Fraction:
    """Two-parameter Krawtchouk value P_k(x,y) for rational b >= 1, c > 1/b."""
    b = Fraction(b)
    c = Fraction(c)
    if b < 1 or c * b <= 1:
        raise ValueError(f"need b >= 1 and c > 1/b, got b={b}, c={c}")
    if not (0 <= x <= y and 0 <= k <= y):
        raise ValueError(f"x={x}, k={k} must lie in 0..y={y}")
    cby = c * b**y
    out = Fraction(0)
    for j in range(k + 1):
        term = (
            (-1) ** (k - j)
            * cby**j
            * b ** comb(k - j, 2)
            * gauss_base(b, y - j, y - k)
            * gauss_base(b, y - x, j)
        )
        out += term
    return out


def skew_p(params: SchemeParams, k: int, x: int) -> int:
    """P_k(x,n) specialized to b = q^2: alternating sum with q^{jm} weights."""
    n, m, q = params.n, params.m, params.q
    if not (0 <= x <= n and 0 <= k <= n):
        raise ValueError(f"x={x}, k={k} must lie in 0..n={n}")
    out = Fraction(0)
    for j in range(k + 1):
        out += (
            (-1) ** (k - j)
            * q ** (2 * comb(k - j, 2))
            * gauss(q, n - j, n - k)
            * gauss(q, n - x, j)
            * q ** (j * m)
        )
    assert out.denominator == 1, f"skew_p({params}, {k}, {x}) not an integer"
    return int(out)


def skew_c(params: SchemeParams, k: int, x: int) -> int:
    """Explicit form: sum_j (-1)^j q^{2j(n-x)+j(j-1)} [x,j][n-x,k-j] gamma(m-2j,k-j)."""
    n, m, q = params.n, params.m, params.q
    if not (0 <= x <= n and 0 <= k <= n):
        raise ValueError(f"x={x}, k={k} must lie in 0..n={n}")
    out = Fraction(0)
    for j in range(k + 1):
        g1 = gauss(q, x, j)
        g2 = gauss(q, n - x, k - j)
        if g1 == 0 or g2 == 0:
            continue
        out += (
            (-1) ** j
            * Fraction(q) ** (2 * j * (n - x) + j * (j - 1))
            * g1
            * g2
            * gamma(q, m - 2 * j, k - j)
        )
    assert out.denominator == 1, f"skew_c({params}, {k}, {x}) not an integer"
    return int(out)


def matched_bc(params: SchemeParams) -> tuple[Fraction, Fraction]:
    """The (b, c) for which generalized_p reproduces skew_p: b = q^2, c = q^{m-2n}."""
    q = params.q
    e = params.m - 2 * params.n
    c = Fraction(q) ** e
    return Fraction(q * q), c


@dataclass(frozen=True)
class KrawtchoukMatrix:
    """Eigenmatrix with entries[x][k] = P_k(x, n); all integers."""

    params: SchemeParams
    entries: tuple[tuple[int, ...], ...]

    def row(self, x: int) -> tuple[int, ...]:
        return self.entries[x]

    def transform(self, dist: list[int]) -> list[Fraction]:
        """Row vector times matrix: out_k = sum_x dist[x] * P_k(x,n)."""
        n = self.params.n
        if len(dist) != n + 1:
            raise ValueError(f"distribution must have length {n + 1}")
        return [
            sum((Fraction(dist[x]) * self.entries[x][k] for x in range(n + 1)),
                Fraction(0))
            for k in range(n + 1)
        ]


def p_matrix(params: SchemeParams) -> KrawtchoukMatrix:
    n = params.n
    rows = tuple(
        tuple(skew_p(params, k, x) for k in range(n + 1)) for x in range(n + 1)
    )
    return KrawtchoukMatrix(params, rows)
