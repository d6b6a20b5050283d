"""Moment identities of the skew rank distribution and MSRD machinery.

The two moment propositions relate alternating-sum statistics of a code's
distribution to its dual's; the delta/epsilon lemmas are the closed forms
that make them work; the triangular inversion recovers MSRD distributions
from the simplified first moments.  A seeded randomized search looks for
codes attaining the Singleton-type bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .gfcodes import (
    DEFAULT_BUDGET,
    EnumerationBudgetError,
    FieldSpec,
    LinearCode,
    SchemeParams,
    WeightDist,
    _rank_from_coords,
    full_space_code,
    make_field,
    min_distance,
    rank_table,
    weight_distribution,
)
from .qcombinat import _qpow, gamma, gauss, sigma


def _gauss0(q: int, x: int, k: int) -> Fraction:
    """Gaussian coefficient extended by 0 for negative k."""
    if k < 0:
        return Fraction(0)
    return gauss(q, x, k)


# ---------------------------------------------------------------------------
# moment identities
# ---------------------------------------------------------------------------


def check_first_moment(
    w: WeightDist, w_dual: WeightDist, phi: int, params: SchemeParams
) -> tuple[Fraction, Fraction]:
    """Both sides of the first moment identity; the caller asserts equality.

    lhs = sum_{i<=n-phi} [n-i, phi] c_i,
    rhs = q^{m(n-phi)}/|C'| * sum_{i<=phi} [n-i, n-phi] c'_i.
    """
    q, n, m = params.q, params.n, params.m
    if not 0 <= phi <= n:
        raise ValueError(f"phi={phi} out of range 0..{n}")
    if w.size * w_dual.size != q ** (m * n):
        raise ValueError("sizes do not multiply to the whole space")
    lhs = sum(
        (gauss(q, n - i, phi) * w.counts[i] for i in range(n - phi + 1)),
        Fraction(0),
    )
    rhs = sum(
        (gauss(q, n - i, n - phi) * w_dual.counts[i] for i in range(phi + 1)),
        Fraction(0),
    )
    rhs *= Fraction(q ** (m * (n - phi)), w_dual.size)
    return lhs, rhs


def check_second_moment(
    w: WeightDist,
    w_dual: WeightDist,
    phi: int,
    k_dim: int,
    params: SchemeParams,
) -> tuple[Fraction, Fraction]:
    """Both sides of the second moment identity.

    lhs = sum_{i>=phi} q^{2 phi (n-i)} [i, phi] c_i,
    rhs = q^{k - m phi} sum_{i<=phi} (-1)^i q^{2 sigma_i + 2i(phi-i)}
          [n-i, n-phi] gamma(m-2i, phi-i) c'_i.
    """
    q, n, m = params.q, params.n, params.m
    if not 0 <= phi <= n:
        raise ValueError(f"phi={phi} out of range 0..{n}")
    if q**k_dim != w.size:
        raise ValueError(f"q^{k_dim} != code size {w.size}")
    lhs = sum(
        (
            q ** (2 * phi * (n - i)) * gauss(q, i, phi) * w.counts[i]
            for i in range(phi, n + 1)
        ),
        Fraction(0),
    )
    rhs = Fraction(0)
    for i in range(phi + 1):
        rhs += (
            (-1) ** i
            * q ** (2 * sigma(i) + 2 * i * (phi - i))
            * gauss(q, n - i, n - phi)
            * gamma(q, m - 2 * i, phi - i)
            * w_dual.counts[i]
        )
    rhs *= _qpow(q, k_dim - m * phi)
    return lhs, rhs


@dataclass(frozen=True)
class MomentCheck:
    name: str
    phi: int
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def corollary_bounds(
    w: WeightDist,
    params: SchemeParams,
    d_dual: int | None,
    diameter_dual: int,
) -> list[MomentCheck]:
    """Dual-free simplifications of both moments.

    d_dual is the dual minimum distance (None for the zero-code dual, where
    every phi qualifies); diameter_dual bounds the second clause.  Only the
    primal distribution is consulted.
    """
    q, n, m = params.q, params.n, params.m
    size = w.size
    whole = q ** (m * n)
    if whole % size:
        raise ValueError("code size does not divide the whole space")
    dual_size = whole // size
    k_dim = 0
    while q**k_dim < size:
        k_dim += 1
    if q**k_dim != size:
        raise ValueError(f"code size {size} is not a power of q={q}")

    checks: list[MomentCheck] = []
    for phi in range(n + 1):
        if d_dual is None or phi < d_dual:
            lhs = sum(
                (gauss(q, n - i, phi) * w.counts[i] for i in range(n - phi + 1)),
                Fraction(0),
            )
            rhs = Fraction(q ** (m * (n - phi)), dual_size) * gauss(q, n, phi)
            checks.append(MomentCheck("first_moment_low_phi", phi, lhs, rhs))
            lhs2 = sum(
                (
                    q ** (2 * phi * (n - i)) * gauss(q, i, phi) * w.counts[i]
                    for i in range(phi, n + 1)
                ),
                Fraction(0),
            )
            rhs2 = (
                _qpow(q, k_dim - m * phi) * gauss(q, n, phi) * gamma(q, m, phi)
            )
            checks.append(MomentCheck("second_moment_low_phi", phi, lhs2, rhs2))
        if diameter_dual < phi <= n:
            lhs3 = Fraction(0)
            for i in range(phi + 1):
                lhs3 += (
                    (-1) ** i
                    * q ** (2 * sigma(i) + 2 * i * (phi - i))
                    * gauss(q, n - i, n - phi)
                    * gamma(q, m - 2 * i, phi - i)
                    * w.counts[i]
                )
            checks.append(
                MomentCheck("second_moment_high_phi", phi, lhs3, Fraction(0))
            )
    return checks


# ---------------------------------------------------------------------------
# closed-form lemmas
# ---------------------------------------------------------------------------


def delta_closed(q: int, lam: int, phi: int, j: int) -> Fraction:
    """sum_i [j,i] (-1)^i q^{2 sigma_i} gamma(lam-2i, phi), with its closed form.

    Asserts the sum equals gamma(2 phi, j) gamma(lam-2j, phi-j) q^{j(lam-2j)}
    and returns the value.
    """
    if phi < 0 or j < 0:
        raise ValueError("phi and j must be >= 0")
    total = sum(
        (
            gauss(q, j, i) * (-1) ** i * q ** (2 * sigma(i))
            * gamma(q, lam - 2 * i, phi)
            for i in range(j + 1)
        ),
        Fraction(0),
    )
    lead = gamma(q, 2 * phi, j)
    if lead == 0:
        closed = Fraction(0)
    else:
        closed = lead * gamma(q, lam - 2 * j, phi - j) * _qpow(q, j * (lam - 2 * j))
    assert total == closed, (
        f"delta({lam},{phi},{j}) mismatch: sum {total}, closed {closed}"
    )
    return total


def epsilon_closed(q: int, lam_big: int, phi: int, i: int) -> Fraction:
    """The epsilon alternating sum with its closed form.

    Asserts sum_l [i,l][lam_big-i, phi-l] q^{2l(lam_big-phi)} (-1)^l
    q^{2 sigma_l} gamma(2(phi-l), i-l) equals
    (-1)^i q^{2 sigma_i} [lam_big-i, lam_big-phi], and returns the value.
    """
    if phi < 0 or i < 0:
        raise ValueError("phi and i must be >= 0")
    total = Fraction(0)
    for l in range(i + 1):
        g2 = _gauss0(q, lam_big - i, phi - l)
        if g2 == 0:
            continue
        total += (
            gauss(q, i, l)
            * g2
            * _qpow(q, 2 * l * (lam_big - phi))
            * (-1) ** l
            * q ** (2 * sigma(l))
            * gamma(q, 2 * (phi - l), i - l)
        )
    closed = (
        (-1) ** i * q ** (2 * sigma(i)) * _gauss0(q, lam_big - i, lam_big - phi)
    )
    assert total == closed, (
        f"epsilon({lam_big},{phi},{i}) mismatch: sum {total}, closed {closed}"
    )
    return total


# ---------------------------------------------------------------------------
# triangular inversion and MSRD distributions
# ---------------------------------------------------------------------------


def forward_sequence(b: list[Fraction], l: int, q: int) -> list[Fraction]:
    """a_j = sum_{i<=j} [l-i, l-j] b_i for 0 <= j <= l."""
    if len(b) != l + 1:
        raise ValueError(f"need {l + 1} values, got {len(b)}")
    return [
        sum((gauss(q, l - i, l - j) * b[i] for i in range(j + 1)), Fraction(0))
        for j in range(l + 1)
    ]


def invert_sequence(a: list[Fraction], l: int, q: int) -> list[Fraction]:
    """b_i = sum_{j<=i} (-1)^{i-j} q^{2 sigma_{i-j}} [l-j, l-i] a_j."""
    if len(a) != l + 1:
        raise ValueError(f"need {l + 1} values, got {len(a)}")
    return [
        sum(
            (
                (-1) ** (i - j)
                * q ** (2 * sigma(i - j))
                * gauss(q, l - j, l - i)
                * a[j]
                for j in range(i + 1)
            ),
            Fraction(0),
        )
        for i in range(l + 1)
    ]


def msrd_distribution(params: SchemeParams, d: int) -> WeightDist:
    """Weight distribution forced on any linear code attaining the bound.

    d = n+1 encodes the zero code (the dual edge of d = 1).  The counts sum
    to q^{m(n-d+1)} and are asserted to be nonnegative integers.
    """
    q, n, m = params.q, params.n, params.m
    if not 1 <= d <= n + 1:
        raise ValueError(f"d={d} out of range 1..{n + 1}")
    size = q ** (m * (n - d + 1))
    counts = [0] * (n + 1)
    counts[0] = 1
    for r in range(n - d + 1):
        val = Fraction(0)
        for i in range(r + 1):
            val += (
                (-1) ** (r - i)
                * q ** (2 * sigma(r - i))
                * gauss(q, d + r, d + i)
                * gauss(q, n, d + r)
                * (size * _qpow(q, m * (d + i - n)) - 1)
            )
        assert val.denominator == 1 and val >= 0, (
            f"msrd coefficient c_{d + r} = {val} is not a nonnegative integer"
        )
        counts[d + r] = int(val)
    dist = WeightDist(params, tuple(counts))
    assert dist.size == size, f"msrd distribution sums to {dist.size}, not {size}"
    return dist


def find_msrd(
    params: SchemeParams,
    d: int,
    budget: int = 20000,
    seed: int = 0,
    field: FieldSpec | None = None,
    enum_budget: int = DEFAULT_BUDGET,
) -> LinearCode | None:
    """Seeded randomized search for a code attaining the Singleton-type bound.

    Greedy basis growth with early rejection: a candidate matrix joins the
    basis only if every word it adds to the span keeps skew rank >= d.
    Returns None once `budget` candidate samples are spent (existence is a
    property of the parameters, not of this search).
    """
    q, n, m = params.q, params.n, params.m
    if not 1 <= d <= n:
        raise ValueError(f"d={d} out of range 1..{n}")
    field = field or make_field(q)
    k_target = m * (n - d + 1)
    if q**k_target > enum_budget:
        raise EnumerationBudgetError(
            f"target code size q^{k_target} exceeds the enumeration budget"
        )
    if d == 1:
        return full_space_code(params, field)

    ncoords = params.num_coords
    tbl = rank_table(params, field)

    def rank_of(word: tuple[int, ...]) -> int:
        if tbl is not None:
            idx = 0
            for v in reversed(word):
                idx = idx * q + v
            return tbl[idx]
        return _rank_from_coords(word, params, field)

    rng = random.Random(seed)
    add, mul = field.add, field.mul
    samples = 0
    while samples < budget:
        basis: list[tuple[int, ...]] = []
        span: list[tuple[int, ...]] = [tuple([0] * ncoords)]
        stuck = 0
        while len(basis) < k_target and samples < budget:
            cand = tuple(rng.randrange(q) for _ in range(ncoords))
            samples += 1
            if not any(cand):
                continue
            scaled = [tuple(mul(c, v) for v in cand) for c in range(1, q)]
            new_words = [
                tuple(add(a, b) for a, b in zip(w, s))
                for s in scaled
                for w in span
            ]
            if all(rank_of(w) >= d for w in new_words):
                basis.append(cand)
                span += new_words
                stuck = 0
            else:
                stuck += 1
                if stuck > 250:
                    break  # restart from scratch
        if len(basis) == k_target:
            code = LinearCode.from_spanning(params, field, basis)
            assert code.k == k_target
            assert min_distance(code, enum_budget) == d
            return code
    return None


def is_msrd(code: LinearCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Does the code attain |C| = q^{m(n - d + 1)} for its own min distance?"""
    if code.k == 0:
        return True  # the d = n+1 edge
    params = code.params
    d = min_distance(code, budget)
    return code.size == params.q ** (params.m * (params.n - d + 1))
