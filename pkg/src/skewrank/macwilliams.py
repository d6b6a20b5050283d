"""The MacWilliams identity by two independent routes, plus a cross-checker.

Route one multiplies the weight distribution by the Krawtchouk eigenmatrix;
route two substitutes (X + (q^m - 1)Y, X - Y) into the skew-q-transform of
the weight enumerator and reads the coefficients off at lambda = m.  The
verifier runs both against the brute-force dual enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .gfcodes import LinearCode, WeightDist, dual, weight_distribution
from .homopoly import HPoly, mu_power, nu_power, skew_q_product
from .krawtchouk import p_matrix
from .qcombinat import SchemeParams


def _as_counts(w: WeightDist | list[int] | tuple[int, ...],
               params: SchemeParams) -> tuple[int, ...]:
    if isinstance(w, WeightDist):
        if w.params != params:
            raise ValueError("distribution and params disagree")
        return w.counts
    counts = tuple(int(c) for c in w)
    if len(counts) != params.n + 1:
        raise ValueError(f"distribution must have length {params.n + 1}")
    return counts


def _finalize(raw: list[Fraction], code_size: int,
              params: SchemeParams) -> WeightDist:
    counts = []
    for k, val in enumerate(raw):
        val = val / code_size
        if val.denominator != 1 or val < 0:
            raise ValueError(
                f"transform output entry {k} is {val}, not a nonnegative "
                f"integer; the input distribution is inconsistent"
            )
        counts.append(int(val))
    return WeightDist(params, tuple(counts))


def transform_matrix(w: WeightDist | list[int], code_size: int,
                     params: SchemeParams) -> WeightDist:
    """Dual distribution via the eigenmatrix: c' = (1/|C|) c P."""
    counts = _as_counts(w, params)
    if sum(counts) != code_size:
        raise ValueError(
            f"distribution sums to {sum(counts)}, not the stated size "
            f"{code_size}"
        )
    raw = p_matrix(params).transform(list(counts))
    return _finalize(raw, code_size, params)


@lru_cache(maxsize=None)
def _transform_basis(q: int, n: int, i: int) -> HPoly:
    """nu^[i] * mu^[n-i], the image of Y^i X^{n-i} under the transform."""
    return skew_q_product(nu_power(q, i), mu_power(q, n - i))


def transform_functional(w: WeightDist | list[int], code_size: int,
                         params: SchemeParams) -> WeightDist:
    """Dual distribution via the functional route.

    Builds sum_i c_i nu^[i] * mu^[n-i] over the lambda ring, instantiates
    lambda = m, and divides by the code size.  Must agree exactly with
    transform_matrix; the two are computed independently.
    """
    counts = _as_counts(w, params)
    if sum(counts) != code_size:
        raise ValueError(
            f"distribution sums to {sum(counts)}, not the stated size "
            f"{code_size}"
        )
    q, n, m = params.q, params.n, params.m
    raw = [Fraction(0)] * (n + 1)
    for i, c in enumerate(counts):
        if c == 0:
            continue
        basis = _transform_basis(q, n, i)
        for k in range(n + 1):
            val = basis.coefficient(k).eval_lambda(m)
            if val:
                raw[k] += c * val
    return _finalize(raw, code_size, params)


@dataclass(frozen=True)
class VerifyReport:
    """Three-way MacWilliams cross-check for one code."""

    params: SchemeParams
    k: int
    dual_k: int
    dist: WeightDist
    dual_dist_enum: WeightDist
    dual_dist_matrix: WeightDist
    dual_dist_functional: WeightDist
    size_product_ok: bool

    @property
    def mismatches(self) -> list[tuple[int, int, int, int]]:
        """(index, enum, matrix, functional) wherever the routes disagree."""
        out = []
        for i in range(self.params.n + 1):
            a = self.dual_dist_enum.counts[i]
            b = self.dual_dist_matrix.counts[i]
            c = self.dual_dist_functional.counts[i]
            if not (a == b == c):
                out.append((i, a, b, c))
        return out

    @property
    def verdict(self) -> bool:
        return self.size_product_ok and not self.mismatches

    def to_dict(self) -> dict:
        return {
            "q": self.params.q,
            "t": self.params.t,
            "k": self.k,
            "dual_k": self.dual_k,
            "dist": [str(c) for c in self.dist.counts],
            "dual_enum": [str(c) for c in self.dual_dist_enum.counts],
            "dual_matrix": [str(c) for c in self.dual_dist_matrix.counts],
            "dual_functional": [
                str(c) for c in self.dual_dist_functional.counts
            ],
            "size_product_ok": self.size_product_ok,
            "mismatches": [list(m) for m in self.mismatches],
            "verdict": self.verdict,
        }


def verify_code(code: LinearCode, budget: int | None = None) -> VerifyReport:
    """Run all three dual-distribution routes and compare them entrywise."""
    from .gfcodes import DEFAULT_BUDGET

    budget = DEFAULT_BUDGET if budget is None else budget
    params = code.params
    w = weight_distribution(code, budget)
    dcode = dual(code)
    w_enum = weight_distribution(dcode, budget)
    w_mat = transform_matrix(w, code.size, params)
    w_fun = transform_functional(w, code.size, params)
    size_ok = code.size * dcode.size == params.q ** (params.m * params.n)
    return VerifyReport(
        params=params,
        k=code.k,
        dual_k=dcode.k,
        dist=w,
        dual_dist_enum=w_enum,
        dual_dist_matrix=w_mat,
        dual_dist_functional=w_fun,
        size_product_ok=size_ok,
    )
