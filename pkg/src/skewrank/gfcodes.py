"""Finite-field core: GF(q) arithmetic, alternating matrices, codes.

A t x t alternating matrix is stored as its strict upper triangle, a
vector of t(t-1)/2 field elements in row-major position order
(1,2),(1,3),...,(1,t),(2,3),...,(t-1,t).  The diagonal is zero in every
characteristic, so the upper triangle determines the matrix.

Field elements are encoded as integers 0..q-1; for q = p^e the base-p
digits of the integer are the polynomial coordinates, low degree first.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

from .qcombinat import SchemeParams, factor_prime_power

DEFAULT_BUDGET = 1 << 26
_RANK_TABLE_CAP = 1 << 20
_MATERIALIZE_CAP = 1 << 20

# Irreducible moduli over F_p for the built-in non-prime fields,
# coefficients low degree first.
_BUILTIN_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),        # x^2 + x + 1 over F_2
    8: (1, 1, 0, 1),     # x^3 + x + 1 over F_2
    9: (1, 0, 1),        # x^2 + 1 over F_3
}
_MAX_PRIME = 97
_SUPPORTED_MSG = (
    "supported q: primes up to 97, and prime powers 4, 8, 9 "
    "(other prime powers need an explicit irreducible modulus)"
)


class CodeFormatError(ValueError):
    """Malformed code file."""


class EnumerationBudgetError(RuntimeError):
    """A requested enumeration exceeds the configured budget."""


# ---------------------------------------------------------------------------
# field arithmetic
# ---------------------------------------------------------------------------


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...],
                  modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i in range(e):
                prod[d - e + i] = (prod[d - e + i] - c * modulus[i]) % p
    out = prod[:e]
    out += [0] * (e - len(out))
    return tuple(out)


def _poly_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Brute-force irreducibility of a monic polynomial over F_p."""
    e = len(modulus) - 1
    if e < 1 or modulus[-1] != 1:
        return False

    def divides(div: tuple[int, ...]) -> bool:
        rem = list(modulus)
        dd = len(div) - 1
        inv_lead = pow(div[-1], -1, p)
        for d in range(len(rem) - 1, dd - 1, -1):
            c = (rem[d] * inv_lead) % p
            if c:
                for i in range(dd + 1):
                    rem[d - dd + i] = (rem[d - dd + i] - c * div[i]) % p
        return not any(rem[:dd])

    for deg in range(1, e // 2 + 1):
        for idx in range(p**deg):
            coeffs = []
            v = idx
            for _ in range(deg):
                coeffs.append(v % p)
                v //= p
            coeffs.append(1)
            if divides(tuple(coeffs)):
                return False
    return True


class FieldSpec:
    """Arithmetic tables for GF(q), q = p^e."""

    __slots__ = ("p", "e", "q", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, q: int, modulus: tuple[int, ...] | None = None):
        p, e = factor_prime_power(q)
        self.p = p
        self.e = e
        self.q = q
        if e == 1:
            if modulus is not None:
                raise ValueError(f"q={q} is prime; no modulus applies")
            self.modulus = None
        else:
            if modulus is None:
                raise ValueError(f"q={q} needs an irreducible modulus")
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) == e:  # leading 1 left implicit
                modulus = modulus + (1,)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {e} over F_{p}"
                )
            if not _poly_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus
        self._build_tables()
        self._spot_check()

    def _digits(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def _from_digits(self, digs: tuple[int, ...]) -> int:
        v = 0
        for d in reversed(digs):
            v = v * self.p + d
        return v

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        if self.e == 1:
            self._add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            digs = [self._digits(v) for v in range(q)]
            self._add = [
                [
                    self._from_digits(
                        tuple((x + y) % p for x, y in zip(digs[a], digs[b]))
                    )
                    for b in range(q)
                ]
                for a in range(q)
            ]
            self._mul = [
                [
                    self._from_digits(_poly_mul_mod(digs[a], digs[b],
                                                    self.modulus, p))
                    for b in range(q)
                ]
                for a in range(q)
            ]
        self._neg = [0] * q
        for a in range(q):
            for b in range(q):
                if self._add[a][b] == 0:
                    self._neg[a] = b
                    break
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break

    def _spot_check(self) -> None:
        q = self.q
        for a in range(1, q):
            assert self._mul[a][self._inv[a]] == 1, f"no inverse for {a} in GF({q})"
            assert self._add[a][self._neg[a]] == 0
        assert all(self._mul[1][b] == b for b in range(q))

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def table_key(self) -> tuple:
        return (self.q, self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.q})"


_FIELD_CACHE: dict[tuple, FieldSpec] = {}


def make_field(q: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """GF(q) for prime q <= 97 or built-in prime powers {4, 8, 9}.

    Other prime powers are accepted only with an explicit irreducible
    modulus; anything else is rejected naming the supported set.
    """
    try:
        p, e = factor_prime_power(q)
    except ValueError:
        raise ValueError(f"q={q} is not a prime power; {_SUPPORTED_MSG}") from None
    if q > _MAX_PRIME:
        raise ValueError(f"q={q} is too large; {_SUPPORTED_MSG}")
    if e > 1 and modulus is None:
        if q not in _BUILTIN_MODULI:
            raise ValueError(f"q={q} has no built-in modulus; {_SUPPORTED_MSG}")
        modulus = _BUILTIN_MODULI[q]
    key = (q, tuple(modulus) if modulus is not None else None)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FieldSpec(q, modulus)
        _FIELD_CACHE[(q, field.modulus)] = field
        _FIELD_CACHE[key] = field
    return field


# ---------------------------------------------------------------------------
# alternating matrices
# ---------------------------------------------------------------------------


def upper_positions(t: int) -> list[tuple[int, int]]:
    """Row-major strict-upper positions, 0-based."""
    return [(i, j) for i in range(t) for j in range(i + 1, t)]


class SkewMat:
    """Alternating t x t matrix over GF(q), stored as its upper triangle."""

    __slots__ = ("params", "field", "upper")

    def __init__(self, params: SchemeParams, field: FieldSpec,
                 upper: tuple[int, ...]):
        if field.q != params.q:
            raise ValueError("field and params disagree on q")
        if len(upper) != params.num_coords:
            raise ValueError(
                f"need {params.num_coords} entries, got {len(upper)}"
            )
        if any(not (0 <= v < field.q) for v in upper):
            raise ValueError("entry out of range for the field")
        self.params = params
        self.field = field
        self.upper = tuple(upper)

    def full_matrix(self) -> list[list[int]]:
        t = self.params.t
        a = [[0] * t for _ in range(t)]
        for (i, j), v in zip(upper_positions(t), self.upper):
            a[i][j] = v
            a[j][i] = self.field.neg(v)
        return a

    def is_zero(self) -> bool:
        return not any(self.upper)

    def add(self, other: "SkewMat") -> "SkewMat":
        f = self.field
        return SkewMat(
            self.params, f,
            tuple(f.add(a, b) for a, b in zip(self.upper, other.upper)),
        )

    def scale(self, c: int) -> "SkewMat":
        f = self.field
        return SkewMat(self.params, f, tuple(f.mul(c, v) for v in self.upper))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewMat):
            return NotImplemented
        return (
            self.params == other.params
            and self.field.table_key() == other.field.table_key()
            and self.upper == other.upper
        )

    def __hash__(self) -> int:
        return hash((self.params, self.field.table_key(), self.upper))

    def __repr__(self) -> str:
        return f"SkewMat(q={self.params.q}, t={self.params.t}, {self.upper})"


def _rank_of_rows(rows: list[list[int]], field: FieldSpec) -> int:
    """Rank by Gaussian elimination; mutates its argument."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    sub, mul, inv = field.sub, field.mul, field.inv
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        c = prow[col]
        if c != 1:
            ic = inv(c)
            rows[rank] = prow = [mul(ic, v) for v in prow]
        for r in range(rank + 1, nrows):
            c = rows[r][col]
            if c:
                rr = rows[r]
                rows[r] = [sub(a, mul(c, b)) for a, b in zip(rr, prow)]
        rank += 1
    return rank


def skew_rank(a: SkewMat) -> int:
    """Half the column rank of the full matrix; the rank is always even."""
    rank = _rank_of_rows(a.full_matrix(), a.field)
    assert rank % 2 == 0, f"alternating matrix with odd rank {rank}"
    return rank // 2


def _bilinear(a_full: list[list[int]], field: FieldSpec,
              x: list[int], y: list[int]) -> int:
    add, mul = field.add, field.mul
    out = 0
    for i, xi in enumerate(x):
        if xi:
            row = a_full[i]
            acc = 0
            for j, yj in enumerate(y):
                if yj and row[j]:
                    acc = add(acc, mul(row[j], yj))
            out = add(out, mul(xi, acc))
    return out


def canonical_decompose(a: SkewMat) -> tuple[list[list[int]], int]:
    """Nonsingular P with P A P^T = diag{E2 x s, 0} and s the skew rank.

    Symplectic reduction: repeatedly pick a hyperbolic pair from the
    complement and project the rest against it.
    """
    field = a.field
    t = a.params.t
    afull = a.full_matrix()
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv

    def b(x: list[int], y: list[int]) -> int:
        return _bilinear(afull, field, x, y)

    complement = [[1 if i == j else 0 for j in range(t)] for i in range(t)]
    pairs: list[list[int]] = []
    while True:
        pick = None
        for i in range(len(complement)):
            for j in range(i + 1, len(complement)):
                g = b(complement[i], complement[j])
                if g:
                    pick = (i, j, g)
                    break
            if pick:
                break
        if pick is None:
            break
        i, j, g = pick
        u = complement[i]
        ig = inv(g)
        v = [mul(ig, x) for x in complement[j]]
        rest = []
        for r, w in enumerate(complement):
            if r in (i, j):
                continue
            cu = b(u, w)
            cv = b(v, w)
            # w - B(u,w) v + B(v,w) u kills both pairings
            w2 = [
                add(add(wx, mul(neg(cu), vx)), mul(cv, ux))
                for wx, vx, ux in zip(w, v, u)
            ]
            rest.append(w2)
        pairs.extend([u, v])
        complement = rest

    p_rows = pairs + complement
    s = len(pairs) // 2

    # self-verifying postcondition: P A P^T is the canonical block form
    for i in range(t):
        for j in range(t):
            got = b(p_rows[i], p_rows[j])
            if i < 2 * s and j < 2 * s and j == i + 1 and i % 2 == 0:
                want = 1
            elif i < 2 * s and j < 2 * s and i == j + 1 and j % 2 == 0:
                want = neg(1)
            else:
                want = 0
            assert got == want, f"canonical form violated at ({i},{j})"
    return p_rows, s


# ---------------------------------------------------------------------------
# full-space rank tables (exhaustive enumeration backend)
# ---------------------------------------------------------------------------

_RANK_TABLES: dict[tuple, bytearray] = {}


def _pack(coords, q: int) -> int:
    idx = 0
    for v in reversed(coords):
        idx = idx * q + v
    return idx


def _rank_table_key(params: SchemeParams, field: FieldSpec) -> tuple:
    return (params.t, field.table_key())


def _build_rank_table(params: SchemeParams, field: FieldSpec) -> bytearray:
    """Skew rank of every matrix in the space, indexed by packed coords."""
    t = params.t
    ncoords = params.num_coords
    q = field.q
    size = q**ncoords
    table = bytearray(size)
    pos = upper_positions(t)
    if field.p == 2:
        # rows as bitmasks of digit vectors; elimination is pure XOR
        e = field.e
        for idx in range(size):
            rows = [0] * t
            v = idx
            for (i, j) in pos:
                c = v % q
                v //= q
                if c:
                    rows[i] |= c << (e * j)
                    rows[j] |= c << (e * i)
            # rank over GF(2^e) via generic elimination on digit-coded rows
            table[idx] = _rank_gf2e(rows, t, field) // 2
        return table
    for idx in range(size):
        rows = [[0] * t for _ in range(t)]
        v = idx
        for (i, j) in pos:
            c = v % q
            v //= q
            if c:
                rows[i][j] = c
                rows[j][i] = field.neg(c)
        table[idx] = _rank_of_rows(rows, field) // 2
    return table


def _rank_gf2e(rows: list[int], t: int, field: FieldSpec) -> int:
    """Rank of a matrix over GF(2^e) whose rows pack e bits per column."""
    e = field.e
    mask = (1 << e) - 1
    mul, inv = field.mul, field.inv
    rank = 0
    rows = list(rows)
    for col in range(t):
        sh = e * col
        piv = None
        for r in range(rank, t):
            if (rows[r] >> sh) & mask:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        c = (prow >> sh) & mask
        if c != 1:
            prow = _scale_row_gf2e(prow, inv(c), t, field)
            rows[rank] = prow
        for r in range(rank + 1, t):
            c = (rows[r] >> sh) & mask
            if c:
                rows[r] ^= prow if c == 1 else _scale_row_gf2e(prow, c, t, field)
        rank += 1
    return rank


def _scale_row_gf2e(row: int, c: int, t: int, field: FieldSpec) -> int:
    e = field.e
    mask = (1 << e) - 1
    mul = field.mul
    out = 0
    for col in range(t):
        v = (row >> (e * col)) & mask
        if v:
            out |= mul(c, v) << (e * col)
    return out


def rank_table(params: SchemeParams, field: FieldSpec) -> bytearray | None:
    """Cached full-space rank table, or None when the space is too large."""
    q = field.q
    if q**params.num_coords > _RANK_TABLE_CAP:
        return None
    key = _rank_table_key(params, field)
    tbl = _RANK_TABLES.get(key)
    if tbl is None:
        tbl = _build_rank_table(params, field)
        _RANK_TABLES[key] = tbl
    return tbl


def rank_census(params: SchemeParams, field: FieldSpec | None = None) -> list[int]:
    """Counts of matrices by skew rank over the whole space."""
    field = field or make_field(params.q)
    tbl = rank_table(params, field)
    counts = [0] * (params.n + 1)
    if tbl is not None:
        for r in tbl:
            counts[r] += 1
        return counts
    raise EnumerationBudgetError(
        f"full space q^{params.num_coords} exceeds the rank-table cap"
    )


# ---------------------------------------------------------------------------
# linear codes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightDist:
    """Counts of codewords by skew rank, indices 0..n."""

    params: SchemeParams
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.params.n + 1:
            raise ValueError(
                f"need {self.params.n + 1} counts, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")

    @property
    def size(self) -> int:
        return sum(self.counts)


def _rref(rows: list[list[int]], field: FieldSpec) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    sub, mul, inv = field.sub, field.mul, field.inv
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        c = prow[col]
        if c != 1:
            ic = inv(c)
            m[rank] = prow = [mul(ic, v) for v in prow]
        for r in range(nrows):
            if r != rank and m[r][col]:
                c = m[r][col]
                rr = m[r]
                m[r] = [sub(a, mul(c, b)) for a, b in zip(rr, prow)]
        pivots.append(col)
        rank += 1
    return m[:rank], pivots


class LinearCode:
    """F_q-linear code of alternating matrices, given by an independent basis."""

    __slots__ = ("params", "field", "basis")

    def __init__(self, params: SchemeParams, field: FieldSpec,
                 basis: tuple[SkewMat, ...]):
        rows = [list(b.upper) for b in basis]
        red, _ = _rref(rows, field)
        if len(red) != len(basis):
            raise ValueError("basis rows are linearly dependent")
        self.params = params
        self.field = field
        self.basis = tuple(basis)

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.q**self.k

    @classmethod
    def from_rows(cls, params: SchemeParams, field: FieldSpec,
                  rows: list[tuple[int, ...]]) -> "LinearCode":
        return cls(params, field,
                   tuple(SkewMat(params, field, tuple(r)) for r in rows))

    @classmethod
    def from_spanning(cls, params: SchemeParams, field: FieldSpec,
                      rows: list[tuple[int, ...]]) -> "LinearCode":
        """Reduce a spanning set to an independent basis (RREF form)."""
        red, _ = _rref([list(r) for r in rows], field)
        return cls.from_rows(params, field, [tuple(r) for r in red])

    def basis_rows(self) -> list[tuple[int, ...]]:
        return [b.upper for b in self.basis]

    def same_span(self, other: "LinearCode") -> bool:
        if self.k != other.k:
            return False
        mine, _ = _rref([list(r) for r in self.basis_rows()], self.field)
        theirs, _ = _rref([list(r) for r in other.basis_rows()], self.field)
        return mine == theirs

    def __repr__(self) -> str:
        return (f"LinearCode(q={self.params.q}, t={self.params.t}, "
                f"k={self.k})")


def zero_code(params: SchemeParams, field: FieldSpec) -> LinearCode:
    return LinearCode(params, field, ())


def full_space_code(params: SchemeParams, field: FieldSpec) -> LinearCode:
    ncoords = params.num_coords
    rows = []
    for i in range(ncoords):
        v = [0] * ncoords
        v[i] = 1
        rows.append(tuple(v))
    return LinearCode.from_rows(params, field, rows)


def random_code(params: SchemeParams, field: FieldSpec, k: int,
                rng: random.Random) -> LinearCode:
    """Uniformly sampled k-dimensional code (resampled until independent)."""
    ncoords = params.num_coords
    if not 0 <= k <= ncoords:
        raise ValueError(f"dimension k={k} out of range 0..{ncoords}")
    while True:
        rows = [
            tuple(rng.randrange(field.q) for _ in range(ncoords))
            for _ in range(k)
        ]
        red, _ = _rref([list(r) for r in rows], field)
        if len(red) == k:
            return LinearCode.from_rows(params, field, [tuple(r) for r in red])


def dual(code: LinearCode) -> LinearCode:
    """Kernel of the coordinate pairing sum_{i<j} a_ij b_ij.

    For odd q this pairing has the same kernel as the trace form (the
    factor 2 is invertible); over characteristic 2 the trace form is
    identically zero and the coordinate pairing is the scheme duality.
    """
    params, field = code.params, code.field
    ncoords = params.num_coords
    if code.k == 0:
        return full_space_code(params, field)
    red, pivots = _rref([list(r) for r in code.basis_rows()], field)
    free = [c for c in range(ncoords) if c not in pivots]
    neg = field.neg
    rows = []
    for f in free:
        v = [0] * ncoords
        v[f] = 1
        for r, pc in enumerate(pivots):
            v[pc] = neg(red[r][f])
        rows.append(tuple(v))
    return LinearCode.from_rows(params, field, rows)


def _span_words(basis_rows: list[tuple[int, ...]], field: FieldSpec,
                ncoords: int):
    """All words of the span (doubling construction); q^k tuples."""
    q = field.q
    add = field.add
    mul = field.mul
    words = [tuple([0] * ncoords)]
    for row in basis_rows:
        scaled = [tuple(mul(c, v) for v in row) for c in range(1, q)]
        extra = []
        for s in scaled:
            extra += [tuple(add(a, b) for a, b in zip(w, s)) for w in words]
        words += extra
    return words


def weight_distribution(code: LinearCode,
                        budget: int = DEFAULT_BUDGET) -> WeightDist:
    """Counts of codewords by skew rank over all q^k words."""
    params, field = code.params, code.field
    q = field.q
    size = q**code.k
    if size > budget:
        raise EnumerationBudgetError(
            f"q^k = {size} exceeds the enumeration budget {budget}"
        )
    n = params.n
    counts = [0] * (n + 1)
    space = q**params.num_coords
    tbl = None
    if space <= _RANK_TABLE_CAP and (
        space <= 64 * size or _rank_table_key(params, field) in _RANK_TABLES
    ):
        tbl = rank_table(params, field)

    rows = code.basis_rows()
    if field.p == 2 and tbl is not None:
        # packed coordinates add by XOR; spans stay in index space
        e = field.e
        packed = [_pack(r, q) for r in rows]
        words = [0]
        mul = field.mul
        for b, row in zip(packed, rows):
            scaled = [b] if q == 2 else [
                _pack([mul(c, v) for v in row], q) for c in range(1, q)
            ]
            extra = []
            for s in scaled:
                extra += [w ^ s for w in words]
            words += extra
        for w in words:
            counts[tbl[w]] += 1
        return WeightDist(params, tuple(counts))

    if size <= _MATERIALIZE_CAP:
        words = _span_words(rows, field, params.num_coords)
        if tbl is not None:
            for w in words:
                counts[tbl[_pack(w, q)]] += 1
        else:
            for w in words:
                counts[_rank_from_coords(w, params, field)] += 1
        return WeightDist(params, tuple(counts))

    # very large spans: depth-first with partial sums, constant memory
    add = field.add
    mul = field.mul
    ncoords = params.num_coords
    scaled_rows = [
        [tuple(mul(c, v) for v in row) for c in range(q)] for row in rows
    ]

    def rec(level: int, acc: tuple[int, ...]) -> None:
        if level == len(rows):
            if tbl is not None:
                counts[tbl[_pack(acc, q)]] += 1
            else:
                counts[_rank_from_coords(acc, params, field)] += 1
            return
        for c in range(q):
            nxt = acc if c == 0 else tuple(
                add(a, b) for a, b in zip(acc, scaled_rows[level][c])
            )
            rec(level + 1, nxt)

    rec(0, tuple([0] * ncoords))
    return WeightDist(params, tuple(counts))


def _rank_from_coords(coords, params: SchemeParams, field: FieldSpec) -> int:
    t = params.t
    rows = [[0] * t for _ in range(t)]
    for (i, j), v in zip(upper_positions(t), coords):
        if v:
            rows[i][j] = v
            rows[j][i] = field.neg(v)
    return _rank_of_rows(rows, field) // 2


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum skew rank over nonzero codewords (= minimum distance)."""
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    dist = weight_distribution(code, budget)
    for i in range(1, len(dist.counts)):
        if dist.counts[i]:
            return i
    raise AssertionError("nonzero code with no nonzero codeword")


def diameter(code: LinearCode, budget: int = DEFAULT_BUDGET) -> int:
    """Maximum skew rank over codewords (0 for the zero code)."""
    dist = weight_distribution(code, budget)
    out = 0
    for i, c in enumerate(dist.counts):
        if c:
            out = i
    return out


# ---------------------------------------------------------------------------
# code file format
# ---------------------------------------------------------------------------


def parse_code(text: str) -> LinearCode:
    """Parse the plain-text code format (see serialize_code)."""
    header = None
    header_line = 0
    rows: list[tuple[int, ...]] = []
    q = t = k_declared = None
    modulus = None
    params = None
    field = None
    ncoords = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_line = lineno
            fields = {}
            for tok in line.split():
                if "=" not in tok:
                    raise CodeFormatError(
                        f"line {lineno}: bad header token {tok!r}"
                    )
                key, _, val = tok.partition("=")
                fields[key] = val
            for need in ("q", "t", "k"):
                if need not in fields:
                    raise CodeFormatError(
                        f"line {lineno}: header is missing {need}="
                    )
            try:
                q = int(fields["q"])
                t = int(fields["t"])
                k_declared = int(fields["k"])
            except ValueError as exc:
                raise CodeFormatError(f"line {lineno}: {exc}") from None
            if "modpoly" in fields:
                try:
                    modulus = tuple(int(c) for c in fields["modpoly"].split(","))
                except ValueError as exc:
                    raise CodeFormatError(f"line {lineno}: {exc}") from None
            extra = set(fields) - {"q", "t", "k", "modpoly"}
            if extra:
                raise CodeFormatError(
                    f"line {lineno}: unknown header fields {sorted(extra)}"
                )
            try:
                params = SchemeParams(q, t)
                field = make_field(q, modulus)
            except ValueError as exc:
                raise CodeFormatError(f"line {lineno}: {exc}") from None
            ncoords = params.num_coords
            continue
        entries = line.split()
        if len(entries) != ncoords:
            raise CodeFormatError(
                f"line {lineno}: expected {ncoords} entries, got {len(entries)}"
            )
        row = []
        for col, tok in enumerate(entries, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise CodeFormatError(
                    f"line {lineno}, column {col}: {tok!r} is not an integer"
                ) from None
            if not 0 <= v < q:
                raise CodeFormatError(
                    f"line {lineno}, column {col}: entry {v} out of range "
                    f"for q={q}"
                )
            row.append(v)
        rows.append(tuple(row))
    if header is None:
        raise CodeFormatError("no header line found")
    if len(rows) != k_declared:
        warnings.warn(
            f"header (line {header_line}) declares k={k_declared} but the file "
            f"has {len(rows)} rows; using the rows",
            stacklevel=2,
        )
    red, _ = _rref([list(r) for r in rows], field)
    if len(red) != len(rows):
        warnings.warn(
            f"basis rows are linearly dependent; reduced to {len(red)} "
            f"independent rows",
            stacklevel=2,
        )
        rows = [tuple(r) for r in red]
    return LinearCode.from_rows(params, field, rows)


def serialize_code(code: LinearCode) -> str:
    """Canonical text form; parse(serialize(c)) has the identical basis."""
    field = code.field
    header = f"q={code.params.q} t={code.params.t} k={code.k}"
    if field.e > 1:
        header += " modpoly=" + ",".join(str(c) for c in field.modulus)
    lines = [header]
    for row in code.basis_rows():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"
