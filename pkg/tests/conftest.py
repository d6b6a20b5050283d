import random
from fractions import Fraction

import pytest

from skewrank.homopoly import HPoly
from skewrank.lambda_ring import LambdaScalar

ACCEPTANCE_PAIRS = ((2, 4), (2, 5), (2, 6), (3, 4), (3, 5))

EXAMPLE_CODE_ROWS = [
    (1, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
]


def random_lambda_scalar(rng: random.Random, q: int,
                         max_terms: int = 3) -> LambdaScalar:
    terms = {
        rng.randint(-2, 2): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        for _ in range(rng.randint(1, max_terms))
    }
    return LambdaScalar(q, terms)


def random_hpoly(rng: random.Random, q: int, max_deg: int = 4,
                 min_deg: int = 0) -> HPoly:
    deg = rng.randint(min_deg, max_deg)
    return HPoly(q, [random_lambda_scalar(rng, q) for _ in range(deg + 1)])


@pytest.fixture(scope="session")
def example_code():
    from skewrank.gfcodes import LinearCode, make_field
    from skewrank.qcombinat import SchemeParams

    params = SchemeParams(3, 4)
    return LinearCode.from_rows(params, make_field(3), EXAMPLE_CODE_ROWS)


@pytest.fixture(scope="session")
def small_corpus():
    """A handful of verified random codes per (q, t), shared across modules."""
    from skewrank.gfcodes import make_field, random_code
    from skewrank.macwilliams import verify_code
    from skewrank.qcombinat import SchemeParams

    rng = random.Random(20240817)
    out = {}
    for q, t in ACCEPTANCE_PAIRS:
        params = SchemeParams(q, t)
        field = make_field(q)
        entries = []
        for _ in range(8):
            k = rng.randint(1, params.num_coords - 1)
            code = random_code(params, field, k, rng)
            entries.append((code, verify_code(code)))
        out[(q, t)] = entries
    return out
