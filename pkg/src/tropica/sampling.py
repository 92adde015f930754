"""Seeded random generators for polynomials, points and admissible matrices.

Used by the property suites, the CLI axiom checker and the experiment
scripts.  Everything draws from a caller-supplied random.Random so runs are
reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .matrices import rank
from .polynomials import LAURENT, POLY, Polynomial
from .primes import AdmissibleMatrix, check_admissible


def random_fraction(rng: random.Random, lo: int = -4, hi: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_point(rng: random.Random, n: int, lo: int = -4, hi: int = 4, max_den: int = 3):
    return tuple(random_fraction(rng, lo, hi, max_den) for _ in range(n))


def random_exponents(rng: random.Random, n: int, mode: str, max_deg: int = 3):
    if mode == POLY:
        return tuple(rng.randint(0, max_deg) for _ in range(n))
    return tuple(rng.randint(-max_deg, max_deg) for _ in range(n))


def random_polynomial(
    rng: random.Random,
    n: int,
    mode: str = LAURENT,
    max_terms: int = 4,
    max_deg: int = 3,
    min_terms: int = 1,
) -> Polynomial:
    terms = rng.randint(min_terms, max_terms)
    coeffs = {}
    for _ in range(terms):
        coeffs[random_exponents(rng, n, mode, max_deg)] = random_fraction(rng)
    return Polynomial(coeffs, n, mode)


def random_nonzero_polynomial(rng, n, mode=LAURENT, max_terms=4, max_deg=3) -> Polynomial:
    while True:
        f = random_polynomial(rng, n, mode, max_terms, max_deg)
        if not f.is_zero():
            return f


def random_admissible(
    rng: random.Random,
    n: int,
    nrows: int,
    mode: str = LAURENT,
    first_entry: str = "any",
) -> AdmissibleMatrix:
    """Random admissible matrix with exactly ``nrows`` independent rows.

    ``first_entry`` controls the (1,1) entry: "any", "zero" (never a
    geometric prime above), or "positive" (row 1 evaluates at a point).
    """
    if not 1 <= nrows <= n + 1:
        raise ValueError("row count out of range")
    while True:
        rows = [[random_fraction(rng) for _ in range(n + 1)] for _ in range(nrows)]
        if first_entry == "zero":
            rows[0][0] = Fraction(0)
        elif first_entry == "positive":
            rows[0][0] = Fraction(abs(rng.randint(1, 4)), rng.randint(1, 3))
        if rank(rows) != nrows:
            continue
        col0 = [r[0] for r in rows]
        pivot = next((i for i, x in enumerate(col0) if x != 0), None)
        if pivot is not None and col0[pivot] < 0:
            rows[pivot] = [-x for x in rows[pivot]]
        return check_admissible(rows, n, mode)


def random_member_polynomial(
    rng: random.Random,
    point,
    mode: str = LAURENT,
    max_extra: int = 3,
    max_deg: int = 2,
) -> Polynomial:
    """Random polynomial whose maximum at ``point`` is attained at least twice.

    Two support elements are pinned to a common value; any further terms are
    pushed strictly below it.
    """
    n = len(point)
    target = random_fraction(rng)
    support: set[tuple[int, ...]] = set()
    while len(support) < 2:
        support.add(random_exponents(rng, n, mode, max_deg))
    coeffs = {}
    for expo in support:
        shift = sum(Fraction(e) * Fraction(p) for e, p in zip(expo, point))
        coeffs[expo] = target - shift
    for _ in range(rng.randint(0, max_extra)):
        expo = random_exponents(rng, n, mode, max_deg)
        if expo in coeffs:
            continue
        shift = sum(Fraction(e) * Fraction(p) for e, p in zip(expo, point))
        drop = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        coeffs[expo] = target - shift - drop
    return Polynomial(coeffs, n, mode)
