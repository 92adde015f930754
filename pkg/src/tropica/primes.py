"""Prime congruences presented by admissible rational matrices.

A prime congruence of the (Laurent) polynomial semiring is a total,
cancellative ordering of terms.  It is presented by a rational matrix with
n+1 columns: column 0 weights the coefficient and columns 1..n weight the
exponents; term t1 beats term t2 when the first non-zero entry of
U @ ((c1, u1) - (c2, u2)) is positive.  Rows are stored exactly as given:
adding earlier rows to later ones preserves the order, but upward row
operations change the prime, so no automatic reduction is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import mat_vec, rank, to_fraction
from .polynomials import Exponents, LAURENT, Polynomial, _check_mode
from .scalars import is_bottom

Term = tuple[Fraction, Exponents]

GEOMETRIC = "geometric"
MINIMAL = "minimal"
OTHER = "other"

LESS, EQUAL, GREATER = "less", "equal", "greater"


class AdmissibilityError(ValueError):
    """Raised when a matrix fails one of the admissibility conditions."""


@dataclass(frozen=True)
class AdmissibleMatrix:
    """Validated defining matrix of a prime congruence."""

    rows: tuple[tuple[Fraction, ...], ...]
    n: int
    mode: str = LAURENT

    @property
    def rank(self) -> int:
        return len(self.rows)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]


def admissibility_violations(rows, n: int) -> list[str]:
    """Report every violated admissibility condition (empty list = valid)."""
    problems = []
    rows = [list(r) for r in rows]
    if not rows:
        return ["matrix must have at least one row"]
    if any(len(r) != n + 1 for r in rows):
        return [f"every row must have {n + 1} entries (coefficient column plus {n} exponent columns)"]
    if len(rows) > n + 1:
        problems.append(f"at most {n + 1} rows allowed, got {len(rows)}")
    if rank(rows) != len(rows):
        problems.append("rows are linearly dependent")
    col0 = [r[0] for r in rows]
    first_nonzero = next((x for x in col0 if x != 0), None)
    if first_nonzero is not None and first_nonzero < 0:
        problems.append("first non-zero entry of column 0 must be positive")
    return problems


def check_admissible(rows, n: int, mode: str = LAURENT) -> AdmissibleMatrix:
    """Validate and freeze a defining matrix; raises AdmissibilityError."""
    _check_mode(mode)
    frozen = tuple(tuple(to_fraction(x) for x in row) for row in rows)
    if any(len(r) != n + 1 for r in frozen) or not frozen:
        raise AdmissibilityError(
            f"matrix must be non-empty with {n + 1} columns"
        )
    problems = admissibility_violations(frozen, n)
    if problems:
        raise AdmissibilityError("; ".join(problems))
    return AdmissibleMatrix(frozen, n, mode)


def _term_vector(term: Term, n: int) -> list[Fraction]:
    coeff, expo = term
    if is_bottom(coeff):
        raise ValueError("terms must have a non-bottom coefficient")
    if len(expo) != n:
        raise ValueError(f"exponent vector has length {len(expo)}, expected {n}")
    return [Fraction(coeff)] + [Fraction(e) for e in expo]


def compare_terms(matrix: AdmissibleMatrix, t1: Term, t2: Term) -> str:
    """Sign of the first non-zero entry of U @ (t1 - t2)."""
    v1 = _term_vector(t1, matrix.n)
    v2 = _term_vector(t2, matrix.n)
    delta = [a - b for a, b in zip(v1, v2)]
    for value in mat_vec(matrix.rows, delta):
        if value > 0:
            return GREATER
        if value < 0:
            return LESS
    return EQUAL


def leading_class(matrix: AdmissibleMatrix, f: Polynomial) -> tuple[Exponents, ...]:
    """Support elements of f that are maximal (mutually equal) under the order."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading class")
    best: list[tuple[Exponents, Fraction]] = []
    for expo, coeff in f.terms():
        if not best:
            best = [(expo, coeff)]
            continue
        cmp = compare_terms(matrix, (coeff, expo), (best[0][1], best[0][0]))
        if cmp == GREATER:
            best = [(expo, coeff)]
        elif cmp == EQUAL:
            best.append((expo, coeff))
    return tuple(expo for expo, _ in best)


def pair_in_prime(matrix: AdmissibleMatrix, f: Polynomial, g: Polynomial) -> bool:
    """True when f and g have the same image in the quotient by the prime.

    Both reduce to their leading terms, so the pair lies in the congruence
    exactly when the leading terms compare equal.  The zero polynomial is
    congruent only to itself.
    """
    f._require_compatible(g)
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    lf = leading_class(matrix, f)[0]
    lg = leading_class(matrix, g)[0]
    return compare_terms(matrix, (f.coefficient(lf), lf), (g.coefficient(lg), lg)) == EQUAL


def bend_ideal_member(matrix: AdmissibleMatrix, f: Polynomial) -> bool:
    """Membership of f in the ideal of polynomials whose bends lie in the prime.

    Equivalent to every bend pair of f being in the congruence: the leading
    class must contain at least two terms.  The zero polynomial belongs to
    every such ideal; monomials to none (their only bend pair would force the
    congruence to be improper).
    """
    if f.is_zero():
        return True
    if f.is_monomial():
        return False
    return len(leading_class(matrix, f)) >= 2


def classify_prime(matrix: AdmissibleMatrix) -> tuple[str, int]:
    """(geometric | minimal | other, rank).

    Geometric primes are the rank-1 matrices with non-zero (1,1) entry (the
    quotient is the tropical semifield itself).  Full-rank matrices present
    minimal primes: no pair of distinct terms is identified, so no smaller
    prime exists.
    """
    r = matrix.rank
    if r == 1 and matrix.rows[0][0] != 0:
        return GEOMETRIC, r
    if r == matrix.n + 1:
        return MINIMAL, r
    return OTHER, r


def variety_of_prime(matrix: AdmissibleMatrix) -> tuple[Fraction, ...] | None:
    """The at-most-one point of R^n on which the whole congruence holds.

    Empty exactly when the (1,1) entry is zero (no geometric prime lies over
    the congruence); otherwise row 1 scaled to leading entry 1 reads off the
    point coordinates.
    """
    first = matrix.rows[0]
    if first[0] == 0:
        return None
    return tuple(x / first[0] for x in first[1:])


def geometric_prime_of_point(point, mode: str = LAURENT) -> AdmissibleMatrix:
    """Single-row matrix (1, p) of the prime that evaluates terms at p."""
    p = [to_fraction(x) for x in point]
    return check_admissible([[Fraction(1)] + p], len(p), mode)
