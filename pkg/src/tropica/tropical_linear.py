"""Degree-truncated tropical linear algebra.

Vectors are indexed by a fixed monomial window (all monomials of total degree
<= d in poly mode, or all exponents in [-d, d]^n in Laurent mode).  The
module provides span membership by max-plus residuation, the monomial
elimination axiom checked pairwise, and circuits of tropicalized rational
ideals under the trivial valuation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .matrices import rank, row_echelon
from .polynomials import Exponents, LAURENT, POLY, Polynomial
from .scalars import BOTTOM, TropScalar, is_bottom, trop_add, trop_mul

MAX_WINDOW_MONOMIALS = 20  # desk-scale cap for circuit enumeration


@dataclass(frozen=True)
class MonomialWindow:
    """Canonically ordered (graded-lex) finite list of exponent vectors."""

    n: int
    mode: str
    degree: int
    monomials: tuple[Exponents, ...]

    def index(self, expo: Exponents) -> int:
        return self.monomials.index(tuple(expo))

    def __len__(self) -> int:
        return len(self.monomials)


def monomial_window(n: int, mode: str, degree: int) -> MonomialWindow:
    if degree < 0:
        raise ValueError("window degree must be non-negative")
    if mode == POLY:
        monos = [
            expo
            for expo in itertools.product(range(degree + 1), repeat=n)
            if sum(expo) <= degree
        ]
    elif mode == LAURENT:
        monos = list(itertools.product(range(-degree, degree + 1), repeat=n))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    monos.sort(key=lambda e: (sum(e), e))
    return MonomialWindow(n, mode, degree, tuple(monos))


@dataclass(frozen=True)
class TropVector:
    """Sparse vector over a monomial window; absent entries are bottom."""

    window: MonomialWindow
    entries: tuple[tuple[Exponents, Fraction], ...]

    @classmethod
    def make(cls, window: MonomialWindow, values: dict) -> "TropVector":
        items = []
        for expo, value in values.items():
            if is_bottom(value):
                continue
            key = tuple(expo)
            if key not in window.monomials:
                raise ValueError(f"monomial {key} is outside the window")
            items.append((key, Fraction(value)))
        items.sort(key=lambda kv: window.monomials.index(kv[0]))
        return cls(window, tuple(items))

    def get(self, expo: Exponents) -> TropScalar:
        for key, value in self.entries:
            if key == expo:
                return value
        return BOTTOM

    def support(self) -> frozenset[Exponents]:
        return frozenset(key for key, _ in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_polynomial(self) -> Polynomial:
        return Polynomial(dict(self.entries), self.window.n, self.window.mode)


def vector_from_polynomial(f: Polynomial, window: MonomialWindow) -> TropVector:
    if f.n != window.n or f.mode != window.mode:
        raise ValueError("polynomial does not match the window")
    return TropVector.make(window, f.coeffs)


def span_membership(v: TropVector, gens: list[TropVector]) -> list[TropScalar] | None:
    """Largest coefficients with combination <= v, accepted when it equals v.

    The principal solution of the max-plus system: lambda_j is the minimum of
    v_i - g_j_i over the support of g_j (bottom when v is bottom somewhere on
    that support).  If even this combination misses v, nothing does.
    """
    window = v.window
    for g in gens:
        if g.window != window:
            raise ValueError("all vectors must share one window")
    lambdas: list[TropScalar] = []
    for g in gens:
        lam: TropScalar | None = None
        for expo, value in g.entries:
            target = v.get(expo)
            if is_bottom(target):
                lam = BOTTOM
                break
            gap = target - value
            lam = gap if lam is None or (not is_bottom(lam) and gap < lam) else lam
        if lam is None:
            lam = BOTTOM  # the zero generator contributes nothing
        lambdas.append(lam)
    combo: dict[Exponents, TropScalar] = {}
    for lam, g in zip(lambdas, gens):
        if is_bottom(lam):
            continue
        for expo, value in g.entries:
            combo[expo] = trop_add(combo.get(expo, BOTTOM), trop_mul(lam, value))
    achieved = {k: val for k, val in combo.items() if not is_bottom(val)}
    if achieved == dict(v.entries):
        return lambdas
    return None


def elimination_witness(
    f: TropVector,
    g: TropVector,
    u: Exponents,
    oracle: Callable[[TropVector], bool],
    tie_values: Callable[[Exponents], Iterable[Fraction]] | None = None,
):
    """Search for the elimination-axiom witness for the shared monomial u.

    The witness h must drop u, equal max(f_v, g_v) wherever f and g differ,
    and stay <= the common value on ties.  Candidates vary the tie positions
    over {common value, bottom}; ``tie_values`` can contribute further exact
    values per tie position (used when the membership oracle comes from a
    geometric point, where a tie sometimes has to drop to the second-highest
    level).  Returns the first candidate the oracle accepts, else None.
    """
    u = tuple(u)
    fu, gu = f.get(u), g.get(u)
    if is_bottom(fu) or fu != gu:
        raise ValueError("u must carry the same non-bottom coefficient in f and g")
    window = f.window
    if g.window != window:
        raise ValueError("f and g must share one window")
    forced: dict[Exponents, Fraction] = {}
    ties: list[tuple[Exponents, Fraction]] = []
    for expo in sorted(f.support() | g.support(), key=window.monomials.index):
        if expo == u:
            continue
        fv, gv = f.get(expo), g.get(expo)
        if fv == gv:
            ties.append((expo, fv))
        else:
            forced[expo] = trop_add(fv, gv)
    if len(ties) > 16:
        raise ValueError("too many tie positions for exhaustive search")

    def candidates():
        for dropped in range(len(ties) + 1):
            for subset in itertools.combinations(range(len(ties)), dropped):
                values = dict(forced)
                for idx, (expo, common) in enumerate(ties):
                    if idx not in subset:
                        values[expo] = common
                yield values
        if tie_values is not None:
            for idx, (expo, common) in enumerate(ties):
                for value in tie_values(expo):
                    if value > common:
                        continue
                    values = dict(forced)
                    values[expo] = value
                    yield values

    for values in candidates():
        h = TropVector.make(window, values)
        if oracle(h):
            return h
    return None


@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    counterexample: tuple[TropVector, TropVector, Exponents] | None = None


@dataclass(frozen=True)
class MembershipSample:
    """Oracle-backed description: sampled members plus the membership test.

    ``point`` is the evaluation point when the oracle comes from a geometric
    prime; it drives the extra tie-value candidates of the witness search.
    """

    samples: tuple[TropVector, ...]
    oracle: Callable[[TropVector], bool]
    point: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class CircuitSet:
    """Support-minimal vectors of a tropicalized ideal slice (trivial valuation:
    every non-bottom coordinate is the unit)."""

    window: MonomialWindow
    circuits: tuple[TropVector, ...]
    trivial: bool = False  # the whole window is spanned (unit ideal)

    def supports(self) -> tuple[frozenset[Exponents], ...]:
        return tuple(c.support() for c in self.circuits)

    def member(self, v: TropVector) -> bool:
        """Support is a union of circuit supports (with unit values)."""
        if v.is_zero():
            return True
        if any(value != 0 for _, value in v.entries):
            return False
        supp = v.support()
        covered = set()
        for circuit in self.circuits:
            cs = circuit.support()
            if cs <= supp:
                covered |= cs
        return covered == supp


def _point_tie_values(f, g, u, point):
    """Extra tie-value candidates: drop a tie to the top forced level."""
    window = f.window
    forced_levels = []
    for expo in f.support() | g.support():
        if expo == u:
            continue
        fv, gv = f.get(expo), g.get(expo)
        if fv != gv:
            value = trop_add(fv, gv)
            forced_levels.append(value + sum(Fraction(e) * p for e, p in zip(expo, point)))
    if not forced_levels:
        return lambda expo: ()
    top = max(forced_levels)

    def values(expo):
        return (top - sum(Fraction(e) * p for e, p in zip(expo, point)),)

    return values


def check_tropical_axiom(description) -> AxiomResult:
    """Run the monomial elimination axiom over all applicable pairs.

    ``description`` is either a CircuitSet (all circuit pairs are tested
    against support membership) or a MembershipSample (all sample pairs are
    tested against the oracle).  Returns the first failing triple.
    """
    if isinstance(description, CircuitSet):
        vectors = list(description.circuits)
        oracle = description.member
        point = None
    elif isinstance(description, MembershipSample):
        vectors = list(description.samples)
        oracle = description.oracle
        point = description.point
    else:
        raise TypeError("description must be a CircuitSet or MembershipSample")
    for f, g in itertools.combinations_with_replacement(vectors, 2):
        shared = sorted(f.support() & g.support(), key=f.window.monomials.index)
        for u in shared:
            if f.get(u) != g.get(u):
                continue
            tie_values = _point_tie_values(f, g, u, point) if point is not None else None
            witness = elimination_witness(f, g, u, oracle, tie_values)
            if witness is None:
                return AxiomResult(False, (f, g, u))
    return AxiomResult(True)


# -- tropicalization of rational ideals (trivial valuation) -------------------


def _shift(expo: Exponents, by: Exponents) -> Exponents:
    return tuple(a + b for a, b in zip(expo, by))


def truncated_tropicalization(rational_gens: list[dict], n: int, degree: int) -> CircuitSet:
    """Circuits of the degree-truncated tropicalization of a rational ideal.

    ``rational_gens`` are classical polynomials over Q given as maps from
    exponent tuples to non-zero rational coefficients.  The degree-<= d slice
    of the ideal is the row space of the multiplication matrix (each
    generator shifted by every monomial that keeps it inside the window);
    under the trivial valuation its vectors are Boolean, so the circuits are
    exactly the support-minimal non-zero row-space vectors.
    """
    window = monomial_window(n, POLY, degree)
    if len(window) > MAX_WINDOW_MONOMIALS:
        raise ValueError(
            f"window has {len(window)} monomials; the desk-scale cap is {MAX_WINDOW_MONOMIALS}"
        )
    gen_maps = []
    for g in rational_gens:
        clean = {tuple(e): Fraction(c) for e, c in g.items() if Fraction(c) != 0}
        if not clean:
            continue
        if any(len(e) != n or min(e) < 0 for e in clean):
            raise ValueError("generators must be polynomials in n non-negative exponents")
        gdeg = max(sum(e) for e in clean)
        if gdeg > degree:
            raise ValueError(f"generator degree {gdeg} exceeds the window degree {degree}")
        gen_maps.append((clean, gdeg))
    if not gen_maps:
        return CircuitSet(window, ())
    columns = {expo: i for i, expo in enumerate(window.monomials)}
    rows = []
    for clean, gdeg in gen_maps:
        for shift in window.monomials:
            if sum(shift) > degree - gdeg:
                continue
            row = [Fraction(0)] * len(window)
            for expo, coeff in clean.items():
                row[columns[_shift(expo, shift)]] = coeff
            rows.append(row)
    basis = [row for row in row_echelon(rows) if any(v != 0 for v in row)]
    r = len(basis)
    if r == 0:
        return CircuitSet(window, ())
    circuits: list[frozenset[Exponents]] = []
    max_size = len(window) - r + 1
    indices = range(len(window))
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(indices, size):
            combo_set = set(combo)
            if any(c <= combo_set for c in circuits):
                continue
            outside = [i for i in indices if i not in combo_set]
            submatrix = [[row[i] for i in outside] for row in basis]
            if rank(submatrix) < r:
                circuits.append(frozenset(combo))
    vectors = tuple(
        TropVector.make(window, {window.monomials[i]: Fraction(0) for i in sorted(c)})
        for c in sorted(circuits, key=lambda c: sorted(c))
    )
    trivial = any(len(c) == 1 for c in circuits)
    return CircuitSet(window, vectors, trivial)
