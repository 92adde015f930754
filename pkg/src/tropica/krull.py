"""Krull dimension of the coordinate semiring, with an explicit witness prime.

For generators whose vanishing locus is a d-dimensional complex, the
coordinate semiring (quotient by the congruence generated by all bend
relations) has dimension d + 1.  The lower bound is witnessed by an explicit
admissible matrix built from d + 1 affinely independent rational points of a
maximal cell; the witness is validated (admissible, rank d + 1, and every
generator's bend relations lie in the prime it defines).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import dot
from .polyhedra import EQ, affine_hull_directions
from .polynomials import Polynomial
from .primes import AdmissibleMatrix, admissibility_violations, bend_ideal_member, check_admissible
from .varieties import Cell, PolyComplex, complex_dim, prevariety


class EmptyVarietyError(ValueError):
    """The generators have an empty vanishing locus; the dimension formula
    for the coordinate semiring does not apply."""


@dataclass(frozen=True)
class WitnessChecks:
    admissible: bool
    rank: int
    contains_bends: bool


@dataclass(frozen=True)
class DimensionReport:
    variety_dim: int
    coordinate_dim: int
    witness: AdmissibleMatrix
    witness_checks: WitnessChecks
    caveat: str = "computed from the prevariety of the given generators"

    def to_json(self) -> dict:
        return {
            "variety_dim": self.variety_dim,
            "coordinate_dim": self.coordinate_dim,
            "witness": self.witness.to_json(),
            "witness_checks": {
                "admissible": self.witness_checks.admissible,
                "rank": self.witness_checks.rank,
                "contains_bends": self.witness_checks.contains_bends,
            },
            "caveat": self.caveat,
        }


def contains_bends(matrix: AdmissibleMatrix, gens: list[Polynomial]) -> bool:
    """True when every generator's bend relations lie in the prime."""
    return all(bend_ideal_member(matrix, g) for g in gens)


def _interior_shift(cell: Cell, direction) -> tuple[Fraction, ...]:
    """omega + t * direction staying inside the cell, with t > 0 rational."""
    omega = cell.interior_point
    t_max: Fraction | None = None
    for h in cell.polyhedron.constraints:
        if h.relation == EQ:
            continue
        slope = dot(h.normal, direction)
        if slope > 0:
            slack = h.rhs - dot(h.normal, omega)
            bound = slack / slope
            t_max = bound if t_max is None or bound < t_max else t_max
    t = Fraction(1) if t_max is None else t_max / 2
    if t <= 0:
        raise ValueError("interior point is not strictly inside the cell")
    return tuple(w + t * d for w, d in zip(omega, direction))


def witness_prime(x: PolyComplex, gens: list[Polynomial]) -> AdmissibleMatrix:
    """Admissible matrix of rank d+1 whose prime contains every generator bend.

    Rows are (1, p) for d+1 affinely independent rational points of a maximal
    cell: its relative interior point and one shift along each affine-hull
    basis direction.  Ties between maximal cells are broken by the canonical
    cell serialization, so the witness is deterministic.
    """
    if x.is_empty():
        raise EmptyVarietyError("cannot build a witness over an empty complex")
    if any(cell.stratum for cell in x.cells):
        raise ValueError("witness construction expects an R^n complex")
    d = complex_dim(x)
    candidates = sorted((c for c in x.cells if c.dim == d), key=Cell.key)
    cell = candidates[0]
    omega = cell.interior_point
    rows = [[Fraction(1), *omega]]
    for direction in affine_hull_directions(cell.polyhedron)[:d]:
        point = _interior_shift(cell, direction)
        rows.append([Fraction(1), *point])
    mode = gens[0].mode if gens else x.mode
    return check_admissible(rows, x.ambient, mode)


def coordinate_dimension(gens: list[Polynomial]) -> DimensionReport:
    """Dimension report for the coordinate semiring of the generators.

    Raises EmptyVarietyError when the prevariety is empty.  When the
    generators present the variety of a tropical ideal the reported value is
    exactly the Krull dimension of the quotient; otherwise the report carries
    the prevariety-based value (see the caveat field).
    """
    x = prevariety(gens)
    if x.is_empty():
        raise EmptyVarietyError(
            "the generators have an empty vanishing locus; no dimension claim is made"
        )
    d = complex_dim(x)
    witness = witness_prime(x, gens)
    checks = WitnessChecks(
        admissible=not admissibility_violations(witness.rows, witness.n),
        rank=witness.rank,
        contains_bends=contains_bends(witness, gens),
    )
    return DimensionReport(d, d + 1, witness, checks)
