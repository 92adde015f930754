"""Tropical hypersurfaces and prevarieties as exact polyhedral complexes.

A complex stores the maximal candidate cells of the tie-and-dominate
enumeration: for each unordered pair of terms of a generator, the cell where
those two terms agree and dominate all others.  No face lattice is computed;
dimension and coverage queries only need maximal cells.

Conventions: monomials never vanish and the zero polynomial vanishes nowhere
on R^n, so both contribute empty hypersurfaces.  On a bottom stratum of the
affine (T^n) extension a generator all of whose terms die vanishes
identically there (its value is bottom).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .polyhedra import (
    EQ,
    LE,
    LT,
    HalfSpace,
    Polyhedron,
    _feasible_point,
    contains_point,
    dimension,
    full_space,
    intersect,
    is_empty,
    relative_interior_point,
)
from .polynomials import POLY, Exponents, Polynomial


@dataclass(frozen=True)
class Cell:
    """A polyhedron with cached dimension, interior point and stratum label.

    ``stratum`` lists the variables pinned to bottom; the polyhedron lives in
    the space of the remaining coordinates (in increasing variable order).
    """

    polyhedron: Polyhedron
    dim: int
    interior_point: tuple[Fraction, ...]
    stratum: tuple[int, ...] = ()

    def key(self):
        cons = sorted(
            (h.relation, tuple(str(x) for x in h.normal), str(h.rhs))
            for h in self.polyhedron.constraints
        )
        return (self.stratum, -self.dim, tuple(cons))


@dataclass(frozen=True)
class PolyComplex:
    ambient: int
    mode: str
    cells: tuple[Cell, ...]

    def is_empty(self) -> bool:
        return not self.cells


def _term_affine(f: Polynomial, expo: Exponents) -> tuple[tuple[Fraction, ...], Fraction]:
    """The affine function of a term as (gradient, constant)."""
    return tuple(Fraction(e) for e in expo), Fraction(f.coefficient(expo))


def tie_cell(f: Polynomial, i: Exponents, j: Exponents) -> Polyhedron:
    """{x : term_i(x) = term_j(x) >= term_k(x) for all k}."""
    gi, ci = _term_affine(f, i)
    gj, cj = _term_affine(f, j)
    cons = [HalfSpace(tuple(a - b for a, b in zip(gi, gj)), cj - ci, EQ)]
    for k in f.support():
        if k in (i, j):
            continue
        gk, ck = _term_affine(f, k)
        cons.append(HalfSpace(tuple(a - b for a, b in zip(gk, gi)), ci - ck, LE))
    return Polyhedron(tuple(cons), f.n)


def _make_cell(poly: Polyhedron, stratum: tuple[int, ...] = ()) -> Cell | None:
    if is_empty(poly):
        return None
    return Cell(poly, dimension(poly), relative_interior_point(poly), stratum)


def _cell_subset(a: Cell, b: Cell) -> bool:
    """Exact inclusion test: a is contained in b."""
    if a.stratum != b.stratum:
        return False
    base = [(h.normal, h.rhs, h.relation) for h in a.polyhedron.constraints]
    n = a.polyhedron.n
    for h in b.polyhedron.constraints:
        neg = tuple(-x for x in h.normal)
        if h.relation == LE:
            # a point of a with h.normal . x > h.rhs?
            if _feasible_point(base + [(neg, -h.rhs, LT)], n) is not None:
                return False
        else:
            if _feasible_point(base + [(neg, -h.rhs, LT)], n) is not None:
                return False
            if _feasible_point(base + [(h.normal, h.rhs, LT)], n) is not None:
                return False
    return True


def _dedup_maximal(cells: list[Cell]) -> list[Cell]:
    """Drop cells contained in another cell; among equal sets keep one."""
    cells = sorted(cells, key=Cell.key)
    kept: list[Cell] = []
    for cell in cells:
        drop = False
        for other in kept:
            if _cell_subset(cell, other):
                drop = True
                break
        if not drop:
            kept = [k for k in kept if not _cell_subset(k, cell)]
            kept.append(cell)
    return sorted(kept, key=Cell.key)


def hypersurface(f: Polynomial) -> PolyComplex:
    """The locus where the maximum of f is attained at least twice."""
    cells: list[Cell] = []
    support = f.support()
    for i, j in itertools.combinations(support, 2):
        cell = _make_cell(tie_cell(f, i, j))
        if cell is not None:
            cells.append(cell)
    return PolyComplex(f.n, f.mode, tuple(_dedup_maximal(cells)))


def prevariety(gens: list[Polynomial]) -> PolyComplex:
    """Intersection of the generators' hypersurfaces over R^n.

    This is the prevariety of the input set; it equals the variety of the
    generated ideal only when the input is a tropical basis.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    n, mode = gens[0].n, gens[0].mode
    for g in gens[1:]:
        gens[0]._require_compatible(g)
    if any(len(g) < 2 for g in gens):
        # a monomial (or zero) generator never vanishes on R^n
        return PolyComplex(n, mode, ())
    per_gen: list[list[Polyhedron]] = []
    for g in gens:
        polys = [tie_cell(g, i, j) for i, j in itertools.combinations(g.support(), 2)]
        polys = [p for p in polys if not is_empty(p)]
        if not polys:
            return PolyComplex(n, mode, ())
        per_gen.append(polys)
    cells: list[Cell] = []
    for combo in itertools.product(*per_gen):
        poly = combo[0]
        for extra in combo[1:]:
            poly = intersect(poly, extra)
        cell = _make_cell(poly)
        if cell is not None:
            cells.append(cell)
    return PolyComplex(n, mode, tuple(_dedup_maximal(cells)))


def affine_prevariety(gens: list[Polynomial]) -> PolyComplex:
    """Prevariety over T^n, stratified by the set of coordinates at bottom.

    For each subset S of variables the generators are restricted (terms
    touching S die); a generator restricting to zero vanishes identically on
    the stratum, a non-zero monomial restriction kills the stratum, and the
    rest cut out an R^(n-|S|) prevariety labelled by S.
    """
    if not gens:
        raise ValueError("at least one generator is required")
    if any(g.mode != POLY for g in gens):
        raise ValueError("the affine extension requires poly mode")
    n = gens[0].n
    for g in gens[1:]:
        gens[0]._require_compatible(g)
    cells: list[Cell] = []
    for size in range(n + 1):
        for dead in itertools.combinations(range(n), size):
            restricted = [g.restrict_to_stratum(dead) for g in gens]
            if any(r.is_monomial() for r in restricted):
                continue
            live = [r for r in restricted if not r.is_zero()]
            if not live:
                ambient = n - len(dead)
                space = full_space(ambient)
                cells.append(
                    Cell(space, ambient, tuple([Fraction(0)] * ambient), tuple(dead))
                )
                continue
            sub = prevariety(live)
            for cell in sub.cells:
                cells.append(
                    Cell(cell.polyhedron, cell.dim, cell.interior_point, tuple(dead))
                )
    return PolyComplex(n, POLY, tuple(sorted(cells, key=Cell.key)))


def complex_dim(x: PolyComplex) -> int:
    if not x.cells:
        return -1
    return max(cell.dim for cell in x.cells)


def complex_contains_point(x: PolyComplex, point) -> bool:
    """Point membership in the R^n part of the complex."""
    return any(
        cell.stratum == () and contains_point(cell.polyhedron, point) for cell in x.cells
    )


def vanishes_on_complex(f: Polynomial, x: PolyComplex) -> bool:
    """True when f tropically vanishes at every point of the complex.

    Decided exactly: each cell is refined into the regions where one term of
    f dominates, and on each non-empty region some other term must agree with
    the dominating one identically (a convex set covered by finitely many
    hyperplanes lies in one of them).
    """
    if f.n != x.ambient:
        raise ValueError(f"ambient mismatch: {f.n} vs {x.ambient}")
    for cell in x.cells:
        restricted = f.restrict_to_stratum(cell.stratum) if cell.stratum else f
        if restricted.is_zero():
            if cell.stratum:
                continue  # value is bottom on the whole stratum
            return False  # the zero polynomial vanishes nowhere on R^n
        if restricted.is_monomial():
            return False
        support = restricted.support()
        base = [(h.normal, h.rhs, h.relation) for h in cell.polyhedron.constraints]
        ncoords = cell.polyhedron.n
        for i in support:
            gi, ci = _term_affine(restricted, i)
            region = list(base)
            for k in support:
                if k == i:
                    continue
                gk, ck = _term_affine(restricted, k)
                region.append((tuple(a - b for a, b in zip(gk, gi)), ci - ck, LE))
            if _feasible_point(region, ncoords) is None:
                continue
            covered = False
            for j in support:
                if j == i:
                    continue
                gj, cj = _term_affine(restricted, j)
                # does term_j < term_i somewhere on the region?
                strict = region + [(tuple(a - b for a, b in zip(gj, gi)), ci - cj, LT)]
                if _feasible_point(strict, ncoords) is None:
                    covered = True
                    break
            if not covered:
                return False
    return True


def complex_to_json(x: PolyComplex) -> dict:
    cells = []
    for cell in x.cells:
        cells.append(
            {
                "stratum": list(cell.stratum),
                "normals": [[str(v) for v in h.normal] for h in cell.polyhedron.constraints],
                "rhs": [str(h.rhs) for h in cell.polyhedron.constraints],
                "relations": [h.relation for h in cell.polyhedron.constraints],
                "dim": cell.dim,
                "interior_point": [str(v) for v in cell.interior_point],
            }
        )
    return {"ambient": x.ambient, "mode": x.mode, "cells": cells}


def complex_from_json(data: dict) -> PolyComplex:
    cells = []
    for c in data["cells"]:
        stratum = tuple(c.get("stratum", []))
        ncoords = data["ambient"] - len(stratum)
        cons = tuple(
            HalfSpace(tuple(Fraction(v) for v in normal), Fraction(rhs), rel)
            for normal, rhs, rel in zip(c["normals"], c["rhs"], c["relations"])
        )
        cells.append(
            Cell(
                Polyhedron(cons, ncoords),
                int(c["dim"]),
                tuple(Fraction(v) for v in c["interior_point"]),
                stratum,
            )
        )
    return PolyComplex(int(data["ambient"]), data["mode"], tuple(cells))
