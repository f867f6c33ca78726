"""Sparse exact Gaussian elimination.

Vectors are dicts mapping comparable keys to nonzero exact scalars.  The
:class:`Eliminator` keeps an echelon basis in which every stored row is
normalised so that its largest key (its pivot) has coefficient 1; optional
tracking records each row as a combination of the inserted vectors, which
is how kernels, coordinates and intersections are read off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def axpy(target: dict, coef, source: dict):
    """target += coef * source, in place, dropping zeros."""
    for k, v in source.items():
        nv = target.get(k, 0) + coef * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def scale(vec: dict, coef) -> dict:
    if not coef:
        return {}
    return {k: coef * v for k, v in vec.items()}


class Eliminator:
    """Incremental echelon form of a set of sparse vectors."""

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict = {}
        self.combos: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, combo: dict | None = None):
        """Reduce ``vec`` against the stored rows.

        Returns ``(residual, combo)``; the residual is empty exactly when
        ``vec`` lies in the span, and then ``vec = sum combo[t] * inserted[t]``
        up to the sign convention ``vec - sum(...) = residual`` (tracking only).
        """
        vec = dict(vec)
        combo = {} if combo is None else dict(combo)
        rows = self.rows
        while vec:
            k = max(vec)
            row = rows.get(k)
            if row is None:
                break
            c = vec[k]
            axpy(vec, -c, row)
            if self.track:
                axpy(combo, -c, self.combos[k])
        return vec, combo

    def insert(self, vec: dict, tag=None):
        """Add ``vec``; returns None if it was independent, else the dependency.

        A dependency is a dict ``{tag: coef}`` with sum coef * inserted[tag] = 0.
        """
        combo = {tag: 1} if self.track else None
        residual, combo = self.reduce(vec, combo)
        if not residual:
            return combo if self.track else {}
        k = max(residual)
        pivot = residual[k]
        inv = Fraction(1, pivot) if isinstance(pivot, int) else 1 / pivot
        self.rows[k] = scale(residual, inv)
        if self.track:
            self.combos[k] = scale(combo, inv)
        return None

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def reduced_rows(self) -> list[tuple]:
        """Reduced row echelon form: ``(pivot, row, combo)`` sorted by pivot.

        Each row has coefficient 0 at every other pivot.
        """
        pivots = sorted(self.rows)
        rows = {p: dict(self.rows[p]) for p in pivots}
        combos = {p: dict(self.combos.get(p, {})) for p in pivots}
        for i, p in enumerate(pivots):
            for hi in pivots[i + 1:]:
                c = rows[hi].get(p)
                if c:
                    axpy(rows[hi], -c, rows[p])
                    if self.track:
                        axpy(combos[hi], -c, combos[p])
        return [(p, rows[p], combos[p]) for p in pivots]


CONSTANT = ("", -1)


@dataclass
class SolutionSpace:
    """Affine solution set ``particular + span(basis)`` in named unknowns.

    ``consistent`` is False for an empty solution set; then ``particular``
    is None and ``basis`` is empty.
    """

    unknowns: list
    consistent: bool
    particular: dict | None = None
    basis: list = field(default_factory=list)
    equation_count: int = 0

    @property
    def dimension(self) -> int:
        return len(self.basis) if self.consistent else -1

    def evaluate(self, equation: dict, assignment: dict):
        total = 0
        for var, coef in equation.items():
            total += coef * (1 if var == CONSTANT else assignment.get(var, 0))
        return total

    def point(self, weights) -> dict:
        """particular + sum weights[i] * basis[i]."""
        pt = dict(self.particular or {})
        for w, b in zip(weights, self.basis):
            axpy(pt, w, b)
        return pt


def solve_linear(equations: list[dict], unknowns: list) -> SolutionSpace:
    """Solve ``sum coef * unknown + constant = 0`` for each equation.

    Each equation is a dict from unknown names (and :data:`CONSTANT`) to
    exact coefficients.  Unknowns are ordered as given; free variables are
    chosen among the earliest ones.
    """
    index = {u: i for i, u in enumerate(unknowns)}
    elim = Eliminator()
    for eq in equations:
        vec = {}
        for var, coef in eq.items():
            if not coef:
                continue
            key = -1 if var == CONSTANT else index[var]
            vec[key] = vec.get(key, 0) + coef
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            elim.insert(vec)
    if -1 in elim.rows:
        return SolutionSpace(list(unknowns), False, equation_count=len(equations))
    rows = elim.reduced_rows()
    pivots = {p for p, _, _ in rows}
    particular = {}
    for p, row, _ in rows:
        c = row.get(-1, 0)
        if c:
            particular[unknowns[p]] = -c
    basis = []
    for f in range(len(unknowns)):
        if f in pivots:
            continue
        vec = {unknowns[f]: 1}
        for p, row, _ in rows:
            c = row.get(f)
            if c:
                vec[unknowns[p]] = -c
        basis.append(vec)
    return SolutionSpace(list(unknowns), True, particular, basis, len(equations))
