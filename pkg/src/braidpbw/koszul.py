"""Finite-degree evidence for PBW/Koszul hypotheses.

Two independent tools: quadratic reduction systems checked by resolving
overlaps (diamond lemma), and graded dimensions of T(W)/(I) computed by
elimination, which are correct whether or not a PBW basis exists.
"""

from __future__ import annotations

import os

from .errors import BoundExceeded, BraidPBWError
from .linalg import Eliminator, axpy
from .report import Report
from .tensoralg import GenSet, NcPoly

DEFAULT_DEGREE_BOUND = 4
BOUND_ENV = "BRAIDPBW_DEGREE_BOUND"


def degree_bound(bound: int | None = None) -> int:
    if bound is not None:
        return bound
    text = os.environ.get(BOUND_ENV)
    if text:
        try:
            return int(text)
        except ValueError:
            raise BraidPBWError(f"{BOUND_ENV} must be an integer, got {text!r}") from None
    return DEFAULT_DEGREE_BOUND


class ReductionSystem:
    """Rules ``leading word -> lower terms`` for a degree-lex word order.

    ``order`` lists generator names from smallest to largest; by default it
    is the GenSet order.  Leading words are the pivots of the reduced
    echelon basis of the relation space.
    """

    def __init__(self, gens: GenSet, rules: dict, order=None):
        self.gens = gens
        self.order = list(order) if order is not None else list(gens.names)
        self.rank = {gens.index[name]: r for r, name in enumerate(self.order)}
        self.rules = rules
        for lead, rest in rules.items():
            for w in rest:
                if self.key(w) >= self.key(lead):
                    raise BraidPBWError(f"rule for {gens.word_str(lead)} does not decrease")

    def key(self, word):
        return (len(word), tuple(self.rank[i] for i in word))

    @classmethod
    def from_relations(cls, gens: GenSet, relations, order=None) -> "ReductionSystem":
        order = list(order) if order is not None else list(gens.names)
        rank = {gens.index[name]: r for r, name in enumerate(order)}
        unrank = {r: i for i, r in rank.items()}

        def to_key(w):
            return tuple(rank[i] for i in w)

        elim = Eliminator()
        for r in relations:
            elim.insert({to_key(w): c for w, c in r.terms.items()})
        rules = {}
        for pivot, row, _ in elim.reduced_rows():
            lead = tuple(unrank[i] for i in pivot)
            rules[lead] = {tuple(unrank[i] for i in k): -c for k, c in row.items() if k != pivot}
        return cls(gens, rules, order)

    @property
    def max_length(self):
        return max((len(w) for w in self.rules), default=0)

    def _find(self, word):
        for length in {len(w) for w in self.rules}:
            for start in range(len(word) - length + 1):
                sub = word[start:start + length]
                if sub in self.rules:
                    return start, length
        return None

    def reduce(self, terms: dict) -> dict:
        """Normal form of a polynomial given as ``{word: coef}``."""
        todo = dict(terms)
        done: dict = {}
        while todo:
            w = max(todo, key=self.key)
            c = todo.pop(w)
            hit = self._find(w)
            if hit is None:
                axpy(done, c, {w: 1})
                continue
            start, length = hit
            head, tail = w[:start], w[start + length:]
            for v, cv in self.rules[w[start:start + length]].items():
                axpy(todo, c * cv, {head + v + tail: 1})
        return done

    def reduce_poly(self, p: NcPoly) -> NcPoly:
        return NcPoly(self.gens, self.reduce(p.terms))

    def is_normal(self, word) -> bool:
        return self._find(word) is None

    def normal_words(self, d: int) -> list:
        return [w for w in self.gens.words(d) if self.is_normal(w)]

    def overlaps(self):
        """Length-3 words xyz with xy and yz both leading words."""
        leads = [w for w in self.rules if len(w) == 2]
        out = []
        for a in leads:
            for b in leads:
                if a[1] == b[0]:
                    out.append((a[0], a[1], b[1]))
        return sorted(out, key=self.key)

    def describe(self) -> dict:
        g = self.gens
        return {g.word_str(w): str(NcPoly(g, r)) for w, r in sorted(self.rules.items(), key=lambda t: self.key(t[0]))}


def resolve_overlaps(system: ReductionSystem):
    """Yield ``(word, left, right)`` normal forms of each overlap, both ways."""
    for w in system.overlaps():
        a, b, c = w
        left = system.reduce({v + (c,): cv for v, cv in system.rules[(a, b)].items()})
        right = system.reduce({(a,) + v: cv for v, cv in system.rules[(b, c)].items()})
        yield w, left, right


def confluence_check(system: ReductionSystem) -> Report:
    g = system.gens
    rep = Report("confluence", {"order": " < ".join(system.order), "rules": system.describe()})
    for w, left, right in resolve_overlaps(system):
        ok = left == right
        witness = None
        if not ok:
            witness = {"overlap": g.word_str(w),
                       "via left rule": str(NcPoly(g, left)),
                       "via right rule": str(NcPoly(g, right))}
        rep.add(f"overlap {g.word_str(w)}", ok, witness=witness)
    return rep


def _ideal_component(gens: GenSet, relations, d: int) -> Eliminator:
    """Echelon basis of I_d = sum W^i (x) I (x) W^j, built as I_{d-1}W + W^{d-2}I."""
    elim = Eliminator()
    for r in relations:
        elim.insert(r.terms)
    n = len(gens)
    for k in range(3, d + 1):
        prev = [row for _, row, _ in elim.reduced_rows()] if elim.rank else []
        elim = Eliminator()
        for row in prev:
            for x in range(n):
                elim.insert({w + (x,): c for w, c in row.items()})
        for lw in gens.words(k - 2):
            for r in relations:
                elim.insert({lw + w: c for w, c in r.terms.items()})
    return elim


def dim_graded(pres, d: int, bound: int | None = None) -> int:
    """dim of the degree-d part of T(W)/(I), by exact elimination."""
    bound = degree_bound(bound)
    if d > bound:
        raise BoundExceeded(f"degree {d} exceeds the bound {bound}")
    if d < 0:
        return 0
    gens = pres.gens
    n = len(gens)
    if d < 2:
        return n ** d
    relations = pres.relations if hasattr(pres, "relations") else list(pres)
    if not relations:
        return n ** d
    return n ** d - _ideal_component(gens, relations, d).rank


def hilbert_prefix(pres, dmax: int, bound: int | None = None) -> list:
    bound = degree_bound(bound)
    if dmax > bound:
        raise BoundExceeded(f"degree {dmax} exceeds the bound {bound}")
    return [dim_graded(pres, d, bound) for d in range(dmax + 1)]


def tensor_series(a: list, b: list) -> list:
    """Coefficients of the product of two Hilbert series prefixes."""
    return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(min(len(a), len(b)))]
