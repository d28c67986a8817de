"""Bounded finite lattices, viewed as thin cocartesian monoidal categories."""

from __future__ import annotations

from typing import Sequence

from ..core import FiniteCategory, Mor, thin_category
from .structures import thin_monoidal


class LatticeError(ValueError):
    pass


class FinLattice:
    """Elements with a partial order, closed under join and meet."""

    def __init__(self, elements: Sequence, leq_pairs):
        self.elements = tuple(elements)
        self._leq = {(a, b): False for a in elements for b in elements}
        for a, b in leq_pairs:
            self._leq[(a, b)] = True
        self._validate_order()
        self.join = {}
        self.meet = {}
        for a in elements:
            for b in elements:
                self.join[(a, b)] = self._bound(a, b, upper=True)
                self.meet[(a, b)] = self._bound(a, b, upper=False)
        self.bottom = self._bound_all(upper=False)
        self.top = self._bound_all(upper=True)

    def leq(self, a, b) -> bool:
        return self._leq[(a, b)]

    def _validate_order(self):
        els = self.elements
        for a in els:
            if not self._leq[(a, a)]:
                raise LatticeError("order is not reflexive at %r" % (a,))
        for a in els:
            for b in els:
                if a != b and self._leq[(a, b)] and self._leq[(b, a)]:
                    raise LatticeError("order is not antisymmetric")
                for c in els:
                    if self._leq[(a, b)] and self._leq[(b, c)] \
                            and not self._leq[(a, c)]:
                        raise LatticeError("order is not transitive")

    def _bound(self, a, b, upper: bool):
        le = self._leq
        if upper:
            cands = [c for c in self.elements if le[(a, c)] and le[(b, c)]]
            best = [c for c in cands
                    if all(le[(c, d)] for d in cands)]
        else:
            cands = [c for c in self.elements if le[(c, a)] and le[(c, b)]]
            best = [c for c in cands
                    if all(le[(d, c)] for d in cands)]
        if len(best) != 1:
            raise LatticeError("no unique %s bound for %r, %r"
                               % ("upper" if upper else "lower", a, b))
        return best[0]

    def _bound_all(self, upper: bool):
        out = self.elements[0]
        for e in self.elements[1:]:
            out = self.join[(out, e)] if upper else self.meet[(out, e)]
        return out

    def category(self, name: str = "lattice") -> FiniteCategory:
        return thin_category(name, self.elements, self.leq, obj_repr=str)

    def cocartesian(self, name: str = "lattice"):
        """Thin monoidal structure with tensor join, unit bottom."""
        return thin_monoidal(self.category(name),
                             lambda a, b: self.join[(a, b)], self.bottom)


def diamond() -> FinLattice:
    """The four-element lattice bot < p, q < top with p, q incomparable."""
    els = ("bot", "p", "q", "top")
    leq = [(a, a) for a in els]
    leq += [("bot", e) for e in els] + [(e, "top") for e in els]
    return FinLattice(els, leq)


def chain(n: int) -> FinLattice:
    els = tuple(range(n))
    return FinLattice(els, [(a, b) for a in els for b in els if a <= b])


def parse_lattice_json(doc: dict) -> FinLattice:
    """Elements plus the list of order pairs."""
    return FinLattice(tuple(doc["elements"]),
                      [tuple(p) for p in doc["leq"]])
