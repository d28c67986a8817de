"""Monoidal structure builders for the concrete instance categories.

Thin categories have strictly associative value-level tensors here, so
all coherence components are identity-shaped morphisms; generalized
metric spaces get identity index maps as coherence data because point
tuples flatten row-major.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from ..core import FiniteCategory, Mor, thin_category
from ..monoidal import InvertibilityWitness, SkewMonoidalStructure
from .extrat import INF, ExtRat, emin
from .gms import FinGMS, gms_category, gms_tensor, one_point


def thin_monoidal(cat: FiniteCategory, tensor: Callable, unit,
                  name: str | None = None) -> SkewMonoidalStructure:
    """Monoidal structure on a preorder with a strictly associative tensor."""

    def tensor_mor(f, g):
        return Mor(tensor(f.src, g.src), tensor(f.tgt, g.tgt))

    return SkewMonoidalStructure(
        name or cat.name, cat, unit,
        tensor_obj=tensor,
        tensor_mor=tensor_mor,
        assoc=lambda a, b, c: Mor(tensor(a, tensor(b, c)),
                                  tensor(tensor(a, b), c)),
        lunit=lambda a: Mor(a, tensor(unit, a)),
        runit=lambda a: Mor(tensor(a, unit), a),
        coherence_inverses=InvertibilityWitness(
            assoc_inv=lambda a, b, c: Mor(tensor(tensor(a, b), c),
                                          tensor(a, tensor(b, c))),
            lunit_inv=lambda a: Mor(tensor(unit, a), a),
            runit_inv=lambda a: Mor(a, tensor(a, unit))))


DEFAULT_GRID = (ExtRat(0), ExtRat(Fraction(1, 2)), ExtRat(1), ExtRat(2), INF)


def grid_structure(grid: Sequence[ExtRat] = DEFAULT_GRID) -> SkewMonoidalStructure:
    """The interval [0, oo] restricted to a finite grid, as a cocartesian
    monoidal preorder: a unique morphism x -> y iff x >= y, tensor min,
    unit oo."""
    cat = thin_category("grid[0,inf]", tuple(grid), lambda a, b: a >= b,
                        obj_repr=str)
    return thin_monoidal(cat, emin, INF)


def truth_values_structure() -> SkewMonoidalStructure:
    """The two truth values F -> T with conjunction; unit is T."""
    cat = thin_category("truth", (False, True), lambda a, b: (not a) or b,
                        obj_repr=lambda v: "T" if v else "F")
    return thin_monoidal(cat, lambda a, b: a and b, True)


def addition_structure(max_exp: int = 3) -> SkewMonoidalStructure:
    """Natural-number exponents under addition: a unique morphism
    x -> y iff x >= y, tensor x + y, unit 0.  The internal hom is
    truncated subtraction."""
    cat = thin_category("exp(+)", tuple(range(max_exp + 1)),
                        lambda a, b: a >= b, obj_repr=str)
    return thin_monoidal(cat, lambda a, b: a + b, 0)


# ---------------------------------------------------------------------------
# generalized metric spaces


def gms_structure(objects: Sequence[FinGMS],
                  name: str = "GMS") -> SkewMonoidalStructure:
    """Symmetric monoidal structure: tensor is product-with-added-distances.

    Tensors built here are lazy and cached per operand pair, so the big
    composite objects produced by pentagon sweeps never materialize
    their distance tables unless something reads them.
    """
    cat = gms_category(tuple(objects), name)
    unit = one_point()
    cache: dict = {}

    def t(a: FinGMS, b: FinGMS) -> FinGMS:
        key = (a.uid, b.uid)
        out = cache.get(key)
        if out is None:
            out = gms_tensor(a, b, validate=False, lazy=True)
            cache[key] = out
        return out

    def tensor_mor(f: Mor, g: Mor) -> Mor:
        nb, nb2 = len(g.src), len(g.tgt)
        fp, gp = f.payload, g.payload
        payload = tuple(fp[i] * nb2 + gp[j]
                        for i in range(len(f.src)) for j in range(nb))
        return Mor(t(f.src, g.src), t(f.tgt, g.tgt), payload)

    def ident(n: int) -> tuple:
        return tuple(range(n))

    return SkewMonoidalStructure(
        name, cat, unit,
        tensor_obj=t,
        tensor_mor=tensor_mor,
        assoc=lambda a, b, c: Mor(t(a, t(b, c)), t(t(a, b), c),
                                  ident(len(a) * len(b) * len(c))),
        lunit=lambda a: Mor(a, t(unit, a), ident(len(a))),
        runit=lambda a: Mor(t(a, unit), a, ident(len(a))),
        coherence_inverses=InvertibilityWitness(
            assoc_inv=lambda a, b, c: Mor(t(t(a, b), c), t(a, t(b, c)),
                                          ident(len(a) * len(b) * len(c))),
            lunit_inv=lambda a: Mor(t(unit, a), a, ident(len(a))),
            runit_inv=lambda a: Mor(a, t(a, unit), ident(len(a)))))
