"""Skew monoidal structures and the generic coherence-law checkers.

The associator and unitors follow the "right-monoidal" orientation:

    assoc(A, B, C): A(BC) -> (AB)C
    lunit(A):       A -> IA
    runit(A):       AI -> A

`check_skew_laws` verifies the pentagon, the three triangles, the unitor
identity and bifunctoriality samples; exact diagram orientations are
fixed here once and shared by every instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .core import FiniteCategory, FunctorData, IllTyped, Mor
from .report import Budget, CheckReport, LawRun


class ShapeError(Exception):
    """A structure component has the wrong source or target."""


class MissingWitness(Exception):
    """A required inverse/bijection witness was not supplied."""


@dataclass(frozen=True)
class SkewMonoidalStructure:
    name: str
    base: FiniteCategory
    unit: Any
    tensor_obj: Callable  # (A, B) -> object
    tensor_mor: Callable  # (f, g) -> Mor
    assoc: Callable       # (A, B, C) -> Mor A(BC) -> (AB)C
    lunit: Callable       # A -> Mor A -> IA
    runit: Callable       # A -> Mor AI -> A
    coherence_inverses: "InvertibilityWitness | None" = None

    def t(self, a, b):
        return self.tensor_obj(a, b)

    def tm(self, f: Mor, g: Mor) -> Mor:
        return self.tensor_mor(f, g)

    def idm(self, a) -> Mor:
        return self.base.id(a)


@dataclass(frozen=True)
class InvertibilityWitness:
    """Candidate two-sided inverses for the coherence data."""

    assoc_inv: Callable | None = None  # (A, B, C) -> Mor (AB)C -> A(BC)
    lunit_inv: Callable | None = None  # A -> Mor IA -> A
    runit_inv: Callable | None = None  # A -> Mor A -> AI


@dataclass(frozen=True)
class LaxMonoidalFunctorData:
    """A functor with mult: FB (x) FC -> F(B (x) C) and a unit map."""

    name: str
    src: SkewMonoidalStructure
    tgt: SkewMonoidalStructure
    functor: FunctorData
    mult: Callable   # (B, C) -> Mor
    unit_map: Mor    # I_tgt -> F(I_src)


@dataclass(frozen=True)
class MonoidalNatData:
    """A natural transformation compatible with mult and unit maps."""

    src: LaxMonoidalFunctorData
    tgt: LaxMonoidalFunctorData
    component: Callable  # object -> Mor


@dataclass(frozen=True)
class LaxMonoidalComonad:
    functor: LaxMonoidalFunctorData  # an endofunctor: src is tgt
    counit: Callable   # C -> Mor T(C) -> C
    comult: Callable   # C -> Mor T(C) -> T(T(C))


class ComonadLawViolation(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _shape_ok(run: LawRun, cat: FiniteCategory, m: Mor, src, tgt,
              inst: tuple, what: str) -> bool:
    run.tick()
    if (m.src is not src and m.src != src) or (m.tgt is not tgt and m.tgt != tgt):
        run.error(inst, "shape", "%s endpoints wrong" % what)
        return False
    if cat.valid_mor is not None and not cat.valid_mor(m):
        run.error(inst, "shape", "%s is not a morphism of %s" % (what, cat.name))
        return False
    return True


def _guarded(run: LawRun, inst: tuple, thunk):
    try:
        return thunk()
    except IllTyped as e:
        run.error(inst, "ill-typed", str(e))
        return None


# ---------------------------------------------------------------------------
# skew monoidal laws


def check_skew_laws(s: SkewMonoidalStructure, budget: Budget = Budget()) -> CheckReport:
    cat = s.base
    eq = cat.mor_eq
    report = CheckReport("skew-laws:" + s.name,
                         meta={"structure": s.name, "seed": budget.seed,
                               "cap": budget.cap})
    objs = cat.objects
    label = cat.obj_label

    # component shapes first: a mis-typed component is a construction bug
    triples = budget.plan("shape:" + s.name, objs, objs, objs)
    run_shape = LawRun("component-shape",
                       "assoc/lunit/runit components are well-typed morphisms",
                       triples, budget.seed)
    for a, b, c in triples:
        inst = (label(a), label(b), label(c))
        _shape_ok(run_shape, cat, s.assoc(a, b, c),
                  s.t(a, s.t(b, c)), s.t(s.t(a, b), c), inst, "assoc")
        _shape_ok(run_shape, cat, s.lunit(a), a, s.t(s.unit, a), inst, "lunit")
        _shape_ok(run_shape, cat, s.runit(a), s.t(a, s.unit), a, inst, "runit")

    pairs = budget.plan("tid:" + s.name, objs, objs)
    run_tid = LawRun("tensor-identity", "id (x) id == id", pairs, budget.seed)
    for a, b in pairs:
        run_tid.compare(eq, s.tm(s.idm(a), s.idm(b)), s.idm(s.t(a, b)),
                        (label(a), label(b)))

    run_ic = _interchange(s, budget)

    quads = budget.plan("pentagon:" + s.name, objs, objs, objs, objs)
    run_pent = LawRun("pentagon",
                      "both composites A(B(CD)) -> ((AB)C)D agree",
                      quads, budget.seed)
    for a, b, c, d in quads:
        inst = (label(a), label(b), label(c), label(d))
        lhs = _guarded(run_pent, inst, lambda: cat.comp(
            s.assoc(a, b, s.t(c, d)), s.assoc(s.t(a, b), c, d)))
        rhs = _guarded(run_pent, inst, lambda: cat.comp(
            cat.comp(s.tm(s.idm(a), s.assoc(b, c, d)), s.assoc(a, s.t(b, c), d)),
            s.tm(s.assoc(a, b, c), s.idm(d))))
        if lhs is not None and rhs is not None:
            run_pent.compare(eq, lhs, rhs, inst)

    pairs2 = budget.plan("tri:" + s.name, objs, objs)
    run_t1 = LawRun("triangle-left", "lunit(AB); assoc == lunit(A) (x) id",
                    pairs2, budget.seed)
    run_t2 = LawRun("triangle-middle",
                    "(id (x) lunit); assoc; (runit (x) id) == id on AB",
                    pairs2, budget.seed)
    run_t3 = LawRun("triangle-right", "assoc; runit(AB) == id (x) runit",
                    pairs2, budget.seed)
    for a, b in pairs2:
        inst = (label(a), label(b))
        lhs = _guarded(run_t1, inst, lambda: cat.comp(
            s.lunit(s.t(a, b)), s.assoc(s.unit, a, b)))
        if lhs is not None:
            run_t1.compare(eq, lhs, s.tm(s.lunit(a), s.idm(b)), inst)
        lhs = _guarded(run_t2, inst, lambda: cat.comp(
            cat.comp(s.tm(s.idm(a), s.lunit(b)), s.assoc(a, s.unit, b)),
            s.tm(s.runit(a), s.idm(b))))
        if lhs is not None:
            run_t2.compare(eq, lhs, s.idm(s.t(a, b)), inst)
        lhs = _guarded(run_t3, inst, lambda: cat.comp(
            s.assoc(a, b, s.unit), s.runit(s.t(a, b))))
        if lhs is not None:
            run_t3.compare(eq, lhs, s.tm(s.idm(a), s.runit(b)), inst)

    run_u = LawRun("unitor-identity", "lunit(I); runit(I) == id(I)")
    lhs = _guarded(run_u, ("I",), lambda: cat.comp(s.lunit(s.unit), s.runit(s.unit)))
    if lhs is not None:
        run_u.compare(eq, lhs, s.idm(s.unit), ("I",))

    report.records = [run_shape.record, run_tid.record, run_ic.record,
                      run_pent.record, run_t1.record, run_t2.record,
                      run_t3.record, run_u.record]
    return report


def _interchange(s: SkewMonoidalStructure, budget: Budget) -> LawRun:
    """(f (x) g);(f' (x) g') == (f;f') (x) (g;g') on sampled morphisms."""
    cat = s.base
    objs = cat.objects
    plan = budget.plan("interchange:" + s.name, objs, objs, objs, objs, objs, objs)
    run = LawRun("tensor-interchange",
                 "(f (x) g);(f2 (x) g2) == (f;f2) (x) (g;g2)", plan, budget.seed)
    rng = plan.rng()
    for a, b, c, d, e, z in plan:
        fs, f2s = cat.sample_mors(a, b), cat.sample_mors(b, c)
        gs, g2s = cat.sample_mors(d, e), cat.sample_mors(e, z)
        if not (fs and f2s and gs and g2s):
            continue
        f = fs[rng.randrange(len(fs))]
        f2 = f2s[rng.randrange(len(f2s))]
        g = gs[rng.randrange(len(gs))]
        g2 = g2s[rng.randrange(len(g2s))]
        inst = tuple(cat.obj_label(o) for o in (a, b, c, d, e, z))
        lhs = _guarded(run, inst,
                       lambda: cat.comp(s.tm(f, g), s.tm(f2, g2)))
        if lhs is not None:
            run.compare(cat.mor_eq, lhs, s.tm(cat.comp(f, f2), cat.comp(g, g2)),
                        inst)
    return run


def check_monoidal_invertibility(s: SkewMonoidalStructure,
                                 w: InvertibilityWitness,
                                 budget: Budget = Budget()) -> CheckReport:
    """Each coherence component composes with its candidate to identities."""
    cat = s.base
    eq = cat.mor_eq
    report = CheckReport("invertibility:" + s.name,
                         meta={"structure": s.name, "seed": budget.seed,
                               "cap": budget.cap})
    label = cat.obj_label

    def invert_ok(run: LawRun, m: Mor, inv: Mor | None, inst: tuple) -> None:
        run.tick()
        if inv is None:
            run.error(inst, "missing-witness", "no candidate inverse")
            return
        if inv.src != m.tgt or inv.tgt != m.src:
            run.error(inst, "shape", "candidate inverse endpoints wrong")
            return
        if cat.valid_mor is not None and not cat.valid_mor(inv):
            run.fail(inst, inv.payload, None,
                     "candidate inverse is not a morphism of %s" % cat.name)
            return
        if not eq(cat.comp(m, inv), cat.id(m.src)):
            run.fail(inst, cat.comp(m, inv).payload, cat.id(m.src).payload,
                     "m;inv != id")
        if not eq(cat.comp(inv, m), cat.id(m.tgt)):
            run.fail(inst, cat.comp(inv, m).payload, cat.id(m.tgt).payload,
                     "inv;m != id")

    triples = budget.plan("inv-assoc:" + s.name, cat.objects, cat.objects,
                          cat.objects)
    run_a = LawRun("assoc-invertible", "assoc has a two-sided inverse",
                   triples, budget.seed)
    for a, b, c in triples:
        inv = w.assoc_inv(a, b, c) if w.assoc_inv is not None else None
        invert_ok(run_a, s.assoc(a, b, c), inv, (label(a), label(b), label(c)))

    singles = budget.plan("inv-unit:" + s.name, cat.objects)
    run_l = LawRun("lunit-invertible", "lunit has a two-sided inverse",
                   singles, budget.seed)
    run_r = LawRun("runit-invertible", "runit has a two-sided inverse",
                   singles, budget.seed)
    for (a,) in singles:
        linv = w.lunit_inv(a) if w.lunit_inv is not None else None
        rinv = w.runit_inv(a) if w.runit_inv is not None else None
        invert_ok(run_l, s.lunit(a), linv, (label(a),))
        invert_ok(run_r, s.runit(a), rinv, (label(a),))

    report.records = [run_a.record, run_l.record, run_r.record]
    return report


# ---------------------------------------------------------------------------
# lax monoidal functors, monoidal naturals, comonads


def check_lax_monoidal_functor(f: LaxMonoidalFunctorData,
                               budget: Budget = Budget()) -> CheckReport:
    s, t = f.src, f.tgt
    cat = t.base
    eq = cat.mor_eq
    F, Fo = f.functor.on_mor, f.functor.on_obj
    report = CheckReport("lax-functor:" + f.name, meta={"seed": budget.seed})
    label = s.base.obj_label

    triples = budget.plan("laxhex:" + f.name, s.base.objects, s.base.objects,
                          s.base.objects)
    run_hex = LawRun("lax-assoc",
                     "assoc; (mult (x) id); mult == (id (x) mult); mult; F(assoc)",
                     triples, budget.seed)
    for a, b, c in triples:
        inst = (label(a), label(b), label(c))
        lhs = _guarded(run_hex, inst, lambda: cat.comp(
            cat.comp(t.assoc(Fo(a), Fo(b), Fo(c)),
                     t.tm(f.mult(a, b), t.idm(Fo(c)))),
            f.mult(s.t(a, b), c)))
        rhs = _guarded(run_hex, inst, lambda: cat.comp(
            cat.comp(t.tm(t.idm(Fo(a)), f.mult(b, c)), f.mult(a, s.t(b, c))),
            F(s.assoc(a, b, c))))
        if lhs is not None and rhs is not None:
            run_hex.compare(eq, lhs, rhs, inst)

    singles = budget.plan("laxunit:" + f.name, s.base.objects)
    run_lu = LawRun("lax-left-unit",
                    "lunit; (unit_map (x) id); mult == F(lunit)",
                    singles, budget.seed)
    run_ru = LawRun("lax-right-unit",
                    "(id (x) unit_map); mult; F(runit) == runit",
                    singles, budget.seed)
    for (c,) in singles:
        inst = (label(c),)
        lhs = _guarded(run_lu, inst, lambda: cat.comp(
            cat.comp(t.lunit(Fo(c)), t.tm(f.unit_map, t.idm(Fo(c)))),
            f.mult(s.unit, c)))
        if lhs is not None:
            run_lu.compare(eq, lhs, F(s.lunit(c)), inst)
        lhs = _guarded(run_ru, inst, lambda: cat.comp(
            cat.comp(t.tm(t.idm(Fo(c)), f.unit_map), f.mult(c, s.unit)),
            F(s.runit(c))))
        if lhs is not None:
            run_ru.compare(eq, lhs, t.runit(Fo(c)), inst)

    report.records = [run_hex.record, run_lu.record, run_ru.record]
    return report


def check_monoidal_nat(nat: MonoidalNatData, budget: Budget = Budget()) -> CheckReport:
    f, g = nat.src, nat.tgt
    s, t = f.src, f.tgt
    cat = t.base
    eq = cat.mor_eq
    report = CheckReport("monoidal-nat", meta={"seed": budget.seed})
    label = s.base.obj_label

    gens = s.base.generators()
    plan = budget.plan("natsq", gens)
    run_nat = LawRun("naturality", "F(h); t == t; G(h)", plan, budget.seed)
    for (h,) in plan:
        inst = (label(h.src), label(h.tgt))
        run_nat.tick()
        comp = nat.component(h.src)
        if cat.valid_mor is not None and not cat.valid_mor(comp):
            run_nat.fail(inst, comp.payload, None,
                         "component is not a morphism of %s" % cat.name)
            continue
        lhs = cat.comp(f.functor.on_mor(h), nat.component(h.tgt))
        rhs = cat.comp(comp, g.functor.on_mor(h))
        if not eq(lhs, rhs):
            run_nat.fail(inst, lhs.payload, rhs.payload)

    pairs = budget.plan("natmult", s.base.objects, s.base.objects)
    run_m = LawRun("mult-square", "mult_F; t == (t (x) t); mult_G",
                   pairs, budget.seed)
    for b, c in pairs:
        inst = (label(b), label(c))
        lhs = _guarded(run_m, inst, lambda: cat.comp(
            f.mult(b, c), nat.component(s.t(b, c))))
        rhs = _guarded(run_m, inst, lambda: cat.comp(
            t.tm(nat.component(b), nat.component(c)), g.mult(b, c)))
        if lhs is not None and rhs is not None:
            run_m.compare(eq, lhs, rhs, inst)

    run_u = LawRun("unit-triangle", "unit_F; t(I) == unit_G")
    lhs = _guarded(run_u, ("I",), lambda: cat.comp(
        f.unit_map, nat.component(s.unit)))
    if lhs is not None:
        run_u.compare(eq, lhs, g.unit_map, ("I",))

    report.records = [run_nat.record, run_m.record, run_u.record]
    return report


def identity_lax_functor(s: SkewMonoidalStructure) -> LaxMonoidalFunctorData:
    F = FunctorData("Id", s.base, s.base, lambda a: a, lambda m: m)
    return LaxMonoidalFunctorData(
        "Id", s, s, F,
        mult=lambda b, c: s.idm(s.t(b, c)),
        unit_map=s.idm(s.unit))


def compose_lax(outer: LaxMonoidalFunctorData,
                inner: LaxMonoidalFunctorData) -> LaxMonoidalFunctorData:
    """outer after inner, with the composite mult and unit maps."""
    s, t = inner.src, outer.tgt
    cat = t.base
    F = FunctorData(
        "%s.%s" % (outer.name, inner.name), s.base, t.base,
        lambda a: outer.functor.on_obj(inner.functor.on_obj(a)),
        lambda m: outer.functor.on_mor(inner.functor.on_mor(m)))

    def mult(b, c):
        return cat.comp(
            outer.mult(inner.functor.on_obj(b), inner.functor.on_obj(c)),
            outer.functor.on_mor(inner.mult(b, c)))

    unit_map = cat.comp(outer.unit_map, outer.functor.on_mor(inner.unit_map))
    return LaxMonoidalFunctorData(F.name, s, t, F, mult, unit_map)


def check_comonad(t: LaxMonoidalComonad, budget: Budget = Budget()) -> CheckReport:
    """Counit/coassociativity laws plus monoidality of counit and comult."""
    f = t.functor
    s = f.src
    cat = s.base
    eq = cat.mor_eq
    T, To = f.functor.on_mor, f.functor.on_obj
    report = CheckReport("comonad:" + f.name, meta={"seed": budget.seed})
    label = cat.obj_label

    singles = budget.plan("comonad:" + f.name, cat.objects)
    run_l = LawRun("counit-left", "comult; counit(TC) == id", singles, budget.seed)
    run_r = LawRun("counit-right", "comult; T(counit) == id", singles, budget.seed)
    run_a = LawRun("coassoc", "comult; comult(TC) == comult; T(comult)",
                   singles, budget.seed)
    for (c,) in singles:
        inst = (label(c),)
        run_l.compare(eq, cat.comp(t.comult(c), t.counit(To(c))),
                      cat.id(To(c)), inst)
        run_r.compare(eq, cat.comp(t.comult(c), T(t.counit(c))),
                      cat.id(To(c)), inst)
        run_a.compare(eq, cat.comp(t.comult(c), t.comult(To(c))),
                      cat.comp(t.comult(c), T(t.comult(c))), inst)

    report.records = [run_l.record, run_r.record, run_a.record]

    ident = identity_lax_functor(s)
    tt = compose_lax(f, f)
    counit_nat = MonoidalNatData(f, ident, lambda c: t.counit(c))
    comult_nat = MonoidalNatData(f, tt, lambda c: t.comult(c))
    report.extend(check_monoidal_nat(counit_nat, budget), prefix="counit-")
    report.extend(check_monoidal_nat(comult_nat, budget), prefix="comult-")
    return report
