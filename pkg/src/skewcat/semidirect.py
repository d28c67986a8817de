"""The semidirect product construction.

Given a weak action of X on C, the product category X x C carries a skew
monoidal structure with

    <X, B> (x) <Y, C> = <X (x) Y, B^Y (x) C>

and coherence data assembled from the action's phi/psi maps.  The
degenerate one-object case recovers the skew structure corepresented by
a lax monoidal comonad, and the whole construction restricts to the
classical semidirect product on discrete monoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .action import (InvalidAction, MonoidAction, StrongAction, WeakAction,
                     check_weak_action, lift_monoid_action)
from .core import FiniteCategory, FunctorData, Mor, discrete_category, product_category
from .monoidal import (ComonadLawViolation, InvertibilityWitness,
                       LaxMonoidalComonad, LaxMonoidalFunctorData, ShapeError,
                       SkewMonoidalStructure, check_comonad)
from .report import Budget, CheckReport, LawRun


@dataclass(frozen=True)
class SemidirectStructure:
    structure: SkewMonoidalStructure
    action: WeakAction
    pi_x: FunctorData
    pi_c: FunctorData


def build_semidirect(a: WeakAction, validate: bool = True,
                     budget: Budget | None = None) -> SemidirectStructure:
    """Skew monoidal structure on the product category from a weak action.

    `validate` runs check_weak_action first (disable it for mutation
    tests or when the action was already checked by the caller).
    """
    if validate:
        rep = check_weak_action(a, budget or Budget(cap=2000))
        if not rep.passed:
            raise InvalidAction("action fails its coherence check; "
                                "first records: %s" % rep.lines()[:4])

    X, C = a.acting, a.acted
    xc, cc = X.base, C.base
    prod, pi_x, pi_c = product_category(xc, cc)

    def tensor_obj(p, q):
        (x, b), (y, c) = p, q
        return (X.t(x, y), C.t(a.act_obj(b, y), c))

    def tensor_mor(m, n):
        f, g = m.payload           # f: x -> x2, g: b -> b2
        h, k = n.payload           # h: y -> y2, k: c -> c2
        gx = cc.comp(a.act_mor_c(g, h.src), a.act_mor_x(h, g.tgt))
        return Mor(tensor_obj(m.src, n.src), tensor_obj(m.tgt, n.tgt),
                   (X.tm(f, h), C.tm(gx, k)))

    def assoc(p, q, r):
        (x, aa), (y, b), (z, c) = p, q, r
        yz = X.t(y, z)
        bz = a.act_obj(b, z)
        ay = a.act_obj(aa, y)
        ayz = a.act_obj(ay, z)
        c_part = cc.comp(
            cc.comp(C.tm(a.psi2(y, z, aa), cc.id(C.t(bz, c))),
                    C.assoc(ayz, bz, c)),
            C.tm(a.phi2(z, ay, b), cc.id(c)))
        return Mor(tensor_obj(p, tensor_obj(q, r)),
                   tensor_obj(tensor_obj(p, q), r),
                   (X.assoc(x, y, z), c_part))

    def lunit(p):
        x, c = p
        c_part = cc.comp(C.lunit(c), C.tm(a.phi0(x), cc.id(c)))
        return Mor(p, tensor_obj((X.unit, C.unit), p),
                   (X.lunit(x), c_part))

    def runit(p):
        x, c = p
        c_part = cc.comp(C.tm(a.psi0(c), cc.id(C.unit)), C.runit(c))
        return Mor(tensor_obj(p, (X.unit, C.unit)), p,
                   (X.runit(x), c_part))

    witness = _semidirect_inverses(a, tensor_obj)
    structure = SkewMonoidalStructure(
        "semidirect:" + a.name, prod, (X.unit, C.unit),
        tensor_obj, tensor_mor, assoc, lunit, runit,
        coherence_inverses=witness)
    return SemidirectStructure(structure, a, pi_x, pi_c)


def _semidirect_inverses(a: WeakAction, tensor_obj) -> InvertibilityWitness | None:
    """Inverse coherence data, assembled when the action is strong and
    both base structures are monoidal."""
    X, C = a.acting, a.acted
    wx, wc = X.coherence_inverses, C.coherence_inverses
    if not isinstance(a, StrongAction) or wx is None or wc is None:
        return None
    if None in (wx.assoc_inv, wx.lunit_inv, wx.runit_inv,
                wc.assoc_inv, wc.lunit_inv, wc.runit_inv):
        return None
    cc = C.base

    def assoc_inv(p, q, r):
        (x, aa), (y, b), (z, c) = p, q, r
        bz = a.act_obj(b, z)
        ay = a.act_obj(aa, y)
        ayz = a.act_obj(ay, z)
        c_part = cc.comp(
            cc.comp(C.tm(a.phi2_inv(z, ay, b), cc.id(c)),
                    wc.assoc_inv(ayz, bz, c)),
            C.tm(a.psi2_inv(y, z, aa), cc.id(C.t(bz, c))))
        return Mor(tensor_obj(tensor_obj(p, q), r),
                   tensor_obj(p, tensor_obj(q, r)),
                   (wx.assoc_inv(x, y, z), c_part))

    def lunit_inv(p):
        x, c = p
        c_part = cc.comp(C.tm(a.phi0_inv(x), cc.id(c)), wc.lunit_inv(c))
        return Mor(tensor_obj((X.unit, C.unit), p), p,
                   (wx.lunit_inv(x), c_part))

    def runit_inv(p):
        x, c = p
        c_part = cc.comp(wc.runit_inv(c), C.tm(a.psi0_inv(c), cc.id(C.unit)))
        return Mor(p, tensor_obj(p, (X.unit, C.unit)),
                   (wx.runit_inv(x), c_part))

    return InvertibilityWitness(assoc_inv, lunit_inv, runit_inv)


# ---------------------------------------------------------------------------
# the one-object degenerate case: corepresented skew structures


def one_object_action(t: LaxMonoidalComonad, name: str = "comonad") -> WeakAction:
    """The weak action of the terminal category induced by a comonad."""
    C = t.functor.src
    star_cat = discrete_category(name + ":*", ("*",))

    def star_mor(f):
        return Mor("*", "*")

    X = SkewMonoidalStructure(
        name + ":*", star_cat, "*",
        tensor_obj=lambda a, b: "*",
        tensor_mor=lambda f, g: Mor("*", "*"),
        assoc=lambda a, b, c: Mor("*", "*"),
        lunit=lambda a: Mor("*", "*"),
        runit=lambda a: Mor("*", "*"),
        coherence_inverses=InvertibilityWitness(
            lambda a, b, c: Mor("*", "*"),
            lambda a: Mor("*", "*"),
            lambda a: Mor("*", "*")))

    T = t.functor
    return WeakAction(
        name, X, C,
        act_obj=lambda c, x: T.functor.on_obj(c),
        act_mor_c=lambda g, x: T.functor.on_mor(g),
        act_mor_x=lambda f, c: C.base.id(T.functor.on_obj(c)),
        phi2=lambda x, b, c: T.mult(b, c),
        phi0=lambda x: T.unit_map,
        psi2=lambda x, y, c: t.comult(c),
        psi0=lambda c: t.counit(c))


def corepresented_skew(t: LaxMonoidalComonad, validate: bool = True,
                       budget: Budget | None = None) -> SkewMonoidalStructure:
    """Skew structure on C with tensor T(A) (x) B."""
    if validate:
        rep = check_comonad(t, budget or Budget(cap=2000))
        if not rep.passed:
            raise ComonadLawViolation(
                "comonad laws fail: %s" % rep.lines()[:4])
    C = t.functor.src
    cc = C.base
    T, To = t.functor.functor.on_mor, t.functor.functor.on_obj

    def tensor_obj(a, b):
        return C.t(To(a), b)

    def tensor_mor(f, g):
        return C.tm(T(f), g)

    def assoc(a, b, c):
        tb = To(b)
        return cc.comp(
            cc.comp(C.tm(t.comult(a), cc.id(C.t(tb, c))),
                    C.assoc(To(To(a)), tb, c)),
            C.tm(t.functor.mult(To(a), b), cc.id(c)))

    def lunit(a):
        return cc.comp(C.lunit(a), C.tm(t.functor.unit_map, cc.id(a)))

    def runit(a):
        return cc.comp(C.tm(t.counit(a), cc.id(C.unit)), C.runit(a))

    return SkewMonoidalStructure(
        "corepresented:" + t.functor.name, cc, C.unit,
        tensor_obj, tensor_mor, assoc, lunit, runit)


# ---------------------------------------------------------------------------
# the monoid-level reduction


@dataclass(frozen=True)
class SemidirectMonoid:
    """Multiplication table on pairs <x, c> with unit <1, 1>."""

    elements: tuple          # pairs (x, c)
    table: tuple             # table[i][j] indexes into elements
    unit: int

    def index(self, x: int, c: int) -> int:
        return self.elements.index((x, c))

    def mult(self, p, q):
        return self.elements[self.table[self.elements.index(p)]
                             [self.elements.index(q)]]


def monoid_semidirect(m: MonoidAction) -> SemidirectMonoid:
    """<x, b><y, c> = <xy, b^y c>, verified associative and unital."""
    m.validate()
    xs, cs = range(len(m.x_table)), range(len(m.c_table))
    elements = tuple((x, c) for x in xs for c in cs)
    index = {e: i for i, e in enumerate(elements)}

    def mult(p, q):
        (x, b), (y, c) = p, q
        return (m.x_table[x][y], m.c_table[m.act[b][y]][c])

    table = tuple(tuple(index[mult(p, q)] for q in elements) for p in elements)
    unit = index[(m.x_unit, m.c_unit)]
    n = len(elements)
    for i in range(n):
        if table[unit][i] != i or table[i][unit] != i:
            raise AssertionError("semidirect product is not unital at %d" % i)
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise AssertionError(
                        "semidirect product is not associative at %d,%d,%d"
                        % (i, j, k))
    return SemidirectMonoid(elements, table, unit)


def check_monoid_reduction(m: MonoidAction) -> CheckReport:
    """The categorical construction on the lifted action reduces to the
    monoid-level table, with all coherence components identities."""
    report = CheckReport("monoid-reduction")
    sd_mon = monoid_semidirect(m)
    action = lift_monoid_action(m)
    sd = build_semidirect(action, validate=False)
    s = sd.structure

    run_t = LawRun("tensor-table",
                   "object tensor of the lifted structure matches the table")
    for p in sd_mon.elements:
        for q in sd_mon.elements:
            run_t.tick()
            got = s.tensor_obj(p, q)
            want = sd_mon.mult(p, q)
            if got != want:
                run_t.fail((repr(p), repr(q)), got, want)
    run_u = LawRun("unit-object", "units agree")
    run_u.tick()
    if (m.x_unit, m.c_unit) != sd_mon.elements[sd_mon.unit]:
        run_u.fail(("unit",), None, None, "unit mismatch")

    run_c = LawRun("coherence-identity",
                   "assoc/lunit/runit components are identities")
    for p in sd_mon.elements:
        for q in sd_mon.elements:
            for r in sd_mon.elements:
                run_c.tick()
                comp = s.assoc(p, q, r)
                if comp.src != comp.tgt:
                    run_c.fail((repr(p), repr(q), repr(r)), None, None,
                               "associator endpoints differ")
        lp = s.lunit(p)
        rp = s.runit(p)
        run_c.tick()
        if lp.src != lp.tgt or rp.src != rp.tgt:
            run_c.fail((repr(p),), None, None, "unitor endpoints differ")

    report.records = [run_t.record, run_u.record, run_c.record]
    return report
