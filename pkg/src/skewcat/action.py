"""Weak and strong actions of one skew monoidal category on another.

An action is stored as component data and checked pointwise; the functor
category of lax monoidal endofunctors is never materialized.  Component
conventions, acting category X and acted category C:

    act_obj(c, x)        the object c^x
    act_mor_c(g, x)      g^x          for g: b -> c in C
    act_mor_x(f, c)      c^f          for f: x -> y in X, a map c^x -> c^y
    phi2(x, b, c)        b^x (x) c^x -> (b (x) c)^x
    phi0(x)              I_C -> I_C^x
    psi2(x, y, c)        c^(x (x) y) -> (c^x)^y
    psi0(c)              c^(I_X) -> c
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .core import FiniteCategory, FunctorData, Mor
from .monoidal import (LawRun, LaxMonoidalFunctorData, MonoidalNatData,
                       SkewMonoidalStructure, _guarded, _shape_ok)
from .report import Budget, CheckReport


class InvalidAction(Exception):
    """A monoid action table violates one of the four action conditions."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class WeakAction:
    name: str
    acting: SkewMonoidalStructure
    acted: SkewMonoidalStructure
    act_obj: Callable
    act_mor_c: Callable
    act_mor_x: Callable
    phi2: Callable
    phi0: Callable
    psi2: Callable
    psi0: Callable

    def endofunctor(self, x) -> LaxMonoidalFunctorData:
        """The lax monoidal endofunctor (-)^x on the acted category."""
        c = self.acted
        F = FunctorData("(-)^%r" % (x,), c.base, c.base,
                        lambda a: self.act_obj(a, x),
                        lambda m: self.act_mor_c(m, x))
        return LaxMonoidalFunctorData(
            F.name, c, c, F,
            mult=lambda b, cc: self.phi2(x, b, cc),
            unit_map=self.phi0(x))

    def nat(self, f: Mor) -> MonoidalNatData:
        """The monoidal natural transformation (-)^f for f: x -> y."""
        return MonoidalNatData(
            self.endofunctor(f.src), self.endofunctor(f.tgt),
            lambda c: self.act_mor_x(f, c))

    def square(self, g: Mor, f: Mor) -> Mor:
        """Diagonal b^x -> b'^y of the naturality square for g: b -> b'."""
        return self.acted.base.comp(
            self.act_mor_c(g, f.src), self.act_mor_x(f, g.tgt))


@dataclass(frozen=True)
class StrongAction(WeakAction):
    """A weak action whose phi/psi structure maps are all invertible.

    The optional fields carry instance-supplied closedness data used by
    the duality and internal-hom constructions: internal homs of the two
    categories, dual data providers, a right adjoint for each (-)^x and
    the bifunctor witnessing hom(B^X, C) = hom(X, B |> C).
    """

    phi2_inv: Callable = None
    phi0_inv: Callable = None
    psi2_inv: Callable = None
    psi0_inv: Callable = None
    x_hom: Any = None
    c_hom: Any = None
    c_cocart: Any = None
    x_dual_for: Callable | None = None
    c_dual_for: Callable | None = None
    right_adjoint: Any = None
    triangle_hom: Any = None


@dataclass(frozen=True)
class MonoidAction:
    """Multiplication tables for X and C plus an action table act[c][x]."""

    x_table: tuple
    c_table: tuple
    act: tuple
    x_unit: int = 0
    c_unit: int = 0

    def violations(self) -> list:
        xs = range(len(self.x_table))
        cs = range(len(self.c_table))
        xm, cm, act = self.x_table, self.c_table, self.act
        out = []
        for b in cs:
            for c in cs:
                for x in xs:
                    if cm[act[b][x]][act[c][x]] != act[cm[b][c]][x]:
                        out.append(("endomorphism", (b, c, x)))
        for x in xs:
            if act[self.c_unit][x] != self.c_unit:
                out.append(("unit-fixed", (x,)))
        for c in cs:
            for x in xs:
                for y in xs:
                    if act[c][xm[x][y]] != act[act[c][x]][y]:
                        out.append(("homomorphism", (c, x, y)))
            if act[c][self.x_unit] != c:
                out.append(("unit-acts-trivially", (c,)))
        return out

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InvalidAction("monoid action conditions fail: %r" % (bad[:3],),
                                witness=bad[0])


# ---------------------------------------------------------------------------
# the full coherence check


def check_weak_action(a: WeakAction, budget: Budget = Budget()) -> CheckReport:
    """All twelve coherence diagram families, plus functoriality and
    naturality of the substrate data."""
    X, C = a.acting, a.acted
    xc, cc = X.base, C.base
    eq = cc.mor_eq
    xo, co = xc.objects, cc.objects
    lx, lc = xc.obj_label, cc.obj_label
    report = CheckReport("weak-action:" + a.name,
                         meta={"action": a.name, "seed": budget.seed,
                               "cap": budget.cap})
    recs = report.records

    # shapes of the four structure map families
    plan = budget.plan("shape:" + a.name, xo, xo, co, co)
    run = LawRun("component-shape", "phi/psi components are well-typed",
                 plan, budget.seed)
    for x, y, b, c in plan:
        inst = (lx(x), lx(y), lc(b), lc(c))
        _shape_ok(run, cc, a.phi2(x, b, c),
                  C.t(a.act_obj(b, x), a.act_obj(c, x)),
                  a.act_obj(C.t(b, c), x), inst, "phi2")
        _shape_ok(run, cc, a.phi0(x), C.unit, a.act_obj(C.unit, x), inst, "phi0")
        _shape_ok(run, cc, a.psi2(x, y, c),
                  a.act_obj(c, X.t(x, y)),
                  a.act_obj(a.act_obj(c, x), y), inst, "psi2")
        _shape_ok(run, cc, a.psi0(c), a.act_obj(c, X.unit), c, inst, "psi0")
    recs.append(run.record)

    # each (-)^x is a functor
    plan = budget.plan("functor:" + a.name, xo, co, co, co)
    run = LawRun("act-functor", "(-)^x preserves identities and composition",
                 plan, budget.seed)
    rng = plan.rng()
    for x, p, q, r in plan:
        inst = (lx(x), lc(p), lc(q), lc(r))
        run.compare(eq, a.act_mor_c(cc.id(p), x), cc.id(a.act_obj(p, x)), inst)
        fs, gs = cc.sample_mors(p, q), cc.sample_mors(q, r)
        if fs and gs:
            f = fs[rng.randrange(len(fs))]
            g = gs[rng.randrange(len(gs))]
            run.compare(eq, a.act_mor_c(cc.comp(f, g), x),
                        cc.comp(a.act_mor_c(f, x), a.act_mor_c(g, x)), inst)
    recs.append(run.record)

    xmors = xc.generators()
    cmors = cc.generators()

    # each (-)^f is natural
    plan = budget.plan("natural:" + a.name, xmors, cmors)
    run = LawRun("act-natural", "g^x; c^f == b^f; g^y for f: x -> y, g: b -> c",
                 plan, budget.seed)
    for f, g in plan:
        inst = (lx(f.src), lx(f.tgt), lc(g.src), lc(g.tgt))
        run.compare(
            eq,
            cc.comp(a.act_mor_c(g, f.src), a.act_mor_x(f, g.tgt)),
            cc.comp(a.act_mor_x(f, g.src), a.act_mor_c(g, f.tgt)),
            inst)
    recs.append(run.record)

    # lax monoidal structure of each (-)^x: hexagon plus two unit squares
    plan = budget.plan("lax-assoc:" + a.name, xo, co, co, co)
    run = LawRun("lax-assoc",
                 "assoc; (phi2 (x) id); phi2 == (id (x) phi2); phi2; assoc^x",
                 plan, budget.seed)
    for x, p, q, r in plan:
        inst = (lx(x), lc(p), lc(q), lc(r))
        px, qx, rx = a.act_obj(p, x), a.act_obj(q, x), a.act_obj(r, x)
        lhs = _guarded(run, inst, lambda: cc.comp(
            cc.comp(C.assoc(px, qx, rx), C.tm(a.phi2(x, p, q), cc.id(rx))),
            a.phi2(x, C.t(p, q), r)))
        rhs = _guarded(run, inst, lambda: cc.comp(
            cc.comp(C.tm(cc.id(px), a.phi2(x, q, r)), a.phi2(x, p, C.t(q, r))),
            a.act_mor_c(C.assoc(p, q, r), x)))
        if lhs is not None and rhs is not None:
            run.compare(eq, lhs, rhs, inst)
    recs.append(run.record)

    plan = budget.plan("lax-unit:" + a.name, xo, co)
    run_l = LawRun("lax-left-unit",
                   "lunit(c^x); (phi0 (x) id); phi2 == (lunit c)^x",
                   plan, budget.seed)
    run_r = LawRun("lax-right-unit",
                   "(id (x) phi0); phi2; (runit c)^x == runit(c^x)",
                   plan, budget.seed)
    for x, c in plan:
        inst = (lx(x), lc(c))
        cx = a.act_obj(c, x)
        lhs = _guarded(run_l, inst, lambda: cc.comp(
            cc.comp(C.lunit(cx), C.tm(a.phi0(x), cc.id(cx))),
            a.phi2(x, C.unit, c)))
        if lhs is not None:
            run_l.compare(eq, lhs, a.act_mor_c(C.lunit(c), x), inst)
        lhs = _guarded(run_r, inst, lambda: cc.comp(
            cc.comp(C.tm(cc.id(cx), a.phi0(x)), a.phi2(x, c, C.unit)),
            a.act_mor_c(C.runit(c), x)))
        if lhs is not None:
            run_r.compare(eq, lhs, C.runit(cx), inst)
    recs.append(run_l.record)
    recs.append(run_r.record)

    # the two squares making each (-)^f a monoidal natural transformation
    plan = budget.plan("fmult:" + a.name, xmors, co, co)
    run = LawRun("natural-mult", "phi2^x; (bc)^f == (b^f (x) c^f); phi2^y",
                 plan, budget.seed)
    for f, b, c in plan:
        inst = (lx(f.src), lx(f.tgt), lc(b), lc(c))
        lhs = _guarded(run, inst, lambda: cc.comp(
            a.phi2(f.src, b, c), a.act_mor_x(f, C.t(b, c))))
        rhs = _guarded(run, inst, lambda: cc.comp(
            C.tm(a.act_mor_x(f, b), a.act_mor_x(f, c)), a.phi2(f.tgt, b, c)))
        if lhs is not None and rhs is not None:
            run.compare(eq, lhs, rhs, inst)
    recs.append(run.record)

    plan = budget.plan("funit:" + a.name, xmors)
    run = LawRun("natural-unit", "phi0^x; I^f == phi0^y", plan, budget.seed)
    for (f,) in plan:
        inst = (lx(f.src), lx(f.tgt))
        run.compare(eq, cc.comp(a.phi0(f.src), a.act_mor_x(f, C.unit)),
                    a.phi0(f.tgt), inst)
    recs.append(run.record)

    # oplax coherence of psi: the target monoidal category is strict,
    # so the three diagrams compare against plain composites
    plan = budget.plan("oplax-assoc:" + a.name, xo, xo, xo, co)
    run = LawRun("oplax-assoc",
                 "c^assoc; psi2; psi2^z == psi2; psi2",
                 plan, budget.seed)
    for x, y, z, c in plan:
        inst = (lx(x), lx(y), lx(z), lc(c))
        lhs = _guarded(run, inst, lambda: cc.comp(
            cc.comp(a.act_mor_x(X.assoc(x, y, z), c), a.psi2(X.t(x, y), z, c)),
            a.act_mor_c(a.psi2(x, y, c), z)))
        rhs = _guarded(run, inst, lambda: cc.comp(
            a.psi2(x, X.t(y, z), c), a.psi2(y, z, a.act_obj(c, x))))
        if lhs is not None and rhs is not None:
            run.compare(eq, lhs, rhs, inst)
    recs.append(run.record)

    plan = budget.plan("oplax-unit:" + a.name, xo, co)
    run_l = LawRun("oplax-left-unit", "c^lunit(x); psi2; psi0^x == id(c^x)",
                   plan, budget.seed)
    run_r = LawRun("oplax-right-unit", "psi2; psi0(c^x) == c^runit(x)",
                   plan, budget.seed)
    for x, c in plan:
        inst = (lx(x), lc(c))
        lhs = _guarded(run_l, inst, lambda: cc.comp(
            cc.comp(a.act_mor_x(X.lunit(x), c), a.psi2(X.unit, x, c)),
            a.act_mor_c(a.psi0(c), x)))
        if lhs is not None:
            run_l.compare(eq, lhs, cc.id(a.act_obj(c, x)), inst)
        lhs = _guarded(run_r, inst, lambda: cc.comp(
            a.psi2(x, X.unit, c), a.psi0(a.act_obj(c, x))))
        if lhs is not None:
            run_r.compare(eq, lhs, a.act_mor_x(X.runit(x), c), inst)
    recs.append(run_l.record)
    recs.append(run_r.record)

    # psi2 components are monoidal natural transformations
    plan = budget.plan("psi2-mult:" + a.name, xo, xo, co, co)
    run = LawRun("psi2-monoidal-mult",
                 "(psi2 (x) psi2); phi2^y; (phi2^x)^y == phi2^(xy); psi2",
                 plan, budget.seed)
    for x, y, b, c in plan:
        inst = (lx(x), lx(y), lc(b), lc(c))
        xy = X.t(x, y)
        lhs = _guarded(run, inst, lambda: cc.comp(
            cc.comp(C.tm(a.psi2(x, y, b), a.psi2(x, y, c)),
                    a.phi2(y, a.act_obj(b, x), a.act_obj(c, x))),
            a.act_mor_c(a.phi2(x, b, c), y)))
        rhs = _guarded(run, inst, lambda: cc.comp(
            a.phi2(xy, b, c), a.psi2(x, y, C.t(b, c))))
        if lhs is not None and rhs is not None:
            run.compare(eq, lhs, rhs, inst)
    recs.append(run.record)

    plan = budget.plan("psi2-unit:" + a.name, xo, xo)
    run = LawRun("psi2-monoidal-unit",
                 "phi0^y; (phi0^x)^y == phi0^(xy); psi2(I)",
                 plan, budget.seed)
    for x, y in plan:
        inst = (lx(x), lx(y))
        lhs = _guarded(run, inst, lambda: cc.comp(
            a.phi0(y), a.act_mor_c(a.phi0(x), y)))
        rhs = _guarded(run, inst, lambda: cc.comp(
            a.phi0(X.t(x, y)), a.psi2(x, y, C.unit)))
        if lhs is not None and rhs is not None:
            run.compare(eq, lhs, rhs, inst)
    recs.append(run.record)

    # psi0 is a monoidal natural transformation
    plan = budget.plan("psi0-mult:" + a.name, co, co)
    run = LawRun("psi0-monoidal-mult",
                 "phi2^I; psi0(bc) == psi0(b) (x) psi0(c)",
                 plan, budget.seed)
    for b, c in plan:
        inst = (lc(b), lc(c))
        lhs = _guarded(run, inst, lambda: cc.comp(
            a.phi2(X.unit, b, c), a.psi0(C.t(b, c))))
        if lhs is not None:
            run.compare(eq, lhs, C.tm(a.psi0(b), a.psi0(c)), inst)
    recs.append(run.record)

    run = LawRun("psi0-monoidal-unit", "phi0^I; psi0(I) == id(I)")
    lhs = _guarded(run, ("I",), lambda: cc.comp(
        a.phi0(X.unit), a.psi0(C.unit)))
    if lhs is not None:
        run.compare(eq, lhs, cc.id(C.unit), ("I",))
    recs.append(run.record)

    return report


def check_strong_action(a: StrongAction, budget: Budget = Budget()) -> CheckReport:
    """check_weak_action plus two-sided invertibility of phi and psi."""
    report = check_weak_action(a, budget)
    report.name = "strong-action:" + a.name
    X, C = a.acting, a.acted
    cc = C.base
    eq = cc.mor_eq
    lx, lc = X.base.obj_label, cc.obj_label

    def invert_ok(run: LawRun, m: Mor, inv: Mor | None, inst: tuple) -> None:
        run.tick()
        if inv is None:
            run.error(inst, "missing-witness", "no candidate inverse")
            return
        if inv.src != m.tgt or inv.tgt != m.src:
            run.error(inst, "shape", "candidate inverse endpoints wrong")
            return
        if cc.valid_mor is not None and not cc.valid_mor(inv):
            run.fail(inst, inv.payload, None,
                     "candidate inverse is not a morphism of %s" % cc.name)
            return
        if not eq(cc.comp(m, inv), cc.id(m.src)):
            run.fail(inst, cc.comp(m, inv).payload, cc.id(m.src).payload,
                     "m;inv != id")
        if not eq(cc.comp(inv, m), cc.id(m.tgt)):
            run.fail(inst, cc.comp(inv, m).payload, cc.id(m.tgt).payload,
                     "inv;m != id")

    plan = budget.plan("phi2inv:" + a.name, X.base.objects, cc.objects, cc.objects)
    run2 = LawRun("phi2-invertible", "phi2 has a two-sided inverse",
                  plan, budget.seed)
    for x, b, c in plan:
        inv = a.phi2_inv(x, b, c) if a.phi2_inv is not None else None
        invert_ok(run2, a.phi2(x, b, c), inv, (lx(x), lc(b), lc(c)))

    plan = budget.plan("phi0inv:" + a.name, X.base.objects)
    run0 = LawRun("phi0-invertible", "phi0 has a two-sided inverse",
                  plan, budget.seed)
    for (x,) in plan:
        inv = a.phi0_inv(x) if a.phi0_inv is not None else None
        invert_ok(run0, a.phi0(x), inv, (lx(x),))

    plan = budget.plan("psi2inv:" + a.name, X.base.objects, X.base.objects,
                       cc.objects)
    runp2 = LawRun("psi2-invertible", "psi2 has a two-sided inverse",
                   plan, budget.seed)
    for x, y, c in plan:
        inv = a.psi2_inv(x, y, c) if a.psi2_inv is not None else None
        invert_ok(runp2, a.psi2(x, y, c), inv, (lx(x), lx(y), lc(c)))

    plan = budget.plan("psi0inv:" + a.name, cc.objects)
    runp0 = LawRun("psi0-invertible", "psi0 has a two-sided inverse",
                   plan, budget.seed)
    for (c,) in plan:
        inv = a.psi0_inv(c) if a.psi0_inv is not None else None
        invert_ok(runp0, a.psi0(c), inv, (lc(c),))

    report.records.extend([run2.record, run0.record, runp2.record, runp0.record])
    return report


# ---------------------------------------------------------------------------
# lifting plain monoid actions


def _discrete_strict_structure(name: str, n: int, table, unit: int
                               ) -> SkewMonoidalStructure:
    from .core import discrete_category

    cat = discrete_category(name, tuple(range(n)))

    def tensor_obj(i, j):
        return table[i][j]

    def tensor_mor(f, g):
        return Mor(table[f.src][g.src], table[f.tgt][g.tgt])

    def ident_mor(i, j, k=None):
        return Mor(i, j)

    return SkewMonoidalStructure(
        name, cat, unit, tensor_obj, tensor_mor,
        assoc=lambda a, b, c: Mor(table[a][table[b][c]], table[table[a][b]][c]),
        lunit=lambda a: Mor(a, table[unit][a]),
        runit=lambda a: Mor(table[a][unit], a))


def lift_monoid_action(m: MonoidAction, name: str = "lifted") -> WeakAction:
    """Discrete strict monoidal categories with identity structure maps."""
    m.validate()
    X = _discrete_strict_structure(name + ":X", len(m.x_table), m.x_table,
                                   m.x_unit)
    C = _discrete_strict_structure(name + ":C", len(m.c_table), m.c_table,
                                   m.c_unit)
    act = m.act

    return WeakAction(
        name, X, C,
        act_obj=lambda c, x: act[c][x],
        act_mor_c=lambda g, x: Mor(act[g.src][x], act[g.tgt][x]),
        act_mor_x=lambda f, c: Mor(act[c][f.src], act[c][f.tgt]),
        phi2=lambda x, b, c: Mor(C.t(act[b][x], act[c][x]),
                                 act[C.t(b, c)][x]),
        phi0=lambda x: Mor(m.c_unit, act[m.c_unit][x]),
        psi2=lambda x, y, c: Mor(act[c][X.t(x, y)], act[act[c][x]][y]),
        psi0=lambda c: Mor(act[c][m.x_unit], c))


# ---------------------------------------------------------------------------
# exhaustive enumeration of small monoids and their actions (oracle fuel)


def all_monoid_tables(n: int):
    """Every associative unital table on {0..n-1} with unit 0."""
    if n == 0:
        return
    cells = [(i, j) for i in range(n) for j in range(n) if i != 0 and j != 0]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[0] * n for _ in range(n)]
        for j in range(n):
            table[0][j] = j
            table[j][0] = j
        for (i, j), v in zip(cells, values):
            table[i][j] = v
        if _is_associative(table):
            yield tuple(tuple(row) for row in table)


def _is_associative(t) -> bool:
    n = len(t)
    rng = range(n)
    return all(t[t[i][j]][k] == t[i][t[j][k]]
               for i in rng for j in rng for k in rng)


def monoid_endomorphisms(c_table, c_unit: int = 0) -> list:
    """All unit- and product-preserving self-maps of a monoid."""
    n = len(c_table)
    out = []
    for f in itertools.product(range(n), repeat=n):
        if f[c_unit] != c_unit:
            continue
        if all(f[c_table[a][b]] == c_table[f[a]][f[b]]
               for a in range(n) for b in range(n)):
            out.append(f)
    return out


def all_actions(x_table, c_table, x_unit: int = 0, c_unit: int = 0):
    """Every valid action table of X on C.

    Enumerated through maps into the endomorphism monoid of C: complete
    by construction, and cross-checked against the raw table filter in
    the test suite.
    """
    nx = len(x_table)
    endos = monoid_endomorphisms(c_table, c_unit)
    ident = tuple(range(len(c_table)))
    for choice in itertools.product(range(len(endos)), repeat=nx):
        if endos[choice[x_unit]] != ident:
            continue
        # homomorphism: the endo at x*y is "act by x, then act by y"
        if any(endos[choice[x_table[x][y]]]
               != tuple(endos[choice[y]][endos[choice[x]][c]]
                        for c in range(len(c_table)))
               for x in range(nx) for y in range(nx)):
            continue
        act = tuple(tuple(endos[choice[x]][c] for x in range(nx))
                    for c in range(len(c_table)))
        yield MonoidAction(x_table, c_table, act, x_unit, c_unit)


def all_actions_bruteforce(x_table, c_table):
    """Raw filter over every |C|**(|C||X|) table; the slow oracle."""
    nx, nc = len(x_table), len(c_table)
    for flat in itertools.product(range(nc), repeat=nx * nc):
        act = tuple(tuple(flat[c * nx + x] for x in range(nx))
                    for c in range(nc))
        m = MonoidAction(x_table, c_table, act)
        if not m.violations():
            yield m
