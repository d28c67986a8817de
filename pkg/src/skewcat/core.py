"""Finite categories, functors and natural transformations as executable data.

Composition is written in diagrammatic order throughout: ``comp(f, g)``
is "f then g".  Objects and morphisms are immutable values; morphism
equality on parallel morphisms is payload equality, always exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .report import Budget, CheckReport, LawRun, digest, stable_text


class IllTyped(Exception):
    """compose was invoked on a non-composable pair (a construction bug)."""


class NotEnumerable(Exception):
    """The instance declares this hom set as not enumerable."""


@dataclass(frozen=True)
class Mor:
    """A morphism record: source, target and an instance-specific payload."""

    src: Any
    tgt: Any
    payload: Any = None

    def stable_text(self) -> str:
        return "mor(" + stable_text(self.payload) + ")"


def _payload_eq(f: Mor, g: Mor) -> bool:
    return f.payload == g.payload


class FiniteCategory:
    """An enumerable category.

    `objects` is the declared finite carrier used by checkers to
    instantiate diagrams; `hom` enumerates morphisms between declared
    (and, where the instance supports it, derived) objects.  `compose`
    and `identity` must accept any morphisms/objects the instance's
    structure maps can produce, not just declared ones.
    """

    def __init__(self, name: str, objects: Sequence, hom: Callable,
                 compose: Callable, identity: Callable,
                 mor_eq: Callable | None = None,
                 valid_mor: Callable | None = None,
                 generators: Sequence | None = None,
                 sample_mors: Callable | None = None,
                 obj_repr: Callable | None = None):
        self.name = name
        self.objects = tuple(objects)
        self._hom = hom
        self._compose = compose
        self._identity = identity
        self.mor_eq = mor_eq if mor_eq is not None else _payload_eq
        self.valid_mor = valid_mor
        self._generators = tuple(generators) if generators is not None else None
        self._sample_mors = sample_mors
        self._obj_repr = obj_repr
        self.op_of: FiniteCategory | None = None

    def hom(self, a, b) -> list:
        return list(self._hom(a, b))

    def comp(self, f: Mor, g: Mor) -> Mor:
        if f.tgt is not g.src and f.tgt != g.src:
            raise IllTyped("compose: tgt %r != src %r in %s"
                           % (f.tgt, g.src, self.name))
        return self._compose(f, g)

    def id(self, a) -> Mor:
        return self._identity(a)

    def obj_index(self, a) -> int | None:
        try:
            return self.objects.index(a)
        except ValueError:
            return None

    def obj_label(self, a) -> str:
        i = self.obj_index(a)
        if self._obj_repr is not None:
            return self._obj_repr(a)
        return repr(a) if i is None else "#%d:%s" % (i, repr(a))

    def generators(self) -> list:
        """Generating morphisms for naturality sweeps; all morphisms by
        default, falling back to the sample pool when homs are not
        enumerable."""
        if self._generators is not None:
            return list(self._generators)
        out = []
        for a in self.objects:
            for b in self.objects:
                try:
                    out.extend(self.hom(a, b))
                except NotEnumerable:
                    out.extend(self.sample_mors(a, b))
        return out

    def sample_mors(self, a, b) -> list:
        """A finite pool of morphisms a -> b, even when hom is not enumerable."""
        if self._sample_mors is not None:
            return list(self._sample_mors(a, b))
        return self.hom(a, b)

    def __repr__(self):
        return "FiniteCategory(%s, %d objects)" % (self.name, len(self.objects))


def enumerate_hom(cat: FiniteCategory, a, b) -> list:
    """Complete, duplicate-free list of morphisms a -> b."""
    mors = cat.hom(a, b)
    out: list = []
    for f in mors:
        if not any(cat.mor_eq(f, g) for g in out):
            out.append(f)
    return out


@dataclass(frozen=True)
class FunctorData:
    """Object and morphism maps between two finite categories."""

    name: str
    src: FiniteCategory
    tgt: FiniteCategory
    on_obj: Callable
    on_mor: Callable


@dataclass(frozen=True)
class NatTransData:
    """Components of a natural transformation between two functors."""

    src: FunctorData
    tgt: FunctorData
    component: Callable  # object -> Mor in tgt category


# ---------------------------------------------------------------------------
# checkers


def check_category_axioms(cat: FiniteCategory, budget: Budget = Budget()) -> CheckReport:
    """Associativity, identities, hom closure and duplicate-freeness."""
    report = CheckReport("category-axioms:" + cat.name,
                         meta={"category": cat.name, "seed": budget.seed,
                               "cap": budget.cap})
    pairs = budget.plan("pairs:" + cat.name, cat.objects, cat.objects)

    run_id = LawRun("identity", "id;f == f and f;id == f", pairs, budget.seed)
    run_dup = LawRun("hom-duplicates", "hom sets duplicate-free under mor_eq",
                     pairs, budget.seed)
    for a, b in pairs:
        try:
            mors = cat.hom(a, b)
        except NotEnumerable:
            mors = cat.sample_mors(a, b)
            run_dup.record.exhaustive = False
        inst = (cat.obj_label(a), cat.obj_label(b))
        run_dup.tick()
        for i, f in enumerate(mors):
            if any(cat.mor_eq(f, g) for g in mors[:i]):
                run_dup.fail(inst, f.payload, None, "duplicate morphism")
        for f in mors:
            run_id.tick()
            try:
                left = cat.comp(cat.id(a), f)
                right = cat.comp(f, cat.id(b))
            except IllTyped as e:
                run_id.error(inst, "ill-typed", str(e))
                continue
            if not cat.mor_eq(left, f):
                run_id.fail(inst, left.payload, f.payload, "left identity")
            if not cat.mor_eq(right, f):
                run_id.fail(inst, right.payload, f.payload, "right identity")

    quads = budget.plan("assoc:" + cat.name, cat.objects, cat.objects,
                        cat.objects, cat.objects)
    run_assoc = LawRun("associativity", "(f;g);h == f;(g;h)", quads, budget.seed)
    run_close = LawRun("hom-closure", "f;g lies in the enumerated hom set",
                       quads, budget.seed)
    for a, b, c, d in quads:
        try:
            fs, gs, hs = cat.hom(a, b), cat.hom(b, c), cat.hom(c, d)
        except NotEnumerable:
            fs = cat.sample_mors(a, b)
            gs = cat.sample_mors(b, c)
            hs = cat.sample_mors(c, d)
            run_close.record.exhaustive = False
        inst = tuple(cat.obj_label(o) for o in (a, b, c, d))
        for f in fs:
            for g in gs:
                try:
                    fg = cat.comp(f, g)
                except IllTyped as e:
                    run_assoc.error(inst, "ill-typed", str(e))
                    continue
                run_close.tick()
                try:
                    pool = cat.hom(a, c)
                    if not any(cat.mor_eq(fg, m) for m in pool):
                        run_close.fail(inst, fg.payload, None,
                                       "composite not in hom set")
                except NotEnumerable:
                    pass
                for h in hs:
                    run_assoc.tick()
                    try:
                        lhs = cat.comp(fg, h)
                        rhs = cat.comp(f, cat.comp(g, h))
                    except IllTyped as e:
                        run_assoc.error(inst, "ill-typed", str(e))
                        continue
                    if not cat.mor_eq(lhs, rhs):
                        run_assoc.fail(
                            inst, lhs.payload, rhs.payload,
                            "witness triple %s" % stable_text(
                                (f.payload, g.payload, h.payload)))

    report.records = [run_id.record, run_assoc.record,
                      run_close.record, run_dup.record]
    return report


def check_functor(F: FunctorData, budget: Budget = Budget()) -> CheckReport:
    """Sources/targets, identities and composition are preserved."""
    report = CheckReport("functor:" + F.name, meta={"seed": budget.seed})
    src, tgt = F.src, F.tgt

    singles = budget.plan("fid:" + F.name, src.objects)
    run_idm = LawRun("functor-identity", "F(id) == id", singles, budget.seed)
    for (a,) in singles:
        run_idm.compare(tgt.mor_eq, F.on_mor(src.id(a)), tgt.id(F.on_obj(a)),
                        (src.obj_label(a),))

    triples = budget.plan("fcomp:" + F.name, src.objects, src.objects, src.objects)
    run_cmp = LawRun("functor-compose", "F(f;g) == F(f);F(g)", triples, budget.seed)
    run_typ = LawRun("functor-typing", "F preserves sources and targets",
                     triples, budget.seed)
    for a, b, c in triples:
        inst = tuple(src.obj_label(o) for o in (a, b, c))
        for f in src.sample_mors(a, b):
            ff = F.on_mor(f)
            run_typ.tick()
            if ff.src != F.on_obj(a) or ff.tgt != F.on_obj(b):
                run_typ.fail(inst, ff.payload, None, "image endpoints wrong")
                continue
            for g in src.sample_mors(b, c):
                run_cmp.compare(
                    tgt.mor_eq,
                    F.on_mor(src.comp(f, g)),
                    tgt.comp(ff, F.on_mor(g)),
                    inst)
    report.records = [run_idm.record, run_typ.record, run_cmp.record]
    return report


def check_nat(t: NatTransData, budget: Budget = Budget()) -> CheckReport:
    """Naturality squares over the source category's generators."""
    F, G = t.src, t.tgt
    cat, tgt = F.src, F.tgt
    report = CheckReport("nat", meta={"seed": budget.seed})
    gens = cat.generators()
    plan = budget.plan("nat", gens)
    run = LawRun("naturality", "F(f);t == t;G(f)", plan, budget.seed)
    for (f,) in plan:
        inst = (cat.obj_label(f.src), cat.obj_label(f.tgt))
        run.compare(
            tgt.mor_eq,
            tgt.comp(F.on_mor(f), t.component(f.tgt)),
            tgt.comp(t.component(f.src), G.on_mor(f)),
            inst)
    report.records = [run.record]
    return report


# ---------------------------------------------------------------------------
# constructions


def product_category(x: FiniteCategory, c: FiniteCategory):
    """Product category with projection functors.

    Objects are pairs, morphisms are pairs, everything componentwise.
    """
    objects = tuple((a, b) for a in x.objects for b in c.objects)

    def hom(p, q):
        return [Mor(p, q, (f, g))
                for f in x.hom(p[0], q[0]) for g in c.hom(p[1], q[1])]

    def compose(m, n):
        f1, g1 = m.payload
        f2, g2 = n.payload
        return Mor(m.src, n.tgt, (x.comp(f1, f2), c.comp(g1, g2)))

    def identity(p):
        return Mor(p, p, (x.id(p[0]), c.id(p[1])))

    def mor_eq(m, n):
        return (x.mor_eq(m.payload[0], n.payload[0])
                and c.mor_eq(m.payload[1], n.payload[1]))

    def valid(m):
        f, g = m.payload
        if (f.src, g.src) != m.src or (f.tgt, g.tgt) != m.tgt:
            return False
        okx = x.valid_mor(f) if x.valid_mor is not None else True
        okc = c.valid_mor(g) if c.valid_mor is not None else True
        return okx and okc

    def obj_repr(p):
        return "<%s, %s>" % (x.obj_label(p[0]), c.obj_label(p[1]))

    def sample(p, q):
        return [Mor(p, q, (f, g))
                for f in x.sample_mors(p[0], q[0])
                for g in c.sample_mors(p[1], q[1])]

    prod = FiniteCategory("%s x %s" % (x.name, c.name), objects, hom,
                          compose, identity, mor_eq=mor_eq, valid_mor=valid,
                          sample_mors=sample, obj_repr=obj_repr)
    pi_x = FunctorData("pi_x", prod, x, lambda p: p[0], lambda m: m.payload[0])
    pi_c = FunctorData("pi_c", prod, c, lambda p: p[1], lambda m: m.payload[1])
    return prod, pi_x, pi_c


def opposite_category(c: FiniteCategory) -> FiniteCategory:
    """Sources and targets swapped, composition reversed.

    Taking the opposite twice returns the original category object.
    """
    if c.op_of is not None:
        return c.op_of

    def hom(a, b):
        return [Mor(a, b, m.payload) for m in c.hom(b, a)]

    def unwrap(m):
        return Mor(m.tgt, m.src, m.payload)

    def compose(f, g):
        return Mor(f.src, g.tgt, c.comp(unwrap(g), unwrap(f)).payload)

    def identity(a):
        return Mor(a, a, c.id(a).payload)

    def valid(m):
        if c.valid_mor is None:
            return True
        return c.valid_mor(unwrap(m))

    op = FiniteCategory(c.name + "^op", c.objects, hom, compose, identity,
                        mor_eq=c.mor_eq, valid_mor=valid)
    op.op_of = c
    return op


# ---------------------------------------------------------------------------
# common small categories


def thin_category(name: str, elements: Sequence, leq: Callable,
                  obj_repr: Callable | None = None) -> FiniteCategory:
    """Preorder as a category: at most one morphism between two objects."""

    def hom(a, b):
        return [Mor(a, b)] if leq(a, b) else []

    def compose(f, g):
        if not leq(f.src, g.tgt):  # transitivity violated: construction bug
            raise IllTyped("thin compose has no witness %r -> %r" % (f.src, g.tgt))
        return Mor(f.src, g.tgt)

    def identity(a):
        return Mor(a, a)

    def valid(m):
        return m.payload is None and leq(m.src, m.tgt)

    return FiniteCategory(name, elements, hom, compose, identity,
                          valid_mor=valid, obj_repr=obj_repr)


def discrete_category(name: str, elements: Sequence) -> FiniteCategory:
    """Only identity morphisms."""

    def hom(a, b):
        return [Mor(a, a)] if a == b else []

    def compose(f, g):
        return Mor(f.src, g.tgt)

    def identity(a):
        return Mor(a, a)

    def valid(m):
        return m.payload is None and m.src == m.tgt

    return FiniteCategory(name, elements, hom, compose, identity,
                          valid_mor=valid)


def table_category(name: str, objects: Sequence, morphisms: Sequence,
                   composition: dict, identities: Sequence) -> FiniteCategory:
    """Category from explicit tables.

    `morphisms` holds (src_index, tgt_index, payload) records;
    `composition` maps a pair of morphism indices to a morphism index;
    `identities` gives the identity morphism index per object.
    """
    objects = tuple(objects)
    mors = tuple(Mor(objects[s], objects[t], p) for s, t, p in morphisms)
    index = {m: i for i, m in enumerate(mors)}

    def hom(a, b):
        return [m for m in mors if m.src == a and m.tgt == b]

    def compose(f, g):
        key = (index[f], index[g])
        if key not in composition:
            raise IllTyped("composition table has no entry for %r" % (key,))
        return mors[composition[key]]

    def identity(a):
        return mors[identities[objects.index(a)]]

    def valid(m):
        return m in index

    return FiniteCategory(name, objects, hom, compose, identity,
                          valid_mor=valid)


def monoid_category(name: str, table: Sequence, unit: int) -> FiniteCategory:
    """One-object category whose endomorphisms are the monoid elements.

    ``table[i][j]`` is "i then j" (diagrammatic order).
    """
    n = len(table)
    morphisms = [(0, 0, i) for i in range(n)]
    composition = {(i, j): table[i][j] for i in range(n) for j in range(n)}
    return table_category(name, ("*",), morphisms, composition, (unit,))


# ---------------------------------------------------------------------------
# JSON round trip for table-backed categories


def category_to_json(cat: FiniteCategory, limit: int = 20_000) -> str:
    """Serialize a small category by materializing its tables."""
    objects = list(cat.objects)
    mors: list = []
    for a in objects:
        for b in objects:
            mors.extend(cat.hom(a, b))
    if len(mors) ** 2 > limit * limit:
        raise NotEnumerable("category too large to serialize")
    index = {m: i for i, m in enumerate(mors)}
    composition = []
    for i, f in enumerate(mors):
        for j, g in enumerate(mors):
            if f.tgt == g.src:
                composition.append([i, j, index[cat.comp(f, g)]])
    doc = {
        "kind": "category",
        "name": cat.name,
        "objects": [_json_value(o) for o in objects],
        "morphisms": [
            {"src": objects.index(m.src), "tgt": objects.index(m.tgt),
             "payload": _json_value(m.payload)}
            for m in mors
        ],
        "composition": composition,
        "identities": [index[cat.id(a)] for a in objects],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def category_from_json(text: str) -> FiniteCategory:
    doc = json.loads(text)
    if doc.get("kind") != "category":
        raise ValueError("not a category document")
    objects = [_from_json_value(o) for o in doc["objects"]]
    morphisms = [(m["src"], m["tgt"], _from_json_value(m["payload"]))
                 for m in doc["morphisms"]]
    composition = {(i, j): k for i, j, k in doc["composition"]}
    return table_category(doc["name"], objects, morphisms, composition,
                          doc["identities"])


def _json_value(v):
    if isinstance(v, tuple):
        return {"tuple": [_json_value(x) for x in v]}
    if isinstance(v, Fraction):
        return {"frac": [v.numerator, v.denominator]}
    if v is None or isinstance(v, (bool, int, str)):
        return v
    raise ValueError("payload %r not JSON-serializable" % (v,))


def _from_json_value(v):
    if isinstance(v, dict) and "tuple" in v:
        return tuple(_from_json_value(x) for x in v["tuple"])
    if isinstance(v, dict) and "frac" in v:
        return Fraction(v["frac"][0], v["frac"][1])
    if isinstance(v, list):
        return tuple(_from_json_value(x) for x in v)
    return v
