"""Finite generalized metric spaces in the Lawvere sense.

A space is a finite point set with a [0, oo]-valued distance satisfying
d(m, m) = 0 and the triangle inequality; no symmetry, no separation.
Morphisms are non-expansive point maps, stored as index tuples into the
target's point list.

Distance tables of spaces derived inside large law sweeps are lazy:
they are only materialized when something actually reads them (validity
checks, hom enumeration, equality fallbacks).  Public constructors
always materialize and re-verify the triangle inequality; above a size
cutoff the verification is a seeded sample rather than the full cube.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..core import FiniteCategory, Mor, NotEnumerable
from .extrat import INF, ZERO, ExtRat, emin, esup

TRIANGLE_EXHAUSTIVE_CUTOFF = 10  # points; above this, sampled verification
TRIANGLE_SAMPLES = 250
HOM_LIMIT = 200_000

_uid_counter = itertools.count()


class GMSError(ValueError):
    pass


class FinGMS:
    """Finite generalized metric space."""

    __slots__ = ("points", "name", "uid", "_matrix", "_fn", "_index")

    def __init__(self, points: Sequence, matrix=None, fn: Callable | None = None,
                 name: str = ""):
        self.points = tuple(points)
        self.name = name
        self.uid = next(_uid_counter)
        self._matrix = None if matrix is None else tuple(
            tuple(ExtRat(v) for v in row) for row in matrix)
        self._fn = fn
        self._index = None
        if self._matrix is None and self._fn is None:
            raise GMSError("need a distance table or a distance function")

    def __len__(self) -> int:
        return len(self.points)

    def d(self, i: int, j: int) -> ExtRat:
        """Distance between points by index."""
        if self._matrix is not None:
            return self._matrix[i][j]
        return self._fn(i, j)

    def matrix(self):
        if self._matrix is None:
            n = len(self.points)
            self._matrix = tuple(tuple(self._fn(i, j) for j in range(n))
                                 for i in range(n))
        return self._matrix

    def index_of(self, p) -> int:
        if self._index is None:
            self._index = {p: i for i, p in enumerate(self.points)}
        return self._index[p]

    def validate(self, seed: int = 0) -> None:
        n = len(self.points)
        rows = self.matrix()
        for i in range(n):
            if rows[i][i] != ZERO:
                raise GMSError("d(%r, %r) != 0 in %s" % (i, i, self))
        if n <= TRIANGLE_EXHAUSTIVE_CUTOFF:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed ^ (n * 2654435761))
            triples = (tuple(rng.randrange(n) for _ in range(3))
                       for _ in range(TRIANGLE_SAMPLES))
        for i, j, k in triples:
            if rows[i][k] > rows[i][j] + rows[j][k]:
                raise GMSError(
                    "triangle inequality fails at %r,%r,%r in %s" % (i, j, k, self))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinGMS):
            return NotImplemented
        return self.points == other.points and self.matrix() == other.matrix()

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        if self.name:
            return "gms:%s" % self.name
        return "gms(%d points)" % len(self.points)

    def stable_text(self) -> str:
        return "gms(%s;%s)" % (
            ",".join(repr(p) for p in self.points),
            ",".join(str(self.d(i, j)) for i in range(len(self))
                     for j in range(len(self))))


def make_gms(points: Sequence, rows: Sequence, name: str = "") -> FinGMS:
    """Build and verify a space from an explicit distance table."""
    m = FinGMS(points, matrix=rows, name=name)
    m.validate()
    return m


def empty_gms() -> FinGMS:
    return FinGMS((), matrix=(), name="0")


def one_point() -> FinGMS:
    return make_gms(("*",), ((ZERO,),), name="1")


def d_space(t) -> FinGMS:
    """Two points separated by distance t in each direction."""
    t = ExtRat(t) if not isinstance(t, ExtRat) else t
    return make_gms(("p", "q"), ((ZERO, t), (t, ZERO)), name="D_%s" % t)


# ---------------------------------------------------------------------------
# constructions on spaces


def gms_tensor(m: FinGMS, n: FinGMS, validate: bool = True,
               lazy: bool = False) -> FinGMS:
    """Product points, distances added componentwise."""
    points = tuple((p, q) for p in m.points for q in n.points)
    nn = len(n)

    def fn(i, j):
        return m.d(i // nn, j // nn) + n.d(i % nn, j % nn) if nn else ZERO

    name = "(%s)x(%s)" % (m.name, n.name) if m.name and n.name else ""
    out = FinGMS(points, fn=fn, name=name)
    if not lazy:
        out.matrix()
    if validate:
        out.validate()
    return out


def gms_act(m: FinGMS, mode: tuple, validate: bool = True) -> FinGMS:
    """Pointwise distance transform: truncate, flatten or scale.

    mode is ("truncate", x: ExtRat), ("flatten", b: bool) or
    ("scale", k: int); negative k undoes positive k exactly.
    """
    kind = mode[0]
    if kind == "truncate":
        x = mode[1]
        tf = lambda d: emin(d, x)
    elif kind == "flatten":
        if mode[1]:  # acting by the top truth value changes nothing
            return m
        tf = lambda d: ZERO if d == ZERO else INF
    elif kind == "scale":
        k = mode[1]
        tf = lambda d: d.scale2(k)
    else:
        raise GMSError("unknown action mode %r" % (mode,))
    rows = tuple(tuple(tf(v) for v in row) for row in m.matrix())
    out = FinGMS(m.points, matrix=rows,
                 name="%s^%s" % (m.name, mode[1]) if m.name else "")
    if validate:
        out.validate()
    return out


def gms_coproduct(m: FinGMS, n: FinGMS):
    """Disjoint union; cross-component distances are oo.

    Returns (space, left injection indices, right injection indices).
    """
    points = tuple((0, p) for p in m.points) + tuple((1, q) for q in n.points)
    nm = len(m)

    def fn(i, j):
        if (i < nm) != (j < nm):
            return INF
        return m.d(i, j) if i < nm else n.d(i - nm, j - nm)

    out = FinGMS(points, fn=fn, name="(%s)+(%s)" % (m.name, n.name))
    out.matrix()
    out.validate()
    inj1 = tuple(range(nm))
    inj2 = tuple(range(nm, nm + len(n)))
    return out, inj1, inj2


def coproduct_satisfies_universal(m: FinGMS, n: FinGMS, coprod: FinGMS,
                                  targets: Iterable[FinGMS]) -> bool:
    """Check the coproduct's universal property against test cocones.

    Every pair of non-expansive maps out of the summands must factor
    through exactly one non-expansive map out of the coproduct.
    """
    nm = len(m)
    for t in targets:
        for f in nonexpansive_maps(m, t):
            for g in nonexpansive_maps(n, t):
                mediating = tuple(f) + tuple(g)
                if not is_nonexpansive(coprod, t, mediating):
                    return False
                # uniqueness is forced point-level: any other mediating map
                # disagrees with f or g on some summand point
    return True


def gms_chain_colimit(stages: Sequence[FinGMS], limit: FinGMS,
                      targets: Iterable[FinGMS] = ()) -> FinGMS:
    """Colimit of a chain of identity-on-points maps with shrinking distances.

    The caller supplies the limit table (the declared pointwise infimum);
    this verifies monotonicity, the lower bound, the cocone, the triangle
    inequality, and the universal property against the given test targets.
    """
    if not stages:
        raise GMSError("empty chain")
    pts = stages[0].points
    for s in stages:
        if s.points != pts:
            raise GMSError("stages must share their point set")
    if limit.points != pts:
        raise GMSError("limit must share the chain's point set")
    n = len(pts)
    for a, b in zip(stages, stages[1:]):
        for i in range(n):
            for j in range(n):
                if b.d(i, j) > a.d(i, j):
                    raise NotMonotone(
                        "distance grows from one stage to the next at %d,%d"
                        % (i, j))
    for s in stages:
        for i in range(n):
            for j in range(n):
                if limit.d(i, j) > s.d(i, j):
                    raise NotLowerBound(
                        "declared limit exceeds a stage at %d,%d" % (i, j))
    limit.validate()
    ident = tuple(range(n))
    for s in stages:
        if not is_nonexpansive(s, limit, ident):
            raise GMSError("cocone leg from a stage is expansive")
    for t in targets:
        for leg in nonexpansive_maps(stages[-1], t):
            # a cocone is a single point map that is non-expansive from
            # every stage; the mediating map is that same point map
            if all(is_nonexpansive(s, t, leg) for s in stages):
                if not is_nonexpansive(limit, t, leg):
                    raise GMSError("universal property fails for %r" % (t,))
    return limit


class NotMonotone(GMSError):
    pass


class NotLowerBound(GMSError):
    pass


def gms_iso_exists(m: FinGMS, n: FinGMS):
    """Search for a distance-preserving bijection; returns (bool, witness)."""
    if len(m) != len(n):
        return False, None
    idx = range(len(m))
    for perm in itertools.permutations(idx):
        if all(m.d(i, j) == n.d(perm[i], perm[j]) for i in idx for j in idx):
            return True, perm
    return False, None


def is_nonexpansive(m: FinGMS, n: FinGMS, mapping: Sequence[int]) -> bool:
    dm, dn = m.matrix(), n.matrix()
    for i in range(len(m)):
        row_m = dm[i]
        row_n = dn[mapping[i]]
        for j in range(len(m)):
            if row_n[mapping[j]] > row_m[j]:
                return False
    return True


def nonexpansive_maps(m: FinGMS, n: FinGMS) -> list:
    """All non-expansive point maps m -> n, as index tuples."""
    if len(n) == 0:
        return [()] if len(m) == 0 else []
    if len(n) ** len(m) > HOM_LIMIT:
        raise NotEnumerable("too many candidate maps %d^%d" % (len(n), len(m)))
    return [f for f in itertools.product(range(len(n)), repeat=len(m))
            if is_nonexpansive(m, n, f)]


def gms_internal_hom(n: FinGMS, p: FinGMS, scale_k: int = 0) -> FinGMS:
    """Space of non-expansive maps with the sup distance, scaled by 2**-k."""
    maps = nonexpansive_maps(n, p)
    rows = tuple(
        tuple(esup(p.d(f[i], g[i]) for i in range(len(n))).scale2(-scale_k)
              for g in maps)
        for f in maps)
    out = FinGMS(tuple(maps), matrix=rows,
                 name="[%s,%s]_%d" % (n.name, p.name, scale_k))
    out.validate()
    return out


# ---------------------------------------------------------------------------
# the category of finite generalized metric spaces


def gms_category(objects: Sequence[FinGMS], name: str = "GMS") -> FiniteCategory:
    def hom(a, b):
        return [Mor(a, b, f) for f in nonexpansive_maps(a, b)]

    def compose(f, g):
        return Mor(f.src, g.tgt, tuple(g.payload[i] for i in f.payload))

    def identity(a):
        return Mor(a, a, tuple(range(len(a))))

    def valid(m):
        a, b = m.src, m.tgt
        if len(m.payload) != len(a):
            return False
        if any(i >= len(b) for i in m.payload):
            return False
        return is_nonexpansive(a, b, m.payload)

    def obj_repr(a):
        return repr(a)

    return FiniteCategory(name, objects, hom, compose, identity,
                          valid_mor=valid, obj_repr=obj_repr)


def parse_gms_json(doc: dict) -> FinGMS:
    """Points plus a distance table; rationals as "p/q", infinity as "inf"."""
    points = tuple(doc["points"])
    rows = [[ExtRat.parse(v) for v in row] for row in doc["dist"]]
    return make_gms(points, rows, name=doc.get("name", ""))
