"""Constructors for every named action, in exact arithmetic.

Each builder returns a WeakAction or StrongAction whose structure maps
are index arithmetic (set-like instances), scalar matrices (the K*
deformation) or unique thin morphisms (preorders).  Strong actions also
carry whatever closedness data their constructions need: internal homs,
duals, right adjoints, triangle homs and coproduct helpers.
"""

from __future__ import annotations

from fractions import Fraction

from ..action import StrongAction, WeakAction
from ..closedness import (CocartesianData, DualData, InternalHomData,
                          LeftClosedWithProducts, RightAdjointData,
                          TriangleHomData)
from ..core import FunctorData, Mor, thin_category
from ..monoidal import LaxMonoidalComonad, LaxMonoidalFunctorData
from .extrat import INF, ExtRat
from .finset import (curry_left, decode, encode, fs_category, fs_cartesian,
                     fs_cocartesian, fs_op_cartesian, invert_bijection,
                     pairing, project1, project2, uncurry_left)
from .gms import FinGMS, d_space, gms_act, gms_internal_hom, make_gms, one_point
from .lattice import FinLattice, diamond
from .matcat import eye, matcat_category, matcat_dual_pair, matcat_monoidal
from .structures import (DEFAULT_GRID, addition_structure, grid_structure,
                         gms_structure, thin_monoidal, truth_values_structure)


class UnknownAction(Exception):
    pass


class ParamOutOfBounds(Exception):
    pass


def three_point_space() -> FinGMS:
    """An asymmetric three-point space with grid distances."""
    h = Fraction(1, 2)
    return make_gms(
        ("a", "b", "c"),
        ((0, h, 1),
         (1, 0, h),
         (2, 2, 0)),
        name="T3")


def default_gms_family() -> tuple:
    return (one_point(), d_space(1), three_point_space())


def _rng(n: int) -> tuple:
    return tuple(range(n))


# ---------------------------------------------------------------------------
# generalized metric space actions


def _gms_action_core(X, C, mode_for, name):
    """Shared wiring for pointwise distance-transform actions.

    mode_for(x) gives the gms_act mode of the acting object x; all
    structure maps are identity index maps, which is exactly the content
    of these actions: only the metrics move.
    """
    cache: dict = {}

    def act_obj(m: FinGMS, x) -> FinGMS:
        key = (m.uid, x)
        out = cache.get(key)
        if out is None:
            out = gms_act(m, mode_for(x))
            cache[key] = out
        return out

    def act_mor_c(g, x):
        return Mor(act_obj(g.src, x), act_obj(g.tgt, x), g.payload)

    def act_mor_x(f, m):
        return Mor(act_obj(m, f.src), act_obj(m, f.tgt), _rng(len(m)))

    def phi2(x, b, c):
        return Mor(C.t(act_obj(b, x), act_obj(c, x)),
                   act_obj(C.t(b, c), x), _rng(len(b) * len(c)))

    def phi0(x):
        return Mor(C.unit, act_obj(C.unit, x), (0,))

    def psi2(x, y, c):
        return Mor(act_obj(c, X.t(x, y)), act_obj(act_obj(c, x), y),
                   _rng(len(c)))

    def psi0(c):
        return Mor(act_obj(c, X.unit), c, _rng(len(c)))

    return dict(name=name, acting=X, acted=C, act_obj=act_obj,
                act_mor_c=act_mor_c, act_mor_x=act_mor_x,
                phi2=phi2, phi0=phi0, psi2=psi2, psi0=psi0)


def truncation_action(grid=DEFAULT_GRID, gms_objects=None) -> WeakAction:
    """Distances clipped at the acting grid value; weak, not strong."""
    if gms_objects is None:
        gms_objects = default_gms_family()
    X = grid_structure(grid)
    C = gms_structure(gms_objects, "GMS")
    core = _gms_action_core(X, C, lambda x: ("truncate", x), "truncation")
    return WeakAction(**core)


def truth_values_action(gms_objects=None) -> StrongAction:
    """Acting by T keeps the metric, acting by F flattens it to {0, oo}."""
    if gms_objects is None:
        gms_objects = default_gms_family()
    X = truth_values_structure()
    C = gms_structure(gms_objects, "GMS")
    core = _gms_action_core(X, C, lambda x: ("flatten", x), "truth_values")
    act_obj = core["act_obj"]
    return StrongAction(
        **core,
        phi2_inv=lambda x, b, c: Mor(act_obj(C.t(b, c), x),
                                     C.t(act_obj(b, x), act_obj(c, x)),
                                     _rng(len(b) * len(c))),
        phi0_inv=lambda x: Mor(act_obj(C.unit, x), C.unit, (0,)),
        psi2_inv=lambda x, y, c: Mor(act_obj(act_obj(c, x), y),
                                     act_obj(c, X.t(x, y)), _rng(len(c))),
        psi0_inv=lambda c: Mor(c, act_obj(c, X.unit), _rng(len(c))))


def scaling_action(max_exp: int = 3, gms_objects=None) -> StrongAction:
    """Distances scaled by 2**x for an exponent grid under addition.

    Each (-)^x has an inverse (-)_x given by the opposite exponent; the
    action carries that right adjoint plus the internal homs of both
    sides, so the right-closed construction applies.
    """
    if max_exp < 0 or max_exp > 6:
        raise ParamOutOfBounds("max_exp must lie in 0..6")
    if gms_objects is None:
        gms_objects = tuple(d_space(t) for t in DEFAULT_GRID)
    X = addition_structure(max_exp)
    C = gms_structure(gms_objects, "GMS")
    core = _gms_action_core(X, C, lambda x: ("scale", x), "scaling")
    act_obj = core["act_obj"]

    down: dict = {}

    def unscale(x, c):
        key = (c.uid, x)
        out = down.get(key)
        if out is None:
            out = gms_act(c, ("scale", -x))
            down[key] = out
        return out

    adjoint = RightAdjointData(
        "unscale",
        on_obj=unscale,
        on_mor=lambda x, g: Mor(unscale(x, g.src), unscale(x, g.tgt),
                                g.payload),
        unit=lambda x, c: Mor(c, unscale(x, act_obj(c, x)), _rng(len(c))),
        counit=lambda x, c: Mor(act_obj(unscale(x, c), x), c, _rng(len(c))))

    homs: dict = {}

    def hom_obj(b, c):
        key = (b.uid, c.uid)
        out = homs.get(key)
        if out is None:
            out = gms_internal_hom(b, c, 0)
            homs[key] = out
        return out

    def transpose(a, b, c, f):
        h = hom_obj(b, c)
        nb = len(b)
        payload = tuple(
            h.index_of(tuple(f.payload[ia * nb + ib] for ib in range(nb)))
            for ia in range(len(a)))
        return Mor(a, h, payload)

    def untranspose(a, b, c, g):
        h = hom_obj(b, c)
        nb = len(b)
        payload = tuple(h.points[g.payload[ia]][ib]
                        for ia in range(len(a)) for ib in range(nb))
        return Mor(C.t(a, b), c, payload)

    c_hom = InternalHomData("gms-hom", C, "right", hom_obj, transpose,
                            untranspose)

    def x_hom_obj(y, z):
        return max(z - y, 0)

    x_hom = InternalHomData(
        "exp-hom", X, "right", x_hom_obj,
        lambda x, y, z, f: Mor(x, x_hom_obj(y, z)),
        lambda x, y, z, g: Mor(X.t(x, y), z))

    def x_dual_for(y):
        if y == 0:
            return DualData(0, 0, Mor(0, 0), Mor(0, 0))
        return None

    return StrongAction(
        **core,
        phi2_inv=lambda x, b, c: Mor(act_obj(C.t(b, c), x),
                                     C.t(act_obj(b, x), act_obj(c, x)),
                                     _rng(len(b) * len(c))),
        phi0_inv=lambda x: Mor(act_obj(C.unit, x), C.unit, (0,)),
        psi2_inv=lambda x, y, c: Mor(act_obj(act_obj(c, x), y),
                                     act_obj(c, X.t(x, y)), _rng(len(c))),
        psi0_inv=lambda c: Mor(c, act_obj(c, X.unit), _rng(len(c))),
        right_adjoint=adjoint, x_hom=x_hom, c_hom=c_hom,
        x_dual_for=x_dual_for)


# ---------------------------------------------------------------------------
# internal-hom and precomposition actions on finite sets and functor posets


def finset_op_action(x_sizes=(0, 1, 2), c_sizes=(0, 1, 2)) -> StrongAction:
    """C^X = [X, C] for the opposite of skeletal finite sets acting on
    finite sets; all structure maps are (un)currying bijections."""
    if max(x_sizes, default=0) > 3 or max(c_sizes, default=0) > 3:
        raise ParamOutOfBounds("sizes above 3 make hom sweeps infeasible")
    fsx = fs_category(x_sizes, "FinSet")
    fsc = fs_category(c_sizes, "FinSet")
    X = fs_op_cartesian(fsx)
    C = fs_cartesian(fsc)

    def act_obj(c, x):
        return c ** x

    def act_mor_x(f, c):
        # f: x -> y opposite-wraps u: y -> x; precompose the exponent
        x, y, u = f.src, f.tgt, f.payload
        payload = []
        for gi in range(c ** x):
            gd = decode(gi, c, x)
            payload.append(encode([gd[u[j]] for j in range(y)], c))
        return Mor(c ** x, c ** y, tuple(payload))

    def act_mor_c(h, x):
        c, c2, hp = h.src, h.tgt, h.payload
        payload = []
        for gi in range(c ** x):
            gd = decode(gi, c, x)
            payload.append(encode([hp[d] for d in gd], c2))
        return Mor(c ** x, c2 ** x, tuple(payload))

    def phi2(x, b, c):
        bx, cx = b ** x, c ** x
        payload = []
        for fi in range(bx):
            bd = decode(fi, b, x)
            for gi in range(cx):
                cd = decode(gi, c, x)
                payload.append(encode([bd[j] * c + cd[j] for j in range(x)],
                                      b * c))
        return Mor(bx * cx, (b * c) ** x, tuple(payload))

    def phi0(x):
        return Mor(1, 1, (0,))

    def psi2(x, y, c):
        cxy = c ** (x * y)
        payload = []
        for fi in range(cxy):
            gd = decode(fi, c, x * y)
            outer = [encode([gd[ix * y + iy] for ix in range(x)], c)
                     for iy in range(y)]
            payload.append(encode(outer, c ** x))
        return Mor(cxy, (c ** x) ** y, tuple(payload))

    def psi0(c):
        return Mor(c, c, _rng(c))

    return StrongAction(
        "finset_op", X, C, act_obj, act_mor_c, act_mor_x,
        phi2, phi0, psi2, psi0,
        phi2_inv=lambda x, b, c: invert_bijection(phi2(x, b, c)),
        phi0_inv=lambda x: Mor(1, 1, (0,)),
        psi2_inv=lambda x, y, c: invert_bijection(psi2(x, y, c)),
        psi0_inv=lambda c: Mor(c, c, _rng(c)))


def finset_j_action(x_sizes=(0, 1), c_sizes=(0, 1, 2), j: int = 2
                    ) -> StrongAction:
    """C^X = [[X, J], C] for cocartesian finite sets acting on finite sets."""
    if j > 3 or max(x_sizes, default=0) > 2 or max(c_sizes, default=0) > 3:
        raise ParamOutOfBounds("exponent towers grow too fast beyond this")
    fsx = fs_category(x_sizes, "FinSet")
    fsc = fs_category(c_sizes, "FinSet")
    X = fs_cocartesian(fsx)
    C = fs_cartesian(fsc)

    def exp(x):
        return j ** x

    def act_obj(c, x):
        return c ** exp(x)

    def act_mor_x(f, c):
        x, y, fp = f.src, f.tgt, f.payload
        payload = []
        for gi in range(c ** exp(x)):
            gd = decode(gi, c, exp(x))
            outer = []
            for qi in range(exp(y)):
                qd = decode(qi, j, y)
                p = encode([qd[fp[i]] for i in range(x)], j)
                outer.append(gd[p])
            payload.append(encode(outer, c))
        return Mor(c ** exp(x), c ** exp(y), tuple(payload))

    def act_mor_c(h, x):
        c, c2, hp = h.src, h.tgt, h.payload
        payload = []
        for gi in range(c ** exp(x)):
            gd = decode(gi, c, exp(x))
            payload.append(encode([hp[d] for d in gd], c2))
        return Mor(c ** exp(x), c2 ** exp(x), tuple(payload))

    def phi2(x, b, c):
        n = exp(x)
        bx, cx = b ** n, c ** n
        payload = []
        for fi in range(bx):
            bd = decode(fi, b, n)
            for gi in range(cx):
                cd = decode(gi, c, n)
                payload.append(encode([bd[p] * c + cd[p] for p in range(n)],
                                      b * c))
        return Mor(bx * cx, (b * c) ** n, tuple(payload))

    def phi0(x):
        return Mor(1, 1, (0,))

    def psi2(x, y, c):
        # [X+Y, J] splits as [X, J] x [Y, J]; big-endian concat means the
        # combined index is p1 * j**y + p2
        nxy, nx, ny = exp(x + y), exp(x), exp(y)
        payload = []
        for gi in range(c ** nxy):
            gd = decode(gi, c, nxy)
            outer = []
            for p2 in range(ny):
                inner = encode([gd[p1 * ny + p2] for p1 in range(nx)], c)
                outer.append(inner)
            payload.append(encode(outer, c ** nx))
        return Mor(c ** nxy, (c ** nx) ** ny, tuple(payload))

    def psi0(c):
        return Mor(c, c, _rng(c))

    return StrongAction(
        "finset_j", X, C, act_obj, act_mor_c, act_mor_x,
        phi2, phi0, psi2, psi0,
        phi2_inv=lambda x, b, c: invert_bijection(phi2(x, b, c)),
        phi0_inv=lambda x: Mor(1, 1, (0,)),
        psi2_inv=lambda x, y, c: invert_bijection(psi2(x, y, c)),
        psi0_inv=lambda c: Mor(c, c, _rng(c)))


def precompose_action() -> StrongAction:
    """Precomposition of monotone endomaps of the two-chain acting on
    monotone valuations into the truth values; everything is thin and
    functor composition is strictly associative, so psi is the identity."""
    endos = ((0, 0), (0, 1), (1, 1))

    def leq_pt(a, b):
        return all(p <= q for p, q in zip(a, b))

    xcat = thin_category("[J,J]", endos, leq_pt, obj_repr=str)
    X = thin_monoidal(xcat, lambda f, g: tuple(f[i] for i in g), (0, 1))

    vals = ((0, 0), (0, 1), (1, 1))  # monotone maps into F < T
    ccat = thin_category("[J,2]", vals, leq_pt, obj_repr=str)
    C = thin_monoidal(ccat, lambda b, c: tuple(min(p, q)
                                               for p, q in zip(b, c)), (1, 1))

    def act_obj(c, x):
        return tuple(c[i] for i in x)

    return StrongAction(
        "precompose", X, C,
        act_obj=act_obj,
        act_mor_c=lambda g, x: Mor(act_obj(g.src, x), act_obj(g.tgt, x)),
        act_mor_x=lambda f, c: Mor(act_obj(c, f.src), act_obj(c, f.tgt)),
        phi2=lambda x, b, c: Mor(C.t(act_obj(b, x), act_obj(c, x)),
                                 act_obj(C.t(b, c), x)),
        phi0=lambda x: Mor(C.unit, act_obj(C.unit, x)),
        psi2=lambda x, y, c: Mor(act_obj(c, X.t(x, y)),
                                 act_obj(act_obj(c, x), y)),
        psi0=lambda c: Mor(act_obj(c, X.unit), c),
        phi2_inv=lambda x, b, c: Mor(act_obj(C.t(b, c), x),
                                     C.t(act_obj(b, x), act_obj(c, x))),
        phi0_inv=lambda x: Mor(act_obj(C.unit, x), C.unit),
        psi2_inv=lambda x, y, c: Mor(act_obj(act_obj(c, x), y),
                                     act_obj(c, X.t(x, y))),
        psi0_inv=lambda c: Mor(c, act_obj(c, X.unit)))


# ---------------------------------------------------------------------------
# the K* deformation over exact rational matrices


def kstar_action(k: int = 1, xs=(Fraction(1, 2), Fraction(1), Fraction(2),
                                 Fraction(3)), dims=(1, 2)) -> StrongAction:
    """Identity endofunctors with scalar-deformed structure maps:
    phi2 = x**k id, phi0 = x**-k id."""
    if abs(k) > 3:
        raise ParamOutOfBounds("deformation exponent |k| must be <= 3")
    if max(dims) > 3:
        raise ParamOutOfBounds("dims above 3 make Kronecker blocks huge")
    xs = tuple(Fraction(x) for x in xs)
    if any(x == 0 for x in xs):
        raise ParamOutOfBounds("acting objects must be nonzero scalars")
    mc = matcat_category(dims)
    C = matcat_monoidal(mc)
    xcat = thin_category("K*", xs, lambda a, b: a == b, obj_repr=str)
    X = thin_monoidal(xcat, lambda a, b: a * b, Fraction(1))

    def scalar_id(n, s):
        return Mor(n, n, eye(n, scale=s))

    c_homs = {}

    def c_hom_obj(b, c):
        return b * c

    def c_transpose(a, b, c, f):
        rows = tuple(
            tuple(f.payload[i * b + j][kk] for j in range(b) for kk in range(c))
            for i in range(a))
        return Mor(a, b * c, rows)

    def c_untranspose(a, b, c, g):
        rows = tuple(
            tuple(g.payload[i][j * c + kk] for kk in range(c))
            for i in range(a) for j in range(b))
        return Mor(a * b, c, rows)

    c_hom = InternalHomData("mat-hom", C, "right", c_hom_obj, c_transpose,
                            c_untranspose)

    x_hom = InternalHomData(
        "kstar-hom", X, "right",
        lambda y, z: z / y,
        lambda x, y, z, f: Mor(x, z / y),
        lambda x, y, z, g: Mor(x * y, z))

    def x_dual_for(x):
        return DualData(x, 1 / x, Mor(Fraction(1), Fraction(1)),
                        Mor(Fraction(1), Fraction(1)))

    def c_dual_for(n):
        ev, coev = matcat_dual_pair(n)
        return DualData(n, n, ev, coev)

    adjoint = RightAdjointData(
        "identity",
        on_obj=lambda x, c: c,
        on_mor=lambda x, g: g,
        unit=lambda x, c: mc.id(c),
        counit=lambda x, c: mc.id(c))

    return StrongAction(
        "kstar(k=%d)" % k, X, C,
        act_obj=lambda c, x: c,
        act_mor_c=lambda g, x: g,
        act_mor_x=lambda f, c: mc.id(c),
        phi2=lambda x, b, c: scalar_id(b * c, x ** k),
        phi0=lambda x: scalar_id(1, x ** -k),
        psi2=lambda x, y, c: mc.id(c),
        psi0=lambda c: mc.id(c),
        phi2_inv=lambda x, b, c: scalar_id(b * c, x ** -k),
        phi0_inv=lambda x: scalar_id(1, x ** k),
        psi2_inv=lambda x, y, c: mc.id(c),
        psi0_inv=lambda c: mc.id(c),
        x_hom=x_hom, c_hom=c_hom, x_dual_for=x_dual_for,
        c_dual_for=c_dual_for, right_adjoint=adjoint)


# ---------------------------------------------------------------------------
# cocartesian acted categories: copowers and self-tensoring


def _fs_left_closed(unused=None) -> LeftClosedWithProducts:
    return LeftClosedWithProducts(
        hom_obj=lambda x, z: z ** x,
        transpose_left=lambda x, y, z, f: curry_left(f, x, y, z),
        untranspose_left=lambda x, y, z, g: uncurry_left(g, x, y, z),
        product=lambda s, t: s * t,
        pair=pairing,
        proj1=project1,
        proj2=project2)


def copower_action(lat: FinLattice | None = None,
                   x_sizes=(0, 1, 2)) -> StrongAction:
    """C^X is the join of X-many copies of C in a bounded lattice."""
    if lat is None:
        lat = diamond()
    if len(lat.elements) > 8:
        raise ParamOutOfBounds("lattices above 8 elements get slow")
    fsx = fs_category(x_sizes, "FinSet")
    X = fs_cartesian(fsx)
    C = lat.cocartesian()

    def act_obj(c, x):
        return c if x > 0 else lat.bottom

    tri = TriangleHomData(
        "lattice-tri",
        tri_obj=lambda b, c: 1 if lat.leq(b, c) else 0,
        to_x=lambda x, b, c, f: Mor(x, 1 if lat.leq(b, c) else 0,
                                    (0,) * x if lat.leq(b, c) else ()),
        from_x=lambda x, b, c, g: Mor(act_obj(b, x), c))

    cocart = CocartesianData(
        split=lambda f, a, b: (Mor(a, f.tgt), Mor(b, f.tgt)),
        copair=lambda f, g: Mor(lat.join[(f.src, g.src)], f.tgt))

    return StrongAction(
        "copower", X, C,
        act_obj=act_obj,
        act_mor_c=lambda g, x: Mor(act_obj(g.src, x), act_obj(g.tgt, x)),
        act_mor_x=lambda f, c: Mor(act_obj(c, f.src), act_obj(c, f.tgt)),
        phi2=lambda x, b, c: Mor(C.t(act_obj(b, x), act_obj(c, x)),
                                 act_obj(C.t(b, c), x)),
        phi0=lambda x: Mor(lat.bottom, act_obj(lat.bottom, x)),
        psi2=lambda x, y, c: Mor(act_obj(c, x * y),
                                 act_obj(act_obj(c, x), y)),
        psi0=lambda c: Mor(act_obj(c, 1), c),
        phi2_inv=lambda x, b, c: Mor(act_obj(C.t(b, c), x),
                                     C.t(act_obj(b, x), act_obj(c, x))),
        phi0_inv=lambda x: Mor(act_obj(lat.bottom, x), lat.bottom),
        psi2_inv=lambda x, y, c: Mor(act_obj(act_obj(c, x), y),
                                     act_obj(c, x * y)),
        psi0_inv=lambda c: Mor(c, act_obj(c, 1)),
        x_hom=_fs_left_closed(), triangle_hom=tri, c_cocart=cocart)


def self_tensor_action(sizes=(0, 1, 2)) -> StrongAction:
    """B^X = B x X: finite sets acting on themselves-as-cocartesian."""
    if max(sizes, default=0) > 3:
        raise ParamOutOfBounds("sizes above 3 make hom sweeps infeasible")
    fsx = fs_category(sizes, "FinSetX")
    fsc = fs_category(sizes, "FinSetC")
    X = fs_cartesian(fsx)
    C = fs_cocartesian(fsc)

    def act_obj(b, x):
        return b * x

    def act_mor_c(g, x):
        return Mor(g.src * x, g.tgt * x,
                   tuple(g.payload[ib] * x + ix
                         for ib in range(g.src) for ix in range(x)))

    def act_mor_x(f, b):
        return Mor(b * f.src, b * f.tgt,
                   tuple(ib * f.tgt + f.payload[ix]
                         for ib in range(b) for ix in range(f.src)))

    def phi2(x, b, c):
        left = tuple(ib * x + ix for ib in range(b) for ix in range(x))
        right = tuple((b + ic) * x + ix for ic in range(c) for ix in range(x))
        return Mor(b * x + c * x, (b + c) * x, left + right)

    def psi2(x, y, c):
        n = c * x * y
        return Mor(n, n, _rng(n))

    tri = TriangleHomData(
        "curry-tri",
        tri_obj=lambda b, c: c ** b,
        to_x=lambda x, b, c, f: Mor(
            x, c ** b,
            tuple(encode([f.payload[ib * x + ix] for ib in range(b)], c)
                  for ix in range(x))),
        from_x=lambda x, b, c, g: Mor(
            b * x, c,
            tuple(decode(g.payload[ix], c, b)[ib]
                  for ib in range(b) for ix in range(x))))

    cocart = CocartesianData(
        split=lambda f, a, b: (Mor(a, f.tgt, f.payload[:a]),
                               Mor(b, f.tgt, f.payload[a:])),
        copair=lambda f, g: Mor(f.src + g.src, f.tgt,
                                tuple(f.payload) + tuple(g.payload)))

    return StrongAction(
        "self_tensor", X, C,
        act_obj=act_obj,
        act_mor_c=act_mor_c,
        act_mor_x=act_mor_x,
        phi2=phi2,
        phi0=lambda x: Mor(0, 0, ()),
        psi2=psi2,
        psi0=lambda c: Mor(c, c, _rng(c)),
        phi2_inv=lambda x, b, c: invert_bijection(phi2(x, b, c)),
        phi0_inv=lambda x: Mor(0, 0, ()),
        psi2_inv=lambda x, y, c: psi2(x, y, c),
        psi0_inv=lambda c: Mor(c, c, _rng(c)),
        x_hom=_fs_left_closed(), triangle_hom=tri, c_cocart=cocart)


# ---------------------------------------------------------------------------
# the comonad corepresentation seed


def flatten_comonad(gms_objects=None) -> LaxMonoidalComonad:
    """The idempotent flattening endofunctor as a lax monoidal comonad."""
    if gms_objects is None:
        gms_objects = default_gms_family()
    C = gms_structure(gms_objects, "GMS")
    cache: dict = {}

    def flat(m):
        out = cache.get(m.uid)
        if out is None:
            out = gms_act(m, ("flatten", False))
            cache[m.uid] = out
        return out

    F = FunctorData("flatten", C.base, C.base, flat,
                    lambda g: Mor(flat(g.src), flat(g.tgt), g.payload))
    lax = LaxMonoidalFunctorData(
        "flatten", C, C, F,
        mult=lambda b, c: Mor(C.t(flat(b), flat(c)), flat(C.t(b, c)),
                              _rng(len(b) * len(c))),
        unit_map=Mor(C.unit, flat(C.unit), (0,)))
    return LaxMonoidalComonad(
        lax,
        counit=lambda c: Mor(flat(c), c, _rng(len(c))),
        comult=lambda c: Mor(flat(c), flat(flat(c)), _rng(len(c))))


# ---------------------------------------------------------------------------
# registry


BUILDERS = {
    "truncation": truncation_action,
    "truth_values": truth_values_action,
    "finset_op": finset_op_action,
    "finset_j": finset_j_action,
    "precompose": precompose_action,
    "kstar": kstar_action,
    "scaling": scaling_action,
    "copower": copower_action,
    "self_tensor": self_tensor_action,
}


def build_action(name: str, **params) -> WeakAction:
    """Construct a named action; strong ones come back as StrongAction."""
    if name not in BUILDERS:
        raise UnknownAction("unknown action %r; known: %s"
                            % (name, ", ".join(sorted(BUILDERS))))
    return BUILDERS[name](**params)
