"""Skeletal finite sets: objects are sizes, morphisms are index tuples.

A map f: m -> n is the tuple (f(0), ..., f(m-1)).  Products and
coproducts are strictly associative on sizes (row-major pairing and
concatenation), so all coherence data is identity index maps and the
interesting content lives in currying and pairing arithmetic.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from ..core import FiniteCategory, Mor, NotEnumerable, opposite_category
from ..monoidal import InvertibilityWitness, SkewMonoidalStructure

HOM_LIMIT = 300_000


def encode(digits: Sequence[int], base: int) -> int:
    """Big-endian mixed-radix value of a digit string in a fixed base."""
    out = 0
    for d in digits:
        out = out * base + d
    return out


def decode(value: int, base: int, length: int) -> tuple:
    out = [0] * length
    for i in range(length - 1, -1, -1):
        value, out[i] = divmod(value, base)
    return tuple(out)


def fs_category(sizes: Sequence[int], name: str = "FinSet") -> FiniteCategory:
    def hom(m, n):
        if n == 0:
            return [Mor(m, n, ())] if m == 0 else []
        if n ** m > HOM_LIMIT:
            raise NotEnumerable("|hom(%d, %d)| too large" % (m, n))
        return [Mor(m, n, f) for f in itertools.product(range(n), repeat=m)]

    def compose(f, g):
        return Mor(f.src, g.tgt, tuple(g.payload[i] for i in f.payload))

    def identity(m):
        return Mor(m, m, tuple(range(m)))

    def valid(m):
        return (len(m.payload) == m.src
                and all(0 <= i < m.tgt for i in m.payload))

    return FiniteCategory(name, tuple(sizes), hom, compose, identity,
                          valid_mor=valid, obj_repr=str)


def _identity_coherence(tensor, unit):
    def rng(n):
        return tuple(range(n))

    return dict(
        assoc=lambda a, b, c: Mor(tensor(a, tensor(b, c)),
                                  tensor(tensor(a, b), c),
                                  rng(tensor(a, tensor(b, c)))),
        lunit=lambda a: Mor(a, tensor(unit, a), rng(a)),
        runit=lambda a: Mor(tensor(a, unit), a, rng(a)),
        coherence_inverses=InvertibilityWitness(
            assoc_inv=lambda a, b, c: Mor(tensor(tensor(a, b), c),
                                          tensor(a, tensor(b, c)),
                                          rng(tensor(a, tensor(b, c)))),
            lunit_inv=lambda a: Mor(tensor(unit, a), a, rng(a)),
            runit_inv=lambda a: Mor(a, tensor(a, unit), rng(a))))


def fs_cartesian(cat: FiniteCategory) -> SkewMonoidalStructure:
    """Cartesian structure: tensor is the product size, row-major pairs."""

    def tensor(m, n):
        return m * n

    def tensor_mor(f, g):
        n, n2 = g.src, g.tgt
        payload = tuple(f.payload[i] * n2 + g.payload[j]
                        for i in range(f.src) for j in range(n))
        return Mor(f.src * n, f.tgt * n2, payload)

    return SkewMonoidalStructure(
        cat.name + "(x)", cat, 1, tensor, tensor_mor,
        **_identity_coherence(tensor, 1))


def fs_cocartesian(cat: FiniteCategory) -> SkewMonoidalStructure:
    """Cocartesian structure: tensor is the sum size, concatenation."""

    def tensor(m, n):
        return m + n

    def tensor_mor(f, g):
        m2 = f.tgt
        payload = tuple(f.payload) + tuple(m2 + i for i in g.payload)
        return Mor(f.src + g.src, f.tgt + g.tgt, payload)

    return SkewMonoidalStructure(
        cat.name + "(+)", cat, 0, tensor, tensor_mor,
        **_identity_coherence(tensor, 0))


def fs_op_cartesian(cat: FiniteCategory) -> SkewMonoidalStructure:
    """The opposite of skeletal FinSet with the product tensor.

    An opposite morphism a -> b wraps the index tuple of the underlying
    map b -> a, so tensoring acts on payloads exactly as in fs_cartesian
    but with the roles of source and target sizes swapped.
    """
    op = opposite_category(cat)

    def tensor(m, n):
        return m * n

    def tensor_mor(f, g):
        bf, bg = f.tgt, g.tgt
        af, ag = f.src, g.src
        payload = tuple(f.payload[i] * ag + g.payload[j]
                        for i in range(bf) for j in range(bg))
        return Mor(af * ag, bf * bg, payload)

    def rng(n):
        return tuple(range(n))

    return SkewMonoidalStructure(
        op.name + "(x)", op, 1, tensor, tensor_mor,
        assoc=lambda a, b, c: Mor(a * b * c, a * b * c, rng(a * b * c)),
        lunit=lambda a: Mor(a, a, rng(a)),
        runit=lambda a: Mor(a, a, rng(a)),
        coherence_inverses=InvertibilityWitness(
            assoc_inv=lambda a, b, c: Mor(a * b * c, a * b * c, rng(a * b * c)),
            lunit_inv=lambda a: Mor(a, a, rng(a)),
            runit_inv=lambda a: Mor(a, a, rng(a))))


# ---------------------------------------------------------------------------
# index arithmetic for function sets [m, n] (size n**m, big-endian digits)


def invert_bijection(m: Mor) -> Mor:
    inv = [0] * len(m.payload)
    for i, j in enumerate(m.payload):
        inv[j] = i
    return Mor(m.tgt, m.src, tuple(inv))


def curry_left(f: Mor, x: int, y: int, z: int) -> Mor:
    """FS(x*y, z) -> FS(y, z**x): fix the second product coordinate."""
    payload = tuple(
        encode([f.payload[ix * y + iy] for ix in range(x)], z)
        for iy in range(y))
    return Mor(y, z ** x, payload)


def uncurry_left(g: Mor, x: int, y: int, z: int) -> Mor:
    payload = [0] * (x * y)
    for iy in range(y):
        digits = decode(g.payload[iy], z, x)
        for ix in range(x):
            payload[ix * y + iy] = digits[ix]
    return Mor(x * y, z, tuple(payload))


def pairing(f: Mor, g: Mor) -> Mor:
    """FS(y, s) and FS(y, t) to FS(y, s*t)."""
    t = g.tgt
    return Mor(f.src, f.tgt * t,
               tuple(f.payload[i] * t + g.payload[i] for i in range(f.src)))


def project1(f: Mor, s: int, t: int) -> Mor:
    return Mor(f.src, s, tuple(v // t for v in f.payload))


def project2(f: Mor, s: int, t: int) -> Mor:
    return Mor(f.src, t, tuple(v % t for v in f.payload))
