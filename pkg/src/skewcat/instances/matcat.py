"""A strictified skeleton of finite dimensional rational vector spaces.

Objects are dimensions, morphisms are exact rational matrices (a map
m -> n is an m x n matrix, composed by matrix product in diagrammatic
order), and the tensor is the Kronecker product under row-major index
flattening, which makes all coherence data the identity.

Hom sets are not enumerable; checkers fall back to a deterministic
sample pool of elementary matrices plus one dense rational matrix.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from ..core import FiniteCategory, Mor, NotEnumerable
from ..monoidal import SkewMonoidalStructure
from .finset import _identity_coherence

Matrix = tuple


def matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def eye(n: int, scale=1) -> Matrix:
    s = Fraction(scale)
    return tuple(tuple(s if i == j else Fraction(0) for j in range(n))
                 for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch %dx%d . %dx%d"
                         % (len(a), len(a[0]), len(b), len(b[0])))
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum((row[k] * b[k][j] for k in range(len(b))), Fraction(0))
              for j in range(cols))
        for row in a)


def kron(a: Matrix, b: Matrix, rows_b: int, cols_b: int) -> Matrix:
    return tuple(
        tuple(a[i][j] * b[k][l]
              for j in range(len(a[0]) if a else 0) for l in range(cols_b))
        for i in range(len(a)) for k in range(rows_b))


def scalar_mul(s, a: Matrix) -> Matrix:
    s = Fraction(s)
    return tuple(tuple(s * v for v in row) for row in a)


def matcat_category(dims: Sequence[int], name: str = "MatQ") -> FiniteCategory:
    def hom(m, n):
        raise NotEnumerable("rational matrices form an infinite hom set")

    def compose(f, g):
        return Mor(f.src, g.tgt, matmul(f.payload, g.payload))

    def identity(n):
        return Mor(n, n, eye(n))

    def valid(m):
        rows = m.payload
        if len(rows) != m.src:
            return False
        return all(len(r) == m.tgt for r in rows)

    def samples(m, n):
        out = []
        for i in range(m):
            for j in range(n):
                out.append(Mor(m, n, tuple(
                    tuple(Fraction(1) if (a, b) == (i, j) else Fraction(0)
                          for b in range(n)) for a in range(m))))
        if m and n:
            # entries >= 2 on the first row, so never a 0-1 matrix
            out.append(Mor(m, n, tuple(
                tuple(Fraction(a + 2 * b + 2, 1 + a) for b in range(n))
                for a in range(m))))
        return out

    return FiniteCategory(name, tuple(dims), hom, compose, identity,
                          valid_mor=valid, sample_mors=samples, obj_repr=str)


def matcat_monoidal(cat: FiniteCategory) -> SkewMonoidalStructure:
    def tensor(m, n):
        return m * n

    def tensor_mor(f, g):
        return Mor(f.src * g.src, f.tgt * g.tgt,
                   kron(f.payload, g.payload, g.src, g.tgt))

    coh = _identity_coherence(tensor, 1)
    ident = dict(coh)
    # identity index maps become identity matrices here
    ident["assoc"] = lambda a, b, c: Mor(a * b * c, a * b * c, eye(a * b * c))
    ident["lunit"] = lambda a: Mor(a, a, eye(a))
    ident["runit"] = lambda a: Mor(a, a, eye(a))
    from ..monoidal import InvertibilityWitness
    ident["coherence_inverses"] = InvertibilityWitness(
        assoc_inv=lambda a, b, c: Mor(a * b * c, a * b * c, eye(a * b * c)),
        lunit_inv=lambda a: Mor(a, a, eye(a)),
        runit_inv=lambda a: Mor(a, a, eye(a)))
    return SkewMonoidalStructure(cat.name + "(x)", cat, 1, tensor, tensor_mor,
                                 **ident)


def matcat_dual_pair(n: int):
    """Evaluation and coevaluation for the self-dual object n.

    ev is the n*n x 1 pairing matrix, coev the 1 x n*n copairing.
    """
    ev = tuple((Fraction(1) if i == j else Fraction(0),)
               for i in range(n) for j in range(n))
    coev = (tuple(Fraction(1) if i == j else Fraction(0)
                  for i in range(n) for j in range(n)),)
    return Mor(n * n, 1, ev), Mor(1, n * n, coev)
