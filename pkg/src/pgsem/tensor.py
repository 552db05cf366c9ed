"""Dense tensors over a commutative semiring, with the compact-closed
structural maps.

Scalars come from one of three carriers: reals, Booleans (or / and), or
naturals.  Contraction is index-matched summation in the semiring, which
is all the structure the meaning computations need; norms exist only for
the real carrier.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from .errors import (
    AxisMismatch,
    DimMismatch,
    IndexOutOfRange,
    NotRealSemiring,
    RankError,
    SemiringMismatch,
    ShapeMismatch,
    ZeroVector,
)


@dataclass(frozen=True)
class Semiring:
    """A commutative semiring realized by a numpy dtype and two ufuncs."""

    name: str
    dtype: object
    add: object
    mul: object
    zero: object
    one: object

    def __repr__(self):
        return "Semiring(%r)" % (self.name,)


REAL = Semiring("real", np.float64, np.add, np.multiply, 0.0, 1.0)
BOOLEAN = Semiring("boolean", np.bool_, np.logical_or, np.logical_and,
                   False, True)
NATURAL = Semiring("natural", np.int64, np.add, np.multiply, 0, 1)

SEMIRINGS = {s.name: s for s in (REAL, BOOLEAN, NATURAL)}


@dataclass(frozen=True)
class Tensor:
    """An immutable dense array tagged with its semiring.

    Storage is row-major (last index fastest); rank 0 is a scalar.
    """

    data: np.ndarray
    semiring: Semiring

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=self.semiring.dtype)
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.data.shape

    @property
    def rank(self) -> int:
        return self.data.ndim

    def item(self):
        """The sole entry of a rank-0 tensor, as a plain Python scalar."""
        if self.rank != 0:
            raise RankError("item() on rank-%d tensor" % self.rank)
        return self.data.item()

    def tolist(self):
        return self.data.tolist()

    def __eq__(self, other):
        return (isinstance(other, Tensor)
                and self.semiring == other.semiring
                and self.shape == other.shape
                and bool(np.array_equal(self.data, other.data)))

    def __hash__(self):
        return hash((self.semiring.name, self.shape))


def _require_same_semiring(a: Tensor, b: Tensor):
    if a.semiring != b.semiring:
        raise SemiringMismatch("%r vs %r" % (a.semiring, b.semiring))


def scalar(value, semiring: Semiring) -> Tensor:
    return Tensor(np.asarray(value, dtype=semiring.dtype), semiring)


def zeros(shape: Iterable[int], semiring: Semiring) -> Tensor:
    return Tensor(np.full(tuple(shape), semiring.zero, dtype=semiring.dtype),
                  semiring)


def basis_vector(dim: int, i: int, semiring: Semiring) -> Tensor:
    if not 0 <= i < dim:
        raise IndexOutOfRange("basis index %d for dimension %d" % (i, dim))
    data = np.full(dim, semiring.zero, dtype=semiring.dtype)
    data[i] = semiring.one
    return Tensor(data, semiring)


def eta(dim: int, semiring: Semiring) -> Tensor:
    """The cap: the identity pattern as a rank-2 state (sum of e_i (x) e_i)."""
    data = np.full((dim, dim), semiring.zero, dtype=semiring.dtype)
    for i in range(dim):
        data[i, i] = semiring.one
    return Tensor(data, semiring)


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    _require_same_semiring(a, b)
    return Tensor(a.semiring.mul.outer(a.data, b.data), a.semiring)


def contract(a: Tensor, axis_pairs) -> Tensor:
    """The cup: sum out each paired pair of axes in the semiring.

    Remaining axes keep their original relative order.
    """
    pairs = [tuple(p) for p in axis_pairs]
    flat = [ax for p in pairs for ax in p]
    if len(set(flat)) != len(flat) or any(not 0 <= ax < a.rank for ax in flat):
        raise AxisMismatch("bad axis pairs %r for rank %d" % (pairs, a.rank))
    for x, y in pairs:
        if a.shape[x] != a.shape[y]:
            raise DimMismatch("axes %d and %d have dims %d != %d"
                              % (x, y, a.shape[x], a.shape[y]))
    data = a.data
    remaining = list(range(a.rank))
    for x, y in pairs:
        i, j = sorted((remaining.index(x), remaining.index(y)))
        data = np.diagonal(data, axis1=i, axis2=j)
        data = a.semiring.add.reduce(data, axis=-1)
        del remaining[j], remaining[i]
    return Tensor(data, a.semiring)


def add(a: Tensor, b: Tensor) -> Tensor:
    _require_same_semiring(a, b)
    if a.shape != b.shape:
        raise ShapeMismatch("%r vs %r" % (a.shape, b.shape))
    return Tensor(a.semiring.add(a.data, b.data), a.semiring)


def scale(c, a: Tensor) -> Tensor:
    value = np.asarray(c, dtype=a.semiring.dtype)
    return Tensor(a.semiring.mul(value, a.data), a.semiring)


def inner_product(u: Tensor, v: Tensor):
    """Semiring sum of entrywise products; the ordinary dot product over
    the reals, a non-empty-intersection test over the Booleans."""
    _require_same_semiring(u, v)
    if u.shape != v.shape:
        raise ShapeMismatch("%r vs %r" % (u.shape, v.shape))
    products = u.semiring.mul(u.data, v.data)
    if products.ndim == 0:
        return products.item()
    return u.semiring.add.reduce(products, axis=None).item()


def map_to_state(m: Tensor) -> Tensor:
    """Present a linear map as the state it corresponds to.

    Axis convention: first axis is the input basis index.  The stored data
    is unchanged; the operation pins down the convention.
    """
    if m.rank != 2:
        raise RankError("map_to_state needs rank 2, got %d" % m.rank)
    return m


def norm(v: Tensor) -> float:
    if v.semiring != REAL:
        raise NotRealSemiring("norm over %r" % (v.semiring,))
    return math.sqrt(inner_product(v, v))


def normalize(v: Tensor) -> Tensor:
    length = norm(v)
    if length == 0.0:
        raise ZeroVector("cannot normalize the zero vector")
    return scale(1.0 / length, v)
