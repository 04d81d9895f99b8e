"""Element-wise vectorization through a mixed-radix index map.

A valid index tuple ``(p_1, ..., p_k)`` for extents ``(M_1, ..., M_k)``
corresponds to the linear position ``m = sum(p_l * M_1*...*M_{l-1})`` with
the empty product equal to 1.  This is a bijection onto ``0 .. size-1``;
its inverse recovers each digit by integer division and remainder.  The
vectorize/unvectorize pair built directly on it is an independent second
computation path for the shift-based operations and serves as their
arbiter in tests.
"""

from __future__ import annotations

from .core import (
    DenseTensor,
    IndexTuple,
    Shape,
    ShapeLike,
    as_shape,
    check_index,
    iter_indices,
    make_tensor,
    storage_strides,
    StorageOrder,
)
from .errors import ShapeError

# linear position of an element in the vectorized order; 0 <= m < size
LinearIndex = int


def index_strides(shape: ShapeLike) -> tuple[int, ...]:
    """Exclusive prefix products of the extents: (1, M_1, M_1*M_2, ...)."""
    shape = as_shape(shape)
    out = []
    acc = 1
    for m in shape.dims:
        out.append(acc)
        acc *= m
    return tuple(out)


def linear_index(idx: IndexTuple, shape: ShapeLike) -> LinearIndex:
    """Linear position of ``idx``: first index fastest, last slowest."""
    shape = as_shape(shape)
    idx = check_index(shape, idx)
    return sum(p * s for p, s in zip(idx, index_strides(shape)))


def tuple_index(m: LinearIndex, shape: ShapeLike) -> IndexTuple:
    """Index tuple at linear position ``m``; inverse of :func:`linear_index`."""
    shape = as_shape(shape)
    if not 0 <= m < shape.size:
        raise IndexError(f"linear index {m} out of range for size {shape.size}")
    return tuple(
        (m // s) % ext for s, ext in zip(index_strides(shape), shape.dims)
    )


def decompose_check(m: LinearIndex, shape: ShapeLike) -> bool:
    """Whether ``m`` equals the sum of its stride-weighted digits.

    Reconstructs ``m`` as ``sum(stride_l * ((m // stride_l) % M_l))``, the
    identity that makes each braced digit a valid index component.  Holds
    for every in-range ``m``.
    """
    shape = as_shape(shape)
    total = 0
    for s, ext in zip(index_strides(shape), shape.dims):
        total += s * ((m // s) % ext)
    return total == m


def vec_by_index(t: DenseTensor) -> DenseTensor:
    """Vectorize by direct index arithmetic: output[linear_index(p)] = t[p].

    Same result as the shift-based fold, computed without any block or
    transpose machinery.
    """
    shape = t.shape
    out: list = [None] * shape.size
    for p in iter_indices(shape):
        out[linear_index(p, shape)] = t.get(p)
    return make_tensor(Shape((shape.size,)), out)


def unvec_by_index(a: DenseTensor, target: ShapeLike) -> DenseTensor:
    """Rebuild the ``target``-shaped tensor from its vectorization.

    Places ``a[m]`` at index ``tuple_index(m, target)``; inverse of
    :func:`vec_by_index`.
    """
    target = as_shape(target)
    if a.rank != 1:
        raise ShapeError(f"expected a rank-1 vector, got rank {a.rank}")
    if a.shape.size != target.size:
        raise ShapeError(
            f"vector of length {a.shape.size} cannot fill shape "
            f"{list(target.dims)} of size {target.size}"
        )
    storage = storage_strides(target, StorageOrder.FIRST_INDEX_FASTEST)
    out: list = [None] * target.size
    for m in range(target.size):
        p = tuple_index(m, target)
        out[sum(pn * sn for pn, sn in zip(p, storage))] = a.data[m]
    return make_tensor(target, out)
