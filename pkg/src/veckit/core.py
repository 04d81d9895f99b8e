"""Dense k-dimensional tensor values and their elementary operations.

A :class:`DenseTensor` couples a :class:`Shape` with a flat tuple of scalar
elements and a storage-order tag.  The tag fixes how the flat data maps to
multi-indices at construction time; every operation in this package is
defined purely in terms of ``(shape, index)`` lookups, so two tensors that
hold the same logical elements behave identically no matter how either one
happens to be stored.

Conventions used throughout the package:

* element indices are 0-indexed tuples ``(p_1, ..., p_k)``;
* dimension numbers are 1-indexed (``transpose(t, 1, 2)`` swaps the first
  two dimensions);
* scalars are rank-1 tensors of shape ``[1]``; rank 0 is not representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterator, Sequence, Union

from .errors import DimError, ShapeError

IndexTuple = tuple[int, ...]
Scalar = Union[int, float]

# Index arithmetic must stay within 64-bit signed integers.
_MAX_SIZE = 2 ** 63


class StorageOrder(Enum):
    """How a flat data sequence maps onto multi-indices."""

    #: The first index varies quickest (column-major for matrices).
    FIRST_INDEX_FASTEST = "first-index-fastest"
    #: The last index varies quickest (row-major for matrices).
    LAST_INDEX_FASTEST = "last-index-fastest"


@dataclass(frozen=True)
class Shape:
    """Ordered list of positive dimension extents; the source of rank truth."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.dims, tuple):
            object.__setattr__(self, "dims", tuple(self.dims))
        if len(self.dims) == 0:
            raise ShapeError("rank must be at least 1")
        for m in self.dims:
            if not isinstance(m, int) or isinstance(m, bool):
                raise ShapeError(f"extent {m!r} is not an integer")
            if m < 1:
                raise ShapeError(f"extent {m} must be at least 1")
        if math.prod(self.dims) >= _MAX_SIZE:
            raise ShapeError("total size exceeds 64-bit index range")

    @property
    def rank(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def extent(self, n: int) -> int:
        """Extent of dimension ``n`` (1-indexed); ``extent(0)`` is the
        conventional 1 used by the mixed-radix stride products."""
        if n == 0:
            return 1
        if not 1 <= n <= self.rank:
            raise DimError(f"dimension {n} out of range for rank {self.rank}")
        return self.dims[n - 1]

    def __repr__(self) -> str:
        return f"Shape({list(self.dims)})"


ShapeLike = Union[Shape, Sequence[int]]


def as_shape(value: ShapeLike) -> Shape:
    """Coerce a ``Shape`` or a sequence of extents into a ``Shape``."""
    if isinstance(value, Shape):
        return value
    return Shape(tuple(value))


def storage_strides(shape: Shape, order: StorageOrder) -> tuple[int, ...]:
    """Per-dimension offsets into flat storage for the given order."""
    strides = [0] * shape.rank
    acc = 1
    if order is StorageOrder.FIRST_INDEX_FASTEST:
        for i in range(shape.rank):
            strides[i] = acc
            acc *= shape.dims[i]
    else:
        for i in reversed(range(shape.rank)):
            strides[i] = acc
            acc *= shape.dims[i]
    return tuple(strides)


def iter_indices(
    shape: ShapeLike, order: StorageOrder = StorageOrder.FIRST_INDEX_FASTEST
) -> Iterator[IndexTuple]:
    """Yield every valid index tuple of ``shape`` in the given order."""
    dims = as_shape(shape).dims
    if order is StorageOrder.LAST_INDEX_FASTEST:
        yield from product(*map(range, dims))
    else:
        for rev in product(*map(range, reversed(dims))):
            yield rev[::-1]


def check_index(shape: Shape, idx: Sequence[int]) -> IndexTuple:
    """Validate an index tuple against ``shape``; raises ``IndexError``."""
    idx = tuple(idx)
    if len(idx) != shape.rank:
        raise IndexError(
            f"index {idx} has length {len(idx)}, expected rank {shape.rank}"
        )
    for p, m in zip(idx, shape.dims):
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < m:
            raise IndexError(f"index {idx} out of range for shape {list(shape.dims)}")
    return idx


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Immutable dense tensor: shape, flat scalar storage, storage order.

    Use :func:`tensors_equal` for logical comparison; two tensors built from
    differently ordered data compare equal whenever their shapes match and
    every co-indexed element matches.
    """

    shape: Shape
    data: tuple
    order: StorageOrder
    strides: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.data, tuple):
            object.__setattr__(self, "data", tuple(self.data))
        if len(self.data) != self.shape.size:
            raise ShapeError(
                f"data length {len(self.data)} does not match "
                f"shape {list(self.shape.dims)} (size {self.shape.size})"
            )
        object.__setattr__(self, "strides", storage_strides(self.shape, self.order))

    @property
    def rank(self) -> int:
        return self.shape.rank

    @property
    def size(self) -> int:
        return self.shape.size

    def get(self, idx: Sequence[int]) -> Scalar:
        """Element at the 0-indexed multi-index ``idx``."""
        idx = check_index(self.shape, idx)
        offset = 0
        for p, s in zip(idx, self.strides):
            offset += p * s
        return self.data[offset]

    def __getitem__(self, idx: Sequence[int]) -> Scalar:
        return self.get(idx)

    def __repr__(self) -> str:
        preview = list(self.data[:8])
        suffix = ", ..." if len(self.data) > 8 else ""
        return (
            f"DenseTensor(shape={list(self.shape.dims)}, "
            f"order={self.order.value!r}, data={preview}{suffix})"
        )


def make_tensor(
    shape: ShapeLike,
    data: Sequence[Scalar],
    order: StorageOrder = StorageOrder.FIRST_INDEX_FASTEST,
) -> DenseTensor:
    """Build a tensor from flat data laid out in the given storage order."""
    return DenseTensor(as_shape(shape), tuple(data), order)


def get(t: DenseTensor, idx: Sequence[int]) -> Scalar:
    """Element of ``t`` at ``idx``; function form of :meth:`DenseTensor.get`."""
    return t.get(idx)


def transpose(t: DenseTensor, m: int, n: int) -> DenseTensor:
    """Swap dimensions ``m`` and ``n`` (1-indexed).

    The result holds the same elements with the two index positions
    exchanged; ``transpose(t, m, m)`` is the identity.
    """
    k = t.rank
    if not 1 <= m <= k or not 1 <= n <= k:
        raise DimError(f"dimensions ({m}, {n}) out of range for rank {k}")
    if m == n:
        return t
    a, b = m - 1, n - 1
    new_dims = list(t.shape.dims)
    new_dims[a], new_dims[b] = new_dims[b], new_dims[a]
    new_shape = Shape(tuple(new_dims))

    def swapped(idx: IndexTuple) -> IndexTuple:
        src = list(idx)
        src[a], src[b] = src[b], src[a]
        return tuple(src)

    data = [t.get(swapped(idx)) for idx in iter_indices(new_shape)]
    return DenseTensor(new_shape, tuple(data), StorageOrder.FIRST_INDEX_FASTEST)


def squeeze_trailing(t: DenseTensor) -> DenseTensor:
    """Drop every trailing extent equal to 1; rank never falls below 1.

    Removing trailing singleton dimensions changes neither the flat element
    sequence (under either storage order) nor any element lookup, so the
    stored data is reused as-is.
    """
    dims = list(t.shape.dims)
    while len(dims) > 1 and dims[-1] == 1:
        dims.pop()
    if len(dims) == t.rank:
        return t
    return DenseTensor(Shape(tuple(dims)), t.data, t.order)


def tensors_equal(a: DenseTensor, b: DenseTensor) -> bool:
    """Shape-strict logical equality: equal ranks, extents, and elements."""
    if a.shape.dims != b.shape.dims:
        return False
    return all(a.get(idx) == b.get(idx) for idx in iter_indices(a.shape))


def from_nested(nested) -> DenseTensor:
    """Build a tensor from nested lists, outermost level first.

    ``from_nested([[1, 2], [3, 4]])`` is the 2x2 matrix with rows
    ``(1, 2)`` and ``(3, 4)``.  A bare scalar becomes a shape-``[1]``
    tensor.  Ragged nesting raises :class:`ShapeError`.
    """
    dims = []
    node = nested
    while isinstance(node, (list, tuple)):
        if len(node) == 0:
            raise ShapeError("empty axis in nested data")
        dims.append(len(node))
        node = node[0]
    if not dims:
        return make_tensor((1,), (nested,), StorageOrder.LAST_INDEX_FASTEST)

    flat: list = []

    def collect(node, depth: int) -> None:
        if depth == len(dims):
            if isinstance(node, (list, tuple)):
                raise ShapeError("ragged nesting: unexpected extra level")
            flat.append(node)
            return
        if not isinstance(node, (list, tuple)) or len(node) != dims[depth]:
            raise ShapeError(f"ragged nesting at depth {depth}")
        for child in node:
            collect(child, depth + 1)

    collect(nested, 0)
    return make_tensor(tuple(dims), flat, StorageOrder.LAST_INDEX_FASTEST)


def to_nested(t: DenseTensor):
    """Inverse of :func:`from_nested`: nested lists, outermost level first."""
    dims = t.shape.dims

    def build(prefix: IndexTuple):
        depth = len(prefix)
        if depth == len(dims):
            return t.get(prefix)
        return [build(prefix + (i,)) for i in range(dims[depth])]

    return build(())
