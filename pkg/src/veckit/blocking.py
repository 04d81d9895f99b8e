"""Partition a tensor into a grid of equally shaped blocks, and back.

``block`` cuts a tensor along every axis into contiguous, axis-aligned
sub-tensors of identical shape; ``unblock`` concatenates such a grid back
into a single tensor.  The grid itself can be transposed pairwise with
``transpose_outer``, which is what the shifting operation builds on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DenseTensor,
    Shape,
    ShapeLike,
    StorageOrder,
    as_shape,
    iter_indices,
    make_tensor,
    storage_strides,
)
from .errors import BlockError, DimError


@dataclass(frozen=True, eq=False)
class BlockTensor:
    """A grid of equally shaped blocks.

    ``blocks`` is stored in first-index-fastest order of the outer grid
    index.  Construction enforces the full invariants: block count matches
    the outer size, every block has exactly ``block_shape``, and the outer
    and block ranks agree.
    """

    outer_shape: Shape
    block_shape: Shape
    blocks: tuple[DenseTensor, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.blocks, tuple):
            object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.outer_shape.rank != self.block_shape.rank:
            raise BlockError(
                f"outer rank {self.outer_shape.rank} != block rank "
                f"{self.block_shape.rank}"
            )
        if len(self.blocks) != self.outer_shape.size:
            raise BlockError(
                f"{len(self.blocks)} blocks for outer grid of size "
                f"{self.outer_shape.size}"
            )
        for b in self.blocks:
            if b.shape.dims != self.block_shape.dims:
                raise BlockError(
                    f"block shape {list(b.shape.dims)} differs from "
                    f"{list(self.block_shape.dims)}"
                )

    def block_at(self, outer_idx) -> DenseTensor:
        """Block at the given outer grid index."""
        pos = 0
        strides = storage_strides(self.outer_shape, StorageOrder.FIRST_INDEX_FASTEST)
        for q, m, s in zip(outer_idx, self.outer_shape.dims, strides):
            if not 0 <= q < m:
                raise IndexError(
                    f"outer index {tuple(outer_idx)} out of range for grid "
                    f"{list(self.outer_shape.dims)}"
                )
            pos += q * s
        return self.blocks[pos]


def block(t: DenseTensor, outer: ShapeLike) -> BlockTensor:
    """Partition ``t`` into an ``outer``-shaped grid of equal blocks.

    Every outer extent must divide the matching tensor extent.  The block
    at outer index ``(q_1, ..., q_k)`` holds the source elements whose
    ``n``-th index lies in ``[q_n * M_n/T_n, (q_n + 1) * M_n/T_n)``.
    """
    outer = as_shape(outer)
    if outer.rank != t.rank:
        raise DimError(f"outer rank {outer.rank} != tensor rank {t.rank}")
    sub = []
    for T, M in zip(outer.dims, t.shape.dims):
        if M % T != 0:
            raise BlockError(f"outer extent {T} does not divide extent {M}")
        sub.append(M // T)
    block_shape = Shape(tuple(sub))

    # flat offsets instead of per-element index checks: every gathered
    # index is constructed in range
    strides = t.strides
    locals_flat = [
        sum(l * st for l, st in zip(local, strides))
        for local in iter_indices(block_shape)
    ]
    blocks = []
    for q in iter_indices(outer):
        base = sum(qn * sn * st for qn, sn, st in zip(q, sub, strides))
        data = [t.data[base + off] for off in locals_flat]
        blocks.append(make_tensor(block_shape, data))
    return BlockTensor(outer, block_shape, tuple(blocks))


def unblock(bt: BlockTensor) -> DenseTensor:
    """Concatenate a block grid back into one tensor.

    Inverse of :func:`block`: the result has extents ``T_n * M_n/T_n`` and
    keeps explicit rank ``k`` even when some extents are 1; squeezing is a
    separate, caller-controlled step.
    """
    sub = bt.block_shape.dims
    dims = tuple(T * S for T, S in zip(bt.outer_shape.dims, sub))
    shape = Shape(dims)
    outer_strides = storage_strides(bt.outer_shape, StorageOrder.FIRST_INDEX_FASTEST)
    data = []
    for p in iter_indices(shape):
        pos = 0
        for pn, sn, os in zip(p, sub, outer_strides):
            pos += (pn // sn) * os
        blk = bt.blocks[pos]
        flat = sum((pn % sn) * bs for pn, sn, bs in zip(p, sub, blk.strides))
        data.append(blk.data[flat])
    return make_tensor(shape, data)


def transpose_outer(bt: BlockTensor, m: int, n: int) -> BlockTensor:
    """Swap dimensions ``m`` and ``n`` (1-indexed) of the outer grid only.

    Blocks travel with their grid cell; block contents are untouched.
    """
    k = bt.outer_shape.rank
    if not 1 <= m <= k or not 1 <= n <= k:
        raise DimError(f"dimensions ({m}, {n}) out of range for rank {k}")
    if m == n:
        return bt
    a, b = m - 1, n - 1
    new_dims = list(bt.outer_shape.dims)
    new_dims[a], new_dims[b] = new_dims[b], new_dims[a]
    new_outer = Shape(tuple(new_dims))

    new_blocks = []
    for q in iter_indices(new_outer):
        src = list(q)
        src[a], src[b] = src[b], src[a]
        new_blocks.append(bt.block_at(tuple(src)))
    return BlockTensor(new_outer, bt.block_shape, tuple(new_blocks))
