"""Partitioning into equal blocks, grid transposes, and concatenation."""

import pytest

import veckit as vk
from veckit import BlockError, BlockTensor, DimError, block, transpose_outer, unblock

from conftest import sequential


GOLDEN_BLOCKS = [
    [[[1], [4]], [[7], [10]]],
    [[[2], [5]], [[8], [11]]],
    [[[3], [6]], [[9], [12]]],
]


def test_block_partitions_last_dimension(golden):
    bt = block(golden, (1, 1, 3))
    assert bt.outer_shape.dims == (1, 1, 3)
    assert bt.block_shape.dims == (2, 2, 1)
    for q, want in enumerate(GOLDEN_BLOCKS):
        assert vk.to_nested(bt.block_at((0, 0, q))) == want


def test_block_every_dimension():
    t = sequential((2, 2))
    bt = block(t, (2, 2))
    assert bt.block_shape.dims == (1, 1)
    # blocks are stored with the first outer index varying fastest
    assert [b.get((0, 0)) for b in bt.blocks] == [
        t.get((0, 0)),
        t.get((1, 0)),
        t.get((0, 1)),
        t.get((1, 1)),
    ]


def test_block_single_block_is_whole_tensor(golden):
    bt = block(golden, (1, 1, 1))
    assert len(bt.blocks) == 1
    assert vk.tensors_equal(bt.blocks[0], golden)


def test_block_rejects_rank_mismatch(golden):
    with pytest.raises(DimError):
        block(golden, (1, 1))


def test_block_rejects_non_divisible(golden):
    with pytest.raises(BlockError):
        block(golden, (1, 1, 2))


@pytest.mark.parametrize(
    "outer",
    [(1, 1, 1), (1, 1, 3), (2, 1, 1), (2, 2, 3), (1, 2, 1)],
)
def test_unblock_inverts_block(golden, outer):
    assert vk.tensors_equal(unblock(block(golden, outer)), golden)


def test_unblock_keeps_explicit_rank():
    t = sequential((4, 1))
    out = unblock(block(t, (2, 1)))
    assert out.shape.dims == (4, 1)


def test_transpose_outer_swaps_grid(golden):
    bt = transpose_outer(block(golden, (1, 1, 3)), 2, 3)
    assert bt.outer_shape.dims == (1, 3, 1)
    assert bt.block_shape.dims == (2, 2, 1)
    for q, want in enumerate(GOLDEN_BLOCKS):
        assert vk.to_nested(bt.block_at((0, q, 0))) == want


def test_transpose_outer_then_unblock_merges(golden):
    raw = unblock(transpose_outer(block(golden, (1, 1, 3)), 2, 3))
    assert raw.shape.dims == (2, 6, 1)
    assert [raw.get((0, j, 0)) for j in range(6)] == [1, 4, 2, 5, 3, 6]
    assert [raw.get((1, j, 0)) for j in range(6)] == [7, 10, 8, 11, 9, 12]


def test_transpose_outer_same_dim_is_identity(golden):
    bt = block(golden, (1, 1, 3))
    assert transpose_outer(bt, 3, 3) is bt


def test_transpose_outer_rejects_out_of_range(golden):
    bt = block(golden, (1, 1, 3))
    with pytest.raises(DimError):
        transpose_outer(bt, 0, 3)
    with pytest.raises(DimError):
        transpose_outer(bt, 1, 4)


def test_block_tensor_rejects_wrong_count():
    piece = sequential((1, 1))
    with pytest.raises(BlockError):
        BlockTensor(vk.Shape((2, 2)), vk.Shape((1, 1)), (piece,))


def test_block_tensor_rejects_mixed_shapes():
    with pytest.raises(BlockError):
        BlockTensor(
            vk.Shape((2,)),
            vk.Shape((2,)),
            (sequential((2,)), sequential((3,))),
        )


def test_block_tensor_rejects_rank_mismatch():
    piece = sequential((2,))
    with pytest.raises(BlockError):
        BlockTensor(vk.Shape((1, 1)), vk.Shape((2,)), (piece,))


def test_block_at_rejects_bad_index(golden):
    bt = block(golden, (1, 1, 3))
    with pytest.raises(IndexError):
        bt.block_at((0, 0, 3))
