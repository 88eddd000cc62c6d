"""Tests for utility functions"""

import logging

import pytest

from covercrimp.utils import UnionFind, enumeration_logger, map_shards


def _scaled_sum(factor, shard):
    return factor * sum(shard)


@pytest.mark.lightweight
class TestUnionFind:
    def test_classes(self):
        forest = UnionFind(5)
        assert forest.union(0, 1)
        assert not forest.union(1, 0)
        forest.union(4, 3)
        assert forest.classes() == [[0, 1], [2], [3, 4]]
        assert forest.class_count() == 3

    def test_find_after_chain(self):
        forest = UnionFind(4)
        forest.union(0, 1)
        forest.union(2, 3)
        forest.union(1, 3)
        assert len({forest.find(i) for i in range(4)}) == 1


class TestMapShards:
    def test_sequential(self):
        assert map_shards(_scaled_sum, 2, [[1, 2], [3], []]) == [6, 6, 0]

    def test_pool_keeps_shard_order(self):
        shards = [[i, i] for i in range(6)]
        assert map_shards(_scaled_sum, 3, shards, workers=2) == [6 * i for i in range(6)]

    def test_single_shard_runs_inline(self, mocker):
        pool = mocker.patch("covercrimp.utils.parallel.Pool")
        assert map_shards(_scaled_sum, 1, [[4]], workers=4) == [4]
        pool.assert_not_called()


def test_enumeration_logger_does_not_propagate():
    assert enumeration_logger.name == "covercrimp.enumeration"
    assert not enumeration_logger.propagate
    assert enumeration_logger.level == logging.DEBUG
