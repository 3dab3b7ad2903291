"""Shared fixtures: small named trees and the seeded random ensemble."""

import pytest

from subtreecount import Tree, parse_edge_list, random_tree

ENSEMBLE_BASE_SEED = 0xC0FFEE


def seeded_ensemble(per_size=25, sizes=range(2, 10)):
    """Deterministic random-tree ensemble used by the acceptance suite."""
    return [
        random_tree(n, ENSEMBLE_BASE_SEED + 1000 * n + i)
        for n in sizes
        for i in range(per_size)
    ]


@pytest.fixture
def path3() -> Tree:
    return parse_edge_list("a b\nb c")


@pytest.fixture
def path5() -> Tree:
    return parse_edge_list("a b\nb m\nm d\nd e")


@pytest.fixture
def star3() -> Tree:
    return parse_edge_list("c l1\nc l2\nc l3")


@pytest.fixture
def double_spider() -> Tree:
    """Two hubs A and M with four pendant leaves each, plus M's extra leaf H."""
    lines = ["A M", "M H"]
    lines += [f"A a{i}" for i in range(1, 5)]
    lines += [f"M m{i}" for i in range(1, 5)]
    return parse_edge_list("\n".join(lines))
