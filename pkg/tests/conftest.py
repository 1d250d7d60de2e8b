import sys

import pytest

from graphrearrange.graph import build_grid_window, build_ladder, build_path, build_regular_tree
from graphrearrange.orderings import (diamond_ordering, lex_ordering, path_ordering, snake_ordering,
                                      spiral_ordering, tree_bfs_ordering)


@pytest.fixture(scope="session")
def grid8():
    return build_grid_window(8)


@pytest.fixture(scope="session")
def spiral(grid8):
    return spiral_ordering(grid8)


@pytest.fixture(scope="session")
def diamond(grid8):
    return diamond_ordering(grid8)


@pytest.fixture(scope="session")
def ladder16():
    return build_ladder(16)


@pytest.fixture(scope="session")
def snake(ladder16):
    return snake_ordering(ladder16)


@pytest.fixture(scope="session")
def lex(ladder16):
    return lex_ordering(ladder16)


@pytest.fixture(scope="session")
def path_order():
    return path_ordering(build_path(31))


@pytest.fixture(scope="session")
def tree3():
    return tree_bfs_ordering(build_regular_tree(3, 4))


@pytest.fixture(scope="session")
def tree4():
    return tree_bfs_ordering(build_regular_tree(4, 4))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
