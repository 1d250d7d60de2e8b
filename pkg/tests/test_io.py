import io
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphrearrange.graph import GraphError, build_grid_window, build_ladder, build_path, build_regular_tree
from graphrearrange.io import (dump_graph, load_graph, parse_graph_spec, read_function, read_graph,
                               read_ordering, write_csv, write_function, write_graph, write_ordering)
from graphrearrange.orderings import spiral_ordering, tree_bfs_ordering
from graphrearrange.rearrange import LatticeFunction

GRAPHS = [build_grid_window(3), build_ladder(5), build_path(6), build_regular_tree(3, 3)]


@pytest.mark.parametrize("spec,describe", [("grid:4", "grid:4"), ("tree:3,4", "tree:3,4"),
                                           ("ladder:16", "ladder:16"), ("path: 9", "path:9")])
def test_parse_graph_spec(spec, describe):
    assert parse_graph_spec(spec).describe() == describe


@pytest.mark.parametrize("spec", ["grid", "cube:3", "grid:x", "tree:3"])
def test_parse_graph_spec_rejects(spec):
    with pytest.raises(GraphError):
        parse_graph_spec(spec)


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: g.describe())
def test_graph_roundtrip(g, tmp_path):
    assert load_graph(dump_graph(g)) == g
    write_graph(g, tmp_path / "g.txt")
    assert read_graph(tmp_path / "g.txt") == g


def test_graph_file_errors():
    with pytest.raises(GraphError):
        load_graph("")
    with pytest.raises(GraphError):
        load_graph("grid 1\n0 0 0 1\n0 0\n")
    with pytest.raises(GraphError):
        load_graph("grid 1\n1 0 0 1\n")


@pytest.mark.parametrize("o", [spiral_ordering(GRAPHS[0]), tree_bfs_ordering(GRAPHS[3])],
                         ids=["spiral", "tree-bfs"])
def test_ordering_roundtrip(o):
    buf = io.StringIO()
    write_ordering(o, buf)
    back = read_ordering(o.graph, io.StringIO(buf.getvalue()), o.name)
    assert back == o


def test_ordering_reader_accepts_whitespace_and_comments():
    g = build_grid_window(2)
    text = "# spiral start\nrank x y\n2 1 0\n1 0 0\n"
    o = read_ordering(g, io.StringIO(text))
    assert [o.coord_at(1), o.coord_at(2)] == [(0, 0), (1, 0)]
    with pytest.raises(ValueError):
        read_ordering(g, io.StringIO("1 0 0\n3 1 0\n"))


def test_function_text_format():
    g = build_grid_window(3)
    f = LatticeFunction.from_coords(g, {(0, 0): Fraction(1, 3), (1, 0): 2})
    buf = io.StringIO()
    write_function(f, buf)
    assert buf.getvalue() == "x,y,value\n0,0,1/3\n1,0,2\n"
    assert read_function(g, io.StringIO("x y value\n0 0 0.25\n")).at((0, 0)) == Fraction(1, 4)
    with pytest.raises(ValueError):
        read_function(g, io.StringIO("0,0,1\n0,0,2\n"))


values = st.fractions(min_value=Fraction(1, 100), max_value=100, max_denominator=100)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.sampled_from(GRAPHS[3].interior_vertices()), values, max_size=6))
def test_tree_function_roundtrip(d):
    f = LatticeFunction(GRAPHS[3], d)
    buf = io.StringIO()
    write_function(f, buf)
    assert read_function(GRAPHS[3], io.StringIO(buf.getvalue())) == f


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.sampled_from(GRAPHS[0].interior_vertices()), values, max_size=10))
def test_grid_function_roundtrip(d):
    f = LatticeFunction(GRAPHS[0], d)
    buf = io.StringIO()
    write_function(f, buf)
    assert read_function(GRAPHS[0], io.StringIO(buf.getvalue())) == f


def test_write_csv():
    buf = io.StringIO()
    write_csv([(1, 4, "oracle(box=13)")], ["N", "min", "provenance"], buf)
    assert buf.getvalue() == "N,min,provenance\n1,4,oracle(box=13)\n"
