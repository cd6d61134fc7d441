import pytest
from hypothesis import given, settings

from lexsmd.constructions import (
    cartesian_product,
    complete,
    complete_multipartite,
    corona,
    cycle,
    empty,
    grid,
    join,
    lexicographic_product,
    path,
    star,
    tree_from_pruefer,
    union,
)
from lexsmd.corpus import all_graphs
from lexsmd.graph import GraphError, build_graph, complement
from lexsmd.io import (
    Graph6Error,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    parse_graph_spec,
    product_labels,
    read_edge_list,
    write_dot,
)

from .conftest import graphs


def reference_graph6(n, edges):
    """Encoder written straight from the format description."""
    adj = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in adj else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[k : k + 6], 2)) for k in range(0, len(bits), 6))


def test_graph6_known_strings():
    assert reference_graph6(4, complete(4).edges) == "C~"
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6("@") == build_graph(1, [])
    assert parse_graph6("?") == build_graph(0, [])
    assert reference_graph6(4, path(4).edges) == "Ch"
    assert parse_graph6("Ch") == path(4)


def test_graph6_roundtrip_on_corpus():
    for n in range(7):
        for g in all_graphs(n):
            s = encode_graph6(g)
            assert s == reference_graph6(g.n, g.edges)
            assert parse_graph6(s) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=20))
def test_graph6_roundtrip_random(g):
    assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize(
    "text, offset, msg",
    [
        ("", 0, "empty"),
        ("C~~", 2, "expected 2 bytes"),
        ("C", 1, "expected 2 bytes"),
        ("C\x20", 1, "invalid character"),
        ("~~~", 0, "short size form"),
        ("B~", 1, "padding"),
    ],
)
def test_graph6_errors(text, offset, msg):
    with pytest.raises(Graph6Error, match=msg) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset


def test_graph6_encode_limit():
    with pytest.raises(GraphError, match="62"):
        encode_graph6(empty(63))


def test_edge_list_parsing(tmp_path):
    text = "# a path\nn 4\n0 1\n1 2  # middle\n\n2 3\n"
    assert parse_edge_list(text) == path(4)
    assert parse_edge_list("0 1\n1 2\n") == path(3)
    assert parse_edge_list("n 3\n").n == 3
    f = tmp_path / "g.txt"
    f.write_text(text, encoding="ascii")
    assert read_edge_list(f) == path(4)


@pytest.mark.parametrize(
    "text, msg",
    [("n x\n", "malformed header"), ("0 1 2\n", "expected 'u v'"), ("0 a\n", "non-integer"), ("n 2\n0 5\n", "out of range")],
)
def test_edge_list_errors(text, msg):
    with pytest.raises(GraphError, match=msg):
        parse_edge_list(text)


def test_write_dot():
    assert write_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    labelled = write_dot(path(2), ["a1", "a2"], name="H")
    assert labelled == 'graph H {\n  "a1";\n  "a2";\n  "a1" -- "a2";\n}\n'
    g = lexicographic_product(path(4), path(3))
    assert write_dot(g, product_labels(4, 3)) == write_dot(g, product_labels(4, 3))
    with pytest.raises(GraphError, match="labels"):
        write_dot(path(3), ["a"])


def test_product_labels():
    assert product_labels(4, 3) == ["a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3"]
    with pytest.raises(GraphError):
        product_labels(27, 1)


@pytest.mark.parametrize(
    "spec, want",
    [
        ("path:4", path(4)),
        ("cycle:6", cycle(6)),
        ("complete:3", complete(3)),
        ("empty:4", empty(4)),
        ("multipartite:2,2,2", complete_multipartite([2, 2, 2])),
        ("grid:2,3", grid(2, 3)),
        ("star:3", star(3)),
        ("tree:0,0", tree_from_pruefer([0, 0])),
        ("g6:Ch", path(4)),
        ("join(complete:1,union(complete:1,complete:2))", join(complete(1), union(complete(1), complete(2)))),
        ("lex(path:4, path:3)", lexicographic_product(path(4), path(3))),
        ("cartesian(path:2,path:3)", cartesian_product(path(2), path(3))),
        ("corona(path:2,complete:2)", corona(path(2), complete(2))),
        ("complement(cycle:5)", complement(cycle(5))),
        ("lex(multipartite:1,2,path:3)", lexicographic_product(complete_multipartite([1, 2]), path(3))),
    ],
)
def test_parse_graph_spec(spec, want):
    assert parse_graph_spec(spec) == want


@pytest.mark.parametrize(
    "spec, msg",
    [
        ("wheel:4", "unknown graph name"),
        ("path", "unexpected end"),
        ("path(", "expected ':'"),
        ("path:4 x", "trailing"),
        ("join(path:2)", "two arguments"),
        ("complement(path:2,path:3)", "one argument"),
        ("join(path:2,path:3", "unexpected end"),
        ("cycle:2", "n >= 3"),
        ("g6:", "missing graph6"),
    ],
)
def test_parse_graph_spec_errors(spec, msg):
    with pytest.raises(GraphError, match=msg):
        parse_graph_spec(spec)
