import json
from pathlib import Path

import pytest
from hypothesis import given

from resurgence import catalog
from resurgence.formats import (
    FormatError,
    format_graph,
    format_ideal,
    graph_to_json,
    parse_graph,
    parse_hypergraph,
    parse_ideal,
    read_text,
)
from resurgence.graphs import cover_ideal, edge_ideal
from strategies import graphs, ideals

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_ideal_text():
    text = "# a comment\nx1 x2 x3\nx1 x2\n\nx2^2 x3\n"
    I = parse_ideal(text)
    assert I.ring.names == ("x1", "x2", "x3")
    assert I.generators == ((0, 2, 1), (1, 1, 0))
    assert format_ideal(I) == "x1 x2 x3\nx2^2 x3\nx1 x2\n"


def test_ideal_errors():
    with pytest.raises(FormatError):
        parse_ideal("")
    with pytest.raises(FormatError):
        parse_ideal("x1 x2\nx3\n")
    with pytest.raises(FormatError):
        parse_ideal("x1 x1\n")


def test_graph_text_and_json_agree():
    text = "vertices: a b c\nedge: a b\nedge: b c\n"
    G = parse_graph(text)
    assert G.named_edges() == [("a", "b"), ("b", "c")]
    assert parse_graph(graph_to_json(G)) == G
    assert format_graph(G) == text


def test_graph_errors():
    for bad in ("edge: a b\n", "vertices: a b\nvertices: c\n", "vertices: a b\nedge: a c\n",
                "vertices: a b c\nedge: a b c\n", "vertices: a b\nloop: a\n", "nonsense\n", "{\"vertices\": 3}"):
        with pytest.raises(FormatError):
            parse_graph(bad)


def test_hypergraph_text():
    H = parse_hypergraph("vertices: x1 x2 x3 x4 x5\nedge: x1 x2 x3\nedge: x3 x4 x5\nedge: x5 x1 x2\n")
    assert H == catalog.hyper_123_345_512()
    with pytest.raises(FormatError):
        parse_hypergraph("vertices: a b c\nedge: a b\nedge: a b c\n")


def test_read_text_missing_file(tmp_path):
    with pytest.raises(FormatError):
        read_text(tmp_path / "absent.graph")


def test_corpus_files_parse():
    graph_files = sorted(CORPUS.glob("*.graph"))
    assert graph_files
    for p in graph_files:
        G = parse_graph(p.read_text())
        assert parse_graph(format_graph(G)) == G
    assert parse_graph((CORPUS / "c5.json").read_text()) == catalog.cycle(5)
    assert parse_hypergraph((CORPUS / "hyper-123-345-512.hypergraph").read_text()) == catalog.hyper_123_345_512()
    assert parse_ideal((CORPUS / "edge-c5.ideal").read_text()) == edge_ideal(catalog.cycle(5))


@pytest.mark.parametrize("name", ["C5", "petersen", "bowtie", "two-triangles-d2", "K222"])
def test_corpus_matches_catalog(name):
    path = CORPUS / f"{name.lower()}.graph"
    assert parse_graph(path.read_text()) == catalog.builtin_graph(name)


@given(graphs())
def test_graph_round_trip(G):
    text = format_graph(G)
    assert parse_graph(text) == G
    assert format_graph(parse_graph(text)) == text
    assert json.loads(graph_to_json(parse_graph(graph_to_json(G)))) == json.loads(graph_to_json(G))


@given(ideals())
def test_ideal_round_trip(I):
    text = format_ideal(I)
    assert parse_ideal(text) == I
    assert format_ideal(parse_ideal(text)) == text


@given(graphs())
def test_graph_ideals_round_trip(G):
    for K in (edge_ideal(G), cover_ideal(G)):
        assert parse_ideal(format_ideal(K)) == K
