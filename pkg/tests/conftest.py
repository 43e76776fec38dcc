import pytest

from PyPcCycles.mylib.graph.graph_text_format import parse_digraph, parse_graph, parse_uncolored_graph
from PyPcCycles.pc_cycle_resources import fixtures_path


@pytest.fixture
def load_fixture():
    """ Parse a bundled fixture by file name, choosing the format by extension. """
    def load(name: str):
        text = (fixtures_path() / name).read_text(encoding='utf-8')
        if name.endswith('.g'):
            return parse_uncolored_graph(text)[0]
        if name.endswith('.dg'):
            return parse_digraph(text)
        return parse_graph(text)
    return load
