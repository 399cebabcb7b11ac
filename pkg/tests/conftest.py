from app.src.algebra.efb import EfbMultivector
from app.src.algebra.gamma import GammaMultivector
from app.src.cli.cli import CLI
from app.src.core.config import EngineConfig
from app.src.core.ui import EngineUI
from app.src.graphs.graph import Graph
from rich.console import Console
import networkx as nx
import pytest
import random
import io


@pytest.fixture
def rng():
    return random.Random(2009)


@pytest.fixture
def efb():
    """Parse an EFB expression: efb("1*q qp", 2)."""
    return lambda text, m: EfbMultivector.parse(text, m)


@pytest.fixture
def gamma():
    return lambda text, m: GammaMultivector.parse(text, m)


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(1, graph.m + 1))
    g.add_edges_from(graph.edges())
    return g


def nx_maximal_independent_sets(graph: Graph) -> set[frozenset[int]]:
    """Maximal cliques of the complement."""
    return {frozenset(c) for c in nx.find_cliques(nx.complement(to_networkx(graph)))}


class CliResult:
    def __init__(self, status: int, out: str, err: str):
        self.status = status
        self.out = out
        self.err = err

    @property
    def lines(self) -> list[str]:
        return self.out.splitlines()


@pytest.fixture
def run_cli():
    def run(argv: list[str], config: EngineConfig | None = None) -> CliResult:
        out, err = io.StringIO(), io.StringIO()
        ui = EngineUI(
            out=Console(file=out, width=100, emoji=False, highlight=False),
            err=Console(file=err, width=100),
            quiet=False,
        )
        status = CLI(config=config or EngineConfig(), ui=ui).run(argv)
        return CliResult(status, out.getvalue(), err.getvalue())

    return run
