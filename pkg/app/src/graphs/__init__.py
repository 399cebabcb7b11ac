from app.src.graphs.graph import Graph, ModifiedAdjacency, ZeroOneMatrix, load_graph

__all__ = ["Graph", "ModifiedAdjacency", "ZeroOneMatrix", "load_graph"]
