from .coloring import Coloring, ColoringError
from .graph import Graph, GraphError, VertexId

__all__ = ["Coloring", "ColoringError", "Graph", "GraphError", "VertexId"]
