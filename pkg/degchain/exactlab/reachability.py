import math

import networkx as nx
import numpy as np

from .transitions import TransitionMatrix


def state_graph(P: TransitionMatrix) -> nx.DiGraph:
    "Directed graph with an edge for every positive off-diagonal entry."
    graph = nx.DiGraph()
    graph.add_nodes_from(range(P.dim))
    xs, ys = np.nonzero(P.entries > 0)
    graph.add_edges_from(
        (x, y) for x, y in zip(xs.tolist(), ys.tolist()) if x != y
    )
    return graph


def state_graph_distance(P: TransitionMatrix, a: int, b: int) -> float:
    """
    Least number of steps of `P` needed to get from state `a` to state `b`.

    Returns:
        The distance, or ``math.inf`` if `b` cannot be reached from `a`.
    """
    try:
        return nx.shortest_path_length(state_graph(P), a, b)
    except nx.NetworkXNoPath:
        return math.inf
