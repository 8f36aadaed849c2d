import networkx as nx
import numpy as np

from ..errors import WrongKindError
from .sequences import check_state
from .types import BinaryMatrix, GraphKind


def to_networkx(A: BinaryMatrix, kind: GraphKind) -> nx.Graph:
    """
    Undirected networkx view of a state.

    Bipartite states get nodes ``0..n-1`` for rows and ``n..n+n'-1`` for
    columns; the two node sets are recorded in the ``bipartite`` node
    attribute (0 for rows, 1 for columns). Directed states lose their edge
    directions.
    """
    check_state(A, kind)
    graph = nx.Graph()
    rows, cols = np.nonzero(A.bits)
    if kind is GraphKind.BIPARTITE:
        graph.add_nodes_from(range(A.n_rows), bipartite=0)
        graph.add_nodes_from(
            range(A.n_rows, A.n_rows + A.n_cols), bipartite=1
        )
        graph.add_edges_from(
            zip(rows.tolist(), (cols + A.n_rows).tolist())
        )
    else:
        graph.add_nodes_from(range(A.n_rows))
        graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return graph


def is_connected(A: BinaryMatrix, kind: GraphKind) -> bool:
    """
    Whether the undirected view of a state has exactly one connected
    component. Isolated nodes count as components of their own; a graph
    without nodes is not connected.
    """
    graph = to_networkx(A, kind)
    if graph.number_of_nodes() == 0:
        return False
    return nx.is_connected(graph)


def triangle_count(
    A: BinaryMatrix, kind: GraphKind = GraphKind.UNDIRECTED
) -> int:
    """
    Number of unordered node triples of an undirected state that are
    pairwise adjacent.

    Raises:
        WrongKindError: For anything but undirected states.
    """
    if kind is not GraphKind.UNDIRECTED:
        raise WrongKindError(
            f"triangles are counted on undirected states, not {kind.value}"
        )
    check_state(A, kind)
    adjacency = A.bits.astype(np.int64)
    return int(np.trace(adjacency @ adjacency @ adjacency)) // 6
