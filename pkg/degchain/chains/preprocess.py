"""
Preprocessing steps: uniform relabellings within equal-degree groups.

Running a chain from the preprocessed state is the same as starting it from
the uniform distribution on the isomorphism class of the original state.
"""

import numpy as np

from ..errors import WrongKindError
from ..graphcore.relabel import apply_relabelling, random_relabelling
from ..graphcore.sequences import degree_groups, degrees_of
from ..graphcore.types import BinaryMatrix, GraphKind


def preprocess_bipartite(
    A: BinaryMatrix, rng: np.random.Generator
) -> BinaryMatrix:
    """
    Shuffle the rows within each group of equal row sum and the columns
    within each group of equal column sum, independently and uniformly.
    """
    rows, cols = degree_groups(degrees_of(A, GraphKind.BIPARTITE))
    rho = random_relabelling(rows, A.n_rows, rng)
    sigma = random_relabelling(cols, A.n_cols, rng)
    return apply_relabelling(A, rho, sigma)


def preprocess_graph(
    A: BinaryMatrix, kind: GraphKind, rng: np.random.Generator
) -> BinaryMatrix:
    """
    Permute the nodes of an (un)directed graph uniformly within each group
    of equal degree (equal out- and in-degree for directed graphs), applying
    the same permutation to rows and columns.

    Raises:
        WrongKindError: For bipartite states.
    """
    if not kind.is_square:
        raise WrongKindError(
            "preprocess_graph relabels (un)directed graphs; use "
            "preprocess_bipartite for bipartite states"
        )
    nodes, _ = degree_groups(degrees_of(A, kind))
    return apply_relabelling(A, random_relabelling(nodes, A.n_rows, rng))


def preprocess(
    A: BinaryMatrix, kind: GraphKind, rng: np.random.Generator
) -> BinaryMatrix:
    "Dispatch to the preprocessing step of the given kind."
    if kind is GraphKind.BIPARTITE:
        return preprocess_bipartite(A, rng)
    return preprocess_graph(A, kind, rng)
