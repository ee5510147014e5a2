# betarec/gdifs/dimension.py
"""
Spectral dimension estimate log(lambda)/log(beta), lambda the Perron
eigenvalue of the edge-count matrix of the part reachable from the selected
vertices. It equals the Hausdorff dimension only under the open set
condition, which is not checked.
"""

import logging
import math

import networkx as nx
import numpy as np

from ..errors import NotStronglyConnectedError
from .model import Gdifs, require_similarities

logger = logging.getLogger(__name__)


def perron_eigenvalue(matrix: np.ndarray, tolerance: float = 1e-10, max_iter: int = 100_000) -> float:
    """Spectral radius of a nonnegative irreducible matrix by power iteration on I + M."""
    shifted = matrix + np.eye(len(matrix))
    v = np.ones(len(matrix)) / len(matrix)
    value = 0.0
    for _ in range(max_iter):
        w = shifted @ v
        new_value = float(w.sum() / v.sum())
        v = w / np.linalg.norm(w, 1)
        if abs(new_value - value) < tolerance:
            return new_value - 1
        value = new_value
    return value - 1


def dimension_estimate(g: Gdifs) -> float:
    """
    Raises:
        NotStronglyConnectedError: the part reachable from the selected vertices is not strongly connected
        SimilarityError: g is a general affine system
    """
    g = require_similarities(g)
    graph = nx.DiGraph()
    graph.add_nodes_from(range(g.n_vertices))
    graph.add_edges_from((u, v) for u, v, _ in g.edges)
    reach = set(g.selected)
    for q in g.selected:
        reach |= nx.descendants(graph, q)
    if not reach or not nx.is_strongly_connected(graph.subgraph(reach)):
        raise NotStronglyConnectedError("the selected component is not strongly connected")
    nodes = sorted(reach)
    matrix = g.adjacency()[np.ix_(nodes, nodes)]
    lam = perron_eigenvalue(matrix)
    dim = math.log(lam) / math.log(float(g.base.value))
    logger.info(f"Perron eigenvalue {lam:.10f}, dimension estimate {dim:.6f}")
    return dim
