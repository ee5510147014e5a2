# betarec/gdifs/rauzy.py
"""
The tribonacci Rauzy fractal as a numeric demo.

sigma: 1 -> 12, 2 -> 13, 3 -> 1 has incidence matrix M with one expanding
and two complex contracting eigenvalues. Projecting along the expanding
direction onto the contracting plane turns M into multiplication by the
contracting eigenvalue alpha, and the pieces satisfy

    T1 = h(T1) u h(T2) u h(T3),  T2 = h(T1) + pi(e1),  T3 = h(T2) + pi(e1)

with h(z) = alpha z. These maps are not of the form (x + a)/beta, so the
system is only drawn, never converted.
"""

import logging

import numpy as np

from ..errors import CapExceededError
from ..limits import get_limits
from .model import AffineSystem

logger = logging.getLogger(__name__)

_PALETTE = np.array([(214, 39, 40), (31, 119, 180), (44, 160, 44), (255, 127, 14), (148, 103, 189)], dtype=np.uint8)

TRIBONACCI_MATRIX = np.array([[1, 1, 1], [1, 0, 0], [0, 1, 0]], dtype=float)


def rauzy_system() -> AffineSystem:
    eigenvalues, vectors = np.linalg.eig(TRIBONACCI_MATRIX.T)
    i = next(k for k, w in enumerate(eigenvalues) if abs(w) < 1 and w.imag > 0)
    alpha = complex(eigenvalues[i])
    left = vectors[:, i]
    shift = complex(left[0])
    h = ((alpha.real, -alpha.imag), (alpha.imag, alpha.real))
    zero = (0.0, 0.0)
    t = (shift.real, shift.imag)
    edges = ((0, 0, h, zero), (0, 1, h, zero), (0, 2, h, zero), (1, 0, h, t), (2, 1, h, t))
    return AffineSystem(3, edges, frozenset({0, 1, 2}), ("T1", "T2", "T3"))


def _points(system: AffineSystem, depth: int, budget: int) -> dict[int, np.ndarray]:
    n = system.arity
    points = {q: np.zeros((1, n)) for q in range(system.n_vertices)}
    for _ in range(depth):
        nxt: dict[int, list[np.ndarray]] = {}
        for u, v, matrix, t in system.edges:
            nxt.setdefault(u, []).append(points[v] @ np.array(matrix).T + np.array(t))
        points = {q: np.concatenate(parts) for q, parts in nxt.items()}
        total = sum(len(p) for p in points.values())
        if total > budget:
            raise CapExceededError(f"affine render at depth {depth} (try a smaller depth)", budget, total)
    return points


def render_affine(system: AffineSystem, depth: int, resolution: int, budget: int | None = None) -> np.ndarray:
    """
    Point cloud of the selected pieces after `depth` iterations from the
    origin, one colour per vertex.

    Returns:
        uint8 array of shape (resolution, resolution, 3), white background
    """
    budget = budget or get_limits().render_budget
    points = _points(system, depth, budget)
    chosen = [q for q in sorted(system.selected) if q in points]
    cloud = np.concatenate([points[q] for q in chosen])
    lo, hi = cloud.min(axis=0), cloud.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0) * 1.02
    lo = lo - 0.01 * span
    raster = np.full((resolution, resolution, 3), 255, dtype=np.uint8)
    for k, q in enumerate(chosen):
        pix = np.clip(((points[q] - lo) / span * resolution).astype(int), 0, resolution - 1)
        raster[pix[:, 1], pix[:, 0]] = _PALETTE[k % len(_PALETTE)]
    logger.info(f"Rendered affine system at depth {depth}: {len(cloud)} points")
    return raster


def rauzy_render(resolution: int = 512, depth: int = 18) -> np.ndarray:
    return render_affine(rauzy_system(), depth, resolution)
