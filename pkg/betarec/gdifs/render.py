# betarec/gdifs/render.py
"""
Rasters of GDIFS attractors.

Each vertex gets an axis-parallel box that contains its attractor component
(the fixed point of the interval recurrence, iterated from an outer box).
Level m draws the images S_{a_1} o ... o S_{a_m}(box) of every label path
of length m, so the raster always covers the attractor. Paths whose image
misses the viewport or the slice are pruned as they are generated.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import CapExceededError
from ..limits import get_limits
from .model import AffineSystem, Gdifs

logger = logging.getLogger(__name__)

# tolerance in pixels and for slice tests
_EPS = 1e-6


@dataclass(frozen=True)
class _Plan:
    """Picklable numeric description of a render job."""
    beta: float
    edges: tuple[tuple[int, int, tuple[float, ...]], ...]
    lo: tuple[tuple[float, ...], ...]
    hi: tuple[tuple[float, ...], ...]
    view_lo: tuple[float, ...]
    view_hi: tuple[float, ...]
    axes: tuple[int, ...]
    slice_axis: int | None
    slice_value: float
    depth: int
    resolution: int
    budget: int


def vertex_boxes(g: Gdifs, iterations: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex bounds (lo, hi), each of shape (vertices, n), containing the attractor components."""
    beta = float(g.base.value)
    n = g.arity
    lows = np.array([min(a[i] for _, _, a in g.edges) for i in range(n)], dtype=float) / (beta - 1)
    highs = np.array([max(a[i] for _, _, a in g.edges) for i in range(n)], dtype=float) / (beta - 1)
    lo = np.tile(lows, (g.n_vertices, 1))
    hi = np.tile(highs, (g.n_vertices, 1))
    for _ in range(iterations):
        new_lo = np.full_like(lo, np.inf)
        new_hi = np.full_like(hi, -np.inf)
        for u, v, a in g.edges:
            shift = np.array(a, dtype=float)
            new_lo[u] = np.minimum(new_lo[u], (shift + lo[v]) / beta)
            new_hi[u] = np.maximum(new_hi[u], (shift + hi[v]) / beta)
        done = np.allclose(new_lo, lo, atol=1e-15) and np.allclose(new_hi, hi, atol=1e-15)
        lo, hi = new_lo, new_hi
        if done:
            break
    return lo, hi


def _fill(raster: np.ndarray, plan: _Plan, lo: np.ndarray, hi: np.ndarray) -> None:
    res = plan.resolution
    view_lo = np.array(plan.view_lo)
    span = np.array(plan.view_hi) - view_lo
    axes = list(plan.axes)
    first = np.floor((lo[:, axes] - view_lo[axes]) / span[axes] * res + _EPS).astype(int)
    last = np.ceil((hi[:, axes] - view_lo[axes]) / span[axes] * res - _EPS).astype(int) - 1
    first = np.clip(first, 0, res - 1)
    last = np.clip(np.maximum(last, first), 0, res - 1)
    width = last - first
    if len(axes) == 1:
        for dx in range(int(width.max(initial=0)) + 1):
            keep = width[:, 0] >= dx
            raster[first[keep, 0] + dx] = True
        return
    for dx in range(int(width[:, 0].max(initial=0)) + 1):
        for dy in range(int(width[:, 1].max(initial=0)) + 1):
            keep = (width[:, 0] >= dx) & (width[:, 1] >= dy)
            raster[first[keep, 1] + dy, first[keep, 0] + dx] = True


def _run(plan: _Plan, roots: list[tuple[int, np.ndarray, float, int]]) -> np.ndarray:
    """Expand paths from (vertex, offset, scale, level) roots to the full depth and draw them."""
    shape = (plan.resolution,) * len(plan.axes)
    raster = np.zeros(shape, dtype=bool)
    box_lo, box_hi = np.array(plan.lo), np.array(plan.hi)
    view_lo, view_hi = np.array(plan.view_lo), np.array(plan.view_hi)
    by_source: dict[int, list[tuple[int, np.ndarray]]] = {}
    for u, v, a in plan.edges:
        by_source.setdefault(u, []).append((v, np.array(a)))

    for root_vertex, root_offset, root_scale, level in roots:
        frontier = {root_vertex: root_offset.reshape(1, -1)}
        scale = root_scale
        for _ in range(plan.depth - level):
            nxt: dict[int, list[np.ndarray]] = {}
            count = 0
            for u, offsets in frontier.items():
                for v, a in by_source.get(u, ()):
                    moved = offsets + scale * a / plan.beta
                    child_scale = scale / plan.beta
                    lo = moved + child_scale * box_lo[v]
                    hi = moved + child_scale * box_hi[v]
                    inside = np.all((hi >= view_lo) & (lo <= view_hi), axis=1)
                    if plan.slice_axis is not None:
                        s = plan.slice_axis
                        inside &= (lo[:, s] <= plan.slice_value + _EPS) & (hi[:, s] >= plan.slice_value - _EPS)
                    if inside.any():
                        nxt.setdefault(v, []).append(moved[inside])
                        count += int(inside.sum())
            if count > plan.budget:
                raise CapExceededError(f"render at depth {plan.depth} (try a smaller depth)", plan.budget, count)
            scale /= plan.beta
            frontier = {v: np.unique(np.concatenate(parts), axis=0) for v, parts in nxt.items()}
        for v, offsets in frontier.items():
            _fill(raster, plan, offsets + scale * box_lo[v], offsets + scale * box_hi[v])
    return raster


def attractor_render(
    g: Gdifs | AffineSystem,
    depth: int,
    resolution: int,
    axes: tuple[int, ...] | None = None,
    slice_axis: int | None = None,
    slice_value: float = 0.0,
    workers: int | None = None,
    budget: int | None = None,
) -> np.ndarray:
    """
    Outer approximation of the union of the selected attractor components.

    Args:
        depth: Path length m
        resolution: Pixels per axis
        axes: Axes drawn (one or two); default the first min(n, 2)
        slice_axis: For n = 3, the axis fixed at slice_value
        workers: Processes sharing the first-level subtrees
        budget: Maximum boxes alive at one level

    Returns:
        Boolean array of shape (resolution,) or (resolution, resolution), rows indexed by the second axis

    Raises:
        CapExceededError: a level holds more boxes than the budget
    """
    if isinstance(g, AffineSystem):
        from .rauzy import render_affine

        return render_affine(g, depth, resolution)
    limits = get_limits()
    budget = budget or limits.render_budget
    workers = workers or limits.render_workers
    n = g.arity
    if axes is None:
        axes = tuple(i for i in range(n) if i != slice_axis)[:2]
    if n == 3 and slice_axis is None:
        raise ValueError("a 3-dimensional attractor is drawn as a slice; pass slice_axis")
    lo, hi = vertex_boxes(g)
    selected = sorted(g.selected)
    if not selected:
        return np.zeros((resolution,) * len(axes), dtype=bool)
    view_lo = lo[selected].min(axis=0)
    view_hi = hi[selected].max(axis=0)
    plan = _Plan(
        beta=float(g.base.value),
        edges=tuple((u, v, tuple(float(d) for d in a)) for u, v, a in g.edges),
        lo=tuple(map(tuple, lo)),
        hi=tuple(map(tuple, hi)),
        view_lo=tuple(view_lo),
        view_hi=tuple(view_hi),
        axes=tuple(axes),
        slice_axis=slice_axis,
        slice_value=slice_value,
        depth=depth,
        resolution=resolution,
        budget=budget,
    )
    zero = np.zeros(n)
    if workers <= 1 or depth == 0:
        raster = _run(plan, [(q, zero, 1.0, 0) for q in selected])
    else:
        roots = [
            (v, np.array(a) / plan.beta, 1 / plan.beta, 1)
            for q in selected
            for u, v, a in plan.edges
            if u == q
        ]
        chunks = [roots[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run, [plan] * len(chunks), chunks))
        raster = np.logical_or.reduce(parts)
    logger.info(f"Rendered depth {depth} at {resolution}px: {int(raster.sum())} pixels set")
    return raster


# ── Output ─────────────────────────────────────────────────


def write_raster(raster: np.ndarray, path: str | Path) -> Path:
    """
    Write a raster: boolean arrays as 1-bit images (black = set), RGB arrays
    in colour. The file suffix picks the format: .pbm and .ppm go through
    Pillow's PPM writer, anything else is PNG. Row 0 of the array is the
    bottom of the image.
    """
    path = Path(path)
    if raster.ndim == 1:
        raster = np.tile(raster, (max(1, raster.shape[0] // 32), 1))
    else:
        raster = raster[::-1]
    if raster.dtype == bool:
        gray = Image.fromarray(np.where(raster, 0, 255).astype(np.uint8))
        image = gray.convert("1", dither=Image.Dither.NONE)
    else:
        image = Image.fromarray(raster.astype(np.uint8))
    image.save(path, format="PPM" if path.suffix.lower() in (".ppm", ".pbm") else "PNG")
    logger.info(f"Wrote {image.width}x{image.height} {image.mode} raster to {path}")
    return path
