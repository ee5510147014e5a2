# betarec/gdifs/__init__.py
"""
Graph-directed IFS with maps (x + a)/beta: closed automata, kernels,
rendering and the spectral dimension estimate.
"""

from .dimension import dimension_estimate, perron_eigenvalue
from .kernel import (
    KernelClass,
    KernelFamily,
    KernelStatus,
    attractor_set,
    gdifs_from_kernel,
    kernel,
    kernel_box,
    recurrence_holds,
)
from .model import (
    AffineSystem,
    Gdifs,
    cantor_gdifs,
    cantor_ifs,
    digit_range,
    from_automaton,
    full_ifs,
    menger_ifs,
    pascal_ifs,
    require_similarities,
    to_automaton,
)
from .rauzy import rauzy_render, rauzy_system, render_affine
from .render import attractor_render, vertex_boxes, write_raster

__all__ = [
    "AffineSystem",
    "Gdifs",
    "KernelClass",
    "KernelFamily",
    "KernelStatus",
    "attractor_render",
    "attractor_set",
    "cantor_gdifs",
    "cantor_ifs",
    "digit_range",
    "dimension_estimate",
    "from_automaton",
    "full_ifs",
    "gdifs_from_kernel",
    "kernel",
    "kernel_box",
    "menger_ifs",
    "pascal_ifs",
    "perron_eigenvalue",
    "rauzy_render",
    "rauzy_system",
    "recurrence_holds",
    "render_affine",
    "require_similarities",
    "to_automaton",
    "vertex_boxes",
    "write_raster",
]
