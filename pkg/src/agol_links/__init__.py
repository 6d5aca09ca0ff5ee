"""Explicit small links of large Heegaard genus as twisted braid diagrams."""

from .disk_curves import (
    Curve,
    PuncturedDisk,
    beta_curve,
    encircled_punctures,
    geometric_intersection,
)
from .pants_path import (
    PantsDecomposition,
    PantsPath,
    build_path,
    interpolant,
    is_A_move,
    is_S_move,
    standard_decomposition,
)
from .link_template import (
    LinkTemplate,
    Loop,
    build_template,
    component_count,
    loop_heights,
)
from .diagram import (
    FillingSystem,
    LinkDiagram,
    bridge_upper_bound,
    crossing_census,
    default_slopes,
    fill,
    verify_bound,
)
from .export import GaussCode, PDCode, render_svg, to_dt, to_gauss, to_pd

__version__ = "0.1.0"

__all__ = [
    "Curve", "PuncturedDisk", "beta_curve", "encircled_punctures",
    "geometric_intersection",
    "PantsDecomposition", "PantsPath", "build_path", "interpolant",
    "is_A_move", "is_S_move", "standard_decomposition",
    "LinkTemplate", "Loop", "build_template", "component_count", "loop_heights",
    "FillingSystem", "LinkDiagram", "bridge_upper_bound", "crossing_census",
    "default_slopes", "fill", "verify_bound",
    "GaussCode", "PDCode", "render_svg", "to_dt", "to_gauss", "to_pd",
]
