"""Guaranteed disk-coverage bounds for unit-diameter point sets."""

from dartbound._core import (
    builtin_certificates,
    concentric_construction,
    default_r_grid,
    diameter,
    embed_in_hexagon,
    embed_in_square,
    emit_plot,
    extremal_search,
    load_pointset,
    lower_bound,
    max_coverage,
    normalize_diameter,
    optimize_covering,
    pigeonhole_bound,
    reuleaux_3n,
    reuleaux_midpoint_construction,
    reuleaux_nine,
    save_pointset,
    small_n_construction,
    smallest_enclosing_circle,
    square_construction,
    step_function_data,
    table_reproduce,
    triangle_construction,
    uniform_circle_construction,
    upper_bound,
    verify_covering,
)

__all__ = [
    "builtin_certificates",
    "concentric_construction",
    "default_r_grid",
    "diameter",
    "embed_in_hexagon",
    "embed_in_square",
    "emit_plot",
    "extremal_search",
    "load_pointset",
    "lower_bound",
    "max_coverage",
    "normalize_diameter",
    "optimize_covering",
    "pigeonhole_bound",
    "reuleaux_3n",
    "reuleaux_midpoint_construction",
    "reuleaux_nine",
    "save_pointset",
    "small_n_construction",
    "smallest_enclosing_circle",
    "square_construction",
    "step_function_data",
    "table_reproduce",
    "triangle_construction",
    "uniform_circle_construction",
    "upper_bound",
    "verify_covering",
]
