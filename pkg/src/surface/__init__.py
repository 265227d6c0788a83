"""
Surface Module - Marked Surfaces, Quasi-Arcs and Compatibility
"""

from .model import (
    MU, ArcKind, Facet, QuasiArc, Surface, SurfaceKind,
    canonical_arc, facet_text, is_valid_arc, make_facet, parse_arc, parse_facet, require_arc,
)
from .census import ArcSet, brute_force_census, catalan, census, census_size, expected_facet_count
from .compat import arc_mask, compatibility_table, compatible, mask_arcs
from .classify import (
    b_arcs, d_triangle_arcs, d_triangles, diagonal, diagonals, is_c_arc, is_d_triangle, is_diagonal,
)
from .oracle import OracleVerdict, oracle_compatible

__all__ = [
    'MU', 'ArcKind', 'Facet', 'QuasiArc', 'Surface', 'SurfaceKind',
    'canonical_arc', 'facet_text', 'is_valid_arc', 'make_facet', 'parse_arc', 'parse_facet', 'require_arc',
    'ArcSet', 'brute_force_census', 'catalan', 'census', 'census_size', 'expected_facet_count',
    'arc_mask', 'compatibility_table', 'compatible', 'mask_arcs',
    'b_arcs', 'd_triangle_arcs', 'd_triangles', 'diagonal', 'diagonals', 'is_c_arc', 'is_d_triangle',
    'is_diagonal',
    'OracleVerdict', 'oracle_compatible',
]
