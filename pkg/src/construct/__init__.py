"""
Construct Module - Explicit Shelling Orders for Polygons, Cylinders and Mobius Strips
"""

from .dblock import (
    classify_block,
    cross_mod,
    dblock_order,
    even_length,
    even_length_fn,
    half_turn,
    in_dblock,
    length_sum,
    lower_shell_X2,
    max_arcs,
    min_arcs,
    special_mutable_even,
    t_max,
    t_min,
    upper_shell_X1,
    x1_facet,
    x1_word,
)
from .even import diagonal_block, shell_ctri_even
from .fans import polygon_order, shell_cylinder, shell_cylinder_loop, shell_polygon
from .mobius import c_triangulations, point_block, shell_ctri, shell_mobius, shell_mobius_triangulations
from .odd import (
    admissible_sets,
    in_y_block,
    odd_length,
    odd_length_fn,
    shell_ctri_odd,
    shell_Y,
    special_mutable_odd,
    triangle_block,
)
from .paths import dyck_words, is_dyck, returns, toggles, upper_word_order

__all__ = [
    'admissible_sets', 'c_triangulations', 'classify_block', 'cross_mod', 'dblock_order',
    'diagonal_block', 'dyck_words', 'even_length', 'even_length_fn', 'half_turn', 'in_dblock',
    'in_y_block', 'is_dyck', 'length_sum', 'lower_shell_X2', 'max_arcs', 'min_arcs', 'odd_length',
    'odd_length_fn', 'point_block', 'polygon_order', 'returns', 'shell_ctri', 'shell_ctri_even',
    'shell_ctri_odd', 'shell_cylinder', 'shell_cylinder_loop', 'shell_mobius',
    'shell_mobius_triangulations', 'shell_polygon', 'shell_Y', 'special_mutable_even',
    'special_mutable_odd', 't_max', 't_min', 'toggles', 'triangle_block', 'upper_shell_X1',
    'upper_word_order', 'x1_facet', 'x1_word',
]
