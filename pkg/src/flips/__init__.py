"""
Flips Module - Unique Flips and the Flip Graph
"""

from .flip import flip, flip_mask
from .graph import FlipGraph, flip_graph, flip_graph_isomorphic, is_flip_connected

__all__ = ['flip', 'flip_mask', 'FlipGraph', 'flip_graph', 'flip_graph_isomorphic', 'is_flip_connected']
