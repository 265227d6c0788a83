"""
Complex Module - Quasi-Arc Complexes, Face Counts and Sphere Certificates
"""

from .core import (
    DEFAULT_MAX_FACES, Complex, FVector, build_complex, complex_from_facets, euler_characteristic,
    f_vector, facets_by_clique, facets_by_flip_bfs, is_pseudomanifold, is_pure, remove_facet, ridge_degrees,
)
from .certify import SphereCertificate, certify_sphere

__all__ = [
    'DEFAULT_MAX_FACES', 'Complex', 'FVector', 'build_complex', 'complex_from_facets',
    'euler_characteristic', 'f_vector', 'facets_by_clique', 'facets_by_flip_bfs', 'is_pseudomanifold',
    'is_pure', 'remove_facet', 'ridge_degrees',
    'SphereCertificate', 'certify_sphere',
]
