"""
Dyck Module - D-Block Facets and Dyck Paths
"""

from .bijection import DyckPath, dblock_facets, dyck_adjacent, dyck_table, from_dyck, to_dyck

__all__ = ['DyckPath', 'dblock_facets', 'dyck_adjacent', 'dyck_table', 'from_dyck', 'to_dyck']
