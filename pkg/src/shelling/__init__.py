"""
Shelling Module - Orders, Verifiers, Combinators and Brute-Force Search
"""

from .order import ShellingOrder
from .verify import (
    OK, Verdict, restriction_sets, verify_shelling, verify_shelling_mutation, verify_shelling_topological,
)
from .combinators import concat, cone, product_all, product_order, relabel
from .upper import is_lower_shelling, is_upper_shelling
from .brute import DEFAULT_BRUTE_CAP, brute_force_shelling

__all__ = [
    'ShellingOrder',
    'OK', 'Verdict', 'restriction_sets', 'verify_shelling', 'verify_shelling_mutation',
    'verify_shelling_topological',
    'concat', 'cone', 'product_all', 'product_order', 'relabel',
    'is_lower_shelling', 'is_upper_shelling',
    'DEFAULT_BRUTE_CAP', 'brute_force_shelling',
]
