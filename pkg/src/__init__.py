"""
Quasi-Arc Complex Toolkit Source Package
"""

__version__ = "1.0.0"
