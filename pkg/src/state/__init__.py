"""
State Module - Run Ledger
"""

from .run_store import RunLogHandler, RunManifest, RunStore

__all__ = ['RunLogHandler', 'RunManifest', 'RunStore']
