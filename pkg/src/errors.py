"""
Quasi-Arc Toolkit - Error Hierarchy
-----------------------------------
Every failure raised by the library derives from QuasiArcError. The CLI maps
the three branches to process exit codes:

  InputError / ShellingError  → 2  (bad surface, arc, facet, order, path)
  ModelError                  → 1  (an internal invariant of the model failed)
  CapExceededError            → 3  (a configured size cap would be exceeded)
"""


class QuasiArcError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 2


class InputError(QuasiArcError):
    """Malformed or out-of-range user input."""


class SurfaceError(InputError):
    """Invalid surface kind or parameters."""


class ArcError(InputError):
    """Arc text or arc not valid on the given surface."""


class FacetError(InputError):
    """A set of arcs that is not a facet of the complex."""


class ParityError(InputError):
    """Diagonal / d-triangle / D-block query on the wrong parity of n."""


class BlockError(InputError):
    """Facet outside the block family an operation is defined on."""


class DyckError(InputError):
    """Unbalanced or out-of-image Dyck path."""


class ConfigError(InputError):
    """Unreadable configuration value."""


class OrderMismatchError(InputError):
    """Shelling order does not cover exactly the facets of a complex."""


class ShellingError(QuasiArcError):
    """Order combinator or verifier called on unusable input."""


class ModelError(QuasiArcError):
    """A structural invariant of the arc model did not hold."""

    exit_code = 1


class CapExceededError(QuasiArcError):
    """A size cap from Settings would be exceeded."""

    exit_code = 3
