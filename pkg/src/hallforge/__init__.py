"""Exact Hall algebras of type-A quiver representations over prime fields.

The usual entry point is a :class:`~hallforge.catalog.Catalog`, which fixes
the quiver, the prime and a dimension bound; the algebra modules
(``hall_classical``, ``dh2``, ``dh1``) compute products over it.
"""

from .catalog import Catalog, get_catalog
from .coeff import Coeff, v_pow
from .element import LinComb
from .errors import (HallforgeError, InternalError, OutOfCatalogError, ParseError,
                     ResourceLimitError, ValidationError)
from .quiver import Quiver, euler_form, parse_quiver, symmetric_form
from .rep import ZERO, Interval, IsoClass, Representation, parse_isoclass, realize

__all__ = [
    "Catalog", "get_catalog", "Coeff", "v_pow", "LinComb", "HallforgeError", "InternalError",
    "OutOfCatalogError", "ParseError", "ResourceLimitError", "ValidationError", "Quiver",
    "euler_form", "parse_quiver", "symmetric_form", "ZERO", "Interval", "IsoClass",
    "Representation", "parse_isoclass", "realize",
]

__version__ = "0.1.0"
