"""Monotone, strictly convex and strongly monotone drawings of trees and outerplanar graphs."""

from .tree_model import *  # noqa: F401,F403
from .primvec import *  # noqa: F401,F403
from .drawing import *  # noqa: F401,F403
from .convex_grid import *  # noqa: F401,F403
from .disk_strong import *  # noqa: F401,F403
from .outerplanar import *  # noqa: F401,F403
from .verify import *  # noqa: F401,F403
from . import convex_grid, disk_strong, drawing, outerplanar, primvec, tree_model, verify

__version__ = "0.1.0"

__all__ = (
    tree_model.__all__
    + primvec.__all__
    + drawing.__all__
    + convex_grid.__all__
    + disk_strong.__all__
    + outerplanar.__all__
    + verify.__all__
)
