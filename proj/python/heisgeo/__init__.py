"""Heisenberg group geometry toolkit.

Group algebra, Carnot-Caratheodory distances and geodesics, bang-bang
horizontal paths, obstacle-avoiding planning with exact clearance
certificates, recursive box mazes, grid pi_t-distance certification and
box-counting dimension estimation.
"""

from heisgeo._core import *  # noqa: F401,F403
from heisgeo._core import __version__  # noqa: F401
