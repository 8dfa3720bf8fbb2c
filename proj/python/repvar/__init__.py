"""Representations of bound quivers over exact fields."""

from ._core import *  # noqa: F401,F403
from ._core import Algebra, CanonicalAlgebra, Module  # noqa: F401
