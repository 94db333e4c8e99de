"""Exact combinatorics of spherical systems without simple spherical roots."""

from sphsys.dynkin import Diagram, DiagramError, parse_diagram
from sphsys.system import Colour, SphericalSystem

__all__ = ["Colour", "Diagram", "DiagramError", "SphericalSystem",
           "parse_diagram"]

__version__ = "0.1.0"
