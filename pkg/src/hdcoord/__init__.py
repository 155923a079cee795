"""Homology coordinates of Heegaard Floer generators and Whitney disk detection."""

from .diagram import HeegaardDiagram, IntersectionPoint, parse_diagram, serialize_diagram, validate
from .errors import (
    DiagramParseError,
    HDError,
    InvalidInputError,
    InvalidWordError,
    NoDiskError,
    UnknownFixtureError,
)
from .fixtures import fixture, fixture_names
from .floer import (
    ClassReport,
    Generator,
    enumerate_generators,
    find_generator,
    generator_coordinate,
    generator_sign,
    manifold_h1,
    maslov_parity,
    partition_classes,
    whitney_exists,
)
from .lattice import (
    ClassCoordinate,
    QuotientGroup,
    SNFDecomposition,
    build_quotient,
    hermite_normal_form,
    lattice_member,
    reduce,
    smith_normal_form,
)
from .words import Word, abelianize, prefix_vector, suffix_vector

__version__ = "0.1.0"
