"""Shared builders for the test suite."""

from kostant.characters import Character, ReductiveStructure, freudenthal
from kostant.instances import factor
from kostant.rootsystems import generate_roots


def simple_structure(lie_type, rank=None):
    """The semisimple structure of one simple type, without centre."""
    rs = generate_roots(lie_type, rank)
    return ReductiveStructure(rs.basis, rs.gram, (factor(f"{rs.lie_type}{rs.rank}", rs.simple_roots, rs.gram),), ())


def irreducible(structure, labels):
    """Character of the irreducible module with the given highest weight."""
    return Character({((), mu): m for mu, m in freudenthal(structure, labels).items()})
