"""A t-root decomposition of a Lie algebra packaged for invariant computations.

An instance lists the t-roots, the roots of ``g`` lying over each of them,
and the reductive part acting on the weight space those roots live in.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from . import linalg as la
from .characters import (
    Character,
    DecompositionReport,
    GradedModule,
    ReductiveStructure,
    SemisimpleFactor,
    character_from_weights,
    default_degree_bound,
    invariants_report,
)
from .classical import ParabolicDatum, projection_multiset, reductive_part, t_basis, t_root_system
from .rootsystems import EPSILON


@dataclass(frozen=True)
class KostantInstance:
    name: str
    structure: ReductiveStructure
    fibres: dict  # t-root -> tuple of roots of g (structure basis)
    signed: bool = True
    datum: ParabolicDatum | None = field(default=None, compare=False)

    @property
    def rsh(self) -> list:
        return sorted(self.fibres)

    @property
    def k(self) -> int:
        return len(next(iter(self.fibres))) if self.fibres else 0

    def dim_of(self, nu) -> int:
        return len(self.fibres[tuple(nu)])

    def graded_module(self, s: Iterable) -> GradedModule:
        pieces = {}
        for nu in sorted({la.vec(v) for v in s}):
            if nu not in self.fibres:
                raise ValueError(f"{nu} is not a t-root of {self.name}")
            pieces[tuple(int(x) for x in nu)] = character_from_weights(self.structure, self.fibres[nu])
        return GradedModule(self.structure, pieces)


def coroot_functional(alpha: la.Vec, gram) -> la.Vec:
    ga = la.matvec(gram, alpha)
    return la.scale(2 / la.dot(alpha, ga), ga)


def factor(name: str, simple: Iterable, gram) -> SemisimpleFactor:
    simple = tuple(la.vec(a) for a in simple)
    return SemisimpleFactor(name, simple, tuple(coroot_functional(a, gram) for a in simple))


def classical_structure(datum: ParabolicDatum) -> ReductiveStructure:
    gram = la.identity(datum.n)
    factors = []
    for comp in reductive_part(datum).components:
        if not comp.simple_roots:
            continue
        name = f"A{comp.rank}" if comp.kind == "gl" else f"{comp.kind}{comp.rank}"
        factors.append(factor(name, comp.simple_roots, gram))
    return ReductiveStructure(EPSILON, gram, tuple(factors), t_basis(datum))


def classical_instance(datum: ParabolicDatum) -> KostantInstance:
    fibres = {nu: tuple(alphas) for nu, alphas in projection_multiset(datum).items()}
    rs = t_root_system(datum)
    assert set(fibres) == set(rs.deltas)
    name = f"{datum.lie_type}{datum.n}"
    return KostantInstance(name, classical_structure(datum), fibres, datum.lie_type != "gl", datum)


def as_instance(obj) -> KostantInstance:
    if isinstance(obj, KostantInstance):
        return obj
    if isinstance(obj, ParabolicDatum):
        return classical_instance(obj)
    raise TypeError(f"cannot build an instance from {type(obj).__name__}")


def module_character(obj, s: Iterable) -> Character:
    """Character of ``M``, the sum of the t-root spaces over ``s``."""
    inst = as_instance(obj)
    weights = []
    for nu in {la.vec(v) for v in s}:
        if nu not in inst.fibres:
            raise ValueError(f"{nu} is not a t-root")
        weights.extend(inst.fibres[nu])
    return character_from_weights(inst.structure, weights)


def module_weights(obj, s: Iterable) -> Counter:
    """Roots of ``g`` (in the structure basis) spanning ``M``."""
    inst = as_instance(obj)
    return Counter(a for nu in {la.vec(v) for v in s} for a in inst.fibres[nu])


def invariants_up_to_degree(obj, s: Iterable, max_degree: int | None = None,
                            stop_at_first: bool = False) -> DecompositionReport:
    """``dim (Sym^k M)^s`` for ``k = 0..max_degree`` (default ``4k + 4``)."""
    inst = as_instance(obj)
    if max_degree is None:
        max_degree = default_degree_bound(inst.k)
    return invariants_report(inst.graded_module(s), max_degree, stop_at_first)
