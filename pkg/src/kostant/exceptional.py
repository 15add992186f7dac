"""Constructions inside G2, F4, E6, E7 and E8.

G2: the reductive subalgebras containing the Cartan subalgebra, their
t-roots, and the rank-one example with ``S = {-d, 2d}``.

F4/E6/E7/E8: removing the node of the extended diagram next to the affine
node splits off ``m = A1`` (roots ``+-alpha_0``) and a complementary ``c``.
With ``t`` the Cartan subalgebra of ``c``, the t-roots are the roots of
``c`` together with the weights of a ``c``-module ``U`` tensored with the
natural ``m``-module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg as la
from .characters import (
    DecompositionReport,
    ReductiveStructure,
    character_from_weights,
    invariants_report,
    sym_power_character,
    trivial_multiplicity,
)
from .instances import KostantInstance, factor
from .positivity import (
    ConeCertificate,
    CycleCertificate,
    check_positive_system,
    extend_to_order,
    is_saturated,
    relation_from_set,
    saturate,
    zero_in_positive_span,
)
from .rootsystems import (
    SIMPLE_ROOT,
    InvalidTypeError,
    extended_diagram_remove_adjacent,
    fundamental_weights,
    generate_roots,
    weyl_dimension,
)


def _restriction_instance(name: str, rs, levi_simple: Iterable, functionals: Iterable) -> KostantInstance:
    """t-roots of ``rs`` for ``t`` cut out by ``functionals`` on simple-root coordinates."""
    levi_simple = [la.vec(a) for a in levi_simple]
    functionals = [la.vec(z) for z in functionals]
    fibres: dict = {}
    for alpha in sorted(rs.all_roots):
        nu = tuple(la.dot(z, alpha) for z in functionals)
        if not la.is_zero(nu):
            fibres.setdefault(nu, []).append(alpha)
    factors = (factor(f"levi{len(levi_simple)}", levi_simple, rs.gram),) if levi_simple else ()
    structure = ReductiveStructure(SIMPLE_ROOT, rs.gram, factors, tuple(functionals))
    return KostantInstance(name, structure, {nu: tuple(v) for nu, v in fibres.items()})


# -- G2 --------------------------------------------------------------------------------

@dataclass(frozen=True)
class G2Instance:
    instance: KostantInstance
    s_roots: tuple
    weight_map: dict  # root -> multiple of delta

    @property
    def dims(self) -> tuple:
        return tuple(self.instance.dim_of((Fraction(j),)) for j in (1, 2, 3))


def g2_instance() -> G2Instance:
    """``s`` has roots ``+-alpha_2``; ``t`` is read off by the ``alpha_1``-coefficient."""
    rs = generate_roots("G2")
    a2 = rs.simple_roots[1]
    inst = _restriction_instance("G2", rs, [a2], [(1, 0)])
    weight_map = {alpha: alpha[0] for alpha in sorted(rs.all_roots)}
    return G2Instance(inst, (a2, la.neg(a2)), weight_map)


def positive_systems(rsh: Iterable) -> list[frozenset]:
    """All positive systems of a small t-root set, by checking every half."""
    rsh = sorted({la.vec(v) for v in rsh})
    reps = [v for v in rsh if v > la.neg(v)]
    out = []
    for signs in itertools.product((1, -1), repeat=len(reps)):
        t = frozenset(v if s > 0 else la.neg(v) for v, s in zip(reps, signs))
        if check_positive_system(t, rsh):
            out.append(t)
    return out


def g2_levis() -> list[tuple[str, list, KostantInstance]]:
    """The eight reductive subalgebras of G2 that are Levi parts of parabolics.

    Levi roots: none, one root pair (six choices), or everything.
    """
    rs = generate_roots("G2")
    out = []
    out.append(("h", [], _restriction_instance("G2/h", rs, [], la.identity(2))))
    for beta in sorted(a for a in rs.positive_roots):
        z = la.kernel([beta], 2)
        out.append((f"root{tuple(int(x) for x in beta)}", [beta], _restriction_instance(f"G2/{beta}", rs, [beta], z)))
    out.append(("g", list(rs.simple_roots), _restriction_instance("G2/g", rs, rs.simple_roots, [])))
    return out


def parabolic_from_positive_system(rs, levi: list, inst: KostantInstance, t: frozenset) -> frozenset:
    """Roots of the subalgebra ``s + sum_{nu in t} g^nu``; checked to be a parabolic."""
    levi_roots = {a for a in rs.all_roots if a not in {r for v in inst.fibres.values() for r in v}}
    roots = frozenset(levi_roots | {a for nu in t for a in inst.fibres[nu]})
    for a in roots:
        for b in roots:
            c = la.add(a, b)
            if c in rs.all_roots and c not in roots:
                raise AssertionError("positive system does not give a subalgebra")
    if not all(a in roots or la.neg(a) in roots for a in rs.all_roots):
        raise AssertionError("positive system does not give a parabolic")
    return roots


@dataclass(frozen=True)
class ExampleReport:
    name: str
    s: tuple
    saturated: bool
    saturation: tuple
    cone: object
    order: object
    invariants: DecompositionReport
    parabolic_exists: bool
    header: dict

    @property
    def verdict(self) -> str:
        if self.parabolic_exists:
            return "PARABOLIC_EXISTS"
        if isinstance(self.order, CycleCertificate):
            return "NO_PARABOLIC_CYCLE"
        return "NO_PARABOLIC_CONE_CERTIFICATE"


def g2_nonsaturated_example(max_degree: int = 12) -> ExampleReport:
    g2 = g2_instance()
    inst = g2.instance
    s = [(Fraction(-1),), (Fraction(2),)]
    cone = zero_in_positive_span(s)
    order = extend_to_order(relation_from_set(1, True, s))
    inv = invariants_report(inst.graded_module(s), max_degree)
    exists = any(set(s) <= t for t in positive_systems(inst.rsh))
    sat = saturate(s, inst.rsh)
    return ExampleReport("G2-nonsat", tuple(s), is_saturated(s, inst.rsh), tuple(sorted(sat)),
                         cone, order, inv, exists, {"construction": "G2", "levi": "+-alpha2"})


# -- the affine-node construction ------------------------------------------------------------

@dataclass(frozen=True)
class AffineNodeInstance:
    g_type: str
    removed_node: int
    c_type: tuple
    m_roots: tuple
    c_simple_roots: tuple
    u_node: int
    u_highest_weight: tuple  # in c's fundamental-weight coordinates
    u_dim: int
    c_dim: int
    g_dim: int
    instance: KostantInstance
    c_roots: frozenset  # t-weights of c
    supp_u: frozenset  # t-weights of U
    omega_in_beta: tuple

    @property
    def troots(self) -> list[tuple]:
        out = [(nu, "trivial", 1) for nu in sorted(self.c_roots)]
        out += [(nu, "natural", 2) for nu in sorted(self.supp_u)]
        return out

    @property
    def omega(self) -> tuple:
        return tuple(Fraction(1 if i + 1 == self.u_node else 0) for i in range(len(self.c_simple_roots)))

    def beta(self, i: int) -> tuple:
        """``beta_i`` as a t-weight (a row of the Cartan matrix of ``c``)."""
        b = self.c_simple_roots[i - 1]
        return tuple(la.dot(z, b) for z in self.instance.structure.centre)

    @property
    def counterexample_set(self) -> list[tuple]:
        return [la.neg(self.omega)] + [self.beta(i) for i in range(1, len(self.c_simple_roots) + 1)]


def affine_node_instance(g_type: str) -> AffineNodeInstance:
    rs = generate_roots(g_type)
    if rs.lie_type not in ("F4", "E6", "E7", "E8"):
        raise InvalidTypeError(f"affine-node construction needs F4, E6, E7 or E8, not {g_type}")
    split = extended_diagram_remove_adjacent(rs)
    c_rs = generate_roots(*split.c_type)
    coroots = [_coroot(b, rs.gram) for b in split.c_simple_roots]
    theta = split.m_roots[1]
    inst = _restriction_instance(g_type, rs, [theta], coroots)
    c_set = {tuple(la.dot(z, a) for z in coroots) for a in _root_span(rs, split.c_simple_roots)}
    c_roots = frozenset(c_set)
    supp_u = frozenset(nu for nu in inst.fibres if nu not in c_roots)
    for nu in c_roots:
        assert len(inst.fibres[nu]) == 1
    for nu in supp_u:
        assert len(inst.fibres[nu]) == 2
    u = split.u_node
    hw = tuple(1 if i + 1 == u else 0 for i in range(c_rs.rank))
    q = fundamental_weights(c_rs)[u - 1]
    return AffineNodeInstance(
        g_type=rs.lie_type,
        removed_node=split.removed_node,
        c_type=split.c_type,
        m_roots=split.m_roots,
        c_simple_roots=split.c_simple_roots,
        u_node=u,
        u_highest_weight=hw,
        u_dim=weyl_dimension(c_rs, fundamental_weights(c_rs)[u - 1]),
        c_dim=c_rs.dim,
        g_dim=rs.dim,
        instance=inst,
        c_roots=c_roots,
        supp_u=supp_u,
        omega_in_beta=tuple(q),
    )


def _coroot(b, gram) -> tuple:
    gb = la.matvec(gram, b)
    return la.scale(2 / la.dot(b, gb), gb)


def _root_span(rs, simple) -> list:
    """Roots of ``rs`` in the rational span of ``simple``."""
    basis = [la.vec(b) for b in simple]
    r = len(basis)
    return [a for a in rs.all_roots if la.rank(basis + [a]) == r]


def paper_counterexample(g_type: str, max_degree: int = 8, cross_check: bool | None = None) -> ExampleReport:
    """Report for ``S = {-omega, beta_1, ..., beta_{n-1}}``."""
    aff = affine_node_instance(g_type)
    inst = aff.instance
    s = aff.counterexample_set
    cone = zero_in_positive_span(s)
    inv = invariants_report(inst.graded_module(s), max_degree)
    if cross_check is None:
        cross_check = aff.g_type == "F4"
    if cross_check:
        generic = generic_invariants(inst, s, max_degree)
        if generic.degrees != inv.degrees:
            raise AssertionError(f"engines disagree: {generic.degrees} vs {inv.degrees}")
    exists = not isinstance(cone, ConeCertificate)
    sat = saturate(s, inst.rsh)
    header = {"construction": aff.g_type, "removed_node": aff.removed_node,
              "c": f"{aff.c_type[0]}{aff.c_type[1]}" if aff.c_type[0] in "ABCD" else aff.c_type[0]}
    return ExampleReport(aff.g_type, tuple(s), sat == frozenset(s), tuple(sorted(sat)), cone, None, inv, exists, header)


def generic_invariants(inst: KostantInstance, s, max_degree: int) -> DecompositionReport:
    """Invariants from the full ``Sym^k`` character and Weyl alternation."""
    weights = [a for nu in s for a in inst.fibres[tuple(nu)]]
    char = character_from_weights(inst.structure, weights)
    rows = [(0, 1)]
    for k in range(1, max_degree + 1):
        rows.append((k, trivial_multiplicity(sym_power_character(char, k, inst.structure), inst.structure)))
    return DecompositionReport(tuple(rows))


def cone_proportional_to(cone: ConeCertificate, s: list, weights: tuple) -> bool:
    coeffs = cone.as_dict()
    vals = [coeffs.get(la.vec(v), Fraction(0)) for v in s]
    ratio = vals[0] / weights[0]
    return all(v == ratio * w for v, w in zip(vals, weights))


@dataclass
class SweepSummary:
    levis: int = 0
    sets: int = 0
    with_parabolic: int = 0
    violations: list = None
    checks: list = None

    def to_json(self) -> dict:
        return {"levis": self.levis, "sets": self.sets, "with_parabolic": self.with_parabolic,
                "violations": self.violations, "checks": self.checks}


def g2_saturated_sweep(max_degree: int | None = None) -> SweepSummary:
    """Every Levi part of G2 and every saturated ``S``: invariants vanish iff a parabolic contains ``M``."""
    from .symmetry import rays

    rs = generate_roots("G2")
    out = SweepSummary(violations=[], checks=[])
    for name, levi, inst in g2_levis():
        out.levis += 1
        rsh = inst.rsh
        k = inst.k
        if 0 < k < 2:
            proportional = all(la.rank([a, b]) == 1 for a in rsh for b in rsh)
            out.checks.append({"levi": name, "all_proportional": proportional})
        if k == 2:
            out.checks.append({"levi": name, "one_dimensional": all(inst.dim_of(v) == 1 for v in rsh)})
        systems = positive_systems(rsh)
        for t in systems:
            parabolic_from_positive_system(rs, levi, inst, t)
        bound = max_degree if max_degree is not None else 4 * k + 4
        classes = rays(rsh)
        for r in range(len(classes) + 1):
            for combo in itertools.combinations(classes, r):
                s = [v for c in combo for v in c]
                out.sets += 1
                exists = any(set(s) <= t for t in systems) if rsh else True
                out.with_parabolic += exists
                trivial = invariants_report(inst.graded_module(s), bound, stop_at_first=True).all_trivial
                if exists != trivial:
                    out.violations.append({"levi": name, "S": [[la.fmt(x) for x in v] for v in s],
                                           "parabolic": exists, "invariants_trivial": trivial})
    return out
