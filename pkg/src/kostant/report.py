"""End-to-end decision reports for a set of t-roots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg as la
from .characters import DecompositionReport, default_degree_bound
from .classical import ParabolicDatum, t_root_system
from .exceptional import (
    ExampleReport,
    g2_nonsaturated_example,
    g2_saturated_sweep,
    paper_counterexample,
    affine_node_instance,
    cone_proportional_to,
)
from .instances import invariants_up_to_degree
from .notation import format_delta
from .positivity import (
    ConeCertificate,
    CycleCertificate,
    ParabolicWitness,
    find_parabolic_containing,
    is_saturated,
    saturate,
    zero_in_positive_span,
)

PARABOLIC_EXISTS = "PARABOLIC_EXISTS"
NO_CONE = "NO_PARABOLIC_CONE_CERTIFICATE"
NO_CYCLE = "NO_PARABOLIC_CYCLE"
INCONCLUSIVE = "INCONCLUSIVE_AT_DEGREE_D"

EXIT_CODES = {PARABOLIC_EXISTS: 0, NO_CONE: 2, NO_CYCLE: 2, INCONCLUSIVE: 3}


def verdict_for(order, cone) -> str:
    if isinstance(order, ParabolicWitness):
        return PARABOLIC_EXISTS
    if isinstance(order, CycleCertificate):
        return NO_CYCLE
    if isinstance(cone, ConeCertificate):
        return NO_CONE
    return INCONCLUSIVE


def datum_json(datum: ParabolicDatum) -> dict:
    return {
        "lie_type": datum.lie_type,
        "n": datum.n,
        "parts": [list(p) for p in datum.parts],
        "i0": list(datum.i0) if datum.i0 else None,
        "signs": {str(a): s for a, s in datum.sigma},
        "ptype": datum.ptype,
    }


def troots_json(datum: ParabolicDatum) -> dict:
    rs = t_root_system(datum)
    return {
        **datum_json(datum),
        "k": rs.k,
        "t_basis": [[la.fmt(x) for x in t] for t in rs.t_basis],
        "troots": [
            {"delta": [la.fmt(x) for x in r.delta], "name": format_delta(r.delta), "dim": r.dim,
             "label": [[i, kind] for i, kind in r.label]}
            for r in rs
        ],
    }


@dataclass(frozen=True)
class CheckReport:
    instance: dict
    s: tuple
    saturated: bool
    saturation: tuple
    cone: object
    order: object
    invariants: DecompositionReport
    verdict: str

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "S": [format_delta(v) for v in self.s],
            "saturation": {"saturated": self.saturated, "closure": [format_delta(v) for v in self.saturation]},
            "cone": self.cone.to_json() if self.cone is not None else None,
            "order": self.order.to_json() if self.order is not None else None,
            "invariants": self.invariants.to_json(),
            "verdict": self.verdict,
        }


def check(datum: ParabolicDatum, s: Iterable, max_degree: int | None = None) -> CheckReport:
    s = tuple(sorted({la.vec(v) for v in s}))
    rsh = t_root_system(datum).deltas
    if max_degree is None:
        max_degree = default_degree_bound(datum.k)
    cone = zero_in_positive_span(s) if s else None
    order = find_parabolic_containing(datum, s)
    inv = invariants_up_to_degree(datum, s, max_degree)
    sat = saturate(s, rsh)
    return CheckReport(datum_json(datum), s, is_saturated(s, rsh), tuple(sorted(sat)), cone, order, inv,
                       verdict_for(order, cone))


def example_json(rep: ExampleReport) -> dict:
    return {
        "construction": rep.header,
        "S": [[la.fmt(x) for x in v] for v in rep.s],
        "saturation": {"saturated": rep.saturated, "closure": [[la.fmt(x) for x in v] for v in rep.saturation]},
        "cone": _cone_json(rep.cone),
        "order": rep.order.to_json() if rep.order is not None else None,
        "invariants": rep.invariants.to_json(),
        "verdict": rep.verdict,
    }


def _cone_json(cone) -> dict:
    if isinstance(cone, ConeCertificate):
        return {"kind": "cone", "coefficients": [[[la.fmt(x) for x in nu], la.fmt(c)] for nu, c in cone.coefficients]}
    return cone.to_json()


EXAMPLE_IDS = ("B", "C", "D-nonsat", "G2-sat", "G2-nonsat", "F4", "E6", "E7", "E8")


def fixed_example(example_id: str, max_degree: int | None = None) -> tuple[dict, str]:
    """JSON report and verdict for one of the fixed examples."""
    from .classical import make_datum

    if example_id == "B":
        rep = check(make_datum("B", 2, [[1, 2]], "++"), [(-1,), (2,)], max_degree or 12)
        return rep.to_json(), rep.verdict
    if example_id == "C":
        rep = check(make_datum("C", 2, [[1]], {1: 1}, i0=[2]), [(-1,), (2,)], max_degree or 12)
        return rep.to_json(), rep.verdict
    if example_id == "D-nonsat":
        d = make_datum("D", 4, [[1, 2]], {1: 1, 2: 1}, i0=[3, 4])
        main = check(d, [(1,), (-2,)], max_degree or 6)
        mirror = check(d, [(-1,), (2,)], max_degree or 6)
        return {**main.to_json(), "mirror": mirror.to_json()}, main.verdict
    if example_id == "G2-sat":
        sweep = g2_saturated_sweep(max_degree)
        verdict = PARABOLIC_EXISTS if not sweep.violations else INCONCLUSIVE
        return {"construction": {"construction": "G2", "sweep": "saturated"}, **sweep.to_json(),
                "verdict": verdict}, verdict
    if example_id == "G2-nonsat":
        rep = g2_nonsaturated_example(max_degree or 12)
        return example_json(rep), rep.verdict
    if example_id in ("F4", "E6", "E7", "E8"):
        rep = paper_counterexample(example_id, max_degree or 8)
        aff = affine_node_instance(example_id)
        out = example_json(rep)
        out["construction"].update({
            "dim_U": aff.u_dim, "dim_c": aff.c_dim, "dim_g": aff.g_dim,
            "q": [la.fmt(x) for x in aff.omega_in_beta],
            "cone_proportional_to_1_q": isinstance(rep.cone, ConeCertificate)
            and cone_proportional_to(rep.cone, aff.counterexample_set, (Fraction(1),) + aff.omega_in_beta),
        })
        return out, rep.verdict
    raise ValueError(f"unknown example {example_id!r}; choose from {', '.join(EXAMPLE_IDS)}")
