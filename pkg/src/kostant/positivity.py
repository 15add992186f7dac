"""Positive systems, the order relation on signed deltas, and parabolic witnesses."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg as la
from .classical import (
    ParabolicDatum,
    datum_from_order,
    parabolic_roots,
    projection_multiset,
    t_root_system,
)
from .notation import format_delta
from .simplex import cone_feasibility


def _as_set(vectors: Iterable) -> frozenset:
    return frozenset(la.vec(v) for v in vectors)


def _positive_multiple(mu: la.Vec, nu: la.Vec) -> Fraction | None:
    """``r > 0`` with ``mu = r nu``, or ``None``."""
    r = None
    for a, b in zip(mu, nu):
        if b == 0:
            if a != 0:
                return None
            continue
        q = a / b
        if r is None:
            r = q
        elif q != r:
            return None
    return r if r is not None and r > 0 else None


def saturate(s: Iterable, rsh: Iterable) -> frozenset:
    """All elements of ``rsh`` that are positive rational multiples of elements of ``s``."""
    s = _as_set(s)
    return frozenset(mu for mu in _as_set(rsh) if any(_positive_multiple(mu, nu) for nu in s)) | s


def is_saturated(s: Iterable, rsh: Iterable) -> bool:
    s = _as_set(s)
    return saturate(s, rsh) == s


# -- cone feasibility -------------------------------------------------------------

@dataclass(frozen=True)
class ConeCertificate:
    """Nonnegative weights, summing to one, with ``sum c_nu nu = 0``."""

    coefficients: tuple  # ((nu, c), ...)

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def to_json(self) -> dict:
        return {"kind": "cone", "coefficients": {format_delta(nu): la.fmt(c) for nu, c in self.coefficients}}


@dataclass(frozen=True)
class Separation:
    """A functional strictly positive on the set."""

    phi: tuple

    def to_json(self) -> dict:
        return {"kind": "separated", "phi": [la.fmt(x) for x in self.phi]}


def zero_in_positive_span(s: Iterable) -> ConeCertificate | Separation:
    vectors = sorted(_as_set(s))
    if not vectors:
        raise ValueError("zero_in_positive_span needs a nonempty set")
    kind, data = cone_feasibility(vectors)
    if kind == "cone":
        return ConeCertificate(tuple((nu, c) for nu, c in zip(vectors, data) if c != 0))
    return Separation(data)


# -- positive systems ------------------------------------------------------------------

def check_positive_system(t: Iterable, rsh: Iterable) -> bool:
    t, rsh = _as_set(t), _as_set(rsh)
    if not t <= rsh:
        return False
    negt = frozenset(la.neg(v) for v in t)
    if t | negt != rsh or t & negt:
        return False
    return all(la.add(a, b) not in rsh or la.add(a, b) in t for a in t for b in t)


def positive_system_of_order(order: Sequence[la.Vec], rsh: Iterable) -> frozenset:
    """``{u - v : u before v}`` intersected with ``rsh``; ``order`` lists delta vectors.

    Elements that precede their own negative also contribute ``u`` and ``2u``.
    """
    rsh = _as_set(rsh)
    out = set()
    for a, u in enumerate(order):
        for v in order[a + 1:]:
            diff = la.sub(u, v)
            if diff in rsh:
                out.add(diff)
            if v == la.neg(u):
                out.update(x for x in (u, la.scale(2, u)) if x in rsh)
    return frozenset(out)


def is_phi_cut(t: Iterable, rsh: Iterable) -> tuple | None:
    """A functional positive exactly on ``t`` and nonzero on all of ``rsh``, if one exists."""
    t, rsh = _as_set(t), _as_set(rsh)
    target = t | frozenset(la.neg(v) for v in rsh - t)
    if not target:
        return ()
    res = zero_in_positive_span(target)
    if isinstance(res, ConeCertificate):
        return None
    phi = res.phi
    assert all((la.dot(phi, v) > 0) == (v in t) and la.dot(phi, v) != 0 for v in rsh)
    return phi


# -- the relation on signed deltas -----------------------------------------------------

Vertex = tuple  # (sign, i) meaning sign * delta_i


def vertex_key(v: Vertex) -> tuple:
    return (v[1], -v[0])


def vertex_vector(v: Vertex, k: int) -> la.Vec:
    out = [Fraction(0)] * k
    out[v[1] - 1] = Fraction(v[0])
    return tuple(out)


def format_vertex(v: Vertex) -> str:
    return ("" if v[0] > 0 else "-") + f"d{v[1]}"


def _neg(v: Vertex) -> Vertex:
    return (-v[0], v[1])


@dataclass(frozen=True)
class SignedDigraph:
    k: int
    signed: bool
    edges: frozenset  # of (u, v)
    witness: dict = field(compare=False, default_factory=dict)  # (u, v) -> element of S

    @property
    def vertices(self) -> list:
        if self.signed:
            return sorted(((s, i) for i in range(1, self.k + 1) for s in (1, -1)), key=vertex_key)
        return [(1, i) for i in range(1, self.k + 1)]

    def successors(self, u: Vertex) -> list:
        return sorted((b for a, b in self.edges if a == u), key=vertex_key)


def _edge_of(nu: la.Vec, signed: bool) -> tuple | None:
    support = [(i + 1, c) for i, c in enumerate(nu) if c != 0]
    if len(support) == 2:
        (i, a), (j, b) = support
        if abs(a) != 1 or abs(b) != 1:
            return None
        if not signed and a + b != 0:
            return None
        # a*d_i + b*d_j = (a d_i) - (-b d_j)
        return ((int(a), i), (int(-b), j)) if signed or a > 0 else ((int(b), j), (int(-a), i))
    if len(support) == 1 and signed:
        i, c = support[0]
        if abs(c) in (1, 2):
            s = 1 if c > 0 else -1
            return ((s, i), (-s, i))
    return None


def build_relation(datum: ParabolicDatum, s: Iterable) -> SignedDigraph:
    """Edges ``u -> v`` (``u`` precedes ``v``) forced by ``s``.

    ``u - v`` in ``s`` gives ``u -> v``; ``x`` or ``2x`` in ``s`` gives
    ``x -> -x``.  Signed variants are closed under ``(u -> v) => (-v -> -u)``.
    """
    rsh = t_root_system(datum)
    s = _as_set(s)
    for nu in s:
        if nu not in rsh:
            raise ValueError(f"{format_delta(nu)} is not a t-root")
    return relation_from_set(datum.k, datum.lie_type != "gl", s)


def relation_from_set(k: int, signed: bool, s: Iterable) -> SignedDigraph:
    witness = {}
    for nu in sorted(_as_set(s)):
        e = _edge_of(nu, signed)
        if e is None:
            raise ValueError(f"{format_delta(nu)} does not define an edge")
        witness.setdefault(e, nu)
        if signed:
            witness.setdefault((_neg(e[1]), _neg(e[0])), nu)
    return SignedDigraph(k, signed, frozenset(witness), witness)


@dataclass(frozen=True)
class OrderWitness:
    order: tuple  # of vertices

    def to_json(self) -> dict:
        return {"order": [format_vertex(v) for v in self.order]}


@dataclass(frozen=True)
class CycleCertificate:
    cycle: tuple  # v_1, ..., v_l, v_1
    witnesses: tuple  # element of S behind each edge

    @property
    def length(self) -> int:
        return len(self.cycle) - 1

    def to_json(self) -> dict:
        return {
            "kind": "cycle",
            "cycle": [format_vertex(v) for v in self.cycle],
            "witnesses": [format_delta(nu) for nu in self.witnesses],
        }


def _shortest_cycle(g: SignedDigraph) -> CycleCertificate | None:
    best = None
    for start in g.vertices:
        parent = {start: None}
        queue = deque([start])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for v in g.successors(u):
                if v == start:
                    found = u
                    break
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        if found is None:
            continue
        path = [found]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        cycle = tuple(reversed(path)) + (start,)
        if best is None or len(cycle) < len(best):
            best = cycle
    if best is None:
        return None
    return CycleCertificate(best, tuple(g.witness[(a, b)] for a, b in zip(best, best[1:])))


def extend_to_order(g: SignedDigraph) -> OrderWitness | CycleCertificate:
    """A total order extending the edges, negation-compatible when signed, or a shortest cycle."""
    remaining = set(g.vertices)
    edges = set(g.edges)
    head, tail = [], []
    while remaining:
        incoming = {b for a, b in edges}
        sources = sorted((v for v in remaining if v not in incoming), key=vertex_key)
        if not sources:
            return _shortest_cycle(g)
        src = sources[0]
        head.append(src)
        drop = {src}
        if g.signed:
            tail.append(_neg(src))
            drop.add(_neg(src))
        remaining -= drop
        edges = {(a, b) for a, b in edges if a not in drop and b not in drop}
    return OrderWitness(tuple(head + tail[::-1]))


def order_is_compatible(order: Sequence[Vertex]) -> bool:
    """Reversing the order and negating every entry gives the same order."""
    return list(order) == [_neg(v) for v in reversed(order)]


# -- parabolic witnesses ---------------------------------------------------------------------

@dataclass(frozen=True)
class ParabolicWitness:
    order: OrderWitness
    datum: ParabolicDatum
    roots: frozenset

    def to_json(self) -> dict:
        d = self.datum
        return {
            "kind": "parabolic",
            "order": self.order.to_json()["order"],
            "Q": [list(p) for p in d.parts],
            "tau": {str(a): s for a, s in d.sigma},
        }


def find_parabolic_containing(datum: ParabolicDatum, s: Iterable) -> ParabolicWitness | CycleCertificate:
    s = _as_set(s)
    res = extend_to_order(build_relation(datum, s))
    if isinstance(res, CycleCertificate):
        return res
    half = res.order[: datum.k]
    q = datum_from_order(datum, half)
    roots = parabolic_roots(q)
    for nu, alphas in projection_multiset(datum).items():
        if nu in s and not all(a in roots for a in alphas):
            raise AssertionError(f"witness misses roots over {format_delta(nu)}")
    return ParabolicWitness(res, q, roots)


def order_positive_system(datum: ParabolicDatum, order: Sequence[Vertex]) -> frozenset:
    vectors = [vertex_vector(v, datum.k) for v in order]
    return positive_system_of_order(vectors, t_root_system(datum).deltas)


def brute_force_orders(k: int, signed: bool) -> Iterable[tuple]:
    """Every (negation-compatible) total order on the vertices."""
    if not signed:
        yield from (tuple((1, i) for i in p) for p in itertools.permutations(range(1, k + 1)))
        return
    for perm in itertools.permutations(range(1, k + 1)):
        for signs in itertools.product((1, -1), repeat=k):
            half = tuple(zip(signs, perm))
            yield half + tuple(_neg(v) for v in reversed(half))
