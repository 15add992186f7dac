"""Root systems, Weyl groups, fundamental weights and the Weyl dimension formula.

Simple roots follow the Bourbaki numbering for every type:

====  ==========================================================
A_n   e_i - e_{i+1}                          (n+1 coordinates)
B_n   e_i - e_{i+1} (i < n), e_n
C_n   e_i - e_{i+1} (i < n), 2 e_n
D_n   e_i - e_{i+1} (i < n), e_{n-1} + e_n
gl_n  e_i - e_{i+1}                          (n coordinates, rank n-1)
G2    a1 short, a2 long, highest root 3a1 + 2a2
F4    a1, a2 long; a3, a4 short; highest root 2a1 + 3a2 + 4a3 + 2a4
E6    chain 1-3-4-5-6, node 2 attached to 4
E7    chain 1-3-4-5-6-7, node 2 attached to 4
E8    chain 1-3-4-5-6-7-8, node 2 attached to 4
====  ==========================================================

Classical systems live in epsilon coordinates with the standard form; the
exceptional ones live in simple-root coordinates with the Gram matrix of the
invariant form.  The Cartan matrix entry ``A[i][j]`` is ``<a_i, a_j^vee>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from . import linalg as la

CLASSICAL = ("A", "B", "C", "D", "gl")
EXCEPTIONAL = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
EPSILON, SIMPLE_ROOT, DELTA = "epsilon", "simple_root", "delta"

DEFAULT_WEYL_CAP = 10**6


class InvalidTypeError(ValueError):
    pass


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured cap."""


def pairing(lam: Sequence, alpha: Sequence, gram: Sequence[Sequence]) -> Fraction:
    """``<lam, alpha^vee> = 2 (lam, alpha) / (alpha, alpha)``."""
    ga = la.matvec(gram, alpha)
    return 2 * la.dot(lam, ga) / la.dot(alpha, ga)


def coroot_functional(alpha: Sequence, gram: Sequence[Sequence]) -> la.Vec:
    """Row vector ``f`` with ``f . lam == <lam, alpha^vee>``."""
    ga = la.matvec(gram, alpha)
    return la.scale(2 / la.dot(alpha, ga), ga)


def reflect(lam: la.Vec, alpha: la.Vec, gram) -> la.Vec:
    return la.sub(lam, la.scale(pairing(lam, alpha, gram), alpha))


def positive_roots_from_simple(simple: Sequence[la.Vec], gram) -> list[la.Vec]:
    """All positive roots generated from a base.

    Uses that the simple reflection s_i permutes the positive roots other than
    a_i, so the closure of the base under that rule is exactly the positive
    system.
    """
    found = list(simple)
    seen = set(found)
    frontier = list(simple)
    coroots = [coroot_functional(a, gram) for a in simple]
    while frontier:
        nxt = []
        for beta in frontier:
            for a, f in zip(simple, coroots):
                if beta == a:
                    continue
                r = la.sub(beta, la.scale(la.dot(beta, f), a))
                if r not in seen:
                    seen.add(r)
                    found.append(r)
                    nxt.append(r)
        frontier = nxt
    return found


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int
    basis: str
    gram: la.Mat
    simple_roots: tuple
    positive_roots: tuple
    cartan_matrix: tuple
    highest_root: la.Vec
    _coords: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def ambient_dim(self) -> int:
        return len(self.gram)

    @property
    def all_roots(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(la.neg(r) for r in self.positive_roots)

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra (``gl_n`` counts its centre)."""
        return 2 * len(self.positive_roots) + self.ambient_dim if self.lie_type == "gl" \
            else 2 * len(self.positive_roots) + self.rank

    def simple_coords(self, root: la.Vec) -> la.Vec:
        """Coordinates of a weight in the span of the simple roots."""
        c = self._coords.get(root)
        if c is None:
            if self.basis == SIMPLE_ROOT:
                c = root
            else:
                c = la.solve(la.transpose(self.simple_roots), root)
                if c is None:
                    raise ValueError(f"{root} is not in the span of the simple roots")
            self._coords[root] = c
        return c

    def from_simple_coords(self, coords: Sequence) -> la.Vec:
        out = la.zero(self.ambient_dim)
        for c, a in zip(coords, self.simple_roots):
            out = la.add(out, la.scale(Fraction(c), a))
        return out

    def pairing(self, lam, alpha) -> Fraction:
        return pairing(lam, alpha, self.gram)

    def reflect(self, lam, alpha) -> la.Vec:
        return reflect(lam, alpha, self.gram)

    def rho(self) -> la.Vec:
        total = la.zero(self.ambient_dim)
        for r in self.positive_roots:
            total = la.add(total, r)
        return la.scale(Fraction(1, 2), total)


def _classical_simple(lie_type: str, rank: int) -> tuple[int, list[la.Vec]]:
    if lie_type == "A":
        n = rank + 1
        simple = [la.sub(la.unit(n, i), la.unit(n, i + 1)) for i in range(rank)]
        return n, simple
    if lie_type == "gl":
        n = rank
        simple = [la.sub(la.unit(n, i), la.unit(n, i + 1)) for i in range(n - 1)]
        return n, simple
    n = rank
    simple = [la.sub(la.unit(n, i), la.unit(n, i + 1)) for i in range(n - 1)]
    if lie_type == "B":
        simple.append(la.unit(n, n - 1))
    elif lie_type == "C":
        simple.append(la.scale(2, la.unit(n, n - 1)))
    elif lie_type == "D":
        simple.append(la.add(la.unit(n, n - 2), la.unit(n, n - 1)))
    return n, simple


def _exceptional_gram(lie_type: str) -> la.Mat:
    n = EXCEPTIONAL[lie_type]
    g = [[Fraction(0)] * n for _ in range(n)]
    if lie_type == "G2":
        g[0][0], g[1][1], g[0][1] = Fraction(2), Fraction(6), Fraction(-3)
        g[1][0] = g[0][1]
        return tuple(tuple(r) for r in g)
    if lie_type == "F4":
        lengths = [2, 2, 1, 1]
        edges = {(0, 1): -1, (1, 2): -1, (2, 3): Fraction(-1, 2)}
    else:
        lengths = [2] * n
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update({(i, i + 1): -1 for i in range(2, n - 1)})
    for i in range(n):
        g[i][i] = Fraction(lengths[i])
    for (i, j), v in edges.items():
        g[i][j] = g[j][i] = Fraction(v)
    return tuple(tuple(r) for r in g)


def normalize_type(lie_type: str, rank: int | None = None) -> tuple[str, int]:
    t = lie_type.strip()
    if t.lower() == "gl":
        t = "gl"
    elif t.upper() in EXCEPTIONAL:
        t = t.upper()
    elif t.upper() in ("E", "F", "G") and rank is not None:
        t = f"{t.upper()}{rank}"
    else:
        t = t.upper()
    if t in EXCEPTIONAL:
        if rank is not None and rank != EXCEPTIONAL[t]:
            raise InvalidTypeError(f"{t} has rank {EXCEPTIONAL[t]}, not {rank}")
        return t, EXCEPTIONAL[t]
    if t not in CLASSICAL:
        raise InvalidTypeError(f"unknown Lie type {lie_type!r}")
    if rank is None or rank < 1:
        raise InvalidTypeError(f"type {t} needs a positive rank, got {rank}")
    if t == "D" and rank < 2:
        raise InvalidTypeError("D_n requires n >= 2")
    return t, rank


@lru_cache(maxsize=None)
def generate_roots(lie_type: str, rank: int | None = None) -> RootSystem:
    """Build the root system of the given type.

    ``("gl", n)`` yields the roots of gl_n in n epsilon-coordinates.  B_1, C_1,
    D_2 and D_3 are accepted because they occur as ideals of Levi subalgebras.
    """
    t, r = normalize_type(lie_type, rank)
    if t in EXCEPTIONAL:
        gram = _exceptional_gram(t)
        simple = [la.unit(r, i) for i in range(r)]
        basis = SIMPLE_ROOT
    else:
        n, simple = _classical_simple(t, r)
        gram = la.identity(n)
        basis = EPSILON
    pos = positive_roots_from_simple(simple, gram) if simple else []
    cartan = tuple(
        tuple(int(pairing(a, b, gram)) for b in simple) for a in simple
    )
    rs = RootSystem(t, len(simple), basis, gram, tuple(simple), tuple(pos), cartan,
                    la.zero(len(gram)))
    if pos:
        hr = max(pos, key=lambda x: (sum(rs.simple_coords(x)), rs.simple_coords(x)))
        object.__setattr__(rs, "highest_root", hr)
    return rs


def expected_root_count(lie_type: str, rank: int | None = None) -> int:
    t, n = normalize_type(lie_type, rank)
    table = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}
    if t in table:
        return table[t]
    return {"A": n * (n + 1), "gl": n * (n - 1), "B": 2 * n * n, "C": 2 * n * n,
            "D": 2 * n * (n - 1)}[t]


def weyl_group_order(lie_type: str, rank: int | None = None) -> int:
    t, n = normalize_type(lie_type, rank)
    table = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}
    if t in table:
        return table[t]
    if t == "A":
        return factorial(n + 1)
    if t == "gl":
        return factorial(n)
    if t == "D":
        return 2 ** (n - 1) * factorial(n)
    return 2**n * factorial(n)


def fundamental_weights(rs: RootSystem) -> list[la.Vec]:
    """Fundamental weights in simple-root coordinates (rows of ``A^{-1}``)."""
    inv = la.inverse(rs.cartan_matrix)
    return [tuple(row) for row in inv]


@dataclass(frozen=True)
class WeylGroup:
    """Elements are matrices acting on simple-root coordinate columns."""

    lie_type: str
    rank: int
    elements: tuple
    signs: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def sign(self, i: int) -> int:
        return self.signs[i]


def weyl_group(lie_type: str, rank: int | None = None, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    t, n = normalize_type(lie_type, rank)
    order = weyl_group_order(t, n)
    if order > cap:
        raise CapExceededError(f"W({t}{n}) has order {order}, above the cap {cap}")
    rs = generate_roots(t, n)
    a = rs.cartan_matrix
    r = rs.rank
    # s_i(a_j) = a_j - A[j][i] a_i
    gens = []
    for i in range(r):
        cols = [la.sub(la.unit(r, j), la.scale(a[j][i], la.unit(r, i))) for j in range(r)]
        gens.append(la.transpose(cols))
    rho = tuple(Fraction(sum(col)) for col in zip(*la.inverse(a)))  # sum of fundamental weights
    start = la.identity(r)
    seen = {rho: 0}
    elements, signs = [start], [1]
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            m = elements[idx]
            for g in gens:
                w = la.matmul(g, m)
                key = la.matvec(w, rho)
                if key not in seen:
                    seen[key] = len(elements)
                    elements.append(w)
                    signs.append(-signs[idx])
                    nxt.append(len(elements) - 1)
        frontier = nxt
    assert len(elements) == order, (len(elements), order)
    return WeylGroup(t, n, tuple(elements), tuple(signs))


def weyl_dimension(rs: RootSystem, highest_weight: Sequence) -> int:
    """Dimension of the irreducible module with the given highest weight.

    ``highest_weight`` is given in simple-root coordinates, e.g. an entry of
    :func:`fundamental_weights`.
    """
    lam = rs.from_simple_coords(highest_weight)
    for a in rs.simple_roots:
        p = rs.pairing(lam, a)
        if p < 0 or p.denominator != 1:
            raise ValueError(f"weight {tuple(highest_weight)} is not dominant integral")
    rho = rs.rho()
    lr = la.add(lam, rho)
    num = prod(rs.pairing(lr, a) for a in rs.positive_roots)
    den = prod(rs.pairing(rho, a) for a in rs.positive_roots)
    d = Fraction(num) / Fraction(den)
    assert d.denominator == 1
    return int(d)


# Removing the node adjacent to the affine node: (removed node, type of c,
# Bourbaki order of c's simple roots as g-indices, node of c carrying U).
AFFINE_TABLE = {
    "F4": (1, ("C", 3), (4, 3, 2), 3),
    "E6": (2, ("A", 5), (1, 3, 4, 5, 6), 3),
    "E7": (1, ("D", 6), (7, 6, 5, 4, 2, 3), 6),
    "E8": (8, ("E7", 7), (1, 2, 3, 4, 5, 6, 7), 7),
}


@dataclass(frozen=True)
class AffineSplit:
    m_roots: tuple
    c_simple_roots: tuple
    removed_node: int
    c_type: tuple
    u_node: int


def extended_diagram_remove_adjacent(rs: RootSystem) -> AffineSplit:
    """Split off the A_1 spanned by the highest root and the complementary c."""
    if rs.lie_type not in AFFINE_TABLE:
        raise InvalidTypeError(f"affine-node construction is defined for F4, E6, E7, E8, not {rs.lie_type}")
    removed, c_type, order, u_node = AFFINE_TABLE[rs.lie_type]
    theta = rs.highest_root
    linked = [i + 1 for i, a in enumerate(rs.simple_roots) if rs.pairing(a, theta) != 0]
    assert linked == [removed], linked
    c_simple = tuple(rs.simple_roots[i - 1] for i in order)
    c_rs = generate_roots(*c_type)
    cartan = tuple(tuple(int(rs.pairing(a, b)) for b in c_simple) for a in c_simple)
    assert cartan == c_rs.cartan_matrix, (rs.lie_type, cartan)
    adj = [j + 1 for j, b in enumerate(c_simple) if rs.pairing(b, rs.simple_roots[removed - 1]) != 0]
    assert adj == [u_node], adj
    alpha0 = la.neg(theta)
    return AffineSplit((alpha0, theta), c_simple, removed, c_type, u_node)
