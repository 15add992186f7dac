"""Parabolic data, Levi parts and t-root systems for gl_n, B_n, C_n and D_n.

A parabolic subalgebra containing the diagonal Cartan subalgebra is encoded
by an ordered partition ``(I_1 < ... < I_k)`` of ``{1..n}``, an optional
largest part ``I_0`` carrying a B/C/D ideal (Type II), and signs on the
indices outside ``I_0``.

t-roots are written in delta-coordinates: ``delta_i`` is the restriction of
``sigma(a) e_a`` to the centre of the Levi part, for any ``a`` in ``I_i``.
Indices of ``I_0`` restrict to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .rootsystems import generate_roots

TYPE_I, TYPE_II = "TypeI", "TypeII"

NAT_P, NAT_M = "Nat+", "Nat-"
ALT_P, ALT_M = "L2Nat+", "L2Nat-"
SYM_P, SYM_M = "S2Nat+", "S2Nat-"
V0 = "V0"


class DatumError(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicDatum:
    lie_type: str
    n: int
    parts: tuple  # ordered I_1, ..., I_k (each a sorted tuple of 1-based indices)
    i0: tuple | None
    sigma: tuple  # ((index, +-1), ...) sorted by index, indices outside I_0

    @property
    def ptype(self) -> str:
        return TYPE_II if self.i0 is not None else TYPE_I

    @property
    def k(self) -> int:
        return len(self.parts)

    def sign(self, a: int) -> int:
        return self._signs[a]

    @property
    def _signs(self) -> dict:
        return dict(self.sigma)

    def part_of(self, a: int) -> int:
        """1-based part index of ``a``; 0 for ``I_0``."""
        if self.i0 is not None and a in self.i0:
            return 0
        for i, p in enumerate(self.parts, start=1):
            if a in p:
                return i
        raise KeyError(a)

    def v0_dim(self) -> int:
        r = len(self.i0 or ())
        return 2 * r + 1 if self.lie_type == "B" else 2 * r


def _parse_signs(sigma, domain: Sequence[int], n: int) -> dict:
    if sigma is None:
        return {a: 1 for a in domain}
    if isinstance(sigma, str):
        if len(sigma) != n or any(c not in "+-." for c in sigma):
            raise DatumError(f"sign string {sigma!r} must have length {n} over '+', '-'")
        return {a: (1 if sigma[a - 1] != "-" else -1) for a in domain}
    if isinstance(sigma, Mapping):
        signs = {int(a): int(s) for a, s in sigma.items()}
        if set(signs) != set(domain):
            raise DatumError(f"sign map domain {sorted(signs)} does not match {sorted(domain)}")
    else:
        seq = list(sigma)
        if len(seq) == n:
            signs = {a: int(seq[a - 1]) for a in domain}
        elif len(seq) == len(domain):
            signs = dict(zip(domain, (int(s) for s in seq)))
        else:
            raise DatumError(f"sign sequence of length {len(seq)} does not fit domain {sorted(domain)}")
    if any(s not in (1, -1) for s in signs.values()):
        raise DatumError("signs must be +1 or -1")
    return signs


def make_datum(lie_type: str, n: int, partition: Iterable[Iterable[int]], sigma=None,
               i0: Iterable[int] | None = None) -> ParabolicDatum:
    """Validate and normalise a parabolic datum.

    ``partition`` lists ``I_1, ..., I_k`` in increasing order; ``i0`` is the
    largest part of a Type II datum.  ``sigma`` may be ``None`` (all +1), a
    ``+/-`` string indexed 1..n, a sequence, or a mapping index -> sign.
    """
    t = "gl" if lie_type.lower() == "gl" else lie_type.upper()
    if t not in ("gl", "B", "C", "D"):
        raise DatumError(f"unsupported classical type {lie_type!r}")
    if n < 1:
        raise DatumError("n must be positive")
    parts = tuple(tuple(sorted(int(a) for a in p)) for p in partition)
    i0t = tuple(sorted(int(a) for a in i0)) if i0 is not None else None
    if any(len(p) == 0 for p in parts) or (i0t is not None and len(i0t) == 0):
        raise DatumError("parts must be nonempty")
    every = [a for p in parts for a in p] + list(i0t or ())
    if len(every) != len(set(every)):
        raise DatumError("parts overlap")
    if set(every) != set(range(1, n + 1)):
        raise DatumError(f"parts do not cover 1..{n}")
    if t == "gl":
        if i0t is not None:
            raise DatumError("gl_n has no Type II data")
        if sigma is not None and isinstance(sigma, str) and "-" in sigma:
            raise DatumError("gl_n data carry no signs")
    if t == "D" and i0t is not None and len(i0t) < 2:
        raise DatumError("D_n Type II needs |I_0| >= 2")
    domain = sorted(a for p in parts for a in p)
    signs = {a: 1 for a in domain} if t == "gl" else _parse_signs(sigma, domain, n)
    return ParabolicDatum(t, n, parts, i0t, tuple(sorted(signs.items())))


# -- the ambient algebra -----------------------------------------------------

def ambient_roots(datum: ParabolicDatum) -> frozenset:
    if datum.lie_type == "gl":
        return generate_roots("gl", datum.n).all_roots
    return generate_roots(datum.lie_type, datum.n).all_roots


def ambient_dim(datum: ParabolicDatum) -> int:
    return len(ambient_roots(datum)) + datum.n


def _e(n: int, a: int, c=1) -> la.Vec:
    return la.scale(Fraction(c), la.unit(n, a - 1))


def _pm(n, a, sa, b, sb) -> la.Vec:
    return la.add(_e(n, a, sa), _e(n, b, sb))


# -- Levi part -----------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    index: int  # 0 for the I_0 ideal
    kind: str  # "gl", "B", "C" or "D"
    indices: tuple
    cartan_basis: tuple  # ((j, sign), ...) meaning sign * h_j
    simple_roots: tuple
    roots: frozenset

    @property
    def rank(self) -> int:
        return len(self.indices) if self.kind != "gl" else len(self.indices) - 1


@dataclass(frozen=True)
class ReductivePart:
    datum: ParabolicDatum
    components: tuple
    roots: frozenset

    @property
    def dim(self) -> int:
        return len(self.roots) + self.datum.n


def _gl_component(datum, i, idx) -> Component:
    n, s = datum.n, datum._signs
    roots = frozenset(_pm(n, a, s[a], b, -s[b]) for a in idx for b in idx if a != b)
    simple = tuple(_pm(n, a, s[a], b, -s[b]) for a, b in zip(idx, idx[1:]))
    return Component(i, "gl", idx, tuple((a, s[a]) for a in idx), simple, roots)


def _ideal_component(datum) -> Component:
    n, t, idx = datum.n, datum.lie_type, datum.i0
    roots = set()
    for a in idx:
        for b in idx:
            if a != b:
                for sa in (1, -1):
                    for sb in (1, -1):
                        roots.add(_pm(n, a, sa, b, sb))
        if t == "B":
            roots.update({_e(n, a), _e(n, a, -1)})
        elif t == "C":
            roots.update({_e(n, a, 2), _e(n, a, -2)})
    simple = [_pm(n, a, 1, b, -1) for a, b in zip(idx, idx[1:])]
    last = idx[-1]
    if t == "B":
        simple.append(_e(n, last))
    elif t == "C":
        simple.append(_e(n, last, 2))
    else:
        simple.append(_pm(n, idx[-2], 1, last, 1))
    return Component(0, t, idx, tuple((a, 1) for a in idx), tuple(simple), frozenset(roots))


def reductive_part(datum: ParabolicDatum) -> ReductivePart:
    comps = []
    if datum.i0 is not None:
        comps.append(_ideal_component(datum))
    for i, p in enumerate(datum.parts, start=1):
        comps.append(_gl_component(datum, i, p))
    roots = frozenset().union(*(c.roots for c in comps)) if comps else frozenset()
    return ReductivePart(datum, tuple(comps), roots)


# -- t-roots -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class TRoot:
    delta: la.Vec
    label: tuple = field(compare=False)
    dim: int = field(compare=False)


@dataclass(frozen=True)
class TRootSystem:
    datum: ParabolicDatum
    k: int
    troots: tuple
    t_basis: tuple
    _by_delta: dict = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self._by_delta.update({r.delta: r for r in self.troots})

    def __contains__(self, nu) -> bool:
        return tuple(nu) in self._by_delta

    def __getitem__(self, nu) -> TRoot:
        return self._by_delta[tuple(nu)]

    def __iter__(self):
        return iter(self.troots)

    def __len__(self) -> int:
        return len(self.troots)

    @property
    def deltas(self) -> list:
        return [r.delta for r in self.troots]


def _delta(k: int, terms: Iterable[tuple[int, int]]) -> la.Vec:
    v = [Fraction(0)] * k
    for i, c in terms:
        v[i - 1] += c
    return tuple(v)


def _single_kind(s):
    return NAT_P if s > 0 else NAT_M


def factor_dim(datum: ParabolicDatum, factor: tuple) -> int:
    i, kind = factor
    if kind == V0:
        return datum.v0_dim()
    r = len(datum.parts[i - 1])
    if kind in (NAT_P, NAT_M):
        return r
    if kind in (ALT_P, ALT_M):
        return r * (r - 1) // 2
    return r * (r + 1) // 2


def has_single(datum: ParabolicDatum) -> bool:
    """Whether +-delta_i are t-roots."""
    t = datum.lie_type
    return t == "B" or (t in ("C", "D") and datum.ptype == TYPE_II)


def has_double(datum: ParabolicDatum, size: int) -> bool:
    """Whether +-2 delta_i are t-roots for a part of the given size."""
    t = datum.lie_type
    if t == "gl":
        return False
    return True if t == "C" else size > 1


def _double_kind(datum, s):
    if datum.lie_type == "C":
        return SYM_P if s > 0 else SYM_M
    return ALT_P if s > 0 else ALT_M


def t_basis(datum: ParabolicDatum) -> tuple:
    """``t_i = sum_{a in I_i} sigma(a) h_a`` as coefficient vectors on ``h_1..h_n``."""
    out = []
    for p in datum.parts:
        v = [Fraction(0)] * datum.n
        for a in p:
            v[a - 1] = Fraction(datum.sign(a))
        out.append(tuple(v))
    return tuple(out)


def t_root_system(datum: ParabolicDatum) -> TRootSystem:
    """t-roots with module labels and dimensions, from the closed-form tables."""
    k = datum.k
    out = []

    def add(terms, label):
        t = TRoot(_delta(k, terms), tuple(label), 0)
        d = 1
        for f in label:
            d *= factor_dim(datum, f)
        out.append(TRoot(t.delta, t.label, d))

    if datum.lie_type == "gl":
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i != j:
                    add([(i, 1), (j, -1)], [(i, NAT_P), (j, NAT_M)])
    else:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                for si in (1, -1):
                    for sj in (1, -1):
                        add([(i, si), (j, sj)], [(i, _single_kind(si)), (j, _single_kind(sj))])
            for s in (1, -1):
                if has_single(datum):
                    lab = [(i, _single_kind(s))]
                    if datum.ptype == TYPE_II:
                        lab.append((0, V0))
                    add([(i, s)], lab)
                if has_double(datum, len(datum.parts[i - 1])):
                    add([(i, 2 * s)], [(i, _double_kind(datum, s))])
    return TRootSystem(datum, k, tuple(sorted(out)), t_basis(datum))


def project_root(datum: ParabolicDatum, eps_root: Sequence) -> la.Vec:
    """Restriction of an epsilon-root to t, in delta-coordinates."""
    alpha = tuple(Fraction(x) for x in eps_root)
    if alpha not in ambient_roots(datum):
        raise ValueError(f"{eps_root} is not a root of {datum.lie_type}_{datum.n}")
    return tuple(
        sum((datum.sign(a) * alpha[a - 1] for a in p), Fraction(0)) for p in datum.parts
    )


def projection_multiset(datum: ParabolicDatum) -> dict:
    """t-weight -> list of epsilon-roots mapping onto it (nonzero weights only)."""
    out: dict = {}
    for alpha in sorted(ambient_roots(datum)):
        nu = project_root(datum, alpha)
        if not la.is_zero(nu):
            out.setdefault(nu, []).append(alpha)
    return out


# -- parabolic roots -------------------------------------------------------------

def parabolic_roots(datum: ParabolicDatum) -> frozenset:
    """Epsilon-roots of the parabolic subalgebra attached to the datum."""
    n, t = datum.n, datum.lie_type
    s = datum._signs
    pos = {a: datum.part_of(a) for a in range(1, n + 1)}
    outside = [a for a in range(1, n + 1) if pos[a] != 0]
    inside = list(datum.i0 or ())
    roots = set()
    for a in outside:
        for b in outside:
            if a != b and pos[a] <= pos[b]:
                roots.add(_pm(n, a, s[a], b, -s[b]))
    if t == "gl":
        return frozenset(roots)
    for a in outside:
        for b in outside:
            if a != b:
                roots.add(_pm(n, a, s[a], b, s[b]))
        if t == "B":
            roots.add(_e(n, a, s[a]))
        elif t == "C":
            roots.add(_e(n, a, 2 * s[a]))
        for b in inside:
            roots.add(_pm(n, a, s[a], b, 1))
            roots.add(_pm(n, a, s[a], b, -1))
    if inside:
        roots |= _ideal_component(datum).roots
    return frozenset(roots)


# -- enumeration of parabolics with a fixed Levi part -------------------------------

def datum_from_order(datum: ParabolicDatum, order: Sequence[tuple[int, int]]) -> ParabolicDatum:
    """Datum ``(Q, tau)`` from a total order on signed deltas.

    ``order`` is the first half ``x_1 < ... < x_k`` of a negation-compatible
    order (or the whole order for gl_n), each entry ``(sign, i)``.
    """
    parts = [datum.parts[i - 1] for _, i in order]
    tau = {}
    for s, i in order:
        for a in datum.parts[i - 1]:
            tau[a] = s * datum.sign(a)
    return make_datum(datum.lie_type, datum.n, parts, tau, datum.i0)


def signed_orders(k: int) -> Iterable[tuple]:
    """First halves of all negation-compatible total orders on ``{+-delta_i}``."""
    for perm in itertools.permutations(range(1, k + 1)):
        for signs in itertools.product((1, -1), repeat=k):
            yield tuple(zip(signs, perm))


def enumerate_parabolics(datum: ParabolicDatum, cap: int = 8) -> list[ParabolicDatum]:
    """All parabolics whose Levi part equals that of ``datum``.

    For D_n Type I two signed orders may give the same subalgebra; such
    duplicates are merged by comparing root sets.
    """
    k = datum.k
    if k > cap:
        raise ValueError(f"k = {k} exceeds the enumeration cap {cap}")
    if datum.lie_type == "gl":
        orders = (tuple((1, i) for i in perm) for perm in itertools.permutations(range(1, k + 1)))
    else:
        orders = signed_orders(k)
    seen = set()
    out = []
    for order in orders:
        q = datum_from_order(datum, order)
        key = parabolic_roots(q)
        if key in seen:
            continue
        seen.add(key)
        out.append(q)
    return out


# -- grids ---------------------------------------------------------------------------

def _set_partitions(items: list) -> Iterable[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _sign_classes(parts: Sequence[Sequence[int]]) -> Iterable[dict]:
    """Sign maps up to flipping all signs on a part (first index of each part is +)."""
    free = [a for p in parts for a in p[1:]]
    for signs in itertools.product((1, -1), repeat=len(free)):
        d = {p[0]: 1 for p in parts}
        d.update(zip(free, signs))
        yield d


def datum_grid(lie_type: str, n: int, ordered: bool = True) -> Iterable[ParabolicDatum]:
    """Every datum of the given algebra, signs taken up to per-part flips.

    With ``ordered=False`` only one order of the parts is produced, which is
    enough whenever only the Levi part matters.
    """
    t = "gl" if lie_type.lower() == "gl" else lie_type.upper()
    universe = list(range(1, n + 1))
    i0_choices: list = [None]
    if t != "gl":
        for r in range(1, n + 1):
            if t == "D" and r < 2:
                continue
            i0_choices.extend(itertools.combinations(universe, r))
    for i0 in i0_choices:
        rest = [a for a in universe if a not in (i0 or ())]
        for parts in _set_partitions(rest):
            parts = [sorted(p) for p in sorted(parts, key=min)]
            orders = itertools.permutations(parts) if ordered else [parts]
            for order in orders:
                if t == "gl":
                    yield make_datum(t, n, order)
                    continue
                for signs in _sign_classes(parts):
                    yield make_datum(t, n, order, signs, i0)
