"""Characters of modules over a reductive algebra and their invariants.

A weight is reduced to a key ``(centre, labels)``: its values on a basis of
the centre and its Dynkin labels for the semisimple part.  Everything about
invariants only depends on these keys, which are integer tuples.
"""

from __future__ import annotations

import math
import os
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .rootsystems import CapExceededError, DEFAULT_WEYL_CAP, positive_roots_from_simple

DEFAULT_MULTISET_CAP = 10**7


def multiset_cap() -> int:
    env = os.environ.get("KOSTANT_MAX_MULTISETS")
    return int(env) if env else DEFAULT_MULTISET_CAP


def _int_tuple(v: Iterable) -> tuple:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError(f"non-integral reduced weight coordinate {x}")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class SemisimpleFactor:
    name: str
    simple_roots: tuple  # weight-space vectors
    coroots: tuple  # functionals: coroot . weight = <weight, alpha^vee>


@dataclass(frozen=True)
class ReductiveStructure:
    """Semisimple factors plus centre functionals on a weight space with a Gram matrix."""

    basis: str
    gram: tuple
    factors: tuple
    centre: tuple
    weyl_cap: int = DEFAULT_WEYL_CAP

    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def rank(self) -> int:
        return sum(len(f.simple_roots) for f in self.factors)

    @cached_property
    def simple_roots(self) -> tuple:
        return tuple(a for f in self.factors for a in f.simple_roots)

    @cached_property
    def coroots(self) -> tuple:
        return tuple(c for f in self.factors for c in f.coroots)

    @cached_property
    def cartan(self) -> tuple:
        """``cartan[i][j] = <alpha_i, alpha_j^vee>``; row i is the label vector of alpha_i."""
        return tuple(tuple(int(la.dot(c, a)) for c in self.coroots) for a in self.simple_roots)

    def reduce(self, weight: Sequence) -> tuple:
        w = la.vec(weight)
        if len(w) != self.dim:
            raise ValueError(f"weight of length {len(w)} in a {self.dim}-dimensional {self.basis} space")
        return (_int_tuple(la.dot(z, w) for z in self.centre), _int_tuple(la.dot(c, w) for c in self.coroots))

    @cached_property
    def _half_lengths(self) -> tuple:
        g = self.gram
        return tuple(la.dot(a, la.matvec(g, a)) / 2 for a in self.simple_roots)

    @cached_property
    def label_form(self) -> tuple:
        """Invariant form in fundamental-weight coordinates."""
        r = self.rank
        if r == 0:
            return ()
        inv = la.inverse(self.cartan)
        d = self._half_lengths
        return tuple(tuple(inv[i][j] * d[j] for j in range(r)) for i in range(r))

    def form(self, x: Sequence, y: Sequence) -> Fraction:
        f = self.label_form
        return sum((x[i] * f[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j]), Fraction(0))

    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots of the semisimple part as label vectors."""
        out = []
        for f in self.factors:
            if not f.simple_roots:
                continue
            for beta in positive_roots_from_simple(f.simple_roots, self.gram):
                out.append(self.reduce(beta)[1])
        return tuple(sorted(out))

    def reflect(self, labels: Sequence[int], i: int) -> tuple:
        c = labels[i]
        if c == 0:
            return tuple(labels)
        row = self.cartan[i]
        return tuple(x - c * a for x, a in zip(labels, row))

    @cached_property
    def rho_shifts(self) -> tuple:
        """Pairs ``(rho - w rho, sign w)`` for every Weyl group element."""
        r = self.rank
        rho = (1,) * r
        seen = {rho: 1}
        queue = deque([rho])
        while queue:
            mu = queue.popleft()
            for i in range(r):
                nu = self.reflect(mu, i)
                if nu not in seen:
                    seen[nu] = -seen[mu]
                    if len(seen) > self.weyl_cap:
                        raise CapExceededError(f"Weyl group order exceeds the cap {self.weyl_cap}")
                    queue.append(nu)
        return tuple(sorted((tuple(a - b for a, b in zip(rho, mu)), s) for mu, s in seen.items()))

    @property
    def weyl_order(self) -> int:
        return len(self.rho_shifts)

    def is_dominant(self, labels: Sequence[int]) -> bool:
        return all(x >= 0 for x in labels)

    def height(self, labels: Sequence[int]) -> Fraction:
        if not self.rank:
            return Fraction(0)
        inv = la.inverse(self.cartan)
        return sum(la.vecmat(la.vec(labels), inv), Fraction(0))

    def weyl_dimension(self, labels: Sequence[int]) -> int:
        if not self.is_dominant(labels):
            raise ValueError(f"{tuple(labels)} is not dominant")
        rho = (1,) * self.rank
        lam = tuple(a + b for a, b in zip(labels, rho))
        num, den = Fraction(1), Fraction(1)
        for alpha in self.positive_roots:
            num *= self.form(lam, alpha)
            den *= self.form(rho, alpha)
        q = num / den
        assert q.denominator == 1
        return int(q)


# -- characters ------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """Weights with positive multiplicities, stored as reduced keys."""

    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {w: m for w, m in self.weights.items() if m}
        if any(m < 0 for m in clean.values()):
            raise ValueError("negative multiplicity in a character")
        object.__setattr__(self, "weights", clean)

    @property
    def dim(self) -> int:
        return sum(self.weights.values())

    def __getitem__(self, w) -> int:
        return self.weights.get(w, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(frozenset(self.weights.items()))

    def to_json(self) -> list:
        return [{"centre": list(c), "labels": list(l), "mult": m} for (c, l), m in sorted(self.weights.items())]


def _add_keys(a: tuple, b: tuple, times: int = 1) -> tuple:
    return (
        tuple(x + times * y for x, y in zip(a[0], b[0])),
        tuple(x + times * y for x, y in zip(a[1], b[1])),
    )


def character_from_weights(structure: ReductiveStructure, weights: Iterable) -> Character:
    return Character(dict(Counter(structure.reduce(w) for w in weights)))


def _zero_key(c: Character | None, structure: ReductiveStructure) -> tuple:
    return ((0,) * len(structure.centre), (0,) * structure.rank)


def tensor(a: Character, b: Character) -> Character:
    out: dict = defaultdict(int)
    for wa, ma in a.weights.items():
        for wb, mb in b.weights.items():
            out[_add_keys(wa, wb)] += ma * mb
    return Character(dict(out))


def _sym_powers(weights: Sequence[tuple], k: int, zero: tuple) -> list[dict]:
    """Characters of ``Sym^j`` for ``j = 0..k`` of the span of the listed weights."""
    h = [{zero: 1}] + [dict() for _ in range(k)]
    for w in weights:
        new = [dict() for _ in range(k + 1)]
        for j in range(k + 1):
            acc = new[j]
            shift = zero
            for i in range(j + 1):
                for mu, m in h[j - i].items():
                    key = _add_keys(mu, shift)
                    acc[key] = acc.get(key, 0) + m
                shift = _add_keys(shift, w)
        h = new
    return h


def _check_cap(d: int, k: int) -> int:
    count = math.comb(d + k - 1, k) if d else (1 if k == 0 else 0)
    cap = multiset_cap()
    if count > cap:
        raise CapExceededError(f"Sym^{k} of a {d}-dimensional module has {count} monomials, above the cap {cap}")
    return count


def sym_power_character(char: Character, k: int, structure: ReductiveStructure | None = None) -> Character:
    """Character of ``Sym^k``; refuses when the monomial count exceeds the cap."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    count = _check_cap(char.dim, k)
    zero = _zero_of(char, structure)
    listed = [w for w, m in sorted(char.weights.items()) for _ in range(m)]
    out = Character(_sym_powers(listed, k, zero)[k])
    assert out.dim == count
    return out


def _zero_of(char: Character, structure: ReductiveStructure | None) -> tuple:
    if structure is not None:
        return _zero_key(char, structure)
    if not char.weights:
        raise ValueError("cannot infer the weight shape of an empty character; pass the structure")
    c, l = next(iter(char.weights))
    return ((0,) * len(c), (0,) * len(l))


def is_weyl_invariant(char: Character, structure: ReductiveStructure) -> bool:
    for (c, l), m in char.weights.items():
        for i in range(structure.rank):
            if char[(c, structure.reflect(l, i))] != m:
                return False
    return True


def trivial_multiplicity(char: Character, structure: ReductiveStructure, check: bool = True) -> int:
    """Multiplicity of the trivial module, by alternating over the Weyl group."""
    if check and not is_weyl_invariant(char, structure):
        raise ValueError("character is not Weyl-invariant")
    zc = (0,) * len(structure.centre)
    total = 0
    for shift, sign in structure.rho_shifts:
        total += sign * char[(zc, shift)]
    if total < 0:
        raise ArithmeticError("negative trivial multiplicity: input is not a module character")
    return total


def _trivial_in_product(factors: Sequence[Character], structure: ReductiveStructure) -> int:
    """Trivial multiplicity of a tensor product, without expanding the last factor."""
    zc = (0,) * len(structure.centre)
    if not factors:
        return 1
    acc = factors[0]
    for f in factors[1:-1]:
        acc = tensor(acc, f)
    if len(factors) == 1:
        return sum(sign * acc[(zc, shift)] for shift, sign in structure.rho_shifts)
    last = factors[-1].weights
    total = 0
    for (c, l), m in acc.weights.items():
        need_c = tuple(-x for x in c)
        for shift, sign in structure.rho_shifts:
            mm = last.get((need_c, tuple(s - x for s, x in zip(shift, l))))
            if mm:
                total += sign * m * mm
    return total


# -- decomposition by stripping highest weights ---------------------------------------------

def freudenthal(structure: ReductiveStructure, highest: Sequence[int]) -> dict:
    """Weight multiplicities (label keys) of the irreducible module with the given highest weight."""
    lam = tuple(highest)
    if not structure.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    r = structure.rank
    rho = (1,) * r
    pos = structure.positive_roots
    simple = structure.cartan
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_lr = structure.form(lr, lr)
    mult = {lam: 1}
    level = [lam]
    while level:
        candidates = sorted({tuple(x - y for x, y in zip(mu, simple[i])) for mu in level for i in range(r)})
        nxt = []
        for mu in candidates:
            if mu in mult:
                continue
            mr = tuple(a + b for a, b in zip(mu, rho))
            den = norm_lr - structure.form(mr, mr)
            if den == 0:
                continue
            acc = Fraction(0)
            for alpha in pos:
                j = 1
                while True:
                    nu = tuple(a + j * b for a, b in zip(mu, alpha))
                    m = mult.get(nu)
                    if not m:
                        break
                    acc += m * structure.form(nu, alpha)
                    j += 1
            value = 2 * acc / den
            if value.denominator != 1:
                raise ArithmeticError("non-integral Freudenthal multiplicity")
            if value > 0:
                mult[mu] = int(value)
                nxt.append(mu)
        level = nxt
    return mult


def strip_down_decompose(char: Character, structure: ReductiveStructure) -> list[tuple[tuple, int]]:
    """Irreducible constituents ``((centre, labels), multiplicity)`` by repeated highest-weight removal."""
    remaining = dict(char.weights)
    cache: dict = {}
    out = []
    while remaining:
        key = max(remaining, key=lambda w: (structure.height(w[1]), w))
        centre, labels = key
        if not structure.is_dominant(labels):
            raise ValueError("highest remaining weight is not dominant: not a module character")
        m = remaining[key]
        if labels not in cache:
            cache[labels] = freudenthal(structure, labels)
        for mu, k in cache[labels].items():
            w = (centre, mu)
            left = remaining.get(w, 0) - m * k
            if left < 0:
                raise ValueError("negative multiplicity while stripping: not a module character")
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        out.append((key, m))
    return sorted(out)


def trivial_count(decomposition: Iterable[tuple[tuple, int]]) -> int:
    return sum(m for (c, l), m in decomposition if not any(c) and not any(l))


# -- invariants of symmetric algebras over a graded module -------------------------------------

@dataclass(frozen=True)
class DecompositionReport:
    degrees: tuple  # ((k, dim), ...)
    complete: bool = True  # False when the computation stopped at the first invariant

    def dims(self) -> list[int]:
        return [d for _, d in self.degrees]

    @property
    def all_trivial(self) -> bool:
        return all(d == 0 for k, d in self.degrees if k >= 1)

    def first_invariant_degree(self) -> int | None:
        return next((k for k, d in self.degrees if k >= 1 and d > 0), None)

    def to_json(self) -> dict:
        return {"degrees": [{"k": k, "dim": d} for k, d in self.degrees]}


class GradedModule:
    """A module split into t-weight pieces, each given by its reduced character."""

    def __init__(self, structure: ReductiveStructure, pieces: Mapping[tuple, Character]):
        self.structure = structure
        self.pieces = dict(sorted(pieces.items()))
        self._sym: dict = {}
        self._layers: list = []

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.pieces.values())

    def character(self) -> Character:
        out: dict = defaultdict(int)
        for c in self.pieces.values():
            for w, m in c.weights.items():
                out[w] += m
        return Character(dict(out))

    def sym(self, nu: tuple, j: int) -> Character:
        """``Sym^j`` of one piece, cached per piece."""
        table = self._sym.get(nu)
        if table is None or len(table) <= j:
            char = self.pieces[nu]
            _check_cap(char.dim, j)
            listed = [w for w, m in sorted(char.weights.items()) for _ in range(m)]
            table = [Character(h) for h in _sym_powers(listed, j, _zero_key(None, self.structure))]
            self._sym[nu] = table
        return table[j]

    def zero_weight_compositions(self, degree: int) -> Iterable[tuple]:
        """Exponent vectors over the pieces of total ``degree`` whose t-weights cancel."""
        keys = list(self.pieces)
        n = len(keys)
        memo: dict = {}

        def feasible(i: int, w: tuple, j: int) -> bool:
            if i == n:
                return j == 0 and not any(w)
            key = (i, w, j)
            if key not in memo:
                nu = keys[i]
                memo[key] = any(
                    feasible(i + 1, tuple(a - c * b for a, b in zip(w, nu)), j - c) for c in range(j + 1)
                )
            return memo[key]

        def walk(i: int, w: tuple, j: int, acc: list):
            if i == n:
                yield tuple(acc)
                return
            nu = keys[i]
            for c in range(j + 1):
                w2 = tuple(a - c * b for a, b in zip(w, nu))
                if feasible(i + 1, w2, j - c):
                    acc.append(c)
                    yield from walk(i + 1, w2, j - c, acc)
                    acc.pop()

        if n == 0:
            if degree == 0:
                yield ()
            return
        k = len(keys[0])
        zero = (0,) * k
        if feasible(0, zero, degree):
            yield from walk(0, zero, degree, [])

    def invariants_in_degree(self, degree: int, stop_at_first: bool = False) -> int:
        if not self.t_level_nonzero(degree):
            return 0
        keys = list(self.pieces)
        total = 0
        for comp in self.zero_weight_compositions(degree):
            factors = [self.sym(nu, c) for nu, c in zip(keys, comp) if c]
            total += _trivial_in_product(factors, self.structure)
            if stop_at_first and total:
                return total
        return total

    def reachable(self, degree: int) -> set:
        """t-weights of ``Sym^degree``: sums of exactly ``degree`` piece weights."""
        if not self._layers:
            k = len(next(iter(self.pieces))) if self.pieces else 0
            self._layers.append({(0,) * k})
        while len(self._layers) <= degree:
            prev = self._layers[-1]
            self._layers.append({tuple(a + b for a, b in zip(w, nu)) for w in prev for nu in self.pieces})
        return self._layers[degree]

    def t_level_nonzero(self, degree: int) -> bool:
        """Whether ``Sym^degree`` has a nonzero t-weight-zero part."""
        layer = self.reachable(degree)
        return any(not any(w) for w in layer)

    def t_level_dim(self, degree: int) -> int:
        """Dimension of the t-weight-zero part of ``Sym^degree``."""
        keys = list(self.pieces)
        total = 0
        for comp in self.zero_weight_compositions(degree):
            prod = 1
            for nu, c in zip(keys, comp):
                prod *= math.comb(self.pieces[nu].dim + c - 1, c)
            total += prod
        return total


def invariants_report(module: GradedModule, max_degree: int, stop_at_first: bool = False) -> DecompositionReport:
    if max_degree < 1:
        raise ValueError("degree bound must be at least 1")
    rows = [(0, 1)]
    for k in range(1, max_degree + 1):
        d = module.invariants_in_degree(k, stop_at_first)
        rows.append((k, d))
        if stop_at_first and d:
            return DecompositionReport(tuple(rows), complete=False)
    return DecompositionReport(tuple(rows))


def default_degree_bound(k: int) -> int:
    return 4 * k + 4
