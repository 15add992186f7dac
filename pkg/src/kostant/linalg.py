"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of rows.
Nothing in this package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple  # tuple[Fraction, ...]
Mat = tuple  # tuple[Vec, ...]


def vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> Vec:
    return (Fraction(0),) * n


def add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def scale(c, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def matvec(m: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(dot(row, v) for row in m)


def vecmat(v: Sequence, m: Sequence[Sequence]) -> Vec:
    cols = len(m[0]) if m else 0
    return tuple(sum((v[i] * m[i][j] for i in range(len(m))), Fraction(0)) for j in range(cols))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    return tuple(vecmat(row, b) for row in a)


def transpose(m: Sequence[Sequence]) -> Mat:
    return tuple(tuple(col) for col in zip(*m))


def identity(n: int) -> Mat:
    return tuple(unit(n, i) for i in range(n))


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def inverse(m: Sequence[Sequence]) -> Mat:
    n = len(m)
    aug = [list(m[i]) + list(unit(n, i)) for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def solve(m: Sequence[Sequence], b: Sequence) -> Vec | None:
    """Solve ``m x = b``; returns one solution or ``None`` if inconsistent."""
    ncols = len(m[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(m, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return tuple(x)


def kernel(rows: Sequence[Sequence], ncols: int) -> list[Vec]:
    """Basis of ``{x : r . x = 0 for every row r}``, scaled to integers."""
    if not rows:
        return [unit(ncols, i) for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(red, piv):
            x[c] = -row[f]
        basis.append(integral(tuple(x)))
    return basis


def integral(v: Vec) -> Vec:
    """Smallest positive integer multiple of ``v`` with coprime entries."""
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    return tuple(Fraction(x // g) for x in ints)


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s.strip())
