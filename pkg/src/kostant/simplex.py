"""Exact phase-one simplex for ``{c >= 0 : sum c_j v_j = 0, sum c_j = 1}``.

Bland's rule keeps the pivoting finite.  On infeasibility the simplex
multipliers give a Farkas certificate: a functional positive on every v_j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import linalg as la


def _pivot(tab: list[list[Fraction]], r: int, c: int) -> None:
    inv = 1 / tab[r][c]
    tab[r] = [x * inv for x in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, tab[r])]


def cone_feasibility(vectors: Sequence[Sequence]) -> tuple[str, tuple]:
    """Either ``("cone", c)`` with convex weights summing the vectors to zero
    or ``("separated", phi)`` with ``phi . v > 0`` for every vector."""
    vs = [la.vec(v) for v in vectors]
    if not vs:
        raise ValueError("empty vector set")
    d, m = len(vs[0]), len(vs)
    rows = d + 1
    # columns: m structural, rows artificial, then the right-hand side
    tab = []
    for i in range(rows):
        coeffs = [vs[j][i] for j in range(m)] if i < d else [Fraction(1)] * m
        rhs = Fraction(1) if i == d else Fraction(0)
        art = [Fraction(1 if a == i else 0) for a in range(rows)]
        tab.append(coeffs + art + [rhs])
    basis = [m + i for i in range(rows)]
    # reduced costs of the objective "sum of artificials"
    cost = [Fraction(0)] * m + [Fraction(1)] * rows + [Fraction(0)]
    obj = cost[:]
    for i in range(rows):
        obj = [x - y for x, y in zip(obj, tab[i])]
    width = m + rows
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: the objective is bounded below by zero
            raise ArithmeticError("unbounded phase-one problem")
        r = best[1]
        _pivot(tab, r, enter)
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, tab[r])]
        basis[r] = enter
    value = -obj[-1]
    if value == 0:
        coeffs = [Fraction(0)] * m
        for i, b in enumerate(basis):
            if b < m:
                coeffs[b] = tab[i][-1]
        total = la.zero(d)
        for c, v in zip(coeffs, vs):
            total = la.add(total, la.scale(c, v))
        if not la.is_zero(total) or sum(coeffs) != 1 or min(coeffs) < 0:
            raise ArithmeticError("cone certificate failed verification")
        return "cone", tuple(coeffs)
    y = [1 - obj[m + i] for i in range(rows)]
    phi = la.integral(tuple(-x for x in y[:d])) if d else ()
    if any(la.dot(phi, v) <= 0 for v in vs):
        raise ArithmeticError("separating functional failed verification")
    return "separated", phi
