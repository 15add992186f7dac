"""Orbit representatives of subsets under a permutation group on atoms.

Subsets are bitmasks with atom ``i`` stored at bit ``m - 1 - i``, so the
canonical representative (the largest mask in the orbit) prefers low atoms.
Removing the highest atom of a canonical set leaves a canonical set, which
gives orderly generation: children only add atoms above the current maximum.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg as la
from .classical import ParabolicDatum


def datum_symmetries(datum: ParabolicDatum) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Signed permutations ``(perm, signs)`` of the deltas preserving the t-root data.

    Parts of equal size may be permuted; each delta may change sign (for gl
    only all deltas together, which is the transpose-inverse symmetry).
    ``delta_i`` maps to ``signs[i] * delta_{perm[i]}``.
    """
    k = datum.k
    sizes = [len(p) for p in datum.parts]
    perms = [p for p in itertools.permutations(range(k)) if all(sizes[i] == sizes[p[i]] for i in range(k))]
    if datum.lie_type == "gl":
        sign_choices = [(1,) * k, (-1,) * k]
    else:
        sign_choices = list(itertools.product((1, -1), repeat=k))
    return [(p, s) for p in perms for s in sign_choices]


def act(g: tuple, v: Sequence) -> tuple:
    perm, signs = g
    out = [None] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = signs[i] * x
    return tuple(out)


class SubsetOrbits:
    """Group acting on ``m <= 62`` atoms, with batched canonical forms."""

    def __init__(self, atom_perms: Sequence[Sequence[int]], m: int):
        if m > 62:
            raise ValueError("too many atoms for 64-bit masks")
        self.m = m
        self.perms = [tuple(p) for p in atom_perms]
        nbytes = (m + 7) // 8
        self.nbytes = nbytes
        # tables[b][g][value]: image of the byte-b bits under group element g
        tables = np.zeros((nbytes, len(self.perms), 256), dtype=np.int64)
        for gi, p in enumerate(self.perms):
            for b in range(nbytes):
                for value in range(256):
                    img = 0
                    for bit in range(8):
                        pos = 8 * b + bit
                        if value >> bit & 1 and pos < m:
                            atom = m - 1 - pos
                            img |= 1 << (m - 1 - p[atom])
                    tables[b, gi, value] = img
        self.tables = tables

    def images(self, masks: np.ndarray) -> np.ndarray:
        """Array ``(len(masks), |G|)`` of images."""
        out = np.zeros((len(masks), len(self.perms)), dtype=np.int64)
        for b in range(self.nbytes):
            byte = (masks >> (8 * b)) & 0xFF
            out |= self.tables[b][:, byte].T
        return out

    def canonical(self, masks: np.ndarray) -> np.ndarray:
        return self.images(masks).max(axis=1)

    def orbit(self, mask: int) -> set[int]:
        return {int(x) for x in self.images(np.array([mask], dtype=np.int64))[0]}

    def atoms_of(self, mask: int) -> list[int]:
        return [i for i in range(self.m) if mask >> (self.m - 1 - i) & 1]

    def mask_of(self, atoms: Iterable[int]) -> int:
        out = 0
        for i in atoms:
            out |= 1 << (self.m - 1 - i)
        return out

    def representatives(self, chunk: int = 4096) -> Iterator[list[int]]:
        """Canonical masks level by level (by size), starting with the empty set."""
        level = [0]
        while level:
            yield level
            children = []
            for mask in level:
                top = self._max_atom(mask)
                for a in range(top + 1, self.m):
                    children.append(mask | (1 << (self.m - 1 - a)))
            nxt = []
            for start in range(0, len(children), chunk):
                block = np.array(children[start:start + chunk], dtype=np.int64)
                keep = self.canonical(block) == block
                nxt.extend(int(x) for x in block[keep])
            level = nxt

    def _max_atom(self, mask: int) -> int:
        if mask == 0:
            return -1
        low = (mask & -mask).bit_length() - 1
        return self.m - 1 - low


def atom_permutations(atoms: Sequence[tuple], group: Sequence[tuple], transform) -> list[tuple[int, ...]]:
    """Permutations of ``atoms`` induced by ``transform(g, atom)``; each atom is a tuple of vectors."""
    index = {frozenset(a): i for i, a in enumerate(atoms)}
    out = []
    for g in group:
        img = []
        for a in atoms:
            key = frozenset(transform(g, v) for v in a)
            if key not in index:
                raise ValueError("group element does not preserve the atoms")
            img.append(index[key])
        out.append(tuple(img))
    return out


def rays(vectors: Iterable) -> list[tuple]:
    """Group vectors into classes of positive rational multiples, sorted."""
    classes: dict = {}
    for v in sorted({la.vec(x) for x in vectors}):
        lead = next(x for x in v if x != 0)
        key = tuple(x / abs(lead) for x in v)
        classes.setdefault(key, []).append(v)
    return [tuple(c) for _, c in sorted(classes.items())]
