from fractions import Fraction

import numpy as np

from kostant.classical import make_datum, t_root_system
from kostant.symmetry import SubsetOrbits, act, atom_permutations, datum_symmetries, rays
from kostant.verify import (
    check_axioms_vs_cuts,
    check_t_level,
    describe,
    grid_data,
    verify_grid,
)


def d(*xs):
    return tuple(Fraction(x) for x in xs)


def test_rays_group_multiples():
    assert rays([d(1), d(2), d(-1), d(-2), d(3)]) == [(d(-2), d(-1)), (d(1), d(2), d(3))]


def test_symmetries_preserve_rsh():
    datum = make_datum("B", 3, [[1], [2, 3]], "+-+")
    rsh = set(t_root_system(datum).deltas)
    group = datum_symmetries(datum)
    assert len(group) == 4
    for g in group:
        assert {act(g, v) for v in rsh} == rsh


def test_gl_symmetries_are_permutations_and_global_negation():
    datum = make_datum("gl", 3, [[1], [2], [3]])
    assert len(datum_symmetries(datum)) == 12


def test_orbits_partition_the_power_set():
    datum = make_datum("B", 2, [[1], [2]], "++")
    atoms = [(v,) for v in t_root_system(datum).deltas]
    orbits = SubsetOrbits(atom_permutations(atoms, datum_symmetries(datum), act), len(atoms))
    seen = set()
    for level in orbits.representatives():
        for mask in level:
            orb = orbits.orbit(mask)
            assert not orb & seen and max(orb) == mask
            seen |= orb
    assert len(seen) == 1 << len(atoms)


def test_canonical_is_orbit_max():
    datum = make_datum("C", 2, [[1], [2]], "++")
    atoms = [(v,) for v in t_root_system(datum).deltas]
    orbits = SubsetOrbits(atom_permutations(atoms, datum_symmetries(datum), act), len(atoms))
    masks = np.arange(1 << len(atoms), dtype=np.int64)
    canon = orbits.canonical(masks)
    for m in range(0, 1 << len(atoms), 37):
        assert canon[m] == max(orbits.orbit(m))


def test_small_saturated_grid_has_no_violations():
    res = verify_grid([("gl", 2), ("gl", 3), ("B", 2), ("C", 2)])
    assert res.ok and not res.flagged
    # positive systems are computed up front, so they are counted again when visited
    assert res.inferred_zero + res.inferred_nonzero < res.orbits <= res.direct + res.inferred_zero + res.inferred_nonzero


def test_b2_all_sets_flags_the_known_example():
    res = verify_grid([("B", 2)], saturated_only=False)
    assert not res.violations
    flagged = [f for f in res.flagged if f["datum"].startswith("B2 [1,2]")]
    assert any(["-d1", "2d1"] in f["orbit"] for f in flagged)
    assert all(not f["order_exists"] and f["invariants_trivial"] for f in res.flagged)


def test_gl2_all_sets():
    res = verify_grid([("gl", 2)], saturated_only=False)
    assert res.ok and not res.flagged and res.sets == 3


def test_t_level_small():
    for datum in grid_data([("B", 2), ("C", 2), ("gl", 3)]):
        res = check_t_level(datum)
        assert res.ok, res.violations


def test_axioms_vs_cuts_small():
    count, positives, bad = check_axioms_vs_cuts(make_datum("B", 2, [[1], [2]], "++"))
    assert count == 256 and positives == 8 and bad == []


def test_describe():
    assert describe(make_datum("C", 2, [[1]], {1: 1}, i0=[2])) == "C2 [1] i0=[2] signs=+"
