from fractions import Fraction

import pytest

from kostant import linalg as la
from kostant.classical import (
    TYPE_I,
    TYPE_II,
    DatumError,
    ambient_dim,
    ambient_roots,
    datum_from_order,
    datum_grid,
    enumerate_parabolics,
    make_datum,
    parabolic_roots,
    project_root,
    projection_multiset,
    reductive_part,
    t_root_system,
)


def e(n, *terms):
    v = [Fraction(0)] * n
    for a, c in terms:
        v[a - 1] += c
    return tuple(v)


def d(*xs):
    return tuple(Fraction(x) for x in xs)


class TestMakeDatum:
    def test_b2_type_one(self):
        datum = make_datum("B", 2, [[1, 2]], "++")
        assert datum.ptype == TYPE_I and datum.k == 1

    def test_c2_type_two(self):
        datum = make_datum("C", 2, [[1]], {1: 1}, i0=[2])
        assert datum.ptype == TYPE_II and datum.k == 1 and datum.i0 == (2,)

    def test_d_type_two_needs_two_indices(self):
        with pytest.raises(DatumError, match="I_0"):
            make_datum("D", 3, [[1, 2]], None, i0=[3])

    @pytest.mark.parametrize("parts", [[[1], [1, 2]], [[1]], [[1, 2, 3]], [[]]])
    def test_bad_partitions(self, parts):
        with pytest.raises(DatumError):
            make_datum("gl", 2, parts)

    def test_sign_string_and_map_agree(self):
        a = make_datum("B", 3, [[1, 3], [2]], "+-+")
        b = make_datum("B", 3, [[1, 3], [2]], {1: 1, 2: -1, 3: 1})
        assert a == b

    def test_sign_map_domain_checked(self):
        with pytest.raises(DatumError, match="domain"):
            make_datum("C", 2, [[1]], {1: 1, 2: 1}, i0=[2])

    def test_gl_rejects_signs_and_type_two(self):
        with pytest.raises(DatumError):
            make_datum("gl", 2, [[1]], i0=[2])
        with pytest.raises(DatumError):
            make_datum("gl", 2, [[1], [2]], "+-")

    def test_unknown_type(self):
        with pytest.raises(DatumError):
            make_datum("G", 2, [[1, 2]])


class TestReductivePart:
    def test_b2_single_part_is_gl2(self):
        s = reductive_part(make_datum("B", 2, [[1, 2]], "++"))
        (comp,) = s.components
        assert comp.kind == "gl"
        assert comp.roots == {e(2, (1, 1), (2, -1)), e(2, (1, -1), (2, 1))}

    def test_c2_type_two(self):
        s = reductive_part(make_datum("C", 2, [[1]], {1: 1}, i0=[2]))
        c0, c1 = s.components
        assert (c0.kind, c0.rank) == ("C", 1)
        assert c0.roots == {e(2, (2, 2)), e(2, (2, -2))}
        assert (c1.kind, c1.roots) == ("gl", frozenset())

    def test_gl3(self):
        s = reductive_part(make_datum("gl", 3, [[1, 2], [3]]))
        assert [(c.kind, len(c.indices)) for c in s.components] == [("gl", 2), ("gl", 1)]
        assert s.dim == 5


class TestTRoots:
    def test_b2(self):
        rs = t_root_system(make_datum("B", 2, [[1, 2]], "++"))
        assert {r.delta: r.dim for r in rs} == {d(1): 2, d(-1): 2, d(2): 1, d(-2): 1}
        assert rs[d(-1)].label == ((1, "Nat-"),)
        assert rs[d(2)].label == ((1, "L2Nat+"),)

    def test_gl3(self):
        rs = t_root_system(make_datum("gl", 3, [[1, 2], [3]]))
        assert {r.delta: r.dim for r in rs} == {d(1, -1): 2, d(-1, 1): 2}

    def test_c2_type_two(self):
        rs = t_root_system(make_datum("C", 2, [[1]], {1: 1}, i0=[2]))
        assert {r.delta: r.dim for r in rs} == {d(1): 2, d(-1): 2, d(2): 1, d(-2): 1}
        assert rs[d(-1)].label == ((1, "Nat-"), (0, "V0"))

    def test_membership(self):
        rs = t_root_system(make_datum("B", 2, [[1, 2]], "++"))
        assert d(2) in rs and d(3) not in rs


class TestProjection:
    def test_levi_root_projects_to_zero(self):
        datum = make_datum("B", 2, [[1, 2]], "++")
        assert project_root(datum, e(2, (1, 1), (2, -1))) == d(0)

    def test_short_root(self):
        datum = make_datum("B", 2, [[1, 2]], "++")
        assert project_root(datum, e(2, (1, -1))) == d(-1)

    def test_gl3(self):
        datum = make_datum("gl", 3, [[1, 2], [3]])
        assert project_root(datum, e(3, (1, 1), (3, -1))) == d(1, -1)

    def test_non_root_rejected(self):
        with pytest.raises(ValueError):
            project_root(make_datum("B", 2, [[1, 2]], "++"), (2, 0))


def _grid():
    for t, n in [("gl", 1), ("gl", 2), ("gl", 3), ("gl", 4), ("B", 1), ("B", 2), ("B", 3),
                 ("C", 1), ("C", 2), ("C", 3), ("D", 4)]:
        yield from datum_grid(t, n)


def test_projection_matches_tables_on_grid():
    count = 0
    for datum in _grid():
        proj = {nu: len(alphas) for nu, alphas in projection_multiset(datum).items()}
        table = {r.delta: r.dim for r in t_root_system(datum)}
        assert proj == table, datum
        count += 1
    assert count > 150


def test_dimension_bookkeeping_on_grid():
    for datum in _grid():
        total = reductive_part(datum).dim + sum(r.dim for r in t_root_system(datum))
        assert total == ambient_dim(datum), datum


class TestParabolicRoots:
    def test_gl2_borel(self):
        assert parabolic_roots(make_datum("gl", 2, [[1], [2]])) == {e(2, (1, 1), (2, -1))}

    def test_b2_borel(self):
        roots = parabolic_roots(make_datum("B", 2, [[1], [2]], "++"))
        assert roots == {e(2, (1, 1), (2, -1)), e(2, (1, 1), (2, 1)), e(2, (1, 1)), e(2, (2, 1))}

    def test_d4_type_two_contains_ideal(self):
        roots = parabolic_roots(make_datum("D", 4, [[1, 2]], {1: 1, 2: 1}, i0=[3, 4]))
        for s3 in (1, -1):
            for s4 in (1, -1):
                assert e(4, (3, s3), (4, s4)) in roots

    def test_parabolic_is_closed_and_contains_a_borel(self):
        for datum in datum_grid("B", 3):
            roots = parabolic_roots(datum)
            amb = ambient_roots(datum)
            assert all(r in roots or la.neg(r) in roots for r in amb)
            for a in roots:
                for b in roots:
                    c = la.add(a, b)
                    assert c not in amb or c in roots


class TestEnumerate:
    def test_gl_k2(self):
        assert len(enumerate_parabolics(make_datum("gl", 3, [[1, 2], [3]]))) == 2

    def test_b_k1(self):
        assert len(enumerate_parabolics(make_datum("B", 2, [[1, 2]], "++"))) == 2

    def test_b_k2(self):
        assert len(enumerate_parabolics(make_datum("B", 3, [[1, 2], [3]], "+++"))) == 8

    def test_same_levi(self):
        datum = make_datum("C", 3, [[1], [2]], "++.", i0=[3])
        levi = reductive_part(datum).roots
        for q in enumerate_parabolics(datum):
            assert reductive_part(q).roots == levi

    def test_datum_from_order_reverses(self):
        datum = make_datum("B", 2, [[1], [2]], "++")
        q = datum_from_order(datum, [(-1, 2), (1, 1)])
        assert q.parts == ((2,), (1,)) and q.sign(2) == -1 and q.sign(1) == 1

    def test_enumeration_cap(self):
        with pytest.raises(ValueError, match="cap"):
            enumerate_parabolics(make_datum("gl", 3, [[1], [2], [3]]), cap=2)
