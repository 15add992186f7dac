from fractions import Fraction

import pytest

from kostant import linalg as la
from kostant.classical import enumerate_parabolics, make_datum, parabolic_roots, project_root, reductive_part, t_root_system
from kostant.positivity import (
    ConeCertificate,
    CycleCertificate,
    OrderWitness,
    ParabolicWitness,
    Separation,
    brute_force_orders,
    build_relation,
    check_positive_system,
    extend_to_order,
    find_parabolic_containing,
    is_phi_cut,
    is_saturated,
    order_is_compatible,
    relation_from_set,
    saturate,
    zero_in_positive_span,
)


def d(*xs):
    return tuple(Fraction(x) for x in xs)


B2 = make_datum("B", 2, [[1, 2]], "++")
GL3 = make_datum("gl", 3, [[1, 2], [3]])


class TestSaturation:
    def test_b2(self):
        rsh = t_root_system(B2).deltas
        assert saturate([d(-1)], rsh) == {d(-1), d(-2)}
        assert not is_saturated([d(-1)], rsh)

    def test_gl_sets_are_saturated(self):
        rsh = t_root_system(GL3).deltas
        assert saturate([d(1, -1)], rsh) == {d(1, -1)}

    def test_g2_line(self):
        rsh = [d(j) for j in (-3, -2, -1, 1, 2, 3)]
        assert saturate([d(-1)], rsh) == {d(-1), d(-2), d(-3)}


class TestCone:
    def test_b2_certificate(self):
        cert = zero_in_positive_span([d(-1), d(2)])
        assert isinstance(cert, ConeCertificate)
        assert cert.as_dict() == {d(-1): Fraction(2, 3), d(2): Fraction(1, 3)}

    def test_separated(self):
        sep = zero_in_positive_span([d(1, -1)])
        assert isinstance(sep, Separation)
        assert la.dot(sep.phi, d(1, -1)) > 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            zero_in_positive_span([])

    def test_three_vectors(self):
        cert = zero_in_positive_span([d(1, 0), d(0, 1), d(-1, -1)])
        assert isinstance(cert, ConeCertificate)
        total = la.zero(2)
        for nu, c in cert.coefficients:
            assert c > 0
            total = la.add(total, la.scale(c, nu))
        assert la.is_zero(total)
        assert sum(c for _, c in cert.coefficients) == 1


class TestPositiveSystems:
    def test_parabolic_projection_is_positive(self):
        datum = make_datum("B", 3, [[1], [2, 3]], "+-+")
        rsh = t_root_system(datum).deltas
        levi = reductive_part(datum).roots
        for q in enumerate_parabolics(datum):
            t = {project_root(datum, a) for a in parabolic_roots(q) - levi}
            assert check_positive_system(t, rsh)
            assert is_phi_cut(t, rsh) is not None

    def test_whole_system_is_not_positive(self):
        rsh = t_root_system(B2).deltas
        assert not check_positive_system(rsh, rsh)

    def test_b2_half(self):
        rsh = t_root_system(B2).deltas
        assert check_positive_system([d(1), d(2)], rsh)
        assert not check_positive_system([d(1), d(-2)], rsh)

    def test_phi_cut_none_for_non_cut(self):
        rsh = t_root_system(B2).deltas
        assert is_phi_cut([d(1), d(-2)], rsh) is None


class TestRelation:
    def test_b2_two_cycle(self):
        g = build_relation(B2, [d(-1), d(2)])
        assert g.edges == {((-1, 1), (1, 1)), ((1, 1), (-1, 1))}

    def test_gl3_single_edge(self):
        assert build_relation(GL3, [d(1, -1)]).edges == {((1, 1), (1, 2))}

    def test_gl3_two_cycle(self):
        g = build_relation(GL3, [d(1, -1), d(-1, 1)])
        cyc = extend_to_order(g)
        assert isinstance(cyc, CycleCertificate) and cyc.length == 2

    def test_signed_relation_closed_under_negation(self):
        g = relation_from_set(3, True, [d(1, -1, 0), d(0, 1, 1), d(0, 0, -2)])
        for (s1, i), (s2, j) in g.edges:
            assert ((-s2, j), (-s1, i)) in g.edges

    def test_non_troot_rejected(self):
        with pytest.raises(ValueError):
            build_relation(GL3, [d(2, 0)])


class TestOrders:
    def test_example_order(self):
        g = relation_from_set(2, True, [d(1, -1), d(1, 1)])
        res = extend_to_order(g)
        assert isinstance(res, OrderWitness)
        assert res.order == ((1, 1), (1, 2), (-1, 2), (-1, 1))
        assert res.order in set(brute_force_orders(2, True))

    def test_b2_cycle(self):
        res = extend_to_order(build_relation(B2, [d(-1), d(2)]))
        assert isinstance(res, CycleCertificate) and res.length == 2
        assert set(res.witnesses) == {d(-1), d(2)}

    def test_empty_relation(self):
        res = extend_to_order(relation_from_set(2, True, []))
        assert isinstance(res, OrderWitness) and order_is_compatible(res.order)
        assert len(set(brute_force_orders(2, True))) == 8

    def test_cycle_edges_are_edges(self):
        g = relation_from_set(3, True, [d(1, -1, 0), d(0, 1, -1), d(0, 0, 1), d(-1, 0, 0)])
        res = extend_to_order(g)
        assert isinstance(res, CycleCertificate)
        for a, b in zip(res.cycle, res.cycle[1:]):
            assert (a, b) in g.edges


class TestFindParabolic:
    def test_gl3(self):
        res = find_parabolic_containing(GL3, [d(1, -1)])
        assert isinstance(res, ParabolicWitness)
        assert res.datum.parts == ((1, 2), (3,))

    def test_b2(self):
        assert isinstance(find_parabolic_containing(B2, [d(-1), d(2)]), CycleCertificate)

    def test_empty_set(self):
        res = find_parabolic_containing(B2, [])
        assert isinstance(res, ParabolicWitness)
        assert res.roots in {parabolic_roots(q) for q in enumerate_parabolics(B2)}
