from fractions import Fraction
from math import comb

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from kostant import linalg as la
from kostant.characters import Character, sym_power_character
from kostant.classical import datum_grid, t_root_system
from kostant.notation import format_delta, parse_delta
from kostant.positivity import (
    ConeCertificate,
    CycleCertificate,
    OrderWitness,
    ParabolicWitness,
    Separation,
    brute_force_orders,
    check_positive_system,
    extend_to_order,
    find_parabolic_containing,
    is_saturated,
    order_is_compatible,
    order_positive_system,
    relation_from_set,
    saturate,
    zero_in_positive_span,
)

DATA = [d for t, n in [("gl", 3), ("gl", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)]
        for d in datum_grid(t, n)]

data = st.sampled_from(DATA)
small = st.fractions(min_value=-3, max_value=3, max_denominator=3)
vectors = st.lists(st.tuples(small, small, small), min_size=1, max_size=6)


@st.composite
def datum_and_subset(draw):
    datum = draw(data)
    rsh = t_root_system(datum).deltas
    s = draw(st.lists(st.sampled_from(rsh), max_size=len(rsh), unique=True)) if rsh else []
    return datum, rsh, s


@given(datum_and_subset())
def test_saturation_is_a_closure(case):
    _, rsh, s = case
    sat = saturate(s, rsh)
    assert set(s) <= sat <= set(rsh)
    assert saturate(sat, rsh) == sat
    assert is_saturated(sat, rsh)


@given(vectors)
def test_cone_certificates_are_valid(vs):
    vs = [la.vec(v) for v in vs if any(v)]
    if not vs:
        return
    res = zero_in_positive_span(vs)
    if isinstance(res, ConeCertificate):
        total = la.zero(3)
        for nu, c in res.coefficients:
            assert c >= 0 and nu in vs
            total = la.add(total, la.scale(c, nu))
        assert la.is_zero(total) and sum(c for _, c in res.coefficients) == 1
    else:
        assert isinstance(res, Separation)
        assert all(la.dot(res.phi, v) > 0 for v in vs)


@given(datum_and_subset())
def test_relation_is_negation_closed(case):
    datum, _, s = case
    g = relation_from_set(datum.k, datum.lie_type != "gl", s)
    if g.signed:
        for (a, b) in g.edges:
            assert ((-b[0], b[1]), (-a[0], a[1])) in g.edges


@given(datum_and_subset())
def test_order_or_cycle(case):
    datum, _, s = case
    g = relation_from_set(datum.k, datum.lie_type != "gl", s)
    res = extend_to_order(g)
    if isinstance(res, OrderWitness):
        pos = {v: i for i, v in enumerate(res.order)}
        assert all(pos[a] < pos[b] for a, b in g.edges)
        assert sorted(res.order) == sorted(g.vertices)
        if g.signed:
            assert order_is_compatible(res.order)
    else:
        assert res.cycle[0] == res.cycle[-1]
        assert all(e in g.edges for e in zip(res.cycle, res.cycle[1:]))


@settings(max_examples=60, suppress_health_check=[HealthCheck.too_slow])
@given(datum_and_subset())
def test_parabolic_search_agrees_with_brute_force(case):
    datum, rsh, s = case
    res = find_parabolic_containing(datum, s)
    signed = datum.lie_type != "gl"
    fits = [o for o in brute_force_orders(datum.k, signed) if set(s) <= order_positive_system(datum, o)]
    if isinstance(res, ParabolicWitness):
        assert set(s) <= order_positive_system(datum, res.order.order)
        assert check_positive_system(order_positive_system(datum, res.order.order), rsh)
    else:
        assert isinstance(res, CycleCertificate) and not fits


@given(datum_and_subset())
def test_order_implies_separation(case):
    datum, _, s = case
    if s and isinstance(find_parabolic_containing(datum, s), ParabolicWitness):
        assert isinstance(zero_in_positive_span(s), Separation)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5), st.integers(0, 5))
def test_sym_power_dimension(ws, k):
    char = Character({((w,), ()): 1 for w in set(ws)})
    assert sym_power_character(char, k).dim == comb(char.dim + k - 1, k)


@given(st.lists(small, min_size=3, max_size=3))
def test_notation_round_trip(v):
    v = tuple(Fraction(x) for x in v)
    assert parse_delta(format_delta(v), 3) == v
