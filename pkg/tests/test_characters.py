from collections import Counter
from fractions import Fraction

import pytest

from helpers import irreducible, simple_structure
from kostant.characters import (
    Character,
    CapExceededError,
    character_from_weights,
    default_degree_bound,
    freudenthal,
    is_weyl_invariant,
    strip_down_decompose,
    sym_power_character,
    tensor,
    trivial_multiplicity,
)
from kostant.classical import make_datum
from kostant.instances import (
    classical_instance,
    classical_structure,
    invariants_up_to_degree,
    module_character,
    module_weights,
)


def d(*xs):
    return tuple(Fraction(x) for x in xs)


def e(*xs):
    return tuple(Fraction(x) for x in xs)


B2 = make_datum("B", 2, [[1, 2]], "++")
GL2 = make_datum("gl", 2, [[1], [2]])
GL2_ONE_PART = make_datum("gl", 2, [[1, 2]])


def test_module_weights_b2():
    got = module_weights(B2, [d(-1), d(2)])
    assert got == Counter({e(-1, 0): 1, e(0, -1): 1, e(1, 1): 1})


def test_empty_module():
    assert module_character(B2, []).dim == 0


def test_sym_identity_at_degree_one():
    char = module_character(B2, [d(-1), d(2)])
    assert sym_power_character(char, 1) == char


def test_sym_square_of_two_lines():
    w, minus = ((1,), ()), ((-1,), ())
    char = Character({w: 1, minus: 1})
    assert sym_power_character(char, 2).weights == {((2,), ()): 1, ((0,), ()): 1, ((-2,), ()): 1}


def test_sym_cap(monkeypatch):
    monkeypatch.setenv("KOSTANT_MAX_MULTISETS", "10")
    char = Character({((i,), ()): 1 for i in range(5)})
    with pytest.raises(CapExceededError, match="15"):
        sym_power_character(char, 2)


def test_trivial_character():
    s = simple_structure("A", 1)
    assert trivial_multiplicity(Character({((), (0,)): 1}), s) == 1


def test_gl2_natural_times_dual():
    s = classical_structure(GL2_ONE_PART)
    nat = character_from_weights(s, [e(1, 0), e(0, 1)])
    dual = character_from_weights(s, [e(-1, 0), e(0, -1)])
    prod = tensor(nat, dual)
    assert trivial_multiplicity(prod, s) == 1
    parts = strip_down_decompose(prod, s)
    assert parts == [(((0,), (0,)), 1), (((0,), (2,)), 1)]


def test_strip_down_trivial():
    s = simple_structure("A", 1)
    assert strip_down_decompose(Character({((), (0,)): 1}), s) == [(((), (0,)), 1)]


def test_c1_sym_square_is_adjoint():
    s = simple_structure("C", 1)
    nat = irreducible(s, (1,))
    assert nat.dim == 2
    assert strip_down_decompose(sym_power_character(nat, 2), s) == [(((), (2,)), 1)]


def test_not_weyl_invariant_rejected():
    s = simple_structure("A", 1)
    with pytest.raises(ValueError):
        trivial_multiplicity(Character({((), (1,)): 1}), s)


@pytest.mark.parametrize("t,rank,labels,dim", [("A", 2, (1, 1), 8), ("B", 2, (0, 1), 4), ("G2", None, (1, 0), 7),
                                               ("C", 3, (0, 0, 1), 14), ("B", 3, (0, 0, 2), 35)])
def test_freudenthal_dimensions(t, rank, labels, dim):
    s = simple_structure(t, rank)
    char = irreducible(s, labels)
    assert char.dim == dim == s.weyl_dimension(labels)
    assert is_weyl_invariant(char, s)


def test_freudenthal_rejects_non_dominant():
    with pytest.raises(ValueError):
        freudenthal(simple_structure("A", 2), (1, -1))


def test_weyl_order_from_labels():
    assert simple_structure("B", 3).weyl_order == 48
    assert simple_structure("G2").weyl_order == 12


class TestInvariants:
    def test_b2_counterexample(self):
        rep = invariants_up_to_degree(B2, [d(-1), d(2)], 12)
        assert rep.dims() == [1] + [0] * 12
        assert rep.all_trivial

    def test_d4_sym6(self):
        datum = make_datum("D", 4, [[1, 2]], {1: 1, 2: 1}, i0=[3, 4])
        rep = invariants_up_to_degree(datum, [d(1), d(-2)], 6)
        assert rep.dims()[6] >= 1
        assert rep.first_invariant_degree() == 6

    def test_gl2_two_cycle(self):
        rep = invariants_up_to_degree(GL2, [d(1, -1), d(-1, 1)], 2)
        assert rep.dims() == [1, 0, 1]

    def test_default_bound(self):
        assert default_degree_bound(3) == 16
        assert len(invariants_up_to_degree(B2, [d(1)]).degrees) == 9

    def test_stop_at_first(self):
        rep = invariants_up_to_degree(GL2, [d(1, -1), d(-1, 1)], 10, stop_at_first=True)
        assert not rep.complete and rep.first_invariant_degree() == 2

    def test_fast_path_matches_full_character(self):
        datum = make_datum("C", 3, [[1], [2]], "++.", i0=[3])
        s = [d(1, -1), d(-1, 1), d(2, 0), d(0, -1)]
        inst = classical_instance(datum)
        fast = invariants_up_to_degree(datum, s, 6).dims()
        char = module_character(datum, s)
        slow = [1] + [trivial_multiplicity(sym_power_character(char, k, inst.structure), inst.structure)
                      for k in range(1, 7)]
        assert fast == slow


def test_d4_type_one_without_invariants_or_parabolic():
    """Sym M has no invariants here, yet no parabolic contains M.

    The t-weight-zero part of Sym^{5a} is (x y z)^a Sym^{2a}(w3, w4), an
    irreducible sl_2-module of dimension 2a + 1, so it has no invariants.
    """
    from kostant.positivity import CycleCertificate, find_parabolic_containing

    datum = make_datum("D", 4, [[1], [2], [3, 4]], "++++")
    s = [d(-1, -1, 0), d(-1, 1, 0), d(0, 0, -2), d(1, 0, 1)]
    assert isinstance(find_parabolic_containing(datum, s), CycleCertificate)
    module = classical_instance(datum).graded_module(s)
    assert [module.t_level_dim(k) for k in range(1, 11)] == [0, 0, 0, 0, 3, 0, 0, 0, 0, 5]
    assert invariants_up_to_degree(datum, s, 20).all_trivial
