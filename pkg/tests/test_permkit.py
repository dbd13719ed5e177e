import itertools

import pytest

from kpschubert import permkit as pk
from kpschubert.permkit import Permutation as P


def brute_length(w, n):
    word = w.padded(n)
    return sum(1 for a, b in itertools.combinations(word, 2) if a > b)


# -- Permutation basics ----------------------------------------------------------

def test_trailing_fixed_points_are_trimmed():
    assert P([2, 1, 3, 4]) == P([2, 1])
    assert P([1, 2, 3]).is_identity()
    assert P([2, 1, 3]).word == (2, 1)
    assert hash(P([2, 1, 3])) == hash(P([2, 1]))


@pytest.mark.parametrize("bad", [[1, 1], [0, 1], [2, 3], [1, 3]])
def test_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        P(bad)


def test_composition_convention():
    u, v = P([2, 3, 1]), P([2, 1])
    assert (u * v)(1) == u(v(1)) == 3
    assert all((u * v)(i) == u(v(i)) for i in range(1, 5))


def test_inverse_and_length():
    for w in pk.all_perms(5):
        assert (w * w.inverse()).is_identity()
        assert w.length() == brute_length(w, 5) == w.inverse().length()


def test_swap_is_right_multiplication():
    w = P([3, 1, 4, 2])
    for p, q in [(1, 2), (2, 4), (1, 6)]:
        assert w.swap(p, q) == w * pk.transposition(p, q)


def test_str_and_json_round_trip():
    assert str(P([])) == "1"
    assert str(P([4, 2, 1, 6, 3, 5])) == "421635"
    assert str(P(list(range(10, 0, -1)))) == "10,9,8,7,6,5,4,3,2,1"
    for w in pk.all_perms(4):
        assert P.from_json(w.to_json()) == w


def test_w0_and_conj():
    assert pk.w0(3) == P([3, 2, 1])
    assert pk.conj_w0(P([2, 1]), 3) == P([1, 3, 2])
    with pytest.raises(ValueError):
        pk.conj_w0(P([4, 1, 2, 3]), 3)


def test_all_perms_count():
    assert len(list(pk.all_perms(4))) == 24
    assert len(set(pk.all_perms(5))) == 120


# -- codes -----------------------------------------------------------------------

def test_code_examples():
    assert pk.code(P([4, 2, 1, 6, 3, 5])) == (3, 1, 0, 2)
    assert pk.code(P([])) == ()
    assert pk.code(P([3, 2, 1])) == (2, 1)


def test_from_code_examples():
    assert pk.from_code((3, 1, 0, 2)) == P([4, 2, 1, 6, 3, 5])
    assert pk.from_code(()).is_identity()
    assert pk.from_code((0, 1, 3, 4)) == P([1, 3, 6, 8, 2, 4, 5, 7])


def test_code_bijection_on_s6():
    seen = set()
    for w in pk.all_perms(6):
        c = pk.code(w)
        assert pk.from_code(c) == w
        assert all(a <= 6 - k for k, a in enumerate(c, start=1))
        seen.add(c)
    assert len(seen) == 720


def test_inversion_sets():
    w = P([4, 2, 1, 6, 3, 5])
    assert pk.inversion_set(w, 1) == (2, 3, 5)
    assert pk.inversion_set(P([]), 3) == ()
    assert pk.inversion_set(P([1, 4, 3, 2]), 2) == (3, 4)


def test_shape_of_worked_example():
    s = pk.shape_of(P([4, 2, 1, 6, 3, 5]))
    assert s.crosses == frozenset({(1, 2), (1, 3), (1, 5), (2, 3), (4, 5), (4, 6)})
    assert s.column(3) == (1, 2)
    assert pk.shape_of(P([])).crosses == frozenset()


def test_shape_row_sums_are_the_code():
    w = P([1, 3, 6, 8, 2, 4, 5, 7])
    s = pk.shape_of(w)
    assert tuple(s.row_sum(k) for k in range(1, 5)) == (0, 1, 3, 4)
    assert pk.Shape.from_json(s.to_json()) == s


def test_l_j_and_m_ij():
    w = P([4, 2, 1, 6, 3, 5])
    assert [pk.l_j(w, j) for j in range(1, 7)] == [0, 1, 2, 0, 2, 1]
    # m_ij counts k > j with w(i) < w(k) < w(j)
    assert pk.m_ij(w, 3, 4) == 2
    assert pk.m_ij(w, 1, 2) == 0


def test_reduced_word():
    for w in pk.all_perms(4):
        word = pk.reduced_word(w)
        assert len(word) == w.length()
        prod = P([])
        for i in word:
            prod = prod * pk.simple(i)
        assert prod == w


# -- vexillary -------------------------------------------------------------------

def test_vexillary_examples():
    assert pk.is_vexillary(P([1, 4, 3, 2]))
    assert not pk.is_vexillary(P([2, 1, 4, 3]))
    assert pk.is_vexillary(P([]))


def test_vexillary_counts():
    # 2143-avoiding permutations: 1, 2, 6, 23, 103, 513
    for n, expected in [(3, 6), (4, 23), (5, 103), (6, 513)]:
        assert sum(pk.is_vexillary(w) for w in pk.all_perms(n)) == expected


def test_vexillary_routes_agree():
    for w in pk.all_perms(6):
        assert pk.is_vexillary_chain(w) == pk.is_vexillary_pattern(w)


# -- orders ----------------------------------------------------------------------

def test_lex_orders():
    assert pk.lex_leq(P([1, 3, 2]), P([2, 1, 3]))
    assert not pk.lex_leq(P([2, 1, 3]), P([1, 3, 2]))
    w = P([3, 1, 2])
    assert pk.code_order_geq(pk.code(w), pk.code(w))
    assert pk.code_order_geq((2, 0), (1, 1))
    assert not pk.code_order_geq((1, 1), (2, 0))


# -- Monk ------------------------------------------------------------------------

def test_monk_worked_example():
    terms = pk.monk_terms(P([1, 3, 5, 2, 4, 6]), 2)
    assert set(terms) == {P([2, 3, 5, 1, 4, 6]), P([1, 5, 3, 2, 4, 6]), P([1, 4, 5, 2, 3, 6])}


def test_monk_small():
    assert pk.monk_terms(P([]), 1) == [P([2, 1])]
    assert pk.monk_terms(P([2, 1]), 1) == [P([3, 1, 2])]


def test_monk_matches_brute_force():
    for w in pk.all_perms(5):
        for k in range(1, 6):
            brute = {w.swap(p, q) for p in range(1, k + 1) for q in range(k + 1, 8)
                     if brute_length(w.swap(p, q), 8) == brute_length(w, 8) + 1}
            assert set(pk.monk_terms(w, k)) == brute


# -- transitions -----------------------------------------------------------------

def test_worked_maximal_transition():
    w = P([5, 2, 1, 8, 6, 3, 4, 7, 9])
    t = pk.maximal_transition(w)
    assert (t.j, t.s) == (5, 7)
    assert t.v == P([5, 2, 1, 8, 4, 3, 6, 7, 9])
    assert set(t.branches) == {P([5, 2, 4, 8, 1, 3, 6, 7, 9]), P([5, 4, 1, 8, 2, 3, 6, 7, 9])}


def test_worked_example_all_transitions():
    w = P([5, 2, 1, 8, 6, 3, 4, 7, 9])
    found = {(t.j, t.s): (t.v, set(t.branches)) for t in pk.transitions(w)}
    # the (2,3) transition has v = 512863479; the source prints 512864379,
    # which is not a permutation of the right length
    assert found[2, 3] == (P([5, 1, 2, 8, 6, 3, 4, 7, 9]), set())
    assert found[4, 8] == (P([5, 2, 1, 7, 6, 3, 4, 8, 9]),
                           {P([7, 2, 1, 5, 6, 3, 4, 8, 9]), P([5, 7, 1, 2, 6, 3, 4, 8, 9]),
                            P([5, 2, 7, 1, 6, 3, 4, 8, 9])})
    assert set(found) == {(2, 3), (4, 8), (5, 7)}


def test_transition_of_s1():
    t = pk.maximal_transition(P([2, 1]))
    assert (t.j, t.s, t.v, t.branches) == (1, 2, P([]), ())


def test_identity_has_no_transition():
    with pytest.raises(pk.NoTransitionError, match="no transition exists"):
        pk.maximal_transition(P([]))
    assert pk.transitions(P([])) == []


def test_every_nonidentity_has_a_transition():
    for w in pk.all_perms(5):
        if not w.is_identity():
            t = pk.maximal_transition(w)
            assert pk.transition_conditions_hold(t)
            assert t.v.length() == w.length() - 1


def test_literal_condition_three_is_weaker():
    # with condition 3) read literally, (1,2) on 312 passes the checks even
    # though S_312 != S_132 * x1
    w = P([3, 1, 2])
    fake = pk.Transition(w, 1, 2, w.swap(1, 2), (), ())
    assert pk.transition_conditions_hold(fake, literal=True)
    assert not pk.transition_conditions_hold(fake)


def test_transition_json():
    t = pk.maximal_transition(P([3, 1, 2]))
    data = t.to_json()
    assert data["w"] == [3, 1, 2] and P(data["v"]) == t.v
