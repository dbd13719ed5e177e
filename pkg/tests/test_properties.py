"""Randomized algebraic properties (hypothesis)."""

from hypothesis import given, settings
from hypothesis import strategies as st

from kpschubert import permkit as pk
from kpschubert import polyring as pr
from kpschubert.permkit import Permutation
from kpschubert.polyring import SparsePoly, x

exps = st.lists(st.integers(0, 4), min_size=0, max_size=4).map(tuple)
polys = st.dictionaries(exps, st.integers(-20, 20), max_size=6).map(SparsePoly)
perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)
idx = st.integers(1, 4)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a


@given(polys)
def test_json_round_trip(p):
    assert SparsePoly.from_json(p.to_json()) == p


@given(polys, idx)
def test_dd_squares_to_zero(p, i):
    assert pr.divided_difference(i, pr.divided_difference(i, p)) == 0


@given(polys, idx)
def test_dd_division(p, i):
    assert pr.divided_difference(i, p) * (x(i) - x(i + 1)) == p - p.swap(i)


@given(polys, polys, idx)
def test_dd_twisted_leibniz(p, q, i):
    dd = pr.divided_difference
    assert dd(i, p * q) == dd(i, p) * q + p.swap(i) * dd(i, q)


@given(polys, idx)
def test_braid(p, i):
    dd = pr.divided_difference
    assert dd(i, dd(i + 1, dd(i, p))) == dd(i + 1, dd(i, dd(i + 1, p)))


@given(polys, idx, st.integers(2, 3))
def test_commutation(p, i, gap):
    dd = pr.divided_difference
    j = i + gap
    assert dd(i, dd(j, p)) == dd(j, dd(i, p))


@given(perms)
def test_code_round_trip(w):
    assert pk.from_code(pk.code(w)) == w
    assert sum(pk.code(w)) == w.length()


@given(perms, perms)
def test_length_subadditive(u, v):
    assert (u * v).length() <= u.length() + v.length()
    assert (u * v).inverse() == v.inverse() * u.inverse()


@settings(max_examples=40)
@given(perms)
def test_schubert_leading_monomial(w):
    s = pr.schubert(w)
    assert s.coefficient(pk.code(w)) == 1
    assert s.is_homogeneous() and (not s.items() or s.degree() == w.length())
    assert all(c > 0 for _, c in s.items())


@settings(max_examples=40)
@given(perms, idx)
def test_dd_on_schubert(w, i):
    s = pr.divided_difference(i, pr.schubert(w))
    if w(i) > w(i + 1):
        assert s == pr.schubert(w * pk.simple(i))
    else:
        assert s == 0


@settings(max_examples=30)
@given(polys.filter(lambda p: p.nvars <= 3))
def test_expand_round_trip(p):
    assert pr.expand_schubert(p).to_poly() == p
