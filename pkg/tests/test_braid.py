import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from lsf import braid
from lsf.braid import (
    BraidWord, burau_alexander, burau_matrix, canonical_word, closure_components,
    enumerate_genus, fixed_sign_conjugate, full_twist, genus_positive, half_twist,
    iter_genus, left_normal_form, link_with_axis_polynomial, reduce, super_summit_form,
    torus_alexander, torus_braid, twisted_torus_braid,
)
from lsf.errors import NotAKnot, NotPositive, OutOfProvenRange
from lsf.laurent import KnotPoly1, breadth
from lsf.twistalex import genus_lower_bound, os_candidate_check, twist_knot

from conftest import TREFOIL

ONE = KnotPoly1.constant(1)


def B(n, *letters):
    return BraidWord(n, tuple(letters))


@st.composite
def words(draw, positive=False, max_strands=5, max_len=10):
    n = draw(st.integers(2, max_strands))
    gen = st.integers(1, n - 1)
    if not positive:
        gen = st.tuples(gen, st.booleans()).map(lambda t: t[0] if t[1] else -t[0])
    return BraidWord(n, tuple(draw(st.lists(gen, max_size=max_len))))


# -- words and closures ---------------------------------------------------------------

def test_word_validation():
    with pytest.raises(ValueError):
        B(2, 2)
    with pytest.raises(ValueError):
        B(3, 0)


def test_closure_components_examples():
    assert closure_components(B(2, 1)) == 1
    assert closure_components(B(3)) == 3
    assert closure_components(B(2, 1, 1)) == 2


def test_genus_examples():
    assert genus_positive(B(2, 1, 1, 1)) == 1
    assert genus_positive(B(3, 1, 2) ** 4) == 3
    assert genus_positive(B(2, 1)) == 0
    assert genus_positive(B(2, -1, -1, -1)) == 1
    with pytest.raises(NotAKnot):
        genus_positive(B(2, 1, 1))
    with pytest.raises(NotPositive):
        genus_positive(B(3, 1, -2))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(-8, 9) for q in range(2, abs(p))
                                 if math.gcd(p, q) == 1])
def test_torus_genus_grid(p, q):
    assert genus_positive(torus_braid(p, q)) == (abs(p) - 1) * (q - 1) // 2


def test_torus_braid_examples():
    assert torus_braid(3, 2) == B(2, 1, 1, 1)
    assert torus_braid(-3, 2) == B(2, -1, -1, -1)
    assert torus_braid(2, 3) == B(3, 1, 2, 1, 2)


def test_word_algebra():
    w = B(3, 1, -2, 2)
    assert w.inverse() == B(3, -2, 2, -1)
    assert w.mirror() == B(3, -1, 2, -2)
    assert (w * w.inverse()).exponent_sum == 0
    assert B(2, 1) ** 3 == B(2, 1, 1, 1)


# -- reduction -------------------------------------------------------------------------

def test_reduce_examples():
    assert reduce(B(3, 2)).kind == "Split"
    r = reduce(B(3, 1, 2, 2))
    assert r.kind == "Reduced" and r.word == B(2, 1, 1)
    assert reduce(B(2, 1, 1, 1)).kind == "Irreducible"
    with pytest.raises(NotPositive):
        reduce(B(2, -1))


@settings(max_examples=200, deadline=None)
@given(words(positive=True, max_strands=5, max_len=9))
def test_reduce_preserves_closure(w):
    step = w
    while True:
        counts = {i: step.letters.count(i) for i in range(1, step.strands)}
        once = next((i for i, c in counts.items() if c == 1), None)
        if once is None or 0 in counts.values():
            break
        nxt = braid.destabilize_once(step, once)
        assert closure_components(nxt) == closure_components(step)
        assert burau_alexander(nxt, require_knot=False) == burau_alexander(step, require_knot=False)
        step = nxt
    r = reduce(w)
    if r.kind == "Reduced":
        assert r.word == step and reduce(r.word).kind == "Irreducible"


# -- Burau and Alexander -----------------------------------------------------------------

def test_burau_alexander_examples():
    assert burau_alexander(B(2, 1)) == ONE
    assert burau_alexander(B(2, 1, 1, 1)) == TREFOIL
    d = burau_alexander(B(3, 1, 2) ** 4)
    assert breadth(d) == 6 and d == torus_alexander(4, 3)
    with pytest.raises(NotAKnot):
        burau_alexander(B(2, 1, 1))


@pytest.mark.parametrize("p,q", [(p, q) for p in range(-8, 9) for q in range(2, abs(p))
                                 if math.gcd(p, q) == 1])
def test_torus_alexander_grid(p, q):
    assert burau_alexander(torus_braid(p, q)) == torus_alexander(abs(p), q)


def test_torus_alexander_closed_form():
    # (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), checked by multiplying back
    t = KnotPoly1.monomial(1)
    for p, q in ((3, 2), (5, 3), (7, 4)):
        d = torus_alexander(p, q)
        lhs = d.shift(-d.valuation()) * (t ** p - 1) * (t ** q - 1)
        assert lhs == (t ** (p * q) - 1) * (t - 1)


def test_burau_is_a_representation():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 5)
        a = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(6)))
        b = BraidWord(n, tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(6)))
        ma, mb, mab = burau_matrix(a), burau_matrix(b), burau_matrix(a * b)
        m = len(ma)
        prod = [[sum((ma[i][k] * mb[k][j] for k in range(m)), KnotPoly1()) for j in range(m)] for i in range(m)]
        assert prod == mab
        ident = burau_matrix(a * a.inverse())
        assert ident == [[ONE if i == j else KnotPoly1() for j in range(m)] for i in range(m)]


def test_braid_relations_in_burau():
    assert burau_matrix(B(3, 1, 2, 1)) == burau_matrix(B(3, 2, 1, 2))
    assert burau_matrix(B(4, 1, 3)) == burau_matrix(B(4, 3, 1))


@settings(max_examples=120, deadline=None)
@given(words(positive=True, max_strands=5, max_len=10))
def test_positive_braid_degree_is_genus(w):
    if not braid.is_knot(w) or reduce(w).kind == "Split":
        return
    d = burau_alexander(w)
    assert breadth(d) == 2 * genus_positive(w)
    top = max(d.terms)
    assert d.coeff(top) == 1


@settings(max_examples=80, deadline=None)
@given(words(max_strands=4, max_len=8))
def test_alexander_conjugation_and_mirror_invariant(w):
    if not braid.is_knot(w):
        return
    rot = BraidWord(w.strands, w.letters[1:] + w.letters[:1])
    assert burau_alexander(rot) == burau_alexander(w)
    assert burau_alexander(w.mirror()) == burau_alexander(w)


# -- Morton polynomial and twisting ---------------------------------------------------------

@pytest.mark.parametrize("p,q", [(2, 3), (3, 2), (2, 5), (3, 4), (3, 5)])
def test_twist_transport_matches_braid(p, q):
    x = braid.block_swap(p, q)
    delta2 = link_with_axis_polynomial(x)
    for n in range(-2, 3):
        assert twist_knot(delta2, p + q, n) == burau_alexander(twisted_torus_braid(p, q, n))


@pytest.mark.parametrize("n", range(0, 4))
def test_genus_bound_tight_on_twisted_torus(n):
    x = braid.block_swap(3, 2)
    delta2 = link_with_axis_polynomial(x)
    assert genus_lower_bound(delta2, 5, n) == genus_positive(twisted_torus_braid(3, 2, n))


# -- Garside normal form ------------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(words(max_strands=5, max_len=10))
def test_normal_form_same_braid(w):
    nf = left_normal_form(w)
    assert burau_matrix(nf.word()) == burau_matrix(w)
    assert left_normal_form(nf.word()) == nf


@settings(max_examples=60, deadline=None)
@given(words(max_strands=4, max_len=8))
def test_super_summit_is_conjugate(w):
    ssf = super_summit_form(w)
    nf = left_normal_form(w)
    assert ssf.inf >= nf.inf and ssf.sup <= nf.sup
    # conjugates share Burau characteristic data; the closure's Alexander polynomial is one such
    if braid.is_knot(w):
        assert burau_alexander(ssf.word()) == burau_alexander(w)


def test_half_twist_squares_to_full_twist():
    for n in range(2, 6):
        assert burau_matrix(half_twist(n) ** 2) == burau_matrix(full_twist(n))
        assert left_normal_form(full_twist(n)).inf == 2


def test_fixed_sign_conjugate_finds_positive():
    w = B(3, 1, 2, 2, 1) * B(3, 2, -1)
    c = fixed_sign_conjugate(B(3, 2, -1) * w * B(3, 1, -2))
    assert c is not None and (c.is_positive or c.is_negative)


# -- twisted torus knots ------------------------------------------------------------------------

def test_twisted_torus_examples():
    w = twisted_torus_braid(3, 2, 0)
    assert burau_alexander(w) == TREFOIL
    w = twisted_torus_braid(3, 2, 1)
    assert w.is_positive and braid.is_knot(w) and genus_positive(w) > 1
    w = twisted_torus_braid(-3, 2, 0)
    assert w.is_negative and burau_alexander(w) == torus_alexander(3, 2)


def test_twisted_torus_errors():
    with pytest.raises(OutOfProvenRange):
        twisted_torus_braid(-5, 3, 3)
    for args in ((4, 2, 0), (3, 1, 0), (0, 3, 0)):
        with pytest.raises(ValueError):
            twisted_torus_braid(*args)


GRID = [(p, q, n) for p in range(-11, 12) for q in range(2, 7) for n in range(-3, 4)
        if p and math.gcd(abs(p), q) == 1 and not (p < 0 and n > 2)]


@pytest.mark.parametrize("p,q,n", GRID)
def test_twisted_torus_grid(p, q, n):
    w = twisted_torus_braid(p, q, n)
    assert braid.is_knot(w)
    if p > 0:
        assert w.is_positive if n >= 0 else w.is_negative
    elif n <= 0:
        assert w.is_negative or not w.letters
    else:
        assert w.is_positive or w.is_negative or not w.letters
    if n == 0:
        assert burau_alexander(w) == torus_alexander(abs(p), q)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(-11, -1) for q in range(2, 7) if math.gcd(-p, q) == 1])
def test_negative_family_matches_lorenz_model(p, q):
    big, small = max(-p, q), min(-p, q)
    for n in range(-2, 3):
        model = braid._lorenz_model(big, small, n).mirror()
        assert burau_alexander(twisted_torus_braid(p, q, n)) == burau_alexander(model)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(-11, -1) for q in range(2, 7) if math.gcd(-p, q) == 1])
def test_negative_family_candidates(p, q):
    for n in range(-2, 2):
        assert os_candidate_check(burau_alexander(twisted_torus_braid(p, q, n)))


@pytest.mark.parametrize("p,q", [(-5, 3), (-7, 4), (-4, 3), (-7, 5)])
def test_negative_family_signs_when_p_large(p, q):
    P = -p
    for n in (1, 2):
        w = twisted_torus_braid(p, q, n)
        if 2 * q >= P:
            assert w.is_negative or not w.letters
    if P >= 2 * q:
        assert twisted_torus_braid(p, q, 2).is_positive


def test_negative_family_axis_models_agree():
    for big, small in ((5, 3), (7, 3), (7, 2), (8, 3), (9, 4)):
        for n in range(-3, 4):
            a = burau_alexander(braid._lorenz_model(big, small, n))
            b = burau_alexander(braid._axis_model(big, small, n))
            assert a == b


# -- census ------------------------------------------------------------------------------------------

def test_census_small():
    (e0,) = enumerate_genus(0)
    assert e0.alexander == ONE and e0.genus == 0
    (e1,) = enumerate_genus(1)
    assert e1.alexander == TREFOIL and e1.word == B(2, 1, 1, 1)


def test_census_genus2():
    got = enumerate_genus(2)
    keys = {e.alexander for e in got}
    assert torus_alexander(5, 2) in keys
    assert TREFOIL * TREFOIL in keys
    assert len(got) == 2
    for e in got:
        assert e.word.strands <= 5
        assert reduce(e.word).kind == "Irreducible"
        assert genus_positive(e.word) == 2 and burau_alexander(e.word) == e.alexander
        assert canonical_word(e.word) == e.word


def test_census_genus2_brute_force():
    # every positive knot word of genus 2 on at most 5 strands
    found = set()
    for n in range(2, 6):
        for letters in itertools.product(range(1, n), repeat=n + 3):
            w = BraidWord(n, letters)
            if braid.is_knot(w):
                found.add(burau_alexander(w))
    assert found == {e.alexander for e in enumerate_genus(2)}


def test_census_independent_of_jobs():
    serial = enumerate_genus(2)
    assert enumerate_genus(2, jobs=4) == serial
    assert list(iter_genus(2, 3, map)) == serial


def test_canonical_word():
    assert canonical_word(B(3, 2, 2, 1)) == B(3, 1, 1, 2)
    assert canonical_word(B(4, 3, 1)) == canonical_word(B(4, 1, 3))
