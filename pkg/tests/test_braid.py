"""Braid words, invariants, and the word-problem decision procedure."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from hatlab.braid import (
    BraidError,
    BraidWord,
    braid_text,
    closure_components,
    conjugate,
    cyclic_permute,
    delta_square_script,
    apply_square_insertions,
    equal,
    exponent_sum,
    full_twist,
    half_twist,
    identity,
    inverse,
    is_trivial,
    markov_destabilize,
    markov_stabilize,
    normal_form,
    parse_braid,
    self_linking,
    underlying_permutation,
)


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------

def test_parse_letter_form():
    w = parse_braid("xy^2x^2y^7", 3)
    assert w.strands == 3
    assert len(w.letters) == 12
    assert exponent_sum(w) == 12


def test_parse_empty_is_identity():
    assert parse_braid("", 3) == identity(3)
    assert parse_braid("   ", 5) == identity(5)


def test_parse_capitals_are_inverses():
    assert parse_braid("xyXY", 3).letters == (1, 2, -1, -2)


def test_parse_numeric_form():
    assert parse_braid("s1S1s5", 6).letters == (1, -1, 5)
    assert parse_braid("s1 s3 s2", 6) == parse_braid("s1s3s2", 6)


def test_parse_negative_power():
    assert parse_braid("x^-3", 3) == parse_braid("X^3", 3)


def test_parse_rejects_out_of_range_letter():
    with pytest.raises(BraidError):
        parse_braid("xyXY", 2)  # y needs 3 strands


def test_parse_rejects_unknown_letter():
    with pytest.raises(BraidError):
        parse_braid("xqy", 3)


def test_parse_rejects_malformed_power():
    with pytest.raises(BraidError):
        parse_braid("x^", 3)
    with pytest.raises(BraidError):
        parse_braid("x^-", 3)


def test_printer_round_trip():
    for text, n in [("xy^2x^2y^7", 3), ("xyXY", 3), ("X^3yx^3yzYz", 4), ("", 2)]:
        w = parse_braid(text, n)
        assert parse_braid(braid_text(w), n) == w
    w = BraidWord(7, (6, -6, 5, 5))
    assert parse_braid(braid_text(w), 7) == w


# ---------------------------------------------------------------------------
# exponent sum, permutation, components, self-linking
# ---------------------------------------------------------------------------

def test_exponent_sum_examples():
    assert exponent_sum(parse_braid("xy^2x^2y^7", 3)) == 12
    assert exponent_sum(identity(4)) == 0
    assert exponent_sum(BraidWord(3, (1, 2) * 11)) == 22


def test_permutation_examples():
    p = underlying_permutation(parse_braid("xy", 3))
    assert sorted(map(len, p.cycles())) == [3]
    assert closure_components(parse_braid("xy", 3)) == 1
    assert closure_components(identity(3)) == 3
    assert underlying_permutation(identity(3)).is_identity()
    assert closure_components(parse_braid("xy^2x^2y^7", 3)) == 1


def test_self_linking_examples():
    assert self_linking(parse_braid("xy^2x^2y^7", 3)) == 9
    assert self_linking(BraidWord(3, (1, 2) * 11)) == 19
    assert self_linking(identity(1)) == -1


def test_self_linking_requires_knot():
    with pytest.raises(BraidError):
        self_linking(identity(3))


def test_torus_braid_slk():
    # slk of the positive (p,q) torus braid is pq - p - q
    from math import gcd
    for p in range(2, 11):
        for q in range(p + 1, 11):
            if gcd(p, q) != 1:
                continue
            w = BraidWord(p, tuple(range(1, p)) * q)
            assert self_linking(w) == p * q - p - q


# ---------------------------------------------------------------------------
# equality
# ---------------------------------------------------------------------------

def test_braid_relation():
    assert equal(parse_braid("xyx", 3), parse_braid("yxy", 3))


def test_far_commutation():
    assert equal(parse_braid("xz", 4), parse_braid("zx", 4))


def test_free_cancellation():
    assert is_trivial(parse_braid("xX", 3))
    assert is_trivial(parse_braid("Xx", 3))


def test_inequality():
    assert not equal(parse_braid("x", 3), parse_braid("y", 3))
    assert not equal(parse_braid("xy", 3), parse_braid("yx", 3))


def test_strand_mismatch_raises():
    with pytest.raises(BraidError):
        equal(identity(3), identity(4))


def test_five_twist_identity_b6():
    lhs = BraidWord(6, tuple([1, 2, 3, 4, 5] * 5))
    rhs = parse_braid(
        "s1s3s2s3s4s5 s1s3s2s3s3s4s5 s1s3s2s3s4s3s5 s1s2s3s4s5", 6
    )
    assert equal(lhs, rhs)
    # the identity is sensitive: any single-letter change breaks it
    broken = list(rhs.letters)
    broken[7] = 1
    assert not equal(lhs, BraidWord(6, tuple(broken)))


def test_b2_exponent_oracle():
    rng = random.Random(2)
    for _ in range(1000):
        a = BraidWord(2, tuple(rng.choice([1, -1]) for _ in range(rng.randint(0, 40))))
        b = BraidWord(2, tuple(rng.choice([1, -1]) for _ in range(rng.randint(0, 40))))
        assert equal(a, b) == (exponent_sum(a) == exponent_sum(b))


def test_normal_form_is_canonical_key():
    w1 = parse_braid("xyx", 3)
    w2 = parse_braid("yxy", 3)
    assert normal_form(w1) == normal_form(w2)
    assert hash(normal_form(w1)) == hash(normal_form(w2))


# ---------------------------------------------------------------------------
# conjugation, cyclic permutation, Markov moves
# ---------------------------------------------------------------------------

def test_conjugate_identity():
    c = parse_braid("xyzXY", 4)
    assert is_trivial(conjugate(identity(4), c))


def test_cyclic_permute_is_conjugation():
    w = parse_braid("yxzyXyz", 4)
    r = cyclic_permute(w, 1)
    assert closure_components(r) == closure_components(w)
    prefix = BraidWord(4, w.letters[:1])
    assert equal(r, conjugate(w, inverse(prefix)))


def test_full_twist_is_central():
    for n in range(2, 6):
        ft = full_twist(n)
        for i in range(1, n):
            g = BraidWord(n, (i,))
            assert equal(conjugate(ft, g), ft)


def test_markov_destabilize_example():
    w = parse_braid("x^4yx", 3)
    d = markov_destabilize(w)
    assert d == parse_braid("x^5", 2)


def test_markov_destabilize_preconditions():
    with pytest.raises(BraidError):
        markov_destabilize(parse_braid("xyxy", 3))  # two last-strand letters
    with pytest.raises(BraidError):
        markov_destabilize(parse_braid("x^3Y", 3))  # negative occurrence
    with pytest.raises(BraidError):
        markov_destabilize(identity(1))


def test_markov_round_trip():
    w = parse_braid("x^3", 2)
    s = markov_stabilize(w, 1)
    assert s.strands == 3
    assert equal(markov_destabilize(s), w)


def test_stabilization_slk():
    w = identity(1)
    assert self_linking(markov_stabilize(w, -1)) == -3
    assert self_linking(markov_stabilize(w, 1)) == -1
    k = parse_braid("xy^2x^2y^7", 3)
    assert self_linking(markov_stabilize(k, 1)) == self_linking(k)
    assert self_linking(markov_stabilize(k, -1)) == self_linking(k) - 2


# ---------------------------------------------------------------------------
# half twist, full twist, square-insertion scripts
# ---------------------------------------------------------------------------

def test_half_twist_squares_to_full_twist():
    for n in range(2, 7):
        assert equal(half_twist(n) * half_twist(n), full_twist(n))


def test_full_twist_small_cases():
    assert full_twist(2) == parse_braid("x^2", 2)
    assert equal(parse_braid("x^2yx^2y", 3), parse_braid("xyxyxy", 3))


def test_delta_square_script_empty_for_b2():
    assert delta_square_script(2, 1) == []


def test_delta_square_script_reaches_full_twist():
    for n in range(2, 7):
        for i in range(1, n):
            sc = delta_square_script(n, i)
            out = apply_square_insertions(BraidWord(n, (i, i)), sc)
            assert equal(out, full_twist(n)), (n, i)


def test_delta_square_script_rejects_bad_index():
    with pytest.raises(BraidError):
        delta_square_script(4, 4)
    with pytest.raises(BraidError):
        delta_square_script(4, 0)


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

def _letters(n):
    gens = [i for i in range(1, n)] + [-i for i in range(1, n)]
    return st.lists(st.sampled_from(gens), max_size=60).map(tuple)


@st.composite
def _word_and_rewrites(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    letters = draw(_letters(n))
    w = BraidWord(n, letters)
    steps = draw(st.integers(min_value=1, max_value=8))
    rng = random.Random(draw(st.integers(min_value=0, max_value=10**6)))
    v = w
    for _ in range(steps):
        v = _random_rewrite(v, rng)
    return w, v


def _random_rewrite(w, rng):
    letters = list(w.letters)
    n = w.strands
    kind = rng.randint(0, 2)
    if kind == 0:
        pos = rng.randint(0, len(letters))
        i = rng.randint(1, n - 1)
        pair = [i, -i] if rng.random() < 0.5 else [-i, i]
        letters[pos:pos] = pair
    elif kind == 1 and len(letters) >= 3:
        idxs = list(range(len(letters) - 2))
        rng.shuffle(idxs)
        for j in idxs:
            a, b, c = letters[j:j + 3]
            if a == c and a > 0 and b > 0 and abs(a - b) == 1:
                letters[j:j + 3] = [b, a, b]
                break
    elif len(letters) >= 2:
        idxs = list(range(len(letters) - 1))
        rng.shuffle(idxs)
        for j in idxs:
            a, b = letters[j:j + 2]
            if abs(abs(a) - abs(b)) >= 2:
                letters[j], letters[j + 1] = b, a
                break
    return BraidWord(n, tuple(letters))


@settings(max_examples=120, deadline=None)
@given(_word_and_rewrites())
def test_equal_invariant_under_rewrites(pair):
    w, v = pair
    assert equal(w, v)
    assert exponent_sum(w) == exponent_sum(v)
    assert underlying_permutation(w) == underlying_permutation(v)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_closure_invariants_under_conjugation(n, data):
    letters = data.draw(_letters(n))
    conj = data.draw(_letters(n))
    w = BraidWord(n, letters)
    c = BraidWord(n, conj)
    v = conjugate(w, c)
    assert closure_components(v) == closure_components(w)
    if closure_components(w) == 1:
        assert self_linking(v) == self_linking(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_equivalence_relation_on_samples(n, data):
    a = BraidWord(n, data.draw(_letters(n)))
    b = BraidWord(n, data.draw(_letters(n)))
    assert equal(a, a)
    assert equal(a, b) == equal(b, a)
