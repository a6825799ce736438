"""Word algebra: free reduction, Dehn's algorithm, handlebody quotients."""

import random

import pytest

from goeritz import words as W


def w(text, genus=3):
    return W.parse_word(text, genus)


def test_parse_and_format_roundtrip():
    word = w("x1 y1 x1^ y1^ x3 y2^")
    assert W.format_word(word) == "x1 y1 x1^ y1^ x3 y2^"


def test_parse_rejects_bad_tokens():
    with pytest.raises(W.WordError):
        W.parse_word("z1", 3)
    with pytest.raises(W.WordError):
        W.parse_word("x4", 3)
    with pytest.raises(W.WordError):
        W.parse_word("xx", 3)


def test_free_reduce_adjacent_cancellation():
    assert W.free_reduce(w("x1 x1^ y2")) == w("y2")


def test_free_reduce_nested_cancellation():
    assert W.free_reduce(w("x1 y1 y1^ x1^")) == ()


def test_free_reduce_fixes_relator():
    r = W.relator(3)
    assert W.free_reduce(r) == r


def test_free_reduce_idempotent_and_nonincreasing():
    rng = random.Random(7)
    for _ in range(300):
        word = tuple((rng.randrange(6), rng.choice((1, -1))) for _ in range(rng.randrange(30)))
        red = W.free_reduce(word)
        assert W.free_reduce(red) == red
        assert len(red) <= len(word)


def test_trivial_words():
    g = 3
    assert W.is_trivial((), g)
    assert W.is_trivial(W.relator(g), g)
    assert W.is_trivial(W.concat(W.relator(g), W.relator(g)), g)
    assert not W.is_trivial(w("x1"), g)
    assert not W.is_trivial(w("x1 y2"), g)
    u = w("y2 x3 y1^")
    assert W.is_trivial(W.concat(u, W.relator(g), W.inverse(u)), g)


def test_conjugacy_cyclic_rotation():
    assert W.conjugacy_equal(w("x1 y1"), w("y1 x1"), 3)


def test_conjugacy_distinct_abelianizations():
    assert not W.conjugacy_equal(w("x1"), w("x2"), 3)


def test_conjugacy_through_relator():
    g = 3
    lit = W.concat(W.relator(g), w("x1"), W.inverse(W.relator(g)))
    assert W.conjugacy_equal(w("x1"), lit, g)
    assert W.conjugacy_equal_bruteforce(w("x1"), lit, g, max_conj_len=2)


def test_conjugacy_bruteforce_agrees_on_small_words():
    g = 2
    rng = random.Random(11)
    for _ in range(25):
        a = W.free_reduce(tuple((rng.randrange(4), rng.choice((1, -1))) for _ in range(3)))
        b = W.free_reduce(tuple((rng.randrange(4), rng.choice((1, -1))) for _ in range(3)))
        fast = W.conjugacy_equal(a, b, g)
        slow = W.conjugacy_equal_bruteforce(a, b, g, max_conj_len=3)
        assert fast == slow, (a, b)


def test_conjugacy_is_equivalence_on_witnessed_sample():
    g = 3
    rng = random.Random(5)
    base = [w("x1 y1"), w("x2"), w("x1 y1 x1^ y1^"), w("y3 x3")]
    sample = []
    for word in base:
        for _ in range(3):
            u = tuple((rng.randrange(6), rng.choice((1, -1))) for _ in range(rng.randrange(4)))
            sample.append(W.conjugate(word, u))
    for a in sample:
        assert W.conjugacy_equal(a, a, g)
    for a in sample:
        for b in sample:
            assert W.conjugacy_equal(a, b, g) == W.conjugacy_equal(b, a, g)
    for i, a in enumerate(sample):
        for b in sample[i:]:
            for c in sample:
                if W.conjugacy_equal(a, b, g) and W.conjugacy_equal(b, c, g):
                    assert W.conjugacy_equal(a, c, g)


def test_unoriented_conjugacy():
    g = 3
    assert W.conjugacy_equal(w("x1"), w("x1^"), g, unoriented=True)
    assert not W.conjugacy_equal(w("x1"), w("x1^"), g, unoriented=False)


def test_handlebody_image_examples():
    g = 3
    assert W.handlebody_image(w("x1 y1 x1^ y1^"), W.H1) == ()
    assert W.handlebody_image(w("y1"), W.H1) == w("y1")
    c2star = W.SurfaceSchema(g).reference_table["c2*"]
    assert W.handlebody_image(c2star, W.H2) == ()


def test_handlebody_image_is_homomorphism():
    rng = random.Random(3)
    for _ in range(200):
        u = tuple((rng.randrange(6), rng.choice((1, -1))) for _ in range(rng.randrange(64)))
        v = tuple((rng.randrange(6), rng.choice((1, -1))) for _ in range(rng.randrange(64)))
        for side in (W.H1, W.H2):
            lhs = W.handlebody_image(W.concat(u, v), side)
            rhs = W.free_reduce(W.handlebody_image(u, side) + W.handlebody_image(v, side))
            assert lhs == rhs


def test_handlebody_image_trace_witnesses_cancellation():
    image, trace = W.handlebody_image_trace(w("x1 y1 x1^ y1^"), W.H1)
    assert image == ()
    assert any(step[0] == "cancel" for step in trace[1:])


def test_bounds_disk_reference_truth_table():
    for genus in (2, 3, 4):
        schema = W.SurfaceSchema(genus)
        t = schema.reference_table
        for i in range(1, genus + 1):
            assert W.bounds_disk(t["a%d" % i], W.H1)
            assert not W.bounds_disk(t["a%d" % i], W.H2)
            assert W.bounds_disk(t["b%d" % i], W.H2)
            assert not W.bounds_disk(t["b%d" % i], W.H1)
            assert W.bounds_disk(t["c%d" % i], W.H1)
            assert W.bounds_disk(t["c%d" % i], W.H2)
        for i in range(1, genus):
            assert W.bounds_disk(t["c%d*" % i], W.H1)
            assert W.bounds_disk(t["c%d*" % i], W.H2)


def test_schema_rejects_genus_one():
    with pytest.raises(W.WordError):
        W.SurfaceSchema(1)
