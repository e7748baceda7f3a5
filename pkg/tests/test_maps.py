"""Tests for the structure maps between the y-free span and the full span."""

import pytest

from qshuffle.fields import PrimeField
from qshuffle.maps import (
    BasisDecomposition,
    ehat,
    ehat_word,
    iota,
    phi,
    phi_inv,
    pi_hat,
    rbasis_decompose,
)
from qshuffle.shuffle import ShuffleContext
from qshuffle.words import (
    EMPTY_WORD,
    Element,
    TensorElement,
    Word,
    e_words,
    parse_element,
    parse_tensor,
    r_words,
    xw,
    yw,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def test_ehat_word_split_points():
    # one term per split point: x[1,2] -> x[1,2] + x[2]y[1] + y[1,2]
    got = ehat_word((1, 2), F3)
    assert got == Element(F3, {xw(1, 2): 1, Word((2,), (1,)): 1, yw(1, 2): 1})
    assert ehat_word((3,), F3) == Element(F3, {xw(3): 1, yw(3): 1})
    assert ehat_word((), F3) == Element.one(F3)


def test_ehat_is_linear():
    u = Element(F3, {xw(1): 2, xw(2): 1})
    assert ehat(u) == ehat_word((1,), F3).scale(2) + ehat_word((2,), F3)
    assert ehat(Element.zero(F3)).is_zero()
    assert ehat(Element.one(F3)) == Element.one(F3)


def test_ehat_top_term_is_the_y_word():
    for index in [(1,), (2, 1), (1, 1, 2)]:
        img = ehat_word(index, F2)
        tops = [w for w, _ in img if w.ydeg == len(index)]
        assert tops == [Word((), index)]
        assert img.coeff(Word((), index)) == 1


def test_ehat_rejects_y_terms():
    with pytest.raises(ValueError):
        ehat(Element.from_word(F2, yw(1)))


@pytest.mark.parametrize("q", [2, 3])
def test_ehat_is_multiplicative_on_samples(q):
    ctx = ShuffleContext(q)
    pairs = [("x[1]", "x[1]"), ("x[2]", "x[1,1]"), ("x[1,2]", "x[1]")]
    for sa, sb in pairs:
        a = parse_element(sa, ctx.field)
        b = parse_element(sb, ctx.field)
        assert ehat(ctx.shuffle_r(a, b)) == ctx.shuffle_e(ehat(a), ehat(b))


def test_iota_is_the_identity_on_representations():
    u = Element(F2, {xw(1, 2): 1, EMPTY_WORD: 1})
    assert iota(u) == u
    with pytest.raises(ValueError):
        iota(Element.from_word(F2, yw(1)))


def test_pi_hat_keeps_exactly_y_free_terms():
    u = parse_element("x[3] + x[1]y[2] + 2*y[1]", F3)
    assert pi_hat(u) == parse_element("x[3]", F3)
    assert pi_hat(Element.one(F3)) == Element.one(F3)
    assert pi_hat(Element.from_word(F3, yw(2))).is_zero()


def test_pi_hat_section_property():
    # pi_hat ehat = identity on the y-free span
    for text in ["x[1]", "x[1,2] + 2*x[3]", "1 + x[2,2]"]:
        u = parse_element(text, F3)
        assert pi_hat(ehat(u)) == u


@pytest.mark.parametrize("q", [2, 3])
def test_pi_hat_is_multiplicative_on_samples(q):
    ctx = ShuffleContext(q)
    pairs = [("x[1]y[1]", "y[2]"), ("x[2] + y[1]", "x[1]"), ("y[1]", "y[1]")]
    for sa, sb in pairs:
        a = parse_element(sa, ctx.field)
        b = parse_element(sb, ctx.field)
        assert pi_hat(ctx.shuffle_e(a, b)) == ctx.shuffle_r(pi_hat(a), pi_hat(b))


# -- phi and its inverse ---------------------------------------------------


def test_phi_examples():
    ctx = ShuffleContext(2)
    t = parse_tensor("x[1] (x) x[1]", ctx.field)
    assert phi(t, ctx) == parse_element("x[2] + x[1]y[1]", ctx.field)
    # phi(u (x) 1) = u and phi(1 (x) v) = ehat(v)
    assert phi(parse_tensor("x[1,2] (x) 1", ctx.field), ctx) == parse_element("x[1,2]", ctx.field)
    assert phi(parse_tensor("1 (x) x[1,2]", ctx.field), ctx) == ehat_word((1, 2), ctx.field)


def test_phi_rejects_y_legs():
    ctx = ShuffleContext(2)
    with pytest.raises(ValueError):
        phi(TensorElement.from_pair(ctx.field, yw(1), xw(1)), ctx)


def test_phi_inv_example():
    ctx = ShuffleContext(2)
    got = phi_inv(parse_element("y[1]", ctx.field), ctx)
    assert got == parse_tensor("1 (x) x[1] + x[1] (x) 1", ctx.field)


def test_phi_inv_of_zero():
    ctx = ShuffleContext(3)
    assert phi_inv(Element.zero(ctx.field), ctx).is_zero()


@pytest.mark.parametrize("q", [2, 3])
def test_phi_phi_inv_roundtrip_on_words(q):
    ctx = ShuffleContext(q)
    for w in e_words(4):
        u = Element.from_word(ctx.field, w)
        t = phi_inv(u, ctx)
        assert t.in_r_tensor_r()
        assert phi(t, ctx) == u


@pytest.mark.parametrize("q", [2, 3])
def test_phi_inv_phi_roundtrip_on_tensors(q):
    ctx = ShuffleContext(q)
    ws = r_words(3)
    for w1 in ws:
        for w2 in ws:
            if w1.weight + w2.weight > 4:
                continue
            t = TensorElement.from_pair(ctx.field, w1, w2)
            assert phi_inv(phi(t, ctx), ctx) == t


def test_phi_is_multiplicative_on_samples():
    # phi(s * t) = phi(s) * phi(t) with the componentwise tensor product
    ctx = ShuffleContext(3)
    s = TensorElement.from_pair(ctx.field, xw(1), xw(1))
    t = TensorElement.from_pair(ctx.field, EMPTY_WORD, xw(2))
    lhs = phi(ctx.tensor_shuffle(s, t, "R"), ctx)
    rhs = ctx.shuffle_e(phi(s, ctx), phi(t, ctx))
    assert lhs == rhs


# -- coordinates over the ehat image --------------------------------------


def test_rbasis_decompose_example():
    ctx = ShuffleContext(2)
    dec = rbasis_decompose(parse_element("y[1]", ctx.field), ctx)
    # y[1] = x[1] * ehat(1) + 1 * ehat(x[1]) over F_2
    assert dec.coordinates == {
        (): Element.from_word(ctx.field, xw(1)),
        (1,): Element.one(ctx.field),
    }
    assert dec.reconstruct(ctx) == parse_element("y[1]", ctx.field)


@pytest.mark.parametrize("q", [2, 3])
def test_rbasis_decompose_roundtrip(q):
    ctx = ShuffleContext(q)
    for w in e_words(4):
        if w.is_empty():
            continue
        u = Element.from_word(ctx.field, w)
        dec = rbasis_decompose(u, ctx)
        for b, coeff in dec:
            assert coeff.in_r()
            assert isinstance(b, tuple)
        assert dec.reconstruct(ctx) == u


def test_rbasis_decompose_iterates_sorted():
    ctx = ShuffleContext(2)
    dec = rbasis_decompose(parse_element("y[1] + y[2]", ctx.field), ctx)
    keys = [b for b, _ in dec]
    assert keys == sorted(keys)


def test_empty_decomposition_cannot_reconstruct():
    with pytest.raises(ValueError):
        BasisDecomposition({}).reconstruct(ShuffleContext(2))
