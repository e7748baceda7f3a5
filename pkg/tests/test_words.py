"""Tests for words, linear combinations, text/JSON forms, and ordering."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshuffle.fields import PrimeField
from qshuffle.words import (
    EMPTY_WORD,
    Element,
    ParseError,
    TensorElement,
    Word,
    all_indices,
    canonical_order,
    check_index,
    compositions,
    dep,
    e_words,
    element_from_json,
    element_to_json,
    format_element,
    format_tensor,
    format_word,
    index_head_tail,
    parse_element,
    parse_tensor,
    parse_word,
    r_words,
    tensor_from_json,
    tensor_to_json,
    wt,
    xw,
    yw,
)

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


# -- indices ---------------------------------------------------------------


def test_index_helpers():
    assert check_index([1, 2, 3]) == (1, 2, 3)
    assert wt((1, 2, 3)) == 6
    assert dep((1, 2, 3)) == 3
    assert wt(()) == 0 and dep(()) == 0
    assert index_head_tail((5, 1, 2), 1) == ((5,), (1, 2))
    assert index_head_tail((5, 1, 2), 0) == ((), (5, 1, 2))
    assert index_head_tail((5, 1, 2), 3) == ((5, 1, 2), ())


def test_check_index_rejects_nonpositive_entries():
    with pytest.raises(ValueError):
        check_index([1, 0, 2])
    with pytest.raises(ValueError):
        check_index([-1])


def test_compositions_counts():
    # 2^(n-1) compositions of n >= 1, one empty composition of 0
    assert list(compositions(0)) == [()]
    for n in range(1, 8):
        assert len(list(compositions(n))) == 2 ** (n - 1)
    assert len(all_indices(4)) == 1 + 1 + 2 + 4 + 8


def test_word_enumerations():
    rws = r_words(4)
    assert len(rws) == 16
    assert all(w.is_x_word() or w.is_empty() for w in rws)
    assert rws == sorted(rws, key=Word.sort_key)
    ews = e_words(4)
    assert len(ews) == 48
    assert len(set(ews)) == 48
    assert ews == sorted(ews, key=Word.sort_key)
    assert set(rws) <= set(ews)


# -- words -----------------------------------------------------------------


def test_word_basics():
    w = Word((1, 2), (3,))
    assert w.x == (1, 2) and w.y == (3,)
    assert w.weight == 6
    assert w.depth == 3
    assert w.ydeg == 1
    assert not w.is_empty() and not w.is_x_word() and not w.is_y_word()
    assert EMPTY_WORD.is_empty()
    assert EMPTY_WORD.weight == 0
    assert xw(1, 2) == Word((1, 2), ())
    assert yw(3) == Word((), (3,))
    assert xw() == EMPTY_WORD == yw()


def test_word_concat_merges_families():
    # concatenation lands in normal form: x-part then y-part
    assert xw(1) * yw(2) == Word((1,), (2,))
    assert yw(2) * xw(1) == Word((1,), (2,))
    assert xw(1) * xw(2) == xw(1, 2)
    assert yw(1) * yw(2) == yw(1, 2)
    w = Word((1,), (2,))
    assert w * Word((3,), (4,)) == Word((1, 3), (2, 4))
    assert EMPTY_WORD * w == w == w * EMPTY_WORD


def test_word_hash_and_repr():
    assert hash(Word((1,), (2,))) == hash(Word((1,), (2,)))
    assert Word((1,), ()) != Word((), (1,))
    assert str(xw(1, 2)) == "x[1,2]"
    assert str(EMPTY_WORD) == "1"


def test_canonical_order_examples():
    # weight first, then y-weight, then x-length, then entries
    ordered = [
        EMPTY_WORD,
        xw(1),
        yw(1),
        xw(2),
        xw(1, 1),
        Word((1,), (1,)),
        yw(1, 1),
        yw(2),
    ]
    assert ordered == sorted(ordered, key=Word.sort_key)
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            c = canonical_order(a, b)
            assert (c < 0) == (i < j) and (c == 0) == (i == j)


def test_canonical_order_prefers_short_x_but_lex_y():
    # x[3] before x[1,2]; y[1,2] before y[3]
    assert canonical_order(xw(3), xw(1, 2)) < 0
    assert canonical_order(yw(1, 2), yw(3)) < 0
    assert canonical_order(yw(1, 1), yw(2)) < 0
    assert canonical_order(xw(2), xw(1, 1)) < 0


# -- elements --------------------------------------------------------------


def test_element_constructors_and_zero_dropping():
    assert Element.zero(F3).is_zero()
    assert Element.one(F3).coeff(EMPTY_WORD) == 1
    e = Element.from_word(F3, xw(1), 3)
    assert e.is_zero()
    e = Element(F3, {xw(1): 5, xw(2): -1})
    assert e.coeff(xw(1)) == 2
    assert e.coeff(xw(2)) == 2
    assert e.coeff(xw(3)) == 0
    assert len(e) == 2


def test_element_arithmetic_mod_p():
    a = Element.from_word(F3, xw(1), 2)
    b = Element.from_word(F3, xw(1), 1)
    assert (a + b).is_zero()
    assert (a - b) == Element.from_word(F3, xw(1))
    assert (-a) == b
    assert a.scale(2) == b
    assert 2 * a == b
    assert a.scale(0).is_zero()


def test_element_field_mismatch_rejected():
    with pytest.raises(ValueError):
        Element.from_word(F2, xw(1)) + Element.from_word(F3, xw(1))


def test_element_left_multiplication():
    e = Element(F5, {xw(2): 1, Word((3,), (1,)): 2})
    shifted = e.left_mul_letter("x", 1)
    assert shifted == Element(F5, {xw(1, 2): 1, Word((1, 3), (1,)): 2})
    shifted_y = e.left_mul_letter("y", 4)
    assert shifted_y == Element(F5, {Word((2,), (4,)): 1, Word((3,), (4, 1)): 2})
    by_word = e.left_mul_word(Word((1,), (4,)))
    assert by_word == Element(F5, {Word((1, 2), (4,)): 1, Word((1, 3), (4, 1)): 2})
    with pytest.raises(ValueError):
        e.left_mul_letter("z", 1)


def test_element_in_r():
    assert Element(F2, {xw(1, 2): 1}).in_r()
    assert Element.zero(F2).in_r()
    assert Element.one(F2).in_r()
    assert not Element(F2, {xw(1): 1, yw(1): 1}).in_r()


def test_element_iteration_is_canonical():
    e = Element(F3, {yw(2): 1, xw(1): 2, yw(1, 1): 1, EMPTY_WORD: 1})
    assert [w for w, _ in e] == [EMPTY_WORD, xw(1), yw(1, 1), yw(2)]


def test_element_equality_ignores_insertion_order():
    a = Element(F3, {xw(1): 1, xw(2): 2})
    b = Element(F3, {xw(2): 2, xw(1): 1})
    assert a == b and hash(a) == hash(b)


# -- tensors ---------------------------------------------------------------


def test_tensor_constructors():
    t = TensorElement.from_pair(F3, xw(1), yw(2), 2)
    assert t.coeff(xw(1), yw(2)) == 2
    assert t.coeff(yw(2), xw(1)) == 0
    assert TensorElement.one(F3).coeff(EMPTY_WORD, EMPTY_WORD) == 1
    assert TensorElement.zero(F3).is_zero()
    assert TensorElement.from_pair(F3, xw(1), xw(1), 3).is_zero()


def test_tensor_of_is_bilinear():
    left = Element(F3, {xw(1): 1, xw(2): 2})
    right = Element(F3, {yw(1): 2})
    t = TensorElement.of(left, right)
    assert t.coeff(xw(1), yw(1)) == 2
    assert t.coeff(xw(2), yw(1)) == 1
    assert len(t) == 2


def test_tensor_arithmetic():
    a = TensorElement.from_pair(F3, xw(1), xw(2))
    b = TensorElement.from_pair(F3, xw(1), xw(2), 2)
    assert (a + b).is_zero()
    assert (a - b) == TensorElement.from_pair(F3, xw(1), xw(2), 2)
    assert (-a) == b
    assert a.scale(2) == b == 2 * a


def test_tensor_in_r_tensor_r():
    assert TensorElement.from_pair(F2, xw(1), xw(2)).in_r_tensor_r()
    assert not TensorElement.from_pair(F2, xw(1), yw(2)).in_r_tensor_r()
    assert TensorElement.one(F2).in_r_tensor_r()


# -- text form -------------------------------------------------------------


def test_format_word_examples():
    assert format_word(EMPTY_WORD) == "1"
    assert format_word(xw(1, 2)) == "x[1,2]"
    assert format_word(yw(3)) == "y[3]"
    assert format_word(Word((1,), (2, 2))) == "x[1]y[2,2]"


def test_format_element_examples():
    assert format_element(Element.zero(F3)) == "0"
    assert format_element(Element.one(F3)) == "1"
    e = Element(F3, {xw(2): 1, xw(1, 1): 2})
    assert format_element(e) == "x[2] + 2*x[1,1]"
    e2 = Element(F3, {yw(2): 1, yw(1, 1): 2})
    assert format_element(e2) == "2*y[1,1] + y[2]"


def test_format_tensor_examples():
    t = TensorElement(F2, {(EMPTY_WORD, xw(1)): 1, (xw(1), EMPTY_WORD): 1})
    assert format_tensor(t) == "1 (x) x[1] + x[1] (x) 1"
    assert format_tensor(TensorElement.zero(F2)) == "0"


def test_parse_word_examples():
    assert parse_word("1") == EMPTY_WORD
    assert parse_word("x[1,2]") == xw(1, 2)
    assert parse_word(" x[1] y[2,3] ") == Word((1,), (2, 3))
    assert parse_word("y[4]") == yw(4)


def test_parse_element_examples():
    assert parse_element("x[2] + 2*x[1,1]", F3) == Element(F3, {xw(2): 1, xw(1, 1): 2})
    assert parse_element("x[1] - x[1]", F3).is_zero()
    assert parse_element("-x[1]", F3) == Element.from_word(F3, xw(1), -1)
    assert parse_element("3*x[1] + x[1]", F3) == Element.from_word(F3, xw(1))
    assert parse_element("1", F3) == Element.one(F3)
    assert parse_element("2*1 + x[1]", F3) == Element(F3, {EMPTY_WORD: 2, xw(1): 1})


def test_parse_tensor_examples():
    t = parse_tensor("1 (x) x[1] + x[1] (x) 1", F2)
    assert t.coeff(EMPTY_WORD, xw(1)) == 1
    assert t.coeff(xw(1), EMPTY_WORD) == 1
    t2 = parse_tensor("2*x[1]y[2] (x) y[3]", F3)
    assert t2.coeff(Word((1,), (2,)), yw(3)) == 2


@pytest.mark.parametrize(
    "text",
    ["", "x[", "x[0]", "x[1", "x[1,]", "2x[1]", "x[1] +", "x[1] x", "z[1]", "x[1]]"],
)
def test_parse_element_rejects_malformed_input(text):
    with pytest.raises(ParseError):
        parse_element(text, F2)


def test_parse_error_carries_position_and_expectation():
    with pytest.raises(ParseError) as exc:
        parse_word("x[1")
    err = exc.value
    assert err.pos == 3
    assert "']'" in err.expected
    assert str(err) == "parse error at position 3: expected ']'"
    with pytest.raises(ParseError) as exc:
        parse_word("x[0]")
    assert exc.value.expected == "an index entry >= 1"


def test_parse_error_is_a_value_error():
    assert issubclass(ParseError, ValueError)


# -- JSON form -------------------------------------------------------------


def test_element_json_shape():
    e = Element(F3, {Word((1,), (2,)): 2})
    assert element_to_json(e) == [{"coeff": 2, "x": [1], "y": [2]}]
    assert element_from_json(element_to_json(e), F3) == e
    assert element_to_json(Element.zero(F3)) == []
    assert element_from_json([], F3).is_zero()


def test_tensor_json_shape():
    t = TensorElement.from_pair(F3, xw(1), yw(2), 2)
    doc = tensor_to_json(t)
    assert doc == [{"coeff": 2, "left": {"x": [1], "y": []}, "right": {"x": [], "y": [2]}}]
    assert tensor_from_json(doc, F3) == t


# -- random round-trips ----------------------------------------------------

indices = st.lists(st.integers(min_value=1, max_value=5), min_size=0, max_size=3).map(tuple)
words = st.builds(Word, indices, indices)


def elements(field):
    return st.dictionaries(words, st.integers(min_value=0, max_value=field.p - 1),
                           min_size=0, max_size=5).map(lambda d: Element(field, d))


def tensors(field):
    return st.dictionaries(st.tuples(words, words),
                           st.integers(min_value=0, max_value=field.p - 1),
                           min_size=0, max_size=4).map(lambda d: TensorElement(field, d))


@settings(max_examples=300, deadline=None)
@given(elements(F5))
def test_element_text_roundtrip(e):
    if e.is_zero():
        return  # the zero element prints as '0', which is not an input form
    assert parse_element(format_element(e), F5) == e


@settings(max_examples=300, deadline=None)
@given(elements(F3))
def test_element_json_roundtrip(e):
    assert element_from_json(element_to_json(e), F3) == e


@settings(max_examples=200, deadline=None)
@given(tensors(F5))
def test_tensor_text_roundtrip(t):
    if t.is_zero():
        return
    assert parse_tensor(format_tensor(t), F5) == t


@settings(max_examples=200, deadline=None)
@given(tensors(F3))
def test_tensor_json_roundtrip(t):
    assert tensor_from_json(tensor_to_json(t), F3) == t


@settings(max_examples=200, deadline=None)
@given(elements(F5), elements(F5), st.integers(min_value=-6, max_value=6))
def test_element_module_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b).scale(c) == a.scale(c) + b.scale(c)
    assert a - a == Element.zero(F5)
    assert a.scale(c) == c * a
