import pytest

from rigidsolv.errors import WordSyntaxError
from rigidsolv.words import (
    VarLetter,
    commutator,
    conjugate,
    free_reduce,
    invert,
    parse_letters,
    parse_word,
    power,
    word_to_str,
)


def test_parse_simple():
    assert parse_word("x1 x2 X1") == (1, 2, -1)
    assert parse_word("") == ()
    assert parse_word("  x3  ") == (3,)


def test_parse_no_whitespace_needed():
    assert parse_word("x1x2X1") == (1, 2, -1)


def test_commutator_sugar():
    assert parse_word("[x1,x2]") == (-1, -2, 1, 2)
    assert parse_word("[x1, x2 x1]") == (-1, -1, -2, 1, 2, 1)


def test_conjugation_sugar():
    assert parse_word("x1^x2") == (-2, 1, 2)
    assert parse_word("x1^{x2}") == (-2, 1, 2)
    assert parse_word("[x1,x2]^x1") == (-1, -1, -2, 1, 2, 1)


def test_power_sugar():
    assert parse_word("x1^3") == (1, 1, 1)
    assert parse_word("x1^-2") == (-1, -1)
    assert parse_word("(x1 x2)^-1") == (-2, -1)
    assert parse_word("(x1 x2)^2") == (1, 2, 1, 2)


def test_nested_sugar():
    # [[x1,x2],[x1,x2]^x1] expands through nesting
    inner = (-1, -2, 1, 2)
    expected = commutator(inner, conjugate(inner, (1,)))
    assert parse_word("[[x1,x2],[x1,x2]^{x1}]") == expected


def test_chained_conjugation_left_assoc():
    assert parse_word("x1^x2^x3") == conjugate(conjugate((1,), (2,)), (3,))


def test_variables_rejected_in_constant_words():
    with pytest.raises(WordSyntaxError):
        parse_word("$1 x1")


def test_parse_letters_with_variables():
    letters = parse_letters("$1 x2 ($2)^-1")
    assert letters == (VarLetter(1, 1), 2, VarLetter(2, -1))


def test_error_positions():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("x1 )")
    assert info.value.line == 1
    assert info.value.column == 4
    with pytest.raises(WordSyntaxError) as info:
        parse_word("x1 [x2", line=7)
    assert info.value.line == 7


def test_error_cases():
    for bad in ["x0", "y1", "x1^", "[x1]", "[x1,x2", "x1 ,", "5"]:
        with pytest.raises(WordSyntaxError):
            parse_word(bad)


def test_generator_range_check():
    assert parse_word("x2", ngens=2) == (2,)
    with pytest.raises(WordSyntaxError):
        parse_word("x3", ngens=2)


def test_free_reduce():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, 2, 1)) == (1, 2, 1)


def test_invert_power_roundtrip():
    w = (1, -2, 1)
    assert free_reduce(w + invert(w)) == ()
    assert power(w, 0) == ()
    assert power(w, -1) == invert(w)


def test_word_to_str_roundtrip():
    w = (1, -2, 3)
    assert parse_word(word_to_str(w)) == w
