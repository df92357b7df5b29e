import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmg.errors import WordArityError, WordSyntaxError
from lmg.words import Gen, Stable, Word, commutator, parse_word


def test_parse_examples():
    assert parse_word("t x[2] t^-1", 1).letters == (Stable(1), Gen((2,)), Stable(-1))
    assert parse_word("x[1] x[2]", 1).letters == (Gen((3,)),)
    assert parse_word("x[1,2]^2 t^2", 2).letters == (Gen((2, 4)), Stable(1), Stable(1))


def test_empty_and_zero():
    assert parse_word("", 1) == Word()
    assert parse_word("x[0]", 1) == Word()
    assert parse_word("x[1] x[-1]", 1) == Word()
    assert parse_word("t^0", 1) == Word()


def test_no_stable_cancellation():
    assert len(parse_word("t t^-1", 1)) == 2


def test_syntax_error_position():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("t y", 1)
    assert info.value.position == 2
    with pytest.raises(WordSyntaxError):
        parse_word("x[a]", 1)
    with pytest.raises(WordSyntaxError):
        parse_word("x[1", 1)


def test_arity():
    with pytest.raises(WordArityError) as info:
        parse_word("t x[1,2]", 1)
    assert info.value.position == 2


def test_str_roundtrip_examples():
    w = parse_word("t^-2 x[3,0] t x[1,-1]", 2)
    assert str(w) == "t^-2 x[3,0] t x[1,-1]"
    assert parse_word(str(w), 2) == w


def test_psi_and_inverse():
    w = parse_word("t^-2 x[3] t", 1)
    assert w.psi == -1
    assert w.inverse() == parse_word("t^-1 x[-3] t^2", 1)
    assert commutator(Word.gen([1]), Word.t()).letters == (Gen((1,)), Stable(1), Gen((-1,)), Stable(-1))


letters = st.one_of(
    st.builds(lambda a, b: Gen((a, b)), st.integers(-5, 5), st.integers(-5, 5)),
    st.sampled_from([Stable(1), Stable(-1)]),
)


@given(st.lists(letters, max_size=15))
def test_normal_form_invariants(ls):
    w = Word(ls)
    for a, b in zip(w.letters, w.letters[1:]):
        assert not (isinstance(a, Gen) and isinstance(b, Gen))
    assert Gen((0, 0)) not in w.letters
    assert parse_word(str(w), 2) == w
    assert w.inverse().inverse() == w
    assert (w * w.inverse()).psi == 0
