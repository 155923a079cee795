import pytest
from hypothesis import given, strategies as st

from hdcoord.errors import InvalidWordError
from hdcoord.words import Word, abelianize, prefix_vector, suffix_vector


def W(s):
    return Word.parse(s)


@pytest.mark.parametrize(
    "g, word, expected",
    [
        (2, "c1 c3 -c1 -c3", (0, 0, 0, 0)),
        (1, "c1 c1 -c2", (2, -1)),
        (2, "", (0, 0, 0, 0)),
    ],
)
def test_abelianize(g, word, expected):
    assert abelianize(W(word), g) == expected


def test_abelianize_rejects_out_of_range_letter():
    with pytest.raises(InvalidWordError):
        abelianize(W("c1 c3"), 1)


@pytest.mark.parametrize("bad", ["c0", "x1", "c", "--c1"])
def test_bad_tokens(bad):
    with pytest.raises(InvalidWordError):
        Word.parse(bad)


@pytest.mark.parametrize("k, expected", [(0, (0, 0)), (2, (1, 1)), (3, (0, 1))])
def test_prefix_vector(k, expected):
    assert prefix_vector(W("c1 c2 -c1"), k, 1) == expected


@pytest.mark.parametrize("l, expected", [(1, (0, 2)), (3, (0, 0)), (0, (1, 2))])
def test_suffix_vector(l, expected):
    assert suffix_vector(W("c1 c2 c2"), l, 1) == expected


@pytest.mark.parametrize("fn", [prefix_vector, suffix_vector])
@pytest.mark.parametrize("i", [-1, 4])
def test_position_out_of_range(fn, i):
    with pytest.raises(IndexError):
        fn(W("c1 c2 c2"), i, 1)


def test_reduction_predicates():
    assert not W("c1 -c1 c2").is_freely_reduced()
    assert W("c1 c2 -c1").is_freely_reduced()
    assert not W("c1 c2 -c1").is_cyclically_reduced()
    assert W("c1 c2 c1").is_cyclically_reduced()
    assert W("c1").is_cyclically_reduced()


def test_str_round_trip():
    w = W("c1 -c4 c2")
    assert str(w) == "c1 -c4 c2"
    assert Word.parse(str(w)) == w


genus = st.integers(1, 4)


@st.composite
def words(draw):
    g = draw(genus)
    letters = draw(st.lists(st.tuples(st.integers(1, 2 * g), st.sampled_from([1, -1])), max_size=12))
    return g, Word(tuple(letters))


@given(words())
def test_word_times_inverse_abelianizes_to_zero(gw):
    g, w = gw
    assert abelianize(w * w.inverse(), g) == (0,) * (2 * g)


@given(words(), st.data())
def test_prefix_plus_suffix_is_whole(gw, data):
    g, w = gw
    total = abelianize(w, g)
    assert prefix_vector(w, len(w), g) == total
    assert suffix_vector(w, 0, g) == total
    k = data.draw(st.integers(0, len(w)))
    assert tuple(a + b for a, b in zip(prefix_vector(w, k, g), suffix_vector(w, k, g))) == total


@given(words(), st.integers(0, 20))
def test_rotation_preserves_abelianization(gw, n):
    g, w = gw
    assert abelianize(w.rotate(n), g) == abelianize(w, g)
