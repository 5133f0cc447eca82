import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixed_eulerian.core import (
    Division,
    InvalidComposition,
    InvalidDivision,
    NotAdmissible,
    admissible_elements_A,
    admissible_elements_B,
    check_composition,
    delete_A,
    delete_B,
    is_subdiagonal,
    is_superdiagonal,
    make_division,
    parse_composition,
)

from conftest import ref_admissible, ref_delete


@st.composite
def compositions(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    cuts = sorted(draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1)))
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def test_make_division_examples():
    assert make_division((1, 0, 2, 1, 1)).blocks == ((1,), (), (2, 3), (4,), (5,))
    assert make_division((4, 0, 0, 0)).blocks == ((1, 2, 3, 4), (), (), ())
    assert make_division((1, 1, 1)).blocks == ((1,), (2,), (3,))


@pytest.mark.parametrize("bad", [(1, 2), (0, 0), (), (3, -1, 1)])
def test_make_division_rejects(bad):
    with pytest.raises(InvalidComposition):
        make_division(bad)


def test_parse_composition_forms():
    assert parse_composition("1,0,2,1,1") == (1, 0, 2, 1, 1)
    assert parse_composition("10211") == (1, 0, 2, 1, 1)
    with pytest.raises(InvalidComposition):
        parse_composition("1,x")


def test_division_text_round_trip():
    d = Division.parse("1|-|2,3|4|5")
    assert d == make_division((1, 0, 2, 1, 1))
    assert str(d) == "1|-|2,3|4|5"


@pytest.mark.parametrize("text", ["2|1", "1,1|-", "1|-|-", "3,2"])
def test_division_invariants_enforced(text):
    with pytest.raises(InvalidDivision):
        Division.parse(text)


def test_admissible_A_examples():
    assert admissible_elements_A(make_division((1, 0, 2, 1, 1))) == {1, 2, 3, 4, 5}
    assert admissible_elements_A(make_division((5, 0, 0, 0, 0))) == {1}
    assert admissible_elements_A(Division(((1, 2), (), (), (3, 4)))) == {1, 4}


def test_delete_A_examples():
    d = make_division((1, 0, 2, 1, 1))
    assert delete_A(d, 2) == Division(((1,), (), (3, 4), (5,)))
    assert delete_A(Division(((1,), (), (4, 5))), 1) == Division(((), (4, 5)))
    assert delete_A(make_division((1, 1, 1)), 2) == Division(((1,), (3,)))


def test_example_deletion_chain():
    d = make_division((1, 0, 2, 1, 1))
    steps = []
    for s in (2, 3, 1, 5):
        d = delete_A(d, s)
        steps.append(str(d))
    assert steps == ["1|-|3,4|5", "1|-|4,5", "-|4,5", "4"]


def test_delete_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        delete_A(Division(((), (4, 5))), 4)
    with pytest.raises(NotAdmissible):
        delete_A(make_division((1, 1)), 7)
    with pytest.raises(NotAdmissible):
        delete_B(Division(((1, 2), ())), 2)


def test_admissible_B_examples():
    assert admissible_elements_B(Division(((), (1, 2)))) == {1, 2}
    assert admissible_elements_B(Division(((1, 2), ()))) == {1}
    assert admissible_elements_B(make_division((1, 1, 1))) == {1, 2, 3}


def test_delete_B_examples():
    d = Division(((), (1, 2)))
    assert delete_B(d, 1) == Division(((2,),))
    assert delete_B(d, 2) == Division(((1,),))
    assert delete_B(make_division((1, 0, 2, 1, 1)), 2) == Division(((1,), (), (3, 4), (5,)))


def test_delete_last_element_gives_empty_division():
    assert delete_A(make_division((1,)), 1).blocks == ()


def test_diagonal_examples():
    assert is_superdiagonal((2, 1, 0))
    assert not is_superdiagonal((0, 3, 0))
    assert is_superdiagonal((1, 1, 1)) and is_subdiagonal((1, 1, 1))
    assert is_subdiagonal((0, 1, 2)) and not is_subdiagonal((2, 1, 0))


@settings(max_examples=200, deadline=None)
@given(compositions(), st.sampled_from("AB"), st.data())
def test_deletion_matches_reference(c, kind, data):
    d = make_division(c)
    ref = [set(b) for b in d.blocks]
    admissible = (admissible_elements_A if kind == "A" else admissible_elements_B)(d)
    assert admissible == ref_admissible(ref, kind)
    s = data.draw(st.sampled_from(sorted(admissible)))
    out = (delete_A if kind == "A" else delete_B)(d, s)
    assert [set(b) for b in out.blocks] == ref_delete(ref, s, kind)
    # closure: the output re-validates and covers the ground set minus s
    assert Division(out.blocks).ground_set == tuple(t for t in d.ground_set if t != s)


@settings(max_examples=200, deadline=None)
@given(compositions(), st.data())
def test_deletion_preserves_diagonality(c, data):
    d = make_division(c)
    s = data.draw(st.sampled_from(sorted(admissible_elements_A(d))))
    out = delete_A(d, s).sizes
    if len(c) > 1:
        if is_superdiagonal(c):
            assert is_superdiagonal(out)
        if is_subdiagonal(c):
            assert is_subdiagonal(out)


@settings(max_examples=200, deadline=None)
@given(compositions(), st.integers(0, 50))
def test_deletion_sizes_are_label_independent(c, offset):
    a = make_division(c)
    b = Division(tuple(tuple(s * 3 + offset for s in block) for block in a.blocks))
    for s in sorted(admissible_elements_A(a)):
        assert delete_A(a, s).sizes == delete_A(b, s * 3 + offset).sizes


@settings(max_examples=200, deadline=None)
@given(compositions())
def test_type_A_admissible_are_type_B_admissible(c):
    d = make_division(c)
    assert admissible_elements_A(d) <= admissible_elements_B(d)


def test_check_composition_returns_tuple():
    assert check_composition([0, 2]) == (0, 2)
