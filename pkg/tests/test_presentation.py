import pytest

from freedouble.presentation import parse_catalog, parse_presentation
from freedouble.words import EMPTY


def test_subgroup_presentation():
    p = parse_presentation('rank = 2\nsubgroup = ["aa", "b", "abA"]\n')
    g = p.subgroup_graph()
    assert g.index() == 2 and not g.member((1, 2))
    assert p.double().rank == 2


def test_perm_presentation_degree_forms():
    body = 'rank = 2\nperm.a = [2, 3, 4, 5, 1]\nperm.b = [2, 3, 1, 4, 5]\n'
    for degree in ("", "degree = 5\n", "degree = 60\n"):
        p = parse_presentation(body + degree)
        assert p.quotient.order() == 60
    assert parse_presentation(body).subgroup_graph().index() == 60
    with pytest.raises(ValueError):
        parse_presentation(body + "degree = 7\n")


def test_bar_images():
    p = parse_presentation('rank = 2\nsubgroup = ["b"]\nbar = ["ab", "b"]\n')
    D = p.double()
    assert D.apply_bar((1,)) == (1, 2)
    with pytest.raises(ValueError):
        parse_presentation('rank = 2\nsubgroup = ["b"]\nbar = ["ab"]\n')
    with pytest.raises(ValueError):
        parse_presentation('rank = 2\nsubgroup = ["b"]\nbar = ["aa", "b"]\n').double()


@pytest.mark.parametrize(
    "text",
    [
        'subgroup = ["a"]',
        'rank = 0\nsubgroup = []',
        'rank = 2',
        'rank = 2\nsubgroup = ["a"]\nperm.a = [1]\nperm.b = [1]',
        'rank = 2\nsubgroup = ["ac"]',
        'rank = 2\nsubgroup = ["a"]\ncolour = "red"',
        'rank = 2\nperm.a = [2, 1]',
        'rank = 2\nperm.a = [2, 1, 3]\nperm.b = [2, 1, 3]',
        'rank = = 2',
    ],
)
def test_bad_presentations(text):
    with pytest.raises(ValueError):
        parse_presentation(text).subgroup_graph()


def test_empty_subgroup_is_free_product():
    p = parse_presentation("rank = 2\nsubgroup = []\n")
    assert p.subgroup_graph().member(EMPTY) and p.subgroup_graph().is_trivial()


def test_catalog_file():
    groups = parse_catalog("[Z2]\nperm.a = [2, 1]\n\n[S3]\nperm.a = [2, 1, 3]\nperm.b = [2, 3, 1]\n")
    assert [(g.name, g.order) for g in groups] == [("Z2", 2), ("S3", 6)]
    with pytest.raises(ValueError):
        parse_catalog("[A5]\nperm.a = [2, 3, 4, 5, 1]\nperm.b = [2, 3, 1, 4, 5]\n")
    with pytest.raises(ValueError):
        parse_catalog("[X]\norder = 3\n")
