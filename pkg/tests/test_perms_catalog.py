import pytest

from freedouble import perms
from freedouble.catalog import FiniteSolvableGroup, default_catalog, filter_by_order
from freedouble.stallings import FiniteQuotientMap

from oracles import group_closure, perm_eval


def test_catalog_orders():
    orders = [g.order for g in default_catalog()]
    assert orders == [1, 2, 3, 4, 4, 6, 8, 8, 6, 12, 12, 24]
    for g in default_catalog():
        gens = g.generators or (tuple(range(g.degree)),)
        assert len(group_closure(list(gens))) == g.order


def test_catalog_derived_lengths():
    lengths = {g.name: g.derived_length for g in default_catalog()}
    assert lengths["1"] == 0 and lengths["Z2"] == 1 and lengths["S3"] == 2
    assert lengths["Q8"] == 2 and lengths["A4"] == 2 and lengths["S4"] == 3


def test_quaternion_is_not_dihedral():
    q8 = next(g for g in default_catalog() if g.name == "Q8")
    elems = group_closure(list(q8.generators))
    involutions = [p for p in elems if p != tuple(range(8)) and perms.compose(p, p) == tuple(range(8))]
    assert len(involutions) == 1


def test_non_solvable_rejected():
    with pytest.raises(ValueError):
        FiniteSolvableGroup.from_one_based("A5", [[2, 3, 4, 5, 1], [2, 3, 1, 4, 5]])


def test_a5_perfect_and_z2_not():
    a5 = FiniteQuotientMap.from_lists([[2, 3, 4, 5, 1], [2, 3, 1, 4, 5]])
    assert perms.is_perfect(a5.images, 5)
    assert perms.derived_length(a5.images, 5) is None
    assert not perms.is_perfect(((1, 0),), 2)
    assert perms.derived_subgroup_normal_closure(a5.images, 5)
    assert len(perms.closure(perms.derived_subgroup_normal_closure(a5.images, 5), 5)) == 60


def test_filter_by_order():
    assert [g.name for g in filter_by_order(default_catalog(), 4)] == ["1", "Z2", "Z3", "Z4", "Z2xZ2"]
    assert len(filter_by_order(default_catalog(), None)) == 12


def test_evaluate_matches_oracle():
    imgs = [(1, 2, 0, 3), (1, 0, 3, 2)]
    for w in [(1,), (1, 2, -1), (-2, -1, 2, 2), ()]:
        assert perms.evaluate(w, imgs, 4) == perm_eval(w, imgs)


def test_cayley_table():
    s3 = next(g for g in default_catalog() if g.name == "S3")
    t = s3.table
    assert t.order == 6
    for i in range(6):
        assert t.mul[i][t.inv[i]] == 0
    ma = {1: 1, 2: 2}
    g = t.evaluate((1, 2, -1), ma)
    expected = perm_eval((1, 2, -1), [t.elements[1], t.elements[2]])
    assert t.elements[g] == expected
