"""
Finite solvable permutation groups used as targets for homomorphism search.
"""

from dataclasses import dataclass, field
from functools import cached_property

from . import perms


@dataclass(frozen=True)
class FiniteSolvableGroup:
    name: str
    degree: int
    generators: tuple
    _derived_length: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            perms.check_perm(g, self.degree)
        dl = perms.derived_length(gens, self.degree)
        if dl is None:
            raise ValueError(f"group {self.name} is not solvable")
        object.__setattr__(self, "_derived_length", dl)

    @classmethod
    def from_one_based(cls, name, lists):
        lists = [list(p) for p in lists]
        degree = len(lists[0]) if lists else 1
        return cls(name, degree, tuple(tuple(j - 1 for j in p) for p in lists))

    @property
    def derived_length(self):
        return self._derived_length

    @cached_property
    def table(self):
        return perms.CayleyTable(self.generators, self.degree)

    @property
    def order(self):
        return self.table.order

    def __hash__(self):
        return hash((self.name, self.degree, self.generators))


def _quaternion_generators():
    # elements +-1, +-i, +-j, +-k as (sign, unit); regular right action
    units = ["1", "i", "j", "k"]
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, u) for s in (1, -1) for u in units]
    pos = {e: n for n, e in enumerate(elements)}

    def right(g):
        out = []
        for s, u in elements:
            t, v = table[(u, g)]
            out.append(pos[(s * t, v)])
        return tuple(out)

    return (right("i"), right("j"))


def default_catalog():
    c = perms.cycles_to_perm
    return [
        FiniteSolvableGroup("1", 1, ()),
        FiniteSolvableGroup("Z2", 2, (c([(1, 2)], 2),)),
        FiniteSolvableGroup("Z3", 3, (c([(1, 2, 3)], 3),)),
        FiniteSolvableGroup("Z4", 4, (c([(1, 2, 3, 4)], 4),)),
        FiniteSolvableGroup("Z2xZ2", 4, (c([(1, 2), (3, 4)], 4), c([(1, 3), (2, 4)], 4))),
        FiniteSolvableGroup("S3", 3, (c([(1, 2)], 3), c([(1, 2, 3)], 3))),
        FiniteSolvableGroup("D4", 4, (c([(1, 2, 3, 4)], 4), c([(2, 4)], 4))),
        FiniteSolvableGroup("Q8", 8, _quaternion_generators()),
        FiniteSolvableGroup("Z6", 6, (c([(1, 2, 3, 4, 5, 6)], 6),)),
        FiniteSolvableGroup("A4", 4, (c([(1, 2, 3)], 4), c([(1, 2), (3, 4)], 4))),
        FiniteSolvableGroup("D6", 6, (c([(1, 2, 3, 4, 5, 6)], 6), c([(2, 6), (3, 5)], 6))),
        FiniteSolvableGroup("S4", 4, (c([(1, 2, 3, 4)], 4), c([(1, 2)], 4))),
    ]


def filter_by_order(catalog, order_bound):
    if order_bound is None:
        return list(catalog)
    return [g for g in catalog if g.order <= order_bound]
