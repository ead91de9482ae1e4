"""
Presentation and catalog files.

Both are flat TOML::

    rank = 2
    subgroup = ["aa", "b", "abA"]
    bar = ["ab", "b"]           # optional generator images

or, with C the kernel of a map onto a permutation group::

    rank = 2
    degree = 5
    perm.a = [2, 3, 4, 5, 1]
    perm.b = [2, 3, 1, 4, 5]

A catalog file holds one table per group::

    [S3]
    perm.a = [2, 1, 3]
    perm.b = [2, 3, 1]
"""

from dataclasses import dataclass
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .catalog import FiniteSolvableGroup
from .doubles import DoubleGroup
from .stallings import FiniteQuotientMap, build_subgroup_graph, kernel_of_finite_quotient
from .words import Alphabet, parse_word

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _perm_block(perm, rank=None):
    if not isinstance(perm, dict) or not perm:
        raise ValueError("perm must be a table of generator images, e.g. perm.a = [2, 1]")
    names = sorted(perm, key=_LETTERS.index)
    expected = list(_LETTERS[: rank if rank is not None else len(names)])
    if names != expected:
        raise ValueError(f"perm images must be given for generators {expected}, got {names}")
    return [perm[k] for k in names]


@dataclass
class Presentation:
    rank: int
    subgroup: list = None
    bar: list = None
    quotient: FiniteQuotientMap = None

    @property
    def alphabet(self):
        return Alphabet(self.rank)

    def subgroup_graph(self):
        if self.quotient is not None:
            return kernel_of_finite_quotient(self.quotient, self.rank)
        return build_subgroup_graph(self.subgroup, self.alphabet)

    def double(self):
        if self.quotient is not None:
            graph = self.subgroup_graph()
            return DoubleGroup(self.alphabet, graph.generators, self.bar, cgraph=graph)
        return DoubleGroup(self.alphabet, self.subgroup, self.bar)


def parse_presentation(text):
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ValueError(f"bad presentation file: {e}") from None
    if "rank" not in data:
        raise ValueError("presentation needs 'rank'")
    rank = data["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    has_sub = "subgroup" in data
    has_quo = "perm" in data
    if has_sub == has_quo:
        raise ValueError("exactly one of 'subgroup' or 'perm.*' must define C")
    pres = Presentation(rank)
    if has_sub:
        pres.subgroup = [parse_word(s, rank) for s in data["subgroup"]]
    else:
        q = FiniteQuotientMap.from_lists(_perm_block(data["perm"], rank))
        degree = data.get("degree")
        # degree may name the point count or the order of the image group
        if degree is not None and degree not in (q.degree, q.order()):
            raise ValueError(f"degree {degree} matches neither the {q.degree} points nor the group order {q.order()}")
        pres.quotient = q
    if "bar" in data:
        if len(data["bar"]) != rank:
            raise ValueError(f"bar needs {rank} images, got {len(data['bar'])}")
        pres.bar = [parse_word(s, rank) for s in data["bar"]]
    unknown = set(data) - {"rank", "subgroup", "bar", "perm", "degree"}
    if unknown:
        raise ValueError(f"unknown keys in presentation: {sorted(unknown)}")
    return pres


def load_presentation(path):
    with open(path, encoding="utf-8") as f:
        return parse_presentation(f.read())


def parse_catalog(text):
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ValueError(f"bad catalog file: {e}") from None
    groups = []
    for name, block in data.items():
        if not isinstance(block, dict) or "perm" not in block:
            raise ValueError(f"catalog entry {name!r} needs perm.* images")
        lists = _perm_block(block["perm"])
        groups.append(FiniteSolvableGroup.from_one_based(name, lists))
    return groups


def load_catalog(path):
    with open(path, encoding="utf-8") as f:
        return parse_catalog(f.read())
