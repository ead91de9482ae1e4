"""
Finitely generated subgroups of a free group as folded core graphs.

A :class:`SubgroupGraph` stores one row per vertex with ``2 * rank`` slots,
ordered a, A, b, B, ...; slot entries are target vertices or -1.  Vertices
are numbered in BFS order from the basepoint (vertex 0) using that same
slot order, so two graphs of the same subgroup have identical tables no
matter how the generators were listed or folded.
"""

from collections import deque
from dataclasses import dataclass
import math
import threading

from . import perms
from .words import EMPTY, Alphabet, inv, mul, reduce

INFINITE = math.inf


def _slot(x):
    return 2 * (abs(x) - 1) + (0 if x > 0 else 1)


def _letter(slot):
    i = slot // 2 + 1
    return i if slot % 2 == 0 else -i


@dataclass(frozen=True)
class FiniteQuotientMap:
    """A map from the free group onto a permutation group.

    ``images[i]`` is the permutation (0-based image list) of generator i+1.
    """

    images: tuple

    def __post_init__(self):
        if not self.images:
            raise ValueError("need at least one generator image")
        n = len(self.images[0])
        for p in self.images:
            perms.check_perm(p, n)

    @classmethod
    def from_lists(cls, lists, one_based=True):
        shift = 1 if one_based else 0
        return cls(tuple(tuple(int(j) - shift for j in p) for p in lists))

    @property
    def degree(self):
        return len(self.images[0])

    @property
    def rank(self):
        return len(self.images)

    def is_transitive(self):
        return perms.is_transitive(self.images, self.degree)

    def elements(self):
        return perms.closure(self.images, self.degree)

    def order(self):
        return len(self.elements())

    def evaluate(self, word):
        return perms.evaluate(word, self.images, self.degree)


class SubgroupGraph:
    def __init__(self, rank, table, generators):
        self.alphabet = Alphabet(rank)
        self.rank = rank
        self.table = table
        self.generators = [tuple(g) for g in generators]
        self._tree = self._spanning_tree()
        self._lock = threading.Lock()
        self.transversal = {(v, EMPTY): self._tree[v] for v in range(len(table))}

    # construction

    @classmethod
    def from_edges(cls, rank, n_vertices, edges, generators, base=0):
        """Fold, trim to the core and canonically renumber a labelled graph.

        ``edges`` is an iterable of (u, x, v) meaning u --x--> v.
        """
        adj = [dict() for _ in range(n_vertices)]
        alive = [True] * n_vertices

        def add(u, x, v):
            adj[u].setdefault(x, set()).add(v)
            adj[v].setdefault(-x, set()).add(u)

        def remove(u, x, v):
            adj[u].get(x, set()).discard(v)
            adj[v].get(-x, set()).discard(u)

        for u, x, v in edges:
            add(u, x, v)

        def merge(keep, gone):
            moved = [(x, t) for x, ts in adj[gone].items() for t in ts]
            for x, t in moved:
                remove(gone, x, t)
            for x, t in moved:
                add(keep, x, keep if t == gone else t)
            adj[gone] = {}
            alive[gone] = False

        # union-find so queued vertices can be redirected after merges
        parent = list(range(n_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        work = list(range(n_vertices))
        while work:
            v = find(work.pop())
            if not alive[v]:
                continue
            for x in list(adj[v]):
                ts = adj[v].get(x, ())
                if len(ts) > 1:
                    a, b = sorted(ts)[:2]
                    if b == base:
                        a, b = b, a
                    merge(a, b)
                    parent[b] = a
                    work.append(v)
                    work.append(a)
                    break

        base = find(base)

        # trim hanging trees
        def degree(v):
            return sum(len(ts) for ts in adj[v].values())

        stack = [v for v in range(n_vertices) if alive[v] and v != base]
        while stack:
            v = stack.pop()
            if not alive[v] or v == base or degree(v) > 1:
                continue
            for x, ts in list(adj[v].items()):
                for t in list(ts):
                    remove(v, x, t)
                    stack.append(t)
            alive[v] = False

        # canonical BFS renumbering
        new = {base: 0}
        order = [base]
        queue = deque([base])
        while queue:
            v = queue.popleft()
            for s in range(2 * rank):
                for t in adj[v].get(_letter(s), ()):
                    if t not in new:
                        new[t] = len(order)
                        order.append(t)
                        queue.append(t)
        table = []
        for v in order:
            row = [-1] * (2 * rank)
            for x, ts in adj[v].items():
                for t in ts:
                    row[_slot(x)] = new[t]
            table.append(row)
        return cls(rank, table, generators)

    def _spanning_tree(self):
        """BFS tree words from the basepoint, letter order a, A, b, B, ..."""
        words = {0: EMPTY}
        self._parent = {0: None}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for s, t in enumerate(self.table[v]):
                if t >= 0 and t not in words:
                    words[t] = words[v] + (_letter(s),)
                    self._parent[t] = (v, _letter(s))
                    queue.append(t)
        return [words[v] for v in range(len(self.table))]

    # queries

    @property
    def n_vertices(self):
        return len(self.table)

    def n_edges(self):
        return sum(1 for row in self.table for s in range(0, len(row), 2) if row[s] >= 0)

    def graph_rank(self):
        return self.n_edges() - self.n_vertices + 1

    def canonical_form(self):
        return tuple(tuple(row) for row in self.table)

    def read(self, w, start=0):
        """Follow ``w`` from ``start``; return (end vertex, unread suffix)."""
        v = start
        for k, x in enumerate(w):
            t = self.table[v][_slot(x)]
            if t < 0:
                return v, tuple(w[k:])
            v = t
        return v, EMPTY

    def member(self, w):
        v, rest = self.read(w)
        return v == 0 and not rest

    def is_trivial(self):
        return self.n_vertices == 1 and all(t < 0 for t in self.table[0])

    def index(self):
        if all(t >= 0 for row in self.table for t in row):
            return self.n_vertices
        return INFINITE

    def coset_representative(self, w):
        """Canonical transversal word of the right coset C*w."""
        v, rest = self.read(w)
        key = (v, rest)
        with self._lock:
            t = self.transversal.get(key)
            if t is None:
                t = self._tree[v] + rest
                self.transversal[key] = t
        return t

    def coset_decompose(self, w):
        """Split ``w = c * t`` with c in C and t the canonical representative of Cw."""
        t = self.coset_representative(w)
        return mul(w, inv(t)), t

    def free_basis(self):
        """Basis from the non-tree edges of the BFS spanning tree."""
        basis = []
        tree = self._tree
        for u, row in enumerate(self.table):
            for s in range(0, 2 * self.rank, 2):
                v = row[s]
                if v < 0:
                    continue
                x = _letter(s)
                if self._parent.get(v) == (u, x) or self._parent.get(u) == (v, -x):
                    continue
                basis.append(mul(tree[u] + (x,), inv(tree[v])))
        return basis

    def is_normal(self):
        if self.is_trivial():
            return True
        if self.index() == INFINITE:
            # f.g. nontrivial normal subgroups of free groups have finite index
            # (rank 1 never gets here: nontrivial subgroups of Z have finite index)
            return False
        gens = self.generators or self.free_basis()
        for c in gens:
            for x in self.alphabet.letters():
                if not self.member(mul((-x,), c, (x,))):
                    return False
        return True

    def permutation_action(self):
        """Generator permutations on the vertices; only for finite index."""
        if self.index() == INFINITE:
            raise ValueError("subgroup has infinite index")
        return tuple(tuple(row[2 * i] for row in self.table) for i in range(self.rank))

    def __repr__(self):
        return f"SubgroupGraph(rank={self.rank}, vertices={self.n_vertices}, index={self.index()})"


def build_subgroup_graph(generators, alphabet):
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    gens = [alphabet.reduce(g) for g in generators]
    gens = [g for g in gens if g]
    edges = []
    n = 1
    for g in gens:
        prev = 0
        for k, x in enumerate(g):
            if k == len(g) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            edges.append((prev, x, nxt))
            prev = nxt
    return SubgroupGraph.from_edges(alphabet.rank, n, edges, gens)


def member(g, w):
    return g.member(w)


def index(g):
    return g.index()


def coset_decompose(g, w):
    return g.coset_decompose(w)


def is_normal(g, alphabet=None):
    return g.is_normal()


def free_basis(g):
    return g.free_basis()


def kernel_of_finite_quotient(q, alphabet=None):
    """Stallings graph of the kernel of ``q``: the Cayley graph of its image."""
    if alphabet is not None:
        rank = alphabet if isinstance(alphabet, int) else alphabet.rank
        if rank != q.rank:
            raise ValueError(f"quotient map has {q.rank} generator images, alphabet rank is {rank}")
    if not q.is_transitive():
        raise ValueError("permutation images do not act transitively")
    elements = q.elements()
    pos = {g: k for k, g in enumerate(elements)}
    edges = []
    for k, g in enumerate(elements):
        for i, p in enumerate(q.images):
            edges.append((k, i + 1, pos[perms.compose(g, p)]))
    graph = SubgroupGraph.from_edges(q.rank, len(elements), edges, [])
    graph.generators = graph.free_basis()
    return graph
