"""
Small permutation groups given by generators.

Permutations are tuples ``p`` with ``p[i]`` the image of point ``i``
(0-based).  Products are read left to right: ``compose(p, q)`` applies ``p``
first, matching how words act on cosets from the right.  Everything here is
brute force over the full element list, which is fine for the group orders
this package meets (a few hundred at most).
"""

from collections import deque


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(q[i] for i in p)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def commutator(p, q):
    """[p, q] = p^-1 q^-1 p q, same convention as for words."""
    return compose(compose(inverse(p), inverse(q)), compose(p, q))


def check_perm(p, n=None):
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {list(p)}")
    if n is not None and len(p) != n:
        raise ValueError(f"permutation {list(p)} does not act on {n} points")


def evaluate(word, images, n):
    """Image of a signed-letter word under generator images."""
    inverses = {}
    g = identity(n)
    for x in word:
        i = abs(x) - 1
        if x > 0:
            g = compose(g, images[i])
        else:
            if i not in inverses:
                inverses[i] = inverse(images[i])
            g = compose(g, inverses[i])
    return g


def closure(gens, n):
    """All elements of the group generated by ``gens``, in BFS order from the identity."""
    e = identity(n)
    seen = {e}
    order = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                order.append(h)
                queue.append(h)
    return order


def is_transitive(gens, n):
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for s in gens:
            j = s[i]
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def derived_subgroup(elements, n):
    """Subgroup generated by all commutators of pairs of elements."""
    comms = {commutator(g, h) for g in elements for h in elements}
    comms.discard(identity(n))
    return closure(sorted(comms), n)


def derived_subgroup_normal_closure(gens, n):
    """Normal closure of the commutators of the generators.

    Computes the same subgroup as :func:`derived_subgroup` by a different
    route, so the two can check each other.
    """
    group = closure(gens, n)
    seeds = {commutator(g, h) for g in gens for h in gens}
    conj = {compose(compose(inverse(x), c), x) for c in seeds for x in group}
    conj.discard(identity(n))
    return closure(sorted(conj), n)


def derived_series(gens, n, max_steps=64):
    """Element sets of G = G_0 > G_1 > ... until the series stabilizes."""
    series = [frozenset(closure(gens, n))]
    for _ in range(max_steps):
        nxt = frozenset(derived_subgroup(series[-1], n))
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def derived_length(gens, n):
    """Derived length, or None when the group is not solvable."""
    series = derived_series(gens, n)
    if len(series[-1]) != 1:
        return None
    return len(series) - 1


def is_solvable(gens, n):
    return derived_length(gens, n) is not None


def is_perfect(gens, n):
    group = closure(gens, n)
    return len(derived_subgroup(group, n)) == len(group)


def cycles_to_perm(cycles, n):
    """Build a permutation from 1-based cycles, e.g. [(1, 2, 3)]."""
    p = list(range(n))
    for cyc in cycles:
        for k, a in enumerate(cyc):
            p[a - 1] = cyc[(k + 1) % len(cyc)] - 1
    return tuple(p)


class CayleyTable:
    """Dense multiplication table of a small permutation group.

    Elements are indexed by position in BFS order from the identity
    (index 0).  Used to evaluate many words quickly during hom search.
    """

    def __init__(self, gens, n):
        self.n = n
        self.elements = closure(gens, n)
        self.index = {g: k for k, g in enumerate(self.elements)}
        m = len(self.elements)
        self.mul = [[self.index[compose(g, h)] for h in self.elements] for g in self.elements]
        self.inv = [self.index[inverse(g)] for g in self.elements]
        self.order = m

    def evaluate(self, word, images):
        """``images`` maps generator number (1-based) to element index."""
        mul, inv = self.mul, self.inv
        g = 0
        for x in word:
            g = mul[g][images[x] if x > 0 else inv[images[-x]]]
        return g

    def subgroup(self, gen_indices):
        seen = {0}
        queue = deque([0])
        while queue:
            g = queue.popleft()
            for s in gen_indices:
                h = self.mul[g][s]
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return frozenset(seen)
