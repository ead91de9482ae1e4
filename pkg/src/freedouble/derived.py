"""
Word problem in the quotients F / F^(n) of a free group by its derived series.

``F^(0) = F`` and ``F^(n+1) = [F^(n), F^(n)]``.  Membership of a word in
``F^(n)`` is decided with Fox derivatives: for a normal subgroup N, a word
lies in ``[N, N]`` exactly when it lies in N and all of its Fox derivatives
vanish in the integral group ring of F/N.  Recursing on ``N = F^(n-1)``
gives a decision procedure whose cost grows exponentially in n, so depth is
capped by ``max_level``.

:class:`MagnusMatrix` is a separate route for level 2: the metabelian
quotient ``F / F''`` embeds in 2x2 upper triangular matrices over Laurent
polynomials, and the tests use it to cross-check the Fox route.
"""

from functools import lru_cache

from .errors import BudgetError
from .words import EMPTY, format_word, inv, mul

MAX_LEVEL = 4


def exponent_vector(w, rank):
    v = [0] * rank
    for x in w:
        if abs(x) > rank:
            raise ValueError(f"letter {x} out of range for rank {rank}")
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


def _abelian_key(w):
    counts = {}
    for x in w:
        counts[abs(x)] = counts.get(abs(x), 0) + (1 if x > 0 else -1)
    return tuple(sorted((i, c) for i, c in counts.items() if c))


class GroupRingElement:
    """Finite integer combination of words, compared letter-for-letter.

    Equality (``==``) is equality in the group ring of the free group.
    Comparison in a derived quotient goes through :func:`ring_is_zero`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in dict(terms).items():
                self._add_term(tuple(w), c)

    def _add_term(self, w, c):
        c = self.terms.get(w, 0) + c
        if c:
            self.terms[w] = c
        else:
            self.terms.pop(w, None)

    def __add__(self, other):
        out = GroupRingElement(self.terms)
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def left_mul(self, u):
        """u * self for a group element u."""
        out = GroupRingElement()
        for w, c in self.terms.items():
            out._add_term(mul(u, w), c)
        return out

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{format_word(w)}")
        return " ".join(parts)

    def __repr__(self):
        return f"GroupRingElement({str(self)})"


def fox_derivative(w, i, rank=None):
    """Fox derivative of ``w`` with respect to generator ``i``."""
    if i < 1 or (rank is not None and i > rank):
        raise ValueError(f"generator index {i} out of range")
    out = GroupRingElement()
    prefix = EMPTY
    for x in w:
        if x == i:
            out._add_term(prefix, 1)
        prefix_next = mul(prefix, (x,))
        if x == -i:
            out._add_term(prefix_next, -1)
        prefix = prefix_next
    return out


def _check_level(level, max_level):
    if level < 0:
        raise ValueError(f"derived level must be non-negative, got {level}")
    if level > max_level:
        raise BudgetError(f"derived level {level} exceeds budget {max_level}")


def ring_is_zero(e, level, max_level=MAX_LEVEL):
    """Is ``e`` zero in the group ring of F / F^(level)?"""
    _check_level(level, max_level)
    if not e.terms:
        return True
    if level == 0:
        return sum(e.terms.values()) == 0
    if level == 1:
        sums = {}
        for w, c in e.terms.items():
            k = _abelian_key(w)
            sums[k] = sums.get(k, 0) + c
        return not any(sums.values())
    classes = []  # [representative, coefficient sum]
    for w, c in e.sorted_terms():
        for cls in classes:
            if derived_eq(cls[0], w, level, max_level):
                cls[1] += c
                break
        else:
            classes.append([w, c])
    return not any(c for _, c in classes)


@lru_cache(maxsize=200_000)
def _in_derived(w, level, max_level):
    if level == 0:
        return True
    if _abelian_key(w):
        return False
    if level == 1:
        return True
    if not _in_derived(w, level - 1, max_level):
        return False
    gens = sorted({abs(x) for x in w})
    return all(ring_is_zero(fox_derivative(w, i), level - 1, max_level) for i in gens)


def in_derived(w, level, max_level=MAX_LEVEL):
    """Does the reduced word ``w`` lie in the ``level``-th derived subgroup?"""
    _check_level(level, max_level)
    return _in_derived(tuple(w), level, max_level)


def derived_eq(u, v, level, max_level=MAX_LEVEL):
    return in_derived(mul(u, inv(v)), level, max_level)


def least_level_outside(w, max_level=MAX_LEVEL):
    """Smallest n with w not in F^(n), or None if w is in F^(max_level)."""
    for n in range(1, max_level + 1):
        if not in_derived(w, n, max_level):
            return n
    return None


# Magnus embedding oracle for level 2


class LaurentPolynomial:
    """Sparse Laurent polynomial: exponent vector -> integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    def shift(self, exps):
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPolynomial(
            {tuple(a + b for a, b in zip(k, exps)): c for k, c in self.coeffs.items()}
        )

    def key(self):
        return tuple(sorted(self.coeffs.items()))

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.key())

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*X^{list(k)}" for k, c in self.key())


class MagnusMatrix:
    """The matrix [[X^diagonal, sum_i upper[i] t_i], [0, 1]].

    ``diagonal`` is an exponent vector in Z^rank; ``upper`` holds one Laurent
    polynomial per generator (the coefficient of the free module basis t_i).
    """

    __slots__ = ("diagonal", "upper")

    def __init__(self, diagonal, upper):
        self.diagonal = tuple(diagonal)
        self.upper = tuple(upper)

    @classmethod
    def identity(cls, rank):
        return cls((0,) * rank, (LaurentPolynomial(),) * rank)

    @classmethod
    def letter(cls, x, rank):
        i = abs(x) - 1
        e = tuple(1 if k == i else 0 for k in range(rank))
        upper = [LaurentPolynomial()] * rank
        if x > 0:
            upper[i] = LaurentPolynomial({(0,) * rank: 1})
            return cls(e, upper)
        neg = tuple(-a for a in e)
        upper[i] = LaurentPolynomial({neg: -1})
        return cls(neg, upper)

    def __mul__(self, other):
        diagonal = tuple(a + b for a, b in zip(self.diagonal, other.diagonal))
        upper = tuple(p + q.shift(self.diagonal) for p, q in zip(self.upper, other.upper))
        return MagnusMatrix(diagonal, upper)

    def is_identity(self):
        return not any(self.diagonal) and not any(self.upper)

    def __eq__(self, other):
        return (
            isinstance(other, MagnusMatrix)
            and self.diagonal == other.diagonal
            and self.upper == other.upper
        )

    def __hash__(self):
        return hash((self.diagonal, tuple(p.key() for p in self.upper)))

    def __repr__(self):
        return f"MagnusMatrix(diagonal={list(self.diagonal)}, upper={list(self.upper)})"


def magnus_matrix(w, rank):
    m = MagnusMatrix.identity(rank)
    for x in w:
        m = m * MagnusMatrix.letter(x, rank)
    return m
