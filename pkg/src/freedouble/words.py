"""
Free group words.

A word is a tuple of non-zero integers: ``i`` stands for the i-th free
generator and ``-i`` for its inverse.  The empty tuple is the identity.
Words are plain values; the only thing that ties a word to a particular
free group is the rank, which :class:`Alphabet` checks on demand.

Text syntax: lowercase ``a, b, c, ...`` are generators 1, 2, 3, ...,
uppercase letters are their inverses, ``x^n`` raises a letter to an integer
power, and ``1`` is the identity.  Whitespace is ignored.
"""

from dataclasses import dataclass
import re

Word = tuple

EMPTY: Word = ()

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class Alphabet:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")

    def check(self, letters):
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        return letters

    def reduce(self, letters) -> Word:
        return reduce(self.check(letters))

    def generators(self):
        return [(i,) for i in range(1, self.rank + 1)]

    def letters(self):
        """The 2*rank letters in the fixed order a, A, b, B, ..."""
        out = []
        for i in range(1, self.rank + 1):
            out += [i, -i]
        return out


def reduce(letters) -> Word:
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mul(*words) -> Word:
    if len(words) == 2:
        u, v = words
        k = 0
        n = min(len(u), len(v))
        while k < n and u[len(u) - 1 - k] == -v[k]:
            k += 1
        return tuple(u[: len(u) - k]) + tuple(v[k:])
    out = EMPTY
    for w in words:
        out = mul(out, w)
    return out


def inv(w) -> Word:
    return tuple(-x for x in reversed(w))


def power(w, n: int) -> Word:
    if n < 0:
        w, n = inv(w), -n
    out = EMPTY
    for _ in range(n):
        out = mul(out, w)
    return out


def commutator(u, v) -> Word:
    """[u, v] = u^-1 v^-1 u v."""
    return mul(inv(u), inv(v), u, v)


def conjugate(w, g) -> Word:
    """g^-1 w g."""
    return mul(inv(g), w, g)


def substitute(w, images) -> Word:
    """Apply the endomorphism sending generator i to ``images[i - 1]``."""
    out = EMPTY
    for x in w:
        img = images[abs(x) - 1]
        out = mul(out, img if x > 0 else inv(img))
    return out


def exponent_sums(w, rank: int):
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def all_reduced_words(rank: int, max_length: int, min_length: int = 0):
    """Every reduced word of length in [min_length, max_length], shortest first."""
    letters = Alphabet(rank).letters()
    layer = [EMPTY]
    for n in range(max_length + 1):
        if n >= min_length:
            yield from layer
        if n == max_length:
            break
        layer = [w + (x,) for w in layer for x in letters if not w or w[-1] != -x]


def random_word(rng, rank: int, length: int) -> Word:
    """A uniformly random reduced word of exactly the given length."""
    letters = Alphabet(rank).letters()
    w = []
    while len(w) < length:
        x = rng.choice(letters)
        if w and w[-1] == -x:
            continue
        w.append(x)
    return tuple(w)


_TOKEN = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")


def parse_word(text: str, rank: int = None) -> Word:
    s = "".join(text.split())
    if s in ("", "1"):
        return EMPTY
    letters = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        ch, exp = m.group(1), m.group(2)
        x = _LETTERS.index(ch.lower()) + 1
        if ch.isupper():
            x = -x
        n = int(exp) if exp is not None else 1
        letters += [x if n > 0 else -x] * abs(n)
        pos = m.end()
    if rank is not None:
        Alphabet(rank).check(letters)
    return reduce(letters)


def format_word(w) -> str:
    if not w:
        return "1"
    return "".join(_LETTERS[x - 1] if x > 0 else _LETTERS[-x - 1].upper() for x in w)
