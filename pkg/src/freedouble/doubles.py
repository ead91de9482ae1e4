"""
Doubles of free groups: D = A *_C Abar with c identified with bar(c).

Elements are sequences of syllables ``(side, word)`` where side 0 is A and
side 1 is Abar; Abar words are written in Abar's own generators, so the
copy of ``a`` in Abar is the word ``bar(a)`` tagged with side 1.

Normal form.  Every element other than a pure amalgam element is written
``x_1 t_2 ... t_n`` with alternating sides, each ``t_k`` the canonical
representative of its right coset ``C t_k`` (or ``Cbar t_k``) taken from
the Stallings graph, and ``x_1`` a word outside the amalgamated subgroup
that absorbs the leftover amalgam part.  Elements of C are written as one
A-side syllable.  With fixed transversals this form is unique, so equality
in D is equality of normal forms.
"""

from dataclasses import dataclass, field

from .errors import BudgetError
from .stallings import build_subgroup_graph
from .words import (
    EMPTY,
    Alphabet,
    commutator,
    format_word,
    inv,
    mul,
    parse_word,
    substitute,
)

A, ABAR = 0, 1
SIDE_NAMES = {A: "A", ABAR: "Abar"}

DEFAULT_MAX_SYLLABLES = 10_000


@dataclass(frozen=True)
class DoubleElement:
    syllables: tuple = ()
    canonical: bool = field(default=True, compare=False)

    def __len__(self):
        return len(self.syllables)

    def is_identity(self):
        return not self.syllables

    def __str__(self):
        return format_element(self)


def _invert_automorphism(images, rank):
    """Inverse images of an automorphism given by generator images.

    Greedy Nielsen reduction: apply elementary moves u_k -> u_k u_j^e or
    u_j^e u_k while they shrink the total length, tracking each u_k as a
    word in the original images.  Returns None if it stalls before
    reaching single letters.
    """
    us = [tuple(u) for u in images]
    ts = [(k + 1,) for k in range(rank)]
    while True:
        if all(len(u) == 1 for u in us):
            break
        best = None
        total = sum(len(u) for u in us)
        for k in range(rank):
            for j in range(rank):
                if j == k:
                    continue
                for e in (1, -1):
                    uj = us[j] if e > 0 else inv(us[j])
                    tj = ts[j] if e > 0 else inv(ts[j])
                    for right in (True, False):
                        nu = mul(us[k], uj) if right else mul(uj, us[k])
                        gain = len(us[k]) - len(nu)
                        if gain > 0 and (best is None or gain > best[0]):
                            nt = mul(ts[k], tj) if right else mul(tj, ts[k])
                            best = (gain, k, nu, nt)
        if best is None:
            return None
        _, k, nu, nt = best
        us[k], ts[k] = nu, nt
        assert sum(len(u) for u in us) < total
    out = [None] * rank
    for u, t in zip(us, ts):
        x = u[0]
        out[abs(x) - 1] = t if x > 0 else inv(t)
    if any(o is None for o in out):
        return None
    return out


class DoubleGroup:
    def __init__(self, alphabet, c_generators, bar=None, max_syllables=DEFAULT_MAX_SYLLABLES, cgraph=None):
        if isinstance(alphabet, int):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        self.rank = alphabet.rank
        self.c_generators = [g for g in (alphabet.reduce(c) for c in c_generators) if g]
        self.cgraph = cgraph if cgraph is not None else build_subgroup_graph(self.c_generators, alphabet)
        self.max_syllables = max_syllables

        gens = alphabet.generators()
        if bar is None:
            self.bar = gens
            self.bar_inverse = gens
            self.identity_bar = True
        else:
            images = [alphabet.reduce(b) for b in bar]
            if len(images) != self.rank:
                raise ValueError(f"bar needs {self.rank} generator images, got {len(images)}")
            if build_subgroup_graph(images, alphabet).index() != 1:
                raise ValueError("bar images do not generate the free group")
            inverse = _invert_automorphism(images, self.rank)
            if inverse is None:
                raise ValueError("could not invert bar by Nielsen reduction")
            for x in gens:
                if substitute(substitute(x, inverse), images) != x:
                    raise ValueError("bar inverse check failed")
            self.bar = images
            self.bar_inverse = inverse
            self.identity_bar = images == gens
        if self.identity_bar:
            self.cbar_graph = self.cgraph
        else:
            cbar = [self.apply_bar(c) for c in self.c_generators]
            self.cbar_graph = build_subgroup_graph(cbar, alphabet)

    def __repr__(self):
        cs = ", ".join(format_word(c) for c in self.c_generators)
        return f"DoubleGroup(rank={self.rank}, C=<{cs}>)"

    # the isomorphism A -> Abar

    def apply_bar(self, w):
        return w if self.identity_bar else substitute(w, self.bar)

    def apply_bar_inverse(self, w):
        return w if self.identity_bar else substitute(w, self.bar_inverse)

    def graph(self, side):
        return self.cgraph if side == A else self.cbar_graph

    def in_amalgam(self, side, w):
        return self.graph(side).member(w)

    def translate(self, side, w):
        """Move an amalgam element to the other factor."""
        if side == A:
            return ABAR, self.apply_bar(w)
        return A, self.apply_bar_inverse(w)

    # normal form

    def normalize(self, raw):
        raw = [(int(s), tuple(w)) for s, w in raw]
        if len(raw) > self.max_syllables:
            raise BudgetError(f"{len(raw)} syllables exceeds budget {self.max_syllables}")
        stack = []
        for side, w in raw:
            if side not in (A, ABAR):
                raise ValueError(f"bad side {side}")
            self._push(stack, side, self.alphabet.reduce(w))

        # right to left: keep coset representatives, push amalgam parts left
        for k in range(len(stack) - 1, 0, -1):
            side, w = stack[k]
            c, t = self.graph(side).coset_decompose(w)
            stack[k] = (side, t)
            if c:
                _, c_other = self.translate(side, c)
                prev_side, prev = stack[k - 1]
                stack[k - 1] = (prev_side, mul(prev, c_other))

        if len(stack) == 1:
            side, w = stack[0]
            if side == ABAR and self.in_amalgam(side, w):
                stack[0] = self.translate(side, w)
        return DoubleElement(tuple(stack))

    def _push(self, stack, side, w):
        while True:
            if not w:
                return
            if stack and stack[-1][0] == side:
                _, prev = stack.pop()
                w = mul(prev, w)
                continue
            if stack and self.in_amalgam(side, w):
                side, w = self.translate(side, w)
                continue
            if len(stack) == 1 and self.in_amalgam(*stack[0]):
                # a lone amalgam element is absorbed into the next syllable
                c_side, c = stack.pop()
                _, c = self.translate(c_side, c)
                w = mul(c, w)
                continue
            stack.append((side, w))
            return

    def element(self, *syllables):
        return self.normalize(syllables)

    def from_a(self, w):
        return self.normalize([(A, w)])

    def from_abar(self, w):
        return self.normalize([(ABAR, w)])

    def bar_of(self, w):
        """The copy of the A-word ``w`` inside Abar."""
        return self.normalize([(ABAR, self.apply_bar(w))])

    def identity(self):
        return DoubleElement(())

    def dmul(self, *xs):
        raw = []
        for x in xs:
            raw.extend(x.syllables)
        return self.normalize(raw)

    def inverse(self, x):
        return self.normalize([(s, inv(w)) for s, w in reversed(x.syllables)])

    def deq(self, x, y):
        x = x if x.canonical else self.normalize(x.syllables)
        y = y if y.canonical else self.normalize(y.syllables)
        return x.syllables == y.syllables

    def commutator(self, x, y):
        """[x, y] = x^-1 y^-1 x y."""
        return self.dmul(self.inverse(x), self.inverse(y), x, y)

    # retraction onto A and its kernel

    def retract(self, x):
        out = EMPTY
        for side, w in x.syllables:
            out = mul(out, w if side == A else self.apply_bar_inverse(w))
        return out

    def kernel_gen(self, a):
        """The kernel generator a * bar(a)^-1."""
        a = self.alphabet.reduce(a)
        return self.normalize([(A, a), (ABAR, inv(self.apply_bar(a)))])

    def is_kernel_member(self, x):
        return not self.retract(x)

    def check_ck_commutation(self, samples):
        failures = []
        checked = 0
        for c in self.c_generators:
            cx = self.from_a(c)
            for a in samples:
                checked += 1
                comm = self.commutator(cx, self.kernel_gen(a))
                if not comm.is_identity():
                    failures.append((c, tuple(a), comm))
        return CommutationReport(checked=checked, failures=failures, normal=self.cgraph.is_normal())

    # text I/O

    def parse_element(self, text):
        text = text.strip()
        if text in ("", "1"):
            return self.identity()
        raw = []
        for part in text.split("|"):
            if ":" not in part:
                raise ValueError(f"syllable {part.strip()!r} needs a side prefix 'A:' or 'Abar:'")
            tag, word = part.split(":", 1)
            tag = tag.strip().lower()
            if tag == "a":
                side = A
            elif tag in ("abar", "b"):
                side = ABAR
            else:
                raise ValueError(f"unknown side {tag!r}")
            raw.append((side, parse_word(word, self.rank)))
        return self.normalize(raw)


@dataclass
class CommutationReport:
    checked: int
    failures: list
    normal: bool

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "passed": self.passed,
            "checked": self.checked,
            "c_normal": self.normal,
            "failures": [
                {"c": format_word(c), "a": format_word(a), "commutator": format_element(comm)}
                for c, a, comm in self.failures
            ],
        }


def format_element(x):
    if not x.syllables:
        return "1"
    return " | ".join(f"{SIDE_NAMES[s]}: {format_word(w)}" for s, w in x.syllables)


def make_double(alphabet, c_generators, bar=None, **kwargs):
    return DoubleGroup(alphabet, c_generators, bar, **kwargs)


def normalize(D, raw):
    return D.normalize(raw)


def dmul(D, x, y):
    return D.dmul(x, y)


def deq(D, x, y):
    return D.deq(x, y)


def retract(D, x):
    return D.retract(x)


def kernel_gen(D, a):
    return D.kernel_gen(a)


def is_kernel_member(D, x):
    return D.is_kernel_member(x)


def check_ck_commutation(D, samples):
    return D.check_ck_commutation(samples)
