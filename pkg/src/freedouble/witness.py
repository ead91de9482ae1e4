"""
Residual solvability witnesses for elements of a double D = A *_C Abar.

For a nontrivial element d of D, :func:`witness_search` tries in order

1. the retraction D -> A followed by A -> A/A^(n) (works whenever d does
   not retract to 1, since free groups are residually solvable);
2. the abelianization of D;
3. homomorphisms D -> S for the groups S of a finite solvable catalog;
4. a quotient-double certificate: a level n such that no syllable of the
   normal form of d lies in C A^(n) (resp. Cbar Abar^(n)).  Then d survives
   in the amalgam of A/A^(n) and Abar/Abar^(n), a residually solvable group.

Every witness is re-checked along a different computational path before
it is returned.  When C is normal in A with A/C perfect (default: the
kernel of F2 -> A5) no route can succeed for elements of [K, D], and the
search reports exhaustion; :func:`negative_demo` packages that instance.
"""

from dataclasses import dataclass, field
import itertools

from . import perms
from .catalog import default_catalog, filter_by_order
from .derived import (
    MAX_LEVEL,
    derived_eq,
    exponent_vector,
    fox_derivative,
    in_derived,
    least_level_outside,
    magnus_matrix,
)
from .doubles import A, ABAR, DoubleGroup, format_element
from .smith import smith_normal_form
from .stallings import FiniteQuotientMap, INFINITE, kernel_of_finite_quotient
from .words import EMPTY, Alphabet, format_word, inv, mul

DEFAULT_NODE_BOUND = 2_000_000


# abelianization


def in_row_lattice(rows, v):
    """Is the integer vector ``v`` an integer combination of ``rows``?"""
    n = len(v)
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return not any(v)
    D, _, V = smith_normal_form(rows, n)
    y = [sum(v[k] * V[k][i] for k in range(n)) for i in range(n)]
    for i in range(n):
        d = D[i][i] if i < len(D) else 0
        if d == 0:
            if y[i]:
                return False
        elif y[i] % d:
            return False
    return True


@dataclass
class AbelianizedDouble:
    rank: int
    relations: list
    diagonal: list
    column_transform: list

    @property
    def n_generators(self):
        return 2 * self.rank

    def invariants(self):
        """Invariant factors: (torsion orders > 1, free rank)."""
        nz = [d for d in self.diagonal if d]
        return [d for d in nz if d > 1], self.n_generators - len(nz)

    def describe(self):
        torsion, free = self.invariants()
        parts = [f"Z/{d}" for d in torsion]
        if free:
            parts.append("Z" if free == 1 else f"Z^{free}")
        return " x ".join(parts) if parts else "1"

    def vector(self, x):
        v = [0] * self.n_generators
        for side, w in x.syllables:
            off = 0 if side == A else self.rank
            for x_ in w:
                v[off + abs(x_) - 1] += 1 if x_ > 0 else -1
        return v

    def coordinates(self, x):
        """Coordinates of the image of x along the Smith basis.

        Entry i is reduced mod the i-th diagonal entry (0 means a free
        coordinate, kept as an integer); units are dropped.
        """
        v = self.vector(x)
        n = self.n_generators
        V = self.column_transform
        y = [sum(v[k] * V[k][i] for k in range(n)) for i in range(n)]
        coords = []
        for i in range(n):
            d = self.diagonal[i] if i < len(self.diagonal) else 0
            if d == 1:
                continue
            coords.append({"order": d or None, "value": y[i] % d if d else y[i], "column": i})
        return coords

    def image_is_zero(self, x):
        return all(c["value"] == 0 for c in self.coordinates(x))


def abelianization(D):
    r = D.rank
    rows = []
    for c in D.c_generators:
        cbar = D.apply_bar(c)
        rows.append(list(exponent_vector(c, r)) + [-e for e in exponent_vector(cbar, r)])
    nonzero = [row for row in rows if any(row)]
    if nonzero:
        S, _, V = smith_normal_form(nonzero, 2 * r)
        diagonal = [S[i][i] for i in range(min(len(S), 2 * r))]
    else:
        V = [[int(i == j) for j in range(2 * r)] for i in range(2 * r)]
        diagonal = []
    diagonal += [0] * (2 * r - len(diagonal))
    return AbelianizedDouble(r, rows, diagonal, V)


def ab_image(D, x, ab=None):
    ab = ab or abelianization(D)
    coords = ab.coordinates(x)
    return {"zero": all(c["value"] == 0 for c in coords), "coordinates": coords}


# membership in C A^(n)


@dataclass
class SyllableProof:
    position: int
    side: int
    word: tuple
    level: int
    method: str
    detail: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "position": self.position,
            "side": "A" if self.side == A else "Abar",
            "word": format_word(self.word),
            "lambda": self.level,
            "method": self.method,
            **self.detail,
        }


class CosetFilter:
    """Decides whether a word of one factor lies in C A^(n).

    Exact when C is trivial (then C A^(n) = A^(n)) or normal of finite index
    (then membership is read off in the finite quotient A/C, whose n-th
    derived subgroup is the image of A^(n)).  Otherwise only a one-sided
    test is available: a hom onto a catalog group of derived length <= n
    that separates the word from the image of C proves non-membership.
    """

    def __init__(self, D, side, catalog=None, node_bound=DEFAULT_NODE_BOUND):
        self.D = D
        self.side = side
        self.graph = D.graph(side)
        self.rank = D.rank
        gens = D.c_generators if side == A else [D.apply_bar(c) for c in D.c_generators]
        self.c_words = gens
        self.catalog = catalog if catalog is not None else default_catalog()
        self.node_bound = node_bound
        if self.graph.is_trivial():
            self.kind = "trivial"
        elif self.graph.is_normal() and self.graph.index() != INFINITE:
            self.kind = "finite_normal"
            self.action = self.graph.permutation_action()
            self.n_points = self.graph.n_vertices
            self.series = perms.derived_series(self.action, self.n_points)
        else:
            self.kind = "general"
            self._hom_cache = {}

    def quotient_term(self, level):
        return self.series[min(level, len(self.series) - 1)]

    def decide(self, w, level):
        """Return (member, detail) with member True, False or None (unknown)."""
        if level == 0:
            return True, {}
        if self.kind == "trivial":
            return in_derived(w, level), {}
        if self.kind == "finite_normal":
            img = perms.evaluate(w, self.action, self.n_points)
            term = self.quotient_term(level)
            return img in term, {
                "quotient_order": len(self.series[0]),
                "derived_term_order": len(term),
                "image_in_quotient": [i + 1 for i in img],
            }
        return self._semi_decide(w, level)

    def _homs(self, group):
        cached = self._hom_cache.get(group.name)
        if cached is not None:
            return cached
        t = group.table
        out = []
        count = 0
        for images in itertools.product(range(t.order), repeat=self.rank):
            count += 1
            if count > self.node_bound:
                break
            img = {i + 1: g for i, g in enumerate(images)}
            c_img = t.subgroup([t.evaluate(c, img) for c in self.c_words])
            out.append((images, c_img))
        self._hom_cache[group.name] = out
        return out

    def _semi_decide(self, w, level):
        for group in self.catalog:
            if group.derived_length > level:
                continue
            t = group.table
            for images, c_img in self._homs(group):
                img = {i + 1: g for i, g in enumerate(images)}
                if t.evaluate(w, img) not in c_img:
                    return False, {
                        "group": group.name,
                        "hom": [[j + 1 for j in t.elements[g]] for g in images],
                    }
        return None, {}


@dataclass
class Separation:
    level: int
    proofs: list
    unknown: list

    @property
    def ok(self):
        return self.level is not None


def _filters(D, catalog=None, node_bound=DEFAULT_NODE_BOUND):
    names = None if catalog is None else tuple(g.name for g in catalog)
    key = ("coset_filters", names, node_bound)
    cache = D.__dict__.setdefault("_witness_cache", {})
    if key not in cache:
        cache[key] = (CosetFilter(D, A, catalog, node_bound), CosetFilter(D, ABAR, catalog, node_bound))
    return cache[key]


def _check_case2_input(D, x):
    if x.is_identity():
        raise ValueError("the identity has no residual solvability witness")
    if len(x.syllables) == 1 and D.in_amalgam(*x.syllables[0]):
        raise ValueError("element lies in the amalgamated subgroup; use the retraction route")


def separation_at(D, x, level, catalog=None, node_bound=DEFAULT_NODE_BOUND):
    fa, fb = _filters(D, catalog, node_bound)
    proofs, unknown, failed = [], [], []
    for k, (side, w) in enumerate(x.syllables):
        f = fa if side == A else fb
        member, detail = f.decide(w, level)
        if member is None:
            unknown.append(k)
        elif member:
            failed.append(k)
        else:
            method = {"trivial": "derived_series", "finite_normal": "finite_quotient"}.get(f.kind, "separating_hom")
            proofs.append(SyllableProof(k, side, w, level, method, detail))
    return proofs, unknown, failed


def syllable_separation(D, x, lambda_max, catalog=None, node_bound=DEFAULT_NODE_BOUND):
    """Least level n <= lambda_max with every syllable outside C A^(n)."""
    _check_case2_input(D, x)
    unknown = []
    for level in range(1, lambda_max + 1):
        proofs, unknown, failed = separation_at(D, x, level, catalog, node_bound)
        if not unknown and not failed:
            return Separation(level, proofs, [])
    return Separation(None, [], unknown)


# witnesses


@dataclass
class SolvableQuotient:
    route: str
    group: str
    derived_length: int
    hom: dict
    image: object
    level: int = None

    def to_dict(self, budget=None):
        out = {"type": "solvable_quotient", "route": self.route, "group": self.group,
               "derived_length": self.derived_length, "hom": self.hom, "image": self.image}
        if self.level is not None:
            out["lambda"] = self.level
        out["budget"] = budget or {}
        return out


@dataclass
class GLambdaCertificate:
    level: int
    syllable_proofs: list
    element: str
    compatibility: dict

    def to_dict(self, budget=None):
        return {"type": "g_lambda_certificate", "lambda": self.level, "element": self.element,
                "syllable_proofs": [p.to_dict() for p in self.syllable_proofs],
                "compatibility": self.compatibility, "budget": budget or {}}


@dataclass
class Exhausted:
    report: dict

    def to_dict(self, budget=None):
        return {"type": "exhausted", "budget": {**(budget or {}), **self.report}}


def _compatibility(D, level):
    """bar is an automorphism, so it carries A^(n) onto Abar^(n)."""
    level = min(level, MAX_LEVEL)
    ok = all(
        derived_eq(D.apply_bar_inverse(D.apply_bar(x)), x, level)
        and D.apply_bar(D.apply_bar_inverse(x)) == x
        for x in D.alphabet.generators()
    )
    return {"bar_is_automorphism": ok, "identity_bar": D.identity_bar}


def build_quotient_double_certificate(D, x, level, catalog=None, node_bound=DEFAULT_NODE_BOUND):
    _check_case2_input(D, x)
    if len(x.syllables) == 1:
        raise ValueError("single-syllable element lies in a factor; use the retraction route")
    proofs, unknown, failed = separation_at(D, x, level, catalog, node_bound)
    if unknown or failed:
        raise ValueError(f"syllables not separated at level {level}: failed={failed} unknown={unknown}")
    compat = _compatibility(D, level)
    if not compat["bar_is_automorphism"]:
        raise ValueError("bar does not carry the filtration of A onto that of Abar")
    return GLambdaCertificate(level, proofs, format_element(x), compat)


# homomorphisms onto finite solvable groups


class HomRecord:
    """A homomorphism D -> group, stored as images of a_1.., abar_1.."""

    def __init__(self, D, group, a_images, abar_images):
        self.D = D
        self.group = group
        self.a_images = a_images
        self.abar_images = abar_images

    def _maps(self):
        return ({i + 1: g for i, g in enumerate(self.a_images)},
                {i + 1: g for i, g in enumerate(self.abar_images)})

    def evaluate(self, x):
        t = self.group.table
        ma, mb = self._maps()
        g = 0
        for side, w in x.syllables:
            g = t.mul[g][t.evaluate(w, ma if side == A else mb)]
        return g

    def image(self):
        return self.group.table.subgroup(list(self.a_images) + list(self.abar_images))

    def c_image(self):
        t = self.group.table
        ma, _ = self._maps()
        return t.subgroup([t.evaluate(c, ma) for c in self.D.c_generators])

    def c_image_is_full(self):
        return self.c_image() == self.image()

    def kernel_images(self):
        # K is the normal closure of the a_i * bar(a_i)^-1
        return [self.evaluate(self.D.kernel_gen(x)) for x in self.D.alphabet.generators()]

    def kernel_central(self):
        t = self.group.table
        gens = list(self.a_images) + list(self.abar_images)
        return all(t.mul[k][g] == t.mul[g][k] for k in self.kernel_images() for g in gens)

    def to_dict(self):
        t = self.group.table
        out = {}
        for i, g in enumerate(self.a_images):
            out[format_word((i + 1,))] = [j + 1 for j in t.elements[g]]
        for i, g in enumerate(self.abar_images):
            out["bar_" + format_word((i + 1,))] = [j + 1 for j in t.elements[g]]
        return out


class HomEnumeration:
    """Backtracking over generator images with incremental relation checks.

    Generators are assigned in the order a_1, abar_1, a_2, abar_2, ...; each
    relation ``c = bar(c)`` is tested as soon as all of its letters have
    images, shortest relations first.
    """

    def __init__(self, D, group, node_bound=DEFAULT_NODE_BOUND):
        self.D = D
        self.group = group
        self.node_bound = node_bound
        self.nodes = 0
        self.truncated = False
        r = D.rank
        self.relations = []
        checks = [[] for _ in range(2 * r)]
        for c in D.c_generators:
            cb = D.apply_bar(c)
            pos = max([2 * (abs(x) - 1) for x in c] + [2 * (abs(x) - 1) + 1 for x in cb])
            checks[pos].append((c, cb))
        self.checks = [sorted(lst, key=lambda p: len(p[0]) + len(p[1])) for lst in checks]

    def __iter__(self):
        D, t = self.D, self.group.table
        r = D.rank
        imgs = [0] * (2 * r)
        ma, mb = {}, {}
        self.nodes = 0
        self.truncated = False

        def rec(pos):
            if pos == 2 * r:
                yield HomRecord(D, self.group, tuple(imgs[0::2]), tuple(imgs[1::2]))
                return
            i = pos // 2 + 1
            target = ma if pos % 2 == 0 else mb
            for g in range(t.order):
                self.nodes += 1
                if self.nodes > self.node_bound:
                    self.truncated = True
                    return
                imgs[pos] = g
                target[i] = g
                if all(t.evaluate(c, ma) == t.evaluate(cb, mb) for c, cb in self.checks[pos]):
                    yield from rec(pos + 1)
                    if self.truncated:
                        return
            target.pop(i, None)

        yield from rec(0)


def enumerate_solvable_homs(D, catalog=None, node_bound=DEFAULT_NODE_BOUND):
    """Yield (group, HomRecord) for every hom into every catalog group.

    Results are cached on ``D`` per group, so repeated searches are cheap.
    A group whose search hit ``node_bound`` contributes a partial list and is
    listed in ``D._witness_cache['truncated']``.
    """
    catalog = catalog if catalog is not None else default_catalog()
    cache = D.__dict__.setdefault("_witness_cache", {})
    truncated = cache.setdefault("truncated", set())
    for group in catalog:
        key = ("homs", group, node_bound)
        if key not in cache:
            en = HomEnumeration(D, group, node_bound)
            cache[key] = list(en)
            if en.truncated:
                truncated.add(group.name)
        for hom in cache[key]:
            yield group, hom


# verification along independent paths


def _in_derived_by_magnus(w, level, rank):
    """Membership in F^(level) for level <= 3 without the Fox recursion on levels >= 2."""
    if level <= 1:
        return not any(exponent_vector(w, rank))
    if level == 2:
        return magnus_matrix(w, rank).is_identity()
    if not magnus_matrix(w, rank).is_identity():
        return False
    for i in range(1, rank + 1):
        sums = {}
        for u, c in fox_derivative(w, i).terms.items():
            k = magnus_matrix(u, rank)
            sums[k] = sums.get(k, 0) + c
        if any(sums.values()):
            return False
    return True


def _verify_derived(D, x, w):
    r = D.rank
    if D.retract(x) != w.hom["retract"]:
        return False
    for c in D.c_generators:
        if D.retract(D.from_a(c)) != D.retract(D.bar_of(c)):
            return False
    word = D.retract(x)
    if w.level <= 3:
        return not _in_derived_by_magnus(word, w.level, r)
    return not in_derived(word, w.level, max(MAX_LEVEL, w.level))


def _verify_abelian(D, x, w):
    ab = abelianization(D)
    v = ab.vector(x)
    for coord in w.image:
        i, d = coord["column"], coord["order"] or 0
        col = [ab.column_transform[k][i] for k in range(ab.n_generators)]
        kills = all(sum(a * b for a, b in zip(row, col)) % d == 0 if d else
                    sum(a * b for a, b in zip(row, col)) == 0 for row in ab.relations)
        val = sum(a * b for a, b in zip(v, col))
        if kills and (val % d if d else val):
            return True
    return False


def _verify_finite(D, x, w, group):
    n = group.degree
    if perms.derived_length(group.generators, n) is None:
        return False
    a_imgs = [tuple(j - 1 for j in w.hom[format_word((i,))]) for i in range(1, D.rank + 1)]
    b_imgs = [tuple(j - 1 for j in w.hom["bar_" + format_word((i,))]) for i in range(1, D.rank + 1)]
    for c in D.c_generators:
        if perms.evaluate(c, a_imgs, n) != perms.evaluate(D.apply_bar(c), b_imgs, n):
            return False
    g = perms.identity(n)
    for side, word in x.syllables:
        g = perms.compose(g, perms.evaluate(word, a_imgs if side == A else b_imgs, n))
    return g != perms.identity(n)


def _verify_certificate(D, x, cert, catalog):
    """Re-check each syllable proof along a second route."""
    if len(cert.syllable_proofs) != len(x.syllables) or len(x.syllables) < 2:
        return False
    sides = [s for s, _ in x.syllables]
    if any(a == b for a, b in zip(sides, sides[1:])):
        return False
    r = D.rank
    for p, (side, word) in zip(cert.syllable_proofs, x.syllables):
        if p.word != word or p.side != side or p.level != cert.level:
            return False
        graph = D.graph(side)
        c_words = D.c_generators if side == A else [D.apply_bar(c) for c in D.c_generators]
        if p.method == "derived_series":
            if _in_derived_by_magnus(word, p.level, r) if p.level <= 3 else in_derived(word, p.level):
                return False
        elif p.method == "finite_quotient":
            if p.level == 1:
                # C A' / A' is the lattice spanned by exponent vectors of C
                rows = [exponent_vector(c, r) for c in c_words]
                if in_row_lattice(rows, exponent_vector(word, r)):
                    return False
            else:
                action = graph.permutation_action()
                n = graph.n_vertices
                term = perms.closure(action, n)
                for _ in range(p.level):
                    term = perms.derived_subgroup_normal_closure(term, n) if len(term) > 1 else term
                if perms.evaluate(word, action, n) in set(term):
                    return False
        elif p.method == "separating_hom":
            group = next((g for g in catalog if g.name == p.detail["group"]), None)
            if group is None or group.derived_length > p.level:
                return False
            imgs = [tuple(j - 1 for j in h) for h in p.detail["hom"]]
            n = group.degree
            c_img = set(perms.closure([perms.evaluate(c, imgs, n) for c in c_words], n))
            if perms.evaluate(word, imgs, n) in c_img:
                return False
        else:
            return False
    return True


def verify_witness(D, x, w, catalog=None):
    catalog = catalog if catalog is not None else default_catalog()
    if isinstance(w, SolvableQuotient):
        if w.route == "retraction":
            return _verify_derived(D, x, w)
        if w.route == "abelianization":
            return _verify_abelian(D, x, w)
        if w.route == "finite":
            group = next((g for g in catalog if g.name == w.group), None)
            return group is not None and _verify_finite(D, x, w, group)
        return False
    if isinstance(w, GLambdaCertificate):
        return _verify_certificate(D, x, w, catalog)
    return False


# search


@dataclass
class Budget:
    lambda_max: int = 3
    catalog: list = None
    node_bound: int = DEFAULT_NODE_BOUND

    def groups(self):
        return self.catalog if self.catalog is not None else default_catalog()

    def to_dict(self):
        return {"lambda_max": self.lambda_max, "catalog": [g.name for g in self.groups()],
                "node_bound": self.node_bound}


def _route_retraction(D, x, budget):
    w = D.retract(x)
    if not w:
        return None
    level = least_level_outside(w, max(budget.lambda_max, 1))
    if level is None:
        return None
    if level == 1:
        image = list(exponent_vector(w, D.rank))
    elif level == 2:
        m = magnus_matrix(w, D.rank)
        image = {"diagonal": list(m.diagonal), "upper": [repr(p) for p in m.upper]}
    else:
        image = format_word(w)
    return SolvableQuotient("retraction", f"A/A^({level})", level,
                            {"retract": w, "description": "retraction onto A, then quotient"},
                            image, level)


def _route_abelian(D, x, budget):
    ab = abelianization(D)
    coords = ab.coordinates(x)
    nonzero = [c for c in coords if c["value"]]
    if not nonzero:
        return None
    return SolvableQuotient("abelianization", ab.describe(), 1,
                            {"relations": ab.relations}, nonzero)


def _route_finite(D, x, budget):
    for group, hom in enumerate_solvable_homs(D, budget.groups(), budget.node_bound):
        g = hom.evaluate(x)
        if g != 0:
            return SolvableQuotient("finite", group.name, group.derived_length, hom.to_dict(),
                                    [j + 1 for j in group.table.elements[g]])
    return None


def _route_certificate(D, x, budget):
    if len(x.syllables) < 2:
        return None
    sep = syllable_separation(D, x, budget.lambda_max, budget.groups(), budget.node_bound)
    if not sep.ok:
        return None
    return build_quotient_double_certificate(D, x, sep.level, budget.groups(), budget.node_bound)


ROUTES = (
    ("retraction", _route_retraction),
    ("abelianization", _route_abelian),
    ("finite", _route_finite),
    ("g_lambda", _route_certificate),
)


def witness_search(D, x, budget=None):
    budget = budget or Budget()
    if not x.canonical:
        x = D.normalize(x.syllables)
    if x.is_identity():
        raise ValueError("the identity has no residual solvability witness")
    for name, route in ROUTES:
        w = route(D, x, budget)
        if w is None:
            continue
        if not verify_witness(D, x, w, budget.groups()):
            raise RuntimeError(f"{name} witness failed re-verification for {format_element(x)}")
        return w
    homs = sum(1 for _ in enumerate_solvable_homs(D, budget.groups(), budget.node_bound))
    truncated = sorted(D.__dict__.get("_witness_cache", {}).get("truncated", ()))
    return Exhausted({"routes": [n for n, _ in ROUTES], "homs_checked": homs,
                      "truncated_groups": truncated})


def witness_to_json(w, budget):
    out = w.to_dict(budget.to_dict())
    if out.get("hom", {}).get("retract") is not None:
        out["hom"] = {**out["hom"], "retract": format_word(out["hom"]["retract"])}
    return out


# the perfect-quotient double


DEFAULT_PERFECT_QUOTIENT = ([2, 3, 4, 5, 1], [2, 3, 1, 4, 5])


def build_perfect_quotient_double(q=None):
    q = q or FiniteQuotientMap.from_lists(DEFAULT_PERFECT_QUOTIENT)
    if not q.is_transitive():
        raise ValueError("permutation images do not act transitively")
    if q.order() == 1 or not perms.is_perfect(q.images, q.degree):
        raise ValueError("quotient group is not a nontrivial perfect group")
    graph = kernel_of_finite_quotient(q, q.rank)
    return DoubleGroup(Alphabet(q.rank), graph.generators, cgraph=graph)


def negative_element(D):
    """d = [a * abar^-1, b]: an element of [K, D]."""
    return D.commutator(D.kernel_gen((1,)), D.from_a((2,)))


def negative_demo(order_bound=24, q=None, catalog=None, lambda_max=3, node_bound=DEFAULT_NODE_BOUND):
    q = q or FiniteQuotientMap.from_lists(DEFAULT_PERFECT_QUOTIENT)
    D = build_perfect_quotient_double(q)
    groups = filter_by_order(catalog if catalog is not None else default_catalog(), order_bound)
    budget = Budget(lambda_max, groups, node_bound)
    d = negative_element(D)
    ck = D.check_ck_commutation(D.alphabet.generators())
    ab = ab_image(D, d)

    per_group = {}
    killed = True
    mechanism = True
    for group, hom in enumerate_solvable_homs(D, groups, node_bound):
        entry = per_group.setdefault(group.name, {"order": group.order, "homs": 0,
                                                  "kill_d": 0, "c_image_full": 0, "kernel_central": 0})
        entry["homs"] += 1
        kills = hom.evaluate(d) == 0
        full = hom.c_image_is_full()
        central = hom.kernel_central()
        entry["kill_d"] += kills
        entry["c_image_full"] += full
        entry["kernel_central"] += central
        killed = killed and kills
        mechanism = mechanism and full and central
    homs_checked = sum(e["homs"] for e in per_group.values())

    w = witness_search(D, d, budget)
    graph = D.cgraph
    return {
        "quotient_order": q.order(),
        "quotient_perfect": perms.is_perfect(q.images, q.degree),
        "index": graph.index(),
        "free_basis_size": len(graph.free_basis()),
        "c_normal": graph.is_normal(),
        "d": format_element(d),
        "d_nontrivial": not d.is_identity(),
        "d_in_kernel": D.is_kernel_member(d),
        "ck_commute": ck.passed,
        "ab_image_zero": ab["zero"],
        "order_bound": order_bound,
        "groups": per_group,
        "homs_checked": homs_checked,
        "d_killed_by_all": killed,
        "mechanism_holds": mechanism,
        "truncated_groups": sorted(D.__dict__.get("_witness_cache", {}).get("truncated", ())),
        "witness": "exhausted" if isinstance(w, Exhausted) else w.to_dict()["type"],
        "witness_detail": witness_to_json(w, budget),
    }
