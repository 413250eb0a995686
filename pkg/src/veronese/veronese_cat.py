"""The monomial Veronese category.

A morphism ``(d, m) -> (e, n)`` is an order-preserving injection of ``m``
slots into ``n`` slots, a degree-``e`` monomial on each new slot and a
degree-``(e - d)`` multiplier on each old slot.  Monomials are exponent
vectors of a fixed length ``r``.  Slots are 0-based throughout.

Besides composition this module carries the order engine used to show the
category is Groebner: the word encoding, the Higman order on words, the
divisibility test and the lexicographic total order, plus the symmetric
group action and symmetrization of formal combinations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator, Mapping, NamedTuple, Sequence

from gmpy2 import mpq

from .exact_linalg import Q, Rational

Vec = tuple[int, ...]

MAX_SYMMETRIZE_WIDTH = 8


class CategoryError(ValueError):
    """Malformed morphism data or mismatched objects."""


class ObjectDM(NamedTuple):
    d: int
    m: int


def multi(r: int, d: int) -> list[Vec]:
    """All exponent vectors of length ``r`` and total degree ``d``, lex ascending."""
    if d < 0:
        return []
    if r == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d + 1):
        for rest in multi(r - 1, d - first):
            out.append((first,) + rest)
    return out


def multi_count(r: int, d: int) -> int:
    if d < 0:
        return 0
    if r == 0:
        return 1 if d == 0 else 0
    return math.comb(d + r - 1, r - 1)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vleq(a: Vec, b: Vec) -> bool:
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class VerMorphism:
    """A morphism of the Veronese category.

    ``alpha2`` lists ``(slot, exponent vector)`` for every target slot not in
    the image of ``alpha1``, sorted by slot.
    """

    r: int
    source: ObjectDM
    target: ObjectDM
    alpha1: tuple[int, ...]
    alpha2: tuple[tuple[int, Vec], ...]
    alpha3: tuple[Vec, ...]

    def __post_init__(self):
        d, m = self.source
        e, n = self.target
        if min(d, m, e, n) < 0:
            raise CategoryError("objects must be nonnegative")
        if d > e or m > n:
            raise CategoryError(f"no morphisms {self.source} -> {self.target}")
        a1 = self.alpha1
        if len(a1) != m or any(not 0 <= x < n for x in a1):
            raise CategoryError("alpha1 must map [m] into [n]")
        if any(a1[i] >= a1[i + 1] for i in range(m - 1)):
            raise CategoryError("alpha1 must be strictly increasing")
        free = [i for i in range(n) if i not in set(a1)]
        if [s for s, _ in self.alpha2] != free:
            raise CategoryError("alpha2 must be defined exactly off the image of alpha1")
        for _, v in self.alpha2:
            if len(v) != self.r or min(v, default=0) < 0 or sum(v) != e:
                raise CategoryError(f"alpha2 values must lie in multi({self.r},{e})")
        if len(self.alpha3) != m:
            raise CategoryError("alpha3 must have one value per source slot")
        for v in self.alpha3:
            if len(v) != self.r or min(v, default=0) < 0 or sum(v) != e - d:
                raise CategoryError(f"alpha3 values must lie in multi({self.r},{e - d})")

    @classmethod
    def make(cls, r, source, target, alpha1, alpha2: Mapping[int, Sequence[int]], alpha3) -> "VerMorphism":
        return cls(
            r,
            ObjectDM(*source),
            ObjectDM(*target),
            tuple(alpha1),
            tuple(sorted((int(s), tuple(v)) for s, v in alpha2.items())),
            tuple(tuple(v) for v in alpha3),
        )

    @property
    def alpha2_map(self) -> dict[int, Vec]:
        return dict(self.alpha2)


def identity(r: int, obj) -> VerMorphism:
    d, m = obj
    zero = (0,) * r
    return VerMorphism(r, ObjectDM(d, m), ObjectDM(d, m), tuple(range(m)), (), (zero,) * m)


def compose(beta: VerMorphism, alpha: VerMorphism) -> VerMorphism:
    """``beta o alpha``."""
    if alpha.target != beta.source or alpha.r != beta.r:
        raise CategoryError(f"cannot compose {alpha.target} with {beta.source}")
    b1 = beta.alpha1
    a2 = alpha.alpha2_map
    g1 = tuple(b1[i] for i in alpha.alpha1)
    g2 = dict(beta.alpha2)
    for i, v in a2.items():
        g2[b1[i]] = vadd(v, beta.alpha3[i])
    g3 = tuple(vadd(alpha.alpha3[i], beta.alpha3[alpha.alpha1[i]]) for i in range(alpha.source.m))
    return VerMorphism(alpha.r, alpha.source, beta.target, g1, tuple(sorted(g2.items())), g3)


def all_morphisms(r: int, source, target) -> Iterator[VerMorphism]:
    """Enumerate the hom-set, in no particular order."""
    d, m = source
    e, n = target
    if d > e or m > n:
        return
    gens = multi(r, e)
    shifts = multi(r, e - d)
    for a1 in itertools.combinations(range(n), m):
        free = [i for i in range(n) if i not in set(a1)]
        for vals2 in itertools.product(gens, repeat=len(free)):
            a2 = tuple(zip(free, vals2))
            for vals3 in itertools.product(shifts, repeat=m):
                yield VerMorphism(r, ObjectDM(d, m), ObjectDM(e, n), a1, a2, vals3)


def hom_count(r: int, source, target) -> int:
    d, m = source
    e, n = target
    if d > e or m > n:
        return 0
    return math.comb(n, m) * multi_count(r, e) ** (n - m) * multi_count(r, e - d) ** m


# ---------------------------------------------------------------------------
# words and orders


class Tag(IntEnum):
    # order matters: every Gen letter sorts above every Shift letter
    SHIFT = 0
    GEN = 1


class Letter(NamedTuple):
    tag: Tag
    vector: Vec

    def __repr__(self):
        return f"{self.tag.name.title()}{self.vector}"


def Gen(*v: int) -> Letter:
    return Letter(Tag.GEN, tuple(v))


def Shift(*v: int) -> Letter:
    return Letter(Tag.SHIFT, tuple(v))


Word = tuple[Letter, ...]


def word_encode(alpha: VerMorphism) -> Word:
    n = alpha.target.m
    letters: list = [None] * n
    for j, i in enumerate(alpha.alpha1):
        letters[i] = Letter(Tag.SHIFT, alpha.alpha3[j])
    for i, v in alpha.alpha2:
        letters[i] = Letter(Tag.GEN, v)
    return tuple(letters)


def word_decode(
    word: Sequence[Letter], source, *, r: int | None = None, target_degree: int | None = None
) -> VerMorphism:
    """Recover the morphism out of ``source`` whose word is ``word``.

    The target degree and ``r`` are read off the letters.  Only the empty
    word pins down neither; then ``r`` is required and ``target_degree``
    defaults to ``d``.
    """
    d, m = source
    if not word:
        if m:
            raise CategoryError(f"word has 0 Shift letters, source width is {m}")
        if r is None:
            raise CategoryError("the empty word needs an explicit r")
        e = d if target_degree is None else target_degree
        if e < d:
            raise CategoryError("target degree below source degree")
        return VerMorphism(r, ObjectDM(d, 0), ObjectDM(e, 0), (), (), ())
    lengths = {len(l.vector) for l in word}
    if len(lengths) != 1:
        raise CategoryError("letters have different lengths")
    if r is not None and lengths != {r}:
        raise CategoryError(f"letters must have length {r}")
    (r,) = lengths
    shift_pos = [i for i, l in enumerate(word) if l.tag == Tag.SHIFT]
    if len(shift_pos) != m:
        raise CategoryError(f"word has {len(shift_pos)} Shift letters, source width is {m}")
    gen_degs = {sum(l.vector) for l in word if l.tag == Tag.GEN}
    shift_degs = {sum(l.vector) for l in word if l.tag == Tag.SHIFT}
    if len(gen_degs) > 1 or len(shift_degs) > 1:
        raise CategoryError("inconsistent letter degrees")
    if gen_degs:
        (e,) = gen_degs
        if shift_degs and shift_degs != {e - d}:
            raise CategoryError("Shift letters must have degree e - d")
    else:
        e = d + shift_degs.pop()
    if target_degree is not None and target_degree != e:
        raise CategoryError("target degree disagrees with the letters")
    if e < d:
        raise CategoryError("target degree below source degree")
    a2 = tuple((i, l.vector) for i, l in enumerate(word) if l.tag == Tag.GEN)
    a3 = tuple(word[i].vector for i in shift_pos)
    return VerMorphism(r, ObjectDM(d, m), ObjectDM(e, len(word)), tuple(shift_pos), a2, a3)


def letter_leq(a: Letter, b: Letter) -> bool:
    return a.tag == b.tag and vleq(a.vector, b.vector)


def higman_leq(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """Subsequence embedding with letterwise domination.

    Greedy leftmost matching is optimal for this order, so a single pass
    suffices.
    """
    j = 0
    for a in u:
        while j < len(v) and not letter_leq(a, v[j]):
            j += 1
        if j == len(v):
            return False
        j += 1
    return True


def divides(alpha: VerMorphism, gamma: VerMorphism) -> VerMorphism | None:
    """Return the lex-least ``beta`` with ``beta o alpha == gamma``, if any."""
    if alpha.source != gamma.source or alpha.r != gamma.r:
        raise CategoryError("divisibility needs a common source")
    e, n = alpha.target
    f, p = gamma.target
    if e > f or n > p:
        return None
    wa = word_encode(alpha)
    wg = word_encode(gamma)
    best = None
    best_word = None
    for b1 in itertools.combinations(range(p), n):
        if tuple(b1[i] for i in alpha.alpha1) != gamma.alpha1:
            continue
        b3 = []
        for j in range(n):
            x, y = wa[j], wg[b1[j]]
            if x.tag != y.tag or not vleq(x.vector, y.vector):
                break
            b3.append(vsub(y.vector, x.vector))
        else:
            image = set(b1)
            b2 = tuple((i, wg[i].vector) for i in range(p) if i not in image)
            beta = VerMorphism(alpha.r, alpha.target, gamma.target, b1, b2, tuple(b3))
            w = word_encode(beta)
            if best is None or w < best_word:
                best, best_word = beta, w
    return best


def lex_compare(alpha: VerMorphism, gamma: VerMorphism) -> int:
    """-1, 0 or 1: lexicographic comparison of words (Gen letters above Shift)."""
    if alpha.source != gamma.source or alpha.target != gamma.target:
        raise CategoryError("lex order compares morphisms in one hom-set")
    a, b = word_encode(alpha), word_encode(gamma)
    return (a > b) - (a < b)


# ---------------------------------------------------------------------------
# symmetric group action


def perm_compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """One-line notation: ``(s t)(i) = s[t[i]]``."""
    return tuple(s[i] for i in t)


def perm_inverse(s: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(s)
    for i, x in enumerate(s):
        inv[x] = i
    return tuple(inv)


def induced_permutation(sigma: Sequence[int], alpha1: Sequence[int]) -> tuple[int, ...]:
    """The unique tau with ``sigma alpha1 tau^-1`` order-preserving."""
    images = [sigma[i] for i in alpha1]
    order = sorted(range(len(images)), key=images.__getitem__)
    tau = [0] * len(images)
    for rank_, j in enumerate(order):
        tau[j] = rank_
    return tuple(tau)


def sigma_act(sigma: Sequence[int], alpha: VerMorphism) -> tuple[VerMorphism, tuple[int, ...]]:
    n = alpha.target.m
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise CategoryError(f"sigma must be a permutation of {n} slots")
    tau = induced_permutation(sigma, alpha.alpha1)
    tinv = perm_inverse(tau)
    m = alpha.source.m
    a1 = tuple(sigma[alpha.alpha1[tinv[k]]] for k in range(m))
    a2 = tuple(sorted((sigma[i], v) for i, v in alpha.alpha2))
    a3 = tuple(alpha.alpha3[tinv[k]] for k in range(m))
    return VerMorphism(alpha.r, alpha.source, alpha.target, a1, a2, a3), tau


# ---------------------------------------------------------------------------
# formal combinations


class FormalCombo:
    """Finite Q-linear combination of morphisms sharing one hom-set."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, terms: Mapping[VerMorphism, object] | None = None, *, source=None, target=None):
        clean: dict[VerMorphism, Rational] = {}
        for mor, c in (terms or {}).items():
            c = Q(c)
            if c:
                clean[mor] = clean.get(mor, 0) + c
        clean = {k: v for k, v in clean.items() if v}
        objs = {(k.source, k.target) for k in clean}
        if len(objs) > 1:
            raise CategoryError("all terms must share source and target")
        if objs:
            source, target = objs.pop()
        self.source = None if source is None else ObjectDM(*source)
        self.target = None if target is None else ObjectDM(*target)
        self.terms = clean

    @classmethod
    def of(cls, alpha: VerMorphism) -> "FormalCombo":
        return cls({alpha: 1})

    def __add__(self, other: "FormalCombo") -> "FormalCombo":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return FormalCombo(t, source=self.source or other.source, target=self.target or other.target)

    def scale(self, c) -> "FormalCombo":
        c = Q(c)
        return FormalCombo({k: c * v for k, v in self.terms.items()}, source=self.source, target=self.target)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCombo):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"FormalCombo({len(self.terms)} terms, {self.source}->{self.target})"


def compose_combo(beta: FormalCombo, alpha: FormalCombo) -> FormalCombo:
    out: dict = {}
    for b, cb in beta.terms.items():
        for a, ca in alpha.terms.items():
            g = compose(b, a)
            out[g] = out.get(g, 0) + cb * ca
    return FormalCombo(out, source=alpha.source, target=beta.target)


def act_combo(sigma: Sequence[int], c: FormalCombo) -> FormalCombo:
    out: dict = {}
    for a, v in c.terms.items():
        b, _ = sigma_act(sigma, a)
        out[b] = out.get(b, 0) + v
    return FormalCombo(out, source=c.source, target=c.target)


def symmetrize(c: FormalCombo) -> FormalCombo:
    """Average of the combination over the symmetric group on target slots."""
    if not c.terms:
        return c
    n = c.target.m
    if n > MAX_SYMMETRIZE_WIDTH:
        raise CategoryError(f"symmetrize enumerates n! permutations; n={n} exceeds {MAX_SYMMETRIZE_WIDTH}")
    out: dict = {}
    for sigma in itertools.permutations(range(n)):
        for a, v in c.terms.items():
            b, _ = sigma_act(sigma, a)
            out[b] = out.get(b, 0) + v
    scale = mpq(1, math.factorial(n))
    return FormalCombo({k: v * scale for k, v in out.items()}, source=c.source, target=c.target)


def is_invariant(c: FormalCombo) -> bool:
    if not c.terms:
        return True
    n = c.target.m
    return all(act_combo(s, c) == c for s in _generators(n))


def _generators(n: int) -> list[tuple[int, ...]]:
    # adjacent transpositions generate the symmetric group
    gens = []
    for i in range(n - 1):
        s = list(range(n))
        s[i], s[i + 1] = s[i + 1], s[i]
        gens.append(tuple(s))
    return gens
