"""Graded algebras generated in degree one, with monomial bases.

Three constructors are supported, each with a canonical monomial basis in
which the product of two basis elements is a basis element or zero:

* ``polynomial(r)`` -- k[x_1..x_r]; basis of B_d is multi(r, d).
* ``semigroup(gens)`` -- the ring of the semigroup generated by ``(1, g)``
  for each ``g`` in ``gens``; B_d has one basis element per point of the
  d-fold sumset.  ``semigroup([[1, 0], [0, 1]])`` is k[s, t].
* ``monomial_quotient(r, gens)`` -- k[x_1..x_r] modulo a monomial ideal;
  basis of B_d is the standard monomials.

Basis labels are tuples of ints, sorted ascending inside each degree.
Elements of ``Sym^m(B_d)`` are keyed by sorted tuples of basis indices and
elements of ``B_d^{(x) m}`` by ordered tuples.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from . import veronese_cat as vc
from .exact_linalg import Matrix, Q, Rational, span

KINDS = ("polynomial", "semigroup", "monomial_quotient")


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class GradedAlgebra:
    kind: str
    r: int
    generators: tuple[tuple[int, ...], ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown ring type {self.kind!r}")
        if self.r < 0:
            raise AlgebraError("number of variables must be nonnegative")
        if self.kind == "semigroup":
            if len(self.generators) != self.r or len({len(g) for g in self.generators}) > 1:
                raise AlgebraError("semigroup generators must be vectors of one length")
        if self.kind == "monomial_quotient":
            for g in self.generators:
                if len(g) != self.r or min(g, default=0) < 0:
                    raise AlgebraError("ideal generators must be exponent vectors of length r")

    # -- description files ---------------------------------------------------

    def description(self) -> dict:
        if self.kind == "polynomial":
            return {"type": "polynomial", "vars": self.r}
        if self.kind == "semigroup":
            return {"type": "semigroup", "generators": [list(g) for g in self.generators]}
        return {
            "type": "monomial_quotient",
            "vars": self.r,
            "generators": [list(g) for g in self.generators],
        }

    def __str__(self) -> str:
        if self.kind == "polynomial":
            return f"Polynomial({self.r})"
        if self.kind == "semigroup":
            return f"Semigroup({[list(g) for g in self.generators]})"
        return f"MonomialQuotient({self.r}, {[list(g) for g in self.generators]})"

    # -- bases ---------------------------------------------------------------

    def _degree_data(self, d: int) -> tuple[list, dict]:
        key = ("basis", d)
        hit = self._cache.get(key)
        if hit is None:
            with self._lock:
                hit = self._cache.get(key)
                if hit is None:
                    labels = self._labels(d)
                    hit = (labels, {lab: i for i, lab in enumerate(labels)})
                    self._cache[key] = hit
        return hit

    def _labels(self, d: int) -> list:
        if d < 0:
            return []
        if self.kind == "polynomial":
            return vc.multi(self.r, d)
        if self.kind == "monomial_quotient":
            return [a for a in vc.multi(self.r, d) if self._standard(a)]
        if d == 0:
            k = len(self.generators[0]) if self.generators else 0
            return [(0,) * k]
        prev = self._degree_data(d - 1)[0]
        pts = {vc.vadd(p, g) for p in prev for g in self.generators}
        return sorted(pts)

    def _standard(self, a) -> bool:
        return not any(vc.vleq(g, a) for g in self.generators)

    def basis(self, d: int) -> list:
        return list(self._degree_data(d)[0])

    def dim(self, d: int) -> int:
        return len(self._degree_data(d)[0])

    def index(self, d: int, label) -> int:
        return self._degree_data(d)[1][tuple(label)]

    def _product_label(self, a, b):
        c = vc.vadd(a, b)
        if self.kind == "monomial_quotient" and not self._standard(c):
            return None
        return c

    def mult_table(self, d: int, e: int) -> list[list[int | None]]:
        """``table[i][j]`` is the index in B_{d+e} of basis_d[i] * basis_e[j], or None."""
        key = ("mult", d, e)
        hit = self._cache.get(key)
        if hit is None:
            bd, be = self.basis(d), self.basis(e)
            idx = self._degree_data(d + e)[1]
            hit = []
            for a in bd:
                row = []
                for b in be:
                    c = self._product_label(a, b)
                    row.append(None if c is None else idx[c])
                hit.append(row)
            with self._lock:
                self._cache.setdefault(key, hit)
        return hit

    def monomial(self, exponents: Sequence[int]) -> "AlgElement":
        """Image of x^a under k[x_1..x_r] -> B sending x_i to the i-th generator."""
        a = tuple(exponents)
        if len(a) != self.r or min(a, default=0) < 0:
            raise AlgebraError(f"exponent vector must have length {self.r}")
        d = sum(a)
        if self.kind == "semigroup":
            k = len(self.generators[0]) if self.generators else 0
            lab = (0,) * k
            for c, g in zip(a, self.generators):
                lab = tuple(x + c * y for x, y in zip(lab, g))
        else:
            lab = a
            if self.kind == "monomial_quotient" and not self._standard(a):
                return AlgElement.zero(self, d)
        return AlgElement.basis_element(self, d, self.index(d, lab))


def polynomial(r: int) -> GradedAlgebra:
    return GradedAlgebra("polynomial", r)


def semigroup(generators: Iterable[Sequence[int]]) -> GradedAlgebra:
    gens = tuple(tuple(int(x) for x in g) for g in generators)
    return GradedAlgebra("semigroup", len(gens), gens)


def monomial_quotient(r: int, generators: Iterable[Sequence[int]]) -> GradedAlgebra:
    gens = tuple(sorted({tuple(int(x) for x in g) for g in generators}))
    return GradedAlgebra("monomial_quotient", r, gens)


def p1() -> GradedAlgebra:
    """k[s, t] as a semigroup ring; basis index i of B_d is s^i t^(d-i)."""
    return semigroup([[1, 0], [0, 1]])


def from_description(desc: Mapping) -> GradedAlgebra:
    """Build an algebra from a ring description (the ring-file schema)."""
    if not isinstance(desc, Mapping) or "type" not in desc:
        raise AlgebraError("ring description must be an object with a 'type' field")
    kind = desc["type"]
    try:
        if kind == "polynomial":
            return polynomial(int(desc["vars"]))
        if kind == "semigroup":
            gens = desc["generators"]
            if not gens:
                raise AlgebraError("semigroup needs at least one generator")
            return semigroup(gens)
        if kind == "monomial_quotient":
            return monomial_quotient(int(desc["vars"]), desc.get("generators", []))
    except (KeyError, TypeError) as exc:
        raise AlgebraError(f"malformed ring description: {exc}") from exc
    raise AlgebraError(f"unknown ring type {kind!r}")


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class AlgElement:
    degree: int
    coords: tuple[Rational, ...]

    @classmethod
    def zero(cls, B: GradedAlgebra, d: int) -> "AlgElement":
        return cls(d, (mpq(0),) * B.dim(d))

    @classmethod
    def basis_element(cls, B: GradedAlgebra, d: int, i: int) -> "AlgElement":
        c = [mpq(0)] * B.dim(d)
        c[i] = mpq(1)
        return cls(d, tuple(c))

    @classmethod
    def from_coords(cls, d: int, coords: Iterable) -> "AlgElement":
        return cls(d, tuple(Q(x) for x in coords))

    @classmethod
    def one(cls) -> "AlgElement":
        return cls(0, (mpq(1),))

    def sparse(self) -> dict[int, Rational]:
        return {i: c for i, c in enumerate(self.coords) if c}

    def __add__(self, other: "AlgElement") -> "AlgElement":
        if self.degree != other.degree:
            raise AlgebraError("cannot add elements of different degrees")
        return AlgElement(self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "AlgElement":
        c = Q(c)
        return AlgElement(self.degree, tuple(c * a for a in self.coords))


def mult(B: GradedAlgebra, x: AlgElement, y: AlgElement) -> AlgElement:
    if len(x.coords) != B.dim(x.degree) or len(y.coords) != B.dim(y.degree):
        raise AlgebraError("element does not belong to this algebra")
    table = B.mult_table(x.degree, y.degree)
    out = [mpq(0)] * B.dim(x.degree + y.degree)
    for i, a in x.sparse().items():
        row = table[i]
        for j, b in y.sparse().items():
            k = row[j]
            if k is not None:
                out[k] += a * b
    return AlgElement(x.degree + y.degree, tuple(out))


def _mult_basis(B: GradedAlgebra, x: AlgElement, d: int, i: int) -> dict[int, Rational]:
    """x * (i-th basis element of B_d), sparse."""
    table = B.mult_table(x.degree, d)
    out: dict = {}
    for a_idx, a in x.sparse().items():
        k = table[a_idx][i]
        if k is not None:
            out[k] = out.get(k, 0) + a
    return {k: v for k, v in out.items() if v}


def mult_matrix(B: GradedAlgebra, d: int, e: int) -> Matrix:
    """B_d (x) B_e -> B_{d+e}; column ``i * dim B_e + j`` is the pair (i, j)."""
    table = B.mult_table(d, e)
    ne = B.dim(e)
    entries = {}
    for i, row in enumerate(table):
        for j, k in enumerate(row):
            if k is not None:
                entries[(k, i * ne + j)] = 1
    return Matrix(B.dim(d + e), B.dim(d) * ne, entries)


# ---------------------------------------------------------------------------
# symmetric powers


@lru_cache(maxsize=None)
def _sym_basis(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.combinations_with_replacement(range(n), m))


@lru_cache(maxsize=None)
def _sym_index(n: int, m: int) -> dict:
    return {mono: i for i, mono in enumerate(_sym_basis(n, m))}


def sym_dim(n: int, m: int) -> int:
    """dim Sym^m of an n-dimensional space."""
    if m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    return math.comb(n + m - 1, m)


def sym_basis(B: GradedAlgebra, d: int, m: int) -> list[tuple[int, ...]]:
    """Multiset monomials of Sym^m(B_d), lex ascending on sorted index tuples."""
    return list(_sym_basis(B.dim(d), m))


def sym_index(n: int, m: int, mono: Sequence[int]) -> int:
    return _sym_index(n, m)[tuple(mono)]


class SymElement:
    """Element of Sym^m(B_d); ``terms`` maps sorted index tuples to rationals."""

    __slots__ = ("degree", "width", "n", "terms")

    def __init__(self, degree: int, width: int, n: int, terms: Mapping | None = None):
        self.degree = degree
        self.width = width
        self.n = n
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono))
            if len(mono) != width or (mono and not 0 <= mono[0] <= mono[-1] < n):
                raise AlgebraError(f"{mono} is not a width-{width} monomial over {n} letters")
            c = Q(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def of(cls, B: GradedAlgebra, d: int, m: int, terms: Mapping | None = None) -> "SymElement":
        return cls(d, m, B.dim(d), terms)

    @classmethod
    def from_coords(cls, d: int, m: int, n: int, coords: Sequence) -> "SymElement":
        basis = _sym_basis(n, m)
        if len(coords) != len(basis):
            raise AlgebraError("coordinate vector has the wrong length")
        return cls(d, m, n, {basis[i]: c for i, c in enumerate(coords) if c})

    @classmethod
    def from_sparse(cls, d: int, m: int, n: int, vec: Mapping[int, object]) -> "SymElement":
        basis = _sym_basis(n, m)
        return cls(d, m, n, {basis[i]: c for i, c in vec.items()})

    def sparse(self) -> dict[int, Rational]:
        idx = _sym_index(self.n, self.width)
        return {idx[mono]: c for mono, c in self.terms.items()}

    def coords(self) -> list[Rational]:
        out = [mpq(0)] * sym_dim(self.n, self.width)
        for i, c in self.sparse().items():
            out[i] = c
        return out

    def _check(self, other: "SymElement"):
        if (self.degree, self.width, self.n) != (other.degree, other.width, other.n):
            raise AlgebraError("elements live in different symmetric powers")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return SymElement(self.degree, self.width, self.n, t)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SymElement":
        c = Q(c)
        return SymElement(self.degree, self.width, self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return (self.degree, self.width, self.n, self.terms) == (
            other.degree,
            other.width,
            other.n,
            other.terms,
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x{list(m)}" for m, c in sorted(self.terms.items())) or "0"
        return f"SymElement(d={self.degree}, m={self.width}: {body})"


def sym_mult(B: GradedAlgebra, f: SymElement, g: SymElement) -> SymElement:
    if f.degree != g.degree or f.n != g.n:
        raise AlgebraError("sym_mult needs a common degree")
    out: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            k = tuple(sorted(a + b))
            out[k] = out.get(k, 0) + ca * cb
    return SymElement(f.degree, f.width + g.width, f.n, out)


def coproduct_monomial(mono: Sequence[int], i: int) -> dict[tuple[tuple, tuple], int]:
    """Component Sym^m -> Sym^i (x) Sym^(m-i) of v -> v(x)1 + 1(x)v on one monomial."""
    mono = tuple(mono)
    if not 0 <= i <= len(mono):
        raise AlgebraError(f"component {i} out of range 0..{len(mono)}")
    counts: dict[int, int] = {}
    for x in mono:
        counts[x] = counts.get(x, 0) + 1
    letters = sorted(counts)
    out = {}
    for b in _bounded_compositions([counts[x] for x in letters], i):
        left = tuple(x for x, k in zip(letters, b) for _ in range(k))
        right = tuple(x for x, k, a in zip(letters, b, (counts[y] for y in letters)) for _ in range(a - k))
        coef = 1
        for x, k in zip(letters, b):
            coef *= math.comb(counts[x], k)
        out[(left, right)] = coef
    return out


def _bounded_compositions(caps: list[int], total: int):
    if not caps:
        if total == 0:
            yield ()
        return
    for k in range(min(caps[0], total) + 1):
        for rest in _bounded_compositions(caps[1:], total - k):
            yield (k,) + rest


def coproduct_component(B: GradedAlgebra, f: SymElement, i: int) -> dict[tuple[tuple, tuple], Rational]:
    """Image of f in Sym^i(B_d) (x) Sym^(m-i)(B_d), keyed by monomial pairs."""
    if not 0 <= i <= f.width:
        raise AlgebraError(f"component {i} out of range 0..{f.width}")
    out: dict = {}
    for mono, c in f.terms.items():
        for key, k in coproduct_monomial(mono, i).items():
            out[key] = out.get(key, 0) + c * k
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# basic morphisms with algebra values


@dataclass(frozen=True)
class BasicMorphismB:
    source: vc.ObjectDM
    target: vc.ObjectDM
    alpha1: tuple[int, ...]
    alpha2: tuple[tuple[int, AlgElement], ...]
    alpha3: tuple[AlgElement, ...]

    def __post_init__(self):
        d, m = self.source
        e, n = self.target
        if d > e or m > n:
            raise AlgebraError(f"no basic morphisms {self.source} -> {self.target}")
        if len(self.alpha1) != m or list(self.alpha1) != sorted(set(self.alpha1)):
            raise AlgebraError("alpha1 must be strictly increasing of length m")
        if self.alpha1 and not 0 <= self.alpha1[0] <= self.alpha1[-1] < n:
            raise AlgebraError("alpha1 must map into [n]")
        free = [i for i in range(n) if i not in set(self.alpha1)]
        if [s for s, _ in self.alpha2] != free:
            raise AlgebraError("alpha2 must be defined exactly off the image of alpha1")
        if any(v.degree != e for _, v in self.alpha2):
            raise AlgebraError("alpha2 values must have the target degree")
        if len(self.alpha3) != m or any(v.degree != e - d for v in self.alpha3):
            raise AlgebraError("alpha3 values must have degree e - d")

    @classmethod
    def make(cls, source, target, alpha1, alpha2: Mapping[int, AlgElement], alpha3) -> "BasicMorphismB":
        return cls(
            vc.ObjectDM(*source),
            vc.ObjectDM(*target),
            tuple(alpha1),
            tuple(sorted(alpha2.items(), key=lambda kv: kv[0])),
            tuple(alpha3),
        )


def identity_basic(obj) -> BasicMorphismB:
    d, m = obj
    one = AlgElement.one()
    return BasicMorphismB(vc.ObjectDM(d, m), vc.ObjectDM(d, m), tuple(range(m)), (), (one,) * m)


def from_ver_morphism(B: GradedAlgebra, alpha: vc.VerMorphism) -> BasicMorphismB:
    """Push a monomial morphism into B via x^a -> B.monomial(a)."""
    if alpha.r != B.r:
        raise AlgebraError("exponent vectors do not match the number of generators")
    return BasicMorphismB(
        alpha.source,
        alpha.target,
        alpha.alpha1,
        tuple((i, B.monomial(v)) for i, v in alpha.alpha2),
        tuple(B.monomial(v) for v in alpha.alpha3),
    )


def compose_basic(B: GradedAlgebra, beta: BasicMorphismB, alpha: BasicMorphismB) -> BasicMorphismB:
    """Composition with values multiplied in B."""
    if alpha.target != beta.source:
        raise AlgebraError("objects do not match")
    b1 = beta.alpha1
    g2 = dict(beta.alpha2)
    for i, v in alpha.alpha2:
        g2[b1[i]] = mult(B, v, beta.alpha3[i])
    g3 = tuple(mult(B, alpha.alpha3[i], beta.alpha3[alpha.alpha1[i]]) for i in range(alpha.source.m))
    return BasicMorphismB(
        alpha.source,
        beta.target,
        tuple(b1[i] for i in alpha.alpha1),
        tuple(sorted(g2.items(), key=lambda kv: kv[0])),
        g3,
    )


def _check_objects(B: GradedAlgebra, alpha: BasicMorphismB, degree: int, width: int, n: int):
    if (degree, width) != tuple(alpha.source):
        raise AlgebraError(f"element lives at {(degree, width)}, morphism starts at {tuple(alpha.source)}")
    if n != B.dim(degree):
        raise AlgebraError("element does not belong to this algebra")


class TensorElement:
    """Element of B_d^{(x) m}; ``terms`` maps ordered index tuples to rationals."""

    __slots__ = ("degree", "width", "n", "terms")

    def __init__(self, degree: int, width: int, n: int, terms: Mapping | None = None):
        self.degree = degree
        self.width = width
        self.n = n
        clean: dict = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != width or any(not 0 <= x < n for x in key):
                raise AlgebraError(f"{key} is not a width-{width} tensor index over {n} letters")
            c = Q(c)
            if c:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def of(cls, B: GradedAlgebra, d: int, m: int, terms: Mapping | None = None) -> "TensorElement":
        return cls(d, m, B.dim(d), terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return TensorElement(self.degree, self.width, self.n, t)

    def scale(self, c) -> "TensorElement":
        c = Q(c)
        return TensorElement(self.degree, self.width, self.n, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.degree, self.width, self.n, self.terms) == (other.degree, other.width, other.n, other.terms)

    def __repr__(self) -> str:
        return f"TensorElement(d={self.degree}, m={self.width}, {len(self.terms)} terms)"


def apply_basic_tensor(B: GradedAlgebra, alpha: BasicMorphismB, f: TensorElement) -> TensorElement:
    """Slot alpha1(i) receives alpha3(i) * b_i; each free slot j receives alpha2(j)."""
    _check_objects(B, alpha, f.degree, f.width, f.n)
    e, n = alpha.target
    free = [(j, v.sparse()) for j, v in alpha.alpha2]
    out: dict = {}
    for key, c in f.terms.items():
        options: list = [None] * n
        for j, sp in free:
            options[j] = list(sp.items())
        for i, b in enumerate(key):
            options[alpha.alpha1[i]] = list(_mult_basis(B, alpha.alpha3[i], f.degree, b).items())
        for choice in itertools.product(*options):
            coef = c
            for _, a in choice:
                coef = coef * a
            k = tuple(idx for idx, _ in choice)
            out[k] = out.get(k, 0) + coef
    return TensorElement(e, n, B.dim(e), out)


def tensor_to_sym(f: TensorElement) -> SymElement:
    """The quotient map B_d^{(x) m} -> Sym^m(B_d)."""
    out: dict = {}
    for key, c in f.terms.items():
        k = tuple(sorted(key))
        out[k] = out.get(k, 0) + c
    return SymElement(f.degree, f.width, f.n, out)


def sym_to_tensor(f: SymElement) -> TensorElement:
    """The symmetric lift: each monomial becomes the average of its orderings."""
    out: dict = {}
    for mono, c in f.terms.items():
        perms = set(itertools.permutations(mono))
        share = c / len(perms)
        for p in perms:
            out[p] = out.get(p, 0) + share
    return TensorElement(f.degree, f.width, f.n, out)


def apply_basic_sym(B: GradedAlgebra, alpha: BasicMorphismB, f: SymElement) -> SymElement:
    """Action on Sym^m(B_d): lift symmetrically, apply, project.

    This is the action of the symmetrization of ``alpha``; applying a
    non-invariant morphism to a non-symmetric tensor and projecting
    afterwards generally gives something else.
    """
    _check_objects(B, alpha, f.degree, f.width, f.n)
    return tensor_to_sym(apply_basic_tensor(B, alpha, sym_to_tensor(f)))


def apply_combo_sym(
    B: GradedAlgebra, combo: Iterable[tuple[object, BasicMorphismB]], f: SymElement
) -> SymElement | None:
    """Apply a linear combination ``[(coef, morphism), ...]`` termwise."""
    total = None
    for c, alpha in combo:
        g = apply_basic_sym(B, alpha, f).scale(c)
        total = g if total is None else total + g
    return total


def apply_combo_tensor(
    B: GradedAlgebra, combo: Iterable[tuple[object, BasicMorphismB]], f: TensorElement
) -> TensorElement | None:
    total = None
    for c, alpha in combo:
        g = apply_basic_tensor(B, alpha, f).scale(c)
        total = g if total is None else total + g
    return total


def combo_in_B(B: GradedAlgebra, combo: vc.FormalCombo) -> list[tuple[Rational, BasicMorphismB]]:
    return [(c, from_ver_morphism(B, a)) for a, c in combo.terms.items()]


# ---------------------------------------------------------------------------
# hom-space dimension


def hom_dimension(B: GradedAlgebra, source, target) -> tuple[int, int]:
    """Dimension of the span of basic morphisms modulo the multilinear relations.

    Values are drawn from a finite set per slot (basis elements, sums of two
    basis elements, doubled basis elements); the quotient of the free space
    on those basic morphisms by every relation instance among them is
    computed by exact rank.  Returns ``(computed, C(n,m) dim B_{e-d}^m dim B_e^{n-m})``.
    """
    d, m = source
    e, n = target
    if d > e or m > n:
        return 0, 0

    def values(deg):
        k = B.dim(deg)
        vals = [((i,), 1) for i in range(k)]
        vals += [((i, j), 1) for i in range(k) for j in range(i + 1, k)]
        vals += [((i,), 2) for i in range(k)]
        return vals

    shift_vals, gen_vals = values(e - d), values(e)
    gens: dict = {}
    for a1 in itertools.combinations(range(n), m):
        slot_vals = [shift_vals if i in a1 else gen_vals for i in range(n)]
        for choice in itertools.product(*slot_vals):
            gens[(a1, choice)] = len(gens)
    relations = []
    for (a1, choice), g in gens.items():
        for slot, (support, scale) in enumerate(choice):
            if len(support) == 2:
                parts = [((support[0],), 1), ((support[1],), 1)]
                rel = {g: -1}
                for p in parts:
                    h = gens[(a1, choice[:slot] + (p,) + choice[slot + 1 :])]
                    rel[h] = rel.get(h, 0) + 1
                relations.append(rel)
            elif scale == 2:
                h = gens[(a1, choice[:slot] + (((support[0],), 1),) + choice[slot + 1 :])]
                relations.append({g: -1, h: 2})
    rel_rank = span(len(gens), relations).dim
    expected = math.comb(n, m) * B.dim(e - d) ** m * B.dim(e) ** (n - m)
    return len(gens) - rel_rank, expected
