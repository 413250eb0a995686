"""Secant ideals of Veronese subrings as exact subspaces of Sym^m(B_d).

``I(1)_{d,m}`` is the kernel of multiplication Sym^m(B_d) -> B_{dm}.  For
r >= 2, ``I(r)_{d,m}`` is the kernel of the comultiplication

    Sym^m(B_d) -> sum_i  Sym^i/I(1)_{d,i}  (x)  Sym^(m-i)/I(r-1)_{d,m-i}

assembled as one stacked matrix over all i = 0..m.  Every piece is stored
in RREF, memoised per algebra.
"""

from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import graded_algebra as ga
from . import veronese_cat as vc
from .exact_linalg import Matrix, Subspace, kernel_basis, span
from .graded_algebra import GradedAlgebra, SymElement


class SecantError(ValueError):
    pass


@dataclass
class SecantCache:
    """Memo of ideal pieces for one algebra, keyed by ``(r, d, m)``."""

    algebra: GradedAlgebra
    store: dict = field(default_factory=dict)
    _locks: dict = field(default_factory=dict)
    _guard: threading.Lock = field(default_factory=threading.Lock)

    def get(self, r: int, d: int, m: int) -> Subspace:
        key = (r, d, m)
        hit = self.store.get(key)
        if hit is not None:
            return hit
        with self._guard:
            lock = self._locks.setdefault(key, threading.RLock())
        with lock:
            hit = self.store.get(key)
            if hit is None:
                hit = _ideal_one(self.algebra, d, m) if r == 1 else _secant_step(self, r, d, m)
                self.store[key] = hit
        return hit


_caches: dict = {}
_caches_guard = threading.Lock()


def cache_for(B: GradedAlgebra) -> SecantCache:
    with _caches_guard:
        c = _caches.get(B)
        if c is None:
            c = _caches[B] = SecantCache(B)
        return c


def clear_caches() -> None:
    with _caches_guard:
        _caches.clear()


def _ideal_one(B: GradedAlgebra, d: int, m: int) -> Subspace:
    basis = ga.sym_basis(B, d, m)
    if m <= 1:
        return Subspace.zero(len(basis))
    labels = B.basis(d)
    target = {}
    columns = []
    for mono in basis:
        lab = labels[mono[0]]
        for x in mono[1:]:
            lab = B._product_label(lab, labels[x]) if lab is not None else None
        if lab is None:
            columns.append({})
        else:
            columns.append({target.setdefault(lab, len(target)): 1})
    return kernel_basis(Matrix.from_columns(max(len(target), 1), columns))


def ideal_one(B: GradedAlgebra, d: int, m: int) -> Subspace:
    """Kernel of Sym^m(B_d) -> B_{dm}."""
    if d < 0 or m < 0:
        raise SecantError("d and m must be nonnegative")
    return cache_for(B).get(1, d, m)


def _secant_step(cache: SecantCache, r: int, d: int, m: int) -> Subspace:
    B = cache.algebra
    N = B.dim(d)
    basis = ga._sym_basis(N, m)
    if m <= 1:
        return Subspace.zero(len(basis))
    blocks = []
    offset = 0
    for i in range(m + 1):
        left = cache.get(1, d, i)
        right = cache.get(r - 1, d, m - i)
        blocks.append((i, left, right, offset, right.codim))
        offset += left.codim * right.codim
    columns = []
    for mono in basis:
        col: dict = {}
        for i, left, right, off, width in blocks:
            if not left.codim or not width:
                continue
            li = ga._sym_index(N, i)
            ri = ga._sym_index(N, m - i)
            for (lm, rm), k in ga.coproduct_monomial(mono, i).items():
                lq = left.unit_quotient(li[lm])
                rq = right.unit_quotient(ri[rm])
                for a, x in lq.items():
                    base = off + a * width
                    xk = x * k
                    for b, y in rq.items():
                        pos = base + b
                        v = col.get(pos, 0) + xk * y
                        if v:
                            col[pos] = v
                        else:
                            col.pop(pos, None)
        columns.append(col)
    return kernel_basis(Matrix.from_columns(max(offset, 1), columns))


def secant(B: GradedAlgebra, r: int, d: int, m: int) -> Subspace:
    """The secant ideal piece I(r)_{d,m} inside Sym^m(B_d)."""
    if r < 1:
        raise SecantError("r must be at least 1")
    if d < 0 or m < 0:
        raise SecantError("d and m must be nonnegative")
    return cache_for(B).get(r, d, m)


def sec_hilbert(B: GradedAlgebra, r: int, d: int, m_max: int) -> list[int]:
    """dim Sym^m(B_d)/I(r)_{d,m} for m = 0..m_max."""
    return [secant(B, r, d, m).codim for m in range(m_max + 1)]


def is_in_secant(B: GradedAlgebra, r: int, d: int, m: int, f: SymElement) -> bool:
    if (f.degree, f.width, f.n) != (d, m, B.dim(d)):
        raise SecantError("element does not live in Sym^m(B_d)")
    return secant(B, r, d, m).contains(f.sparse())


def ideal_piece_from_generators(gens: Sequence[SymElement], m: int) -> Subspace:
    """Span of g * u over generators g and monomials u of the missing width."""
    if not gens:
        raise SecantError("need at least one generator")
    d, m0, n = gens[0].degree, gens[0].width, gens[0].n
    if any((g.degree, g.width, g.n) != (d, m0, n) for g in gens):
        raise SecantError("generators must share degree and width")
    if m < m0:
        raise SecantError(f"width {m} is below the generator width {m0}")
    idx = ga._sym_index(n, m)
    rows = []
    for u in ga._sym_basis(n, m - m0):
        for g in gens:
            row: dict = {}
            for mono, c in g.terms.items():
                k = idx[tuple(sorted(mono + u))]
                row[k] = row.get(k, 0) + c
            rows.append(row)
    return span(ga.sym_dim(n, m), rows)


# ---------------------------------------------------------------------------
# catalecticants for k[s, t]


def catalecticant_minors(d: int, k: int) -> list[SymElement]:
    """k x k minors of the k x (d-k+2) catalecticant of binary forms of degree d.

    Entry (i, j) is the basis element s^(i+j) t^(d-i-j) of B_d for
    B = k[s, t]; minors are listed by column subsets in lex order.
    """
    if k < 1:
        raise SecantError("minor size must be positive")
    ncols = d - k + 2
    if ncols < k:
        raise SecantError(f"degree {d} too small for {k}x{k} minors (need d >= {2 * k - 2})")
    out = []
    for cols in itertools.combinations(range(ncols), k):
        terms: dict = {}
        for perm in itertools.permutations(range(k)):
            sign = _perm_sign(perm)
            mono = tuple(sorted(i + cols[perm[i]] for i in range(k)))
            terms[mono] = terms.get(mono, 0) + sign
        out.append(SymElement(d, k, d + 1, terms))
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# structural checks


@dataclass
class ClosureReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_element(space: Subspace, rng: random.Random, d: int, m: int, n: int) -> SymElement:
    vec: dict = {}
    for row in space.basis:
        c = rng.randint(-3, 3)
        if c:
            for j, a in row.items():
                vec[j] = vec.get(j, 0) + c * a
    return SymElement.from_sparse(d, m, n, vec)


def random_ver_morphism(rng: random.Random, r: int, source, target) -> vc.VerMorphism:
    d, m = source
    e, n = target
    a1 = tuple(sorted(rng.sample(range(n), m)))
    free = [i for i in range(n) if i not in set(a1)]
    gens = vc.multi(r, e)
    shifts = vc.multi(r, e - d)
    return vc.VerMorphism(
        r,
        vc.ObjectDM(d, m),
        vc.ObjectDM(e, n),
        a1,
        tuple((i, rng.choice(gens)) for i in free),
        tuple(rng.choice(shifts) for _ in range(m)),
    )


def submodule_closure_check(
    B: GradedAlgebra,
    r: int,
    samples: int,
    *,
    cells: Iterable[tuple[int, int]],
    max_degree_step: int = 1,
    max_width_step: int = 1,
    seed: int = 0,
) -> ClosureReport:
    """Push random ideal elements along random symmetrized morphisms.

    Each sample picks a cell (d, m) from ``cells`` with a nonzero ideal
    piece, a target (e, n) within the given steps, a random monomial
    morphism, symmetrizes it over the target slots and applies the
    resulting combination.  The image must land in I(r)_{e,n}.
    """
    rng = random.Random(seed)
    cells = [c for c in cells if secant(B, r, *c).dim]
    report = ClosureReport()
    if not cells:
        return report
    for _ in range(samples):
        d, m = rng.choice(cells)
        e = d + rng.randint(0, max_degree_step)
        n = m + rng.randint(0, max_width_step)
        f = random_element(secant(B, r, d, m), rng, d, m, B.dim(d))
        alpha = random_ver_morphism(rng, B.r, (d, m), (e, n))
        combo = ga.combo_in_B(B, vc.symmetrize(vc.FormalCombo.of(alpha)))
        image = ga.apply_combo_sym(B, combo, f)
        report.checked += 1
        if not is_in_secant(B, r, e, n, image):
            report.violations.append((alpha, f, image))
    return report


def chain_check(B: GradedAlgebra, r: int, d: int, m: int) -> bool:
    """I(r)_{d,m} is contained in I(r-1)_{d,m}."""
    return r < 2 or secant(B, r, d, m).issubspace(secant(B, r - 1, d, m))


def ideal_closure_check(B: GradedAlgebra, r: int, d: int, m: int) -> bool:
    """B_d * I(r)_{d,m} lies in I(r)_{d,m+1}."""
    N = B.dim(d)
    lower = secant(B, r, d, m)
    upper = secant(B, r, d, m + 1)
    basis = ga._sym_basis(N, m)
    idx = ga._sym_index(N, m + 1)
    for row in lower.basis:
        for v in range(N):
            vec: dict = {}
            for j, a in row.items():
                k = idx[tuple(sorted(basis[j] + (v,)))]
                vec[k] = vec.get(k, 0) + a
            if not upper.contains(vec):
                return False
    return True


def minimal_generator_count(B: GradedAlgebra, r: int, d: int, m: int) -> int:
    """dim I(r)_{d,m} minus the dimension of B_d * I(r)_{d,m-1}."""
    piece = secant(B, r, d, m)
    if m == 0:
        return piece.dim
    N = B.dim(d)
    lower = secant(B, r, d, m - 1)
    basis = ga._sym_basis(N, m - 1)
    idx = ga._sym_index(N, m)
    rows = []
    for row in lower.basis:
        for v in range(N):
            vec: dict = {}
            for j, a in row.items():
                k = idx[tuple(sorted(basis[j] + (v,)))]
                vec[k] = vec.get(k, 0) + a
            rows.append(vec)
    return piece.dim - span(piece.ambient_dim, rows).dim
