"""Graded Betti numbers of Sec_{d,r}(B) over Sym(B_d) by Koszul homology.

The degree-t strand of the Koszul complex is

    ... -> L^i(B_d) (x) S_{t-i} -> L^(i-1)(B_d) (x) S_{t-i+1} -> ...

where S = Sym(B_d)/I(r) and the differential is
``v_J (x) s -> sum_a (-1)^a v_{J - j_a} (x) (v_{j_a} * s)``.  The quotient
S_m is coordinatised by the non-pivot monomials of the RREF ideal piece.
Betti numbers are ``dim C_{i,t} - rank d_i - rank d_{i+1}`` and the
internal degree t counts width (Sym(B_d)-degree).
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import graded_algebra as ga
from .exact_linalg import Matrix, rank_of_rows
from .graded_algebra import GradedAlgebra
from .secant_ideals import secant, sec_hilbert


class ResolutionError(ValueError):
    pass


class KoszulComplex:
    """Koszul complex of Sec_{d,r}(B); differential ranks are cached per (i, t)."""

    def __init__(self, B: GradedAlgebra, r: int, d: int):
        if r < 1:
            raise ResolutionError("r must be at least 1")
        self.B = B
        self.r = r
        self.d = d
        self.N = B.dim(d)
        self._ranks: dict = {}
        self._mult: dict = {}
        self._lock = threading.RLock()

    # -- quotient ring data -------------------------------------------------

    def quotient_dim(self, m: int) -> int:
        if m < 0:
            return 0
        return secant(self.B, self.r, self.d, m).codim

    def _mult_data(self, m: int) -> list[list[dict]]:
        """``table[s][j]``: coordinates in S_{m+1} of v_j times the s-th basis class of S_m."""
        hit = self._mult.get(m)
        if hit is None:
            N = self.N
            lower = secant(self.B, self.r, self.d, m)
            upper = secant(self.B, self.r, self.d, m + 1)
            monos = ga._sym_basis(N, m)
            idx = ga._sym_index(N, m + 1)
            hit = []
            for col in lower.complement_columns():
                u = monos[col]
                hit.append([upper.unit_quotient(idx[tuple(sorted(u + (j,)))]) for j in range(N)])
            with self._lock:
                self._mult.setdefault(m, hit)
        return hit

    def chain_dim(self, i: int, t: int) -> int:
        if i < 0 or i > self.N or t - i < 0:
            return 0
        return math.comb(self.N, i) * self.quotient_dim(t - i)

    # -- differentials --------------------------------------------------------

    def _columns(self, i: int, t: int) -> list[dict]:
        """Images of the basis of C_{i,t} in C_{i-1,t}, as sparse columns."""
        N = self.N
        m = t - i
        sdim = self.quotient_dim(m)
        tdim = self.quotient_dim(m + 1)
        if i < 1 or i > N or m < 0:
            return []
        if not sdim:
            return []
        table = self._mult_data(m)
        faces = {J: k for k, J in enumerate(itertools.combinations(range(N), i - 1))}
        cols = []
        for J in itertools.combinations(range(N), i):
            drops = [(-1) ** a for a in range(i)]
            targets = [faces[J[:a] + J[a + 1 :]] * tdim for a in range(i)]
            for s in range(sdim):
                row = table[s]
                col: dict = {}
                for a in range(i):
                    sign = drops[a]
                    base = targets[a]
                    for q, v in row[J[a]].items():
                        col[base + q] = col.get(base + q, 0) + sign * v
                cols.append({k: v for k, v in col.items() if v})
        return cols

    def differential(self, i: int, t: int) -> Matrix:
        """Matrix of d_i : C_{i,t} -> C_{i-1,t} (rows index the target)."""
        if i < 1:
            raise ResolutionError("differentials start at i = 1")
        return Matrix.from_columns(self.chain_dim(i - 1, t), self._columns(i, t))

    def rank(self, i: int, t: int) -> int:
        """Rank of d_i in degree t (zero outside the complex)."""
        if i < 1 or i > self.N or t - i < 0:
            return 0
        key = (i, t)
        hit = self._ranks.get(key)
        if hit is None:
            # rank of the transpose: each column is one row to eliminate
            hit = rank_of_rows(self._columns(i, t))
            with self._lock:
                self._ranks[key] = hit
        return hit

    def betti(self, i: int, t: int) -> int:
        if i < 0 or t < 0:
            return 0
        return self.chain_dim(i, t) - self.rank(i, t) - self.rank(i + 1, t)

    def square_zero(self, i: int, t: int) -> bool:
        """d_i o d_{i+1} == 0 in degree t, checked exactly."""
        if i < 1 or i + 1 > self.N or t - i - 1 < 0:
            return True
        outer = self.differential(i, t)
        for col in self._columns(i + 1, t):
            if outer.apply(col):
                return False
        return True


def koszul_differential(B: GradedAlgebra, r: int, d: int, i: int, t: int) -> Matrix:
    if i < 1 or t < i:
        raise ResolutionError("need i >= 1 and t >= i")
    return complex_for(B, r, d).differential(i, t)


_complexes: dict = {}
_complexes_guard = threading.Lock()


def complex_for(B: GradedAlgebra, r: int, d: int) -> KoszulComplex:
    key = (B, r, d)
    with _complexes_guard:
        c = _complexes.get(key)
        if c is None:
            c = _complexes[key] = KoszulComplex(B, r, d)
        return c


def betti(B: GradedAlgebra, r: int, d: int, i: int, t: int) -> int:
    return complex_for(B, r, d).betti(i, t)


@dataclass
class BettiTable:
    ring: str
    d: int
    r: int
    i_max: int
    t_max: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, it: tuple[int, int]) -> int:
        return self.entries.get(it, 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, t, self.entries[(i, t)]) for i, t in sorted(self.entries)]

    def to_csv(self) -> str:
        lines = ["i,t,beta"]
        lines += [f"{i},{t},{b}" for i, t, b in self.rows()]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "d": self.d,
            "r": self.r,
            "i_max": self.i_max,
            "t_max": self.t_max,
            "entries": [{"i": i, "t": t, "beta": b} for i, t, b in self.rows()],
        }

    def render(self) -> str:
        """Macaulay2-style table: columns i, rows t - i."""
        width = max(4, *(len(str(b)) + 1 for b in self.entries.values())) if self.entries else 4
        head = "     " + "".join(f"{i:>{width}}" for i in range(self.i_max + 1))
        lines = [f"Betti table of Sec_{{{self.d},{self.r}}}({self.ring})", head]
        for k in range(self.t_max + 1):
            cells = []
            for i in range(self.i_max + 1):
                t = i + k
                if t > self.t_max:
                    cells.append(f"{'':>{width}}")
                else:
                    b = self.entries.get((i, t), 0)
                    cells.append(f"{(b if b else '.'):>{width}}")
            if any(c.strip() for c in cells):
                lines.append(f"{k:>3}: " + "".join(cells))
        return "\n".join(lines)


def betti_table(B: GradedAlgebra, r: int, d: int, i_max: int, t_max: int) -> BettiTable:
    kc = complex_for(B, r, d)
    table = BettiTable(str(B), d, r, i_max, t_max)
    for i in range(i_max + 1):
        for t in range(i, t_max + 1):
            table.entries[(i, t)] = kc.betti(i, t)
    return table


def max_tor_degree(table: BettiTable, i: int) -> int | None:
    degs = [t for (j, t), b in table.entries.items() if j == i and b]
    return max(degs) if degs else None


def nonzero_degrees(table: BettiTable, i: int) -> list[int]:
    return sorted(t for (j, t), b in table.entries.items() if j == i and b)


def estimated_rows(B: GradedAlgebra, d: int, i_max: int, t_max: int) -> int:
    """Upper bound on the largest elimination: dim L^i(B_d) * dim Sym^(t-i)(B_d)."""
    N = B.dim(d)
    best = 0
    for i in range(0, min(i_max + 1, N) + 1):
        for t in range(i, t_max + 1):
            best = max(best, math.comb(N, i) * ga.sym_dim(N, t - i))
    return best


@dataclass
class ScanReport:
    ring: str
    r: int
    i: int
    t_max: int
    per_d: list = field(default_factory=list)

    @property
    def observed(self) -> list[int]:
        return [p["max_degree"] for p in self.per_d if p["max_degree"] is not None]

    @property
    def constant(self) -> bool:
        # a vanishing Tor group is concentrated in every degree range
        obs = self.observed
        return bool(obs) and len(set(obs)) == 1

    @property
    def constant_value(self) -> int | None:
        return self.observed[0] if self.constant else None

    def to_dict(self) -> dict:
        return {
            "command": "scan-bounds",
            "ring": self.ring,
            "r": self.r,
            "i": self.i,
            "t_max": self.t_max,
            "per_d": list(self.per_d),
            "constant": self.constant,
        }


def bound_scan(
    B: GradedAlgebra,
    r: int,
    i: int,
    d_list: Iterable[int],
    t_max: int,
    *,
    mapper: Callable = map,
) -> ScanReport:
    """max_tor_degree(i) of Sec_{d,r}(B) for each d, and whether it is constant.

    ``mapper`` can be swapped for a parallel map.
    """
    d_list = list(d_list)
    results = list(mapper(_scan_one, [(B, r, i, d, t_max) for d in d_list]))
    report = ScanReport(str(B), r, i, t_max)
    for d, (deg, nz) in zip(d_list, results):
        report.per_d.append({"d": d, "max_degree": deg, "nonzero_degrees": nz})
    return report


def ring_scan(
    algebras: Sequence[GradedAlgebra], r: int, i: int, d: int, t_max: int, *, mapper: Callable = map
) -> list[dict]:
    """Nonzero degrees of Tor_i at fixed d across several algebras."""
    results = list(mapper(_scan_one, [(B, r, i, d, t_max) for B in algebras]))
    return [
        {"ring": str(B), "max_degree": deg, "nonzero_degrees": nz} for B, (deg, nz) in zip(algebras, results)
    ]


def _scan_one(args) -> tuple[int | None, list[int]]:
    B, r, i, d, t_max = args
    kc = complex_for(B, r, d)
    nz = [t for t in range(i, t_max + 1) if kc.betti(i, t)]
    return (max(nz) if nz else None), nz


def euler_check(B: GradedAlgebra, r: int, d: int, t: int) -> bool:
    """sum_i (-1)^i beta_{i,t} == sum_i (-1)^i C(N,i) h_S(t-i)."""
    kc = complex_for(B, r, d)
    N = kc.N
    top = min(t, N)
    lhs = sum((-1) ** i * kc.betti(i, t) for i in range(top + 1))
    h = sec_hilbert(B, r, d, t)
    rhs = sum((-1) ** i * math.comb(N, i) * h[t - i] for i in range(top + 1))
    return lhs == rhs


def free_module_dim_check(B: GradedAlgebra, d: int, e: int, n: int, m: int) -> bool:
    """Symmetrized hom-space (e,n) -> (d,m) versus Sym^n(B_{d-e}) (x) Sym^(m-n)(B_d).

    The left side counts orbits of the symmetric group on basic morphisms
    with basis-element values, by brute-force canonical forms.
    """
    if e > d or n > m or min(d, e, n, m) < 0:
        raise ResolutionError("need 0 <= e <= d and 0 <= n <= m")
    return symmetrized_hom_dim(B, (e, n), (d, m)) == ga.sym_dim(B.dim(d - e), n) * ga.sym_dim(
        B.dim(d), m - n
    )


def symmetrized_hom_dim(B: GradedAlgebra, source: Sequence[int], target: Sequence[int]) -> int:
    e, n = source
    d, m = target
    shift = range(B.dim(d - e))
    gen = range(B.dim(d))
    perms = list(itertools.permutations(range(m)))
    seen = set()
    orbits = 0
    for a1 in itertools.combinations(range(m), n):
        free = [i for i in range(m) if i not in set(a1)]
        for v2 in itertools.product(gen, repeat=len(free)):
            for v3 in itertools.product(shift, repeat=n):
                word = [None] * m
                for j, i in enumerate(a1):
                    word[i] = (0, v3[j])
                for i, v in zip(free, v2):
                    word[i] = (1, v)
                word = tuple(word)
                if word in seen:
                    continue
                orbits += 1
                for sigma in perms:
                    # sigma moves the letter at slot i to slot sigma[i]
                    moved = [None] * m
                    for i, x in enumerate(word):
                        moved[sigma[i]] = x
                    seen.add(tuple(moved))
    return orbits
