"""Seeded property suites over the category, the secant ideals and the
free-module dimension counts.  Each suite returns the number of cases it ran and the
first few violations, so a failing run prints a replayable counterexample.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import graded_algebra as ga
from . import veronese_cat as vc
from .resolutions import free_module_dim_check
from .secant_ideals import chain_check, ideal_closure_check, submodule_closure_check

DEFAULT_SEED = 20240607
KEEP = 3  # violations kept per suite


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)
    failures: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def fail(self, example) -> None:
        self.failures += 1
        if len(self.violations) < KEEP:
            self.violations.append(repr(example))

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "counterexamples": self.violations,
        }


@dataclass
class SelftestReport:
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_dict(self) -> dict:
        return {"command": "selftest", "seed": self.seed, "ok": self.ok, "suites": [s.to_dict() for s in self.suites]}

    def render(self) -> str:
        lines = [f"selftest seed={self.seed}"]
        for s in self.suites:
            status = "ok" if s.ok else f"FAILED ({s.failures})"
            lines.append(f"  {s.name:<28} {s.cases:>7} cases  {status}")
            lines += [f"      {v}" for v in s.violations]
        lines.append("all suites passed" if self.ok else "some suites FAILED")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# random generators


def rand_vec(rng: random.Random, r: int, deg: int) -> vc.Vec:
    cuts = sorted(rng.randint(0, deg) for _ in range(r - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [deg])]
    return tuple(parts)


def rand_morphism(rng: random.Random, r: int, source, target) -> vc.VerMorphism:
    d, m = source
    e, n = target
    a1 = tuple(sorted(rng.sample(range(n), m)))
    taken = set(a1)
    a2 = tuple((i, rand_vec(rng, r, e)) for i in range(n) if i not in taken)
    a3 = tuple(rand_vec(rng, r, e - d) for _ in range(m))
    return vc.VerMorphism(r, vc.ObjectDM(d, m), vc.ObjectDM(e, n), a1, a2, a3)


def rand_chain(rng: random.Random, length: int, *, max_deg: int = 3, max_width: int = 4):
    """Objects o_0 <= o_1 <= ... with random increments."""
    d = rng.randint(0, 2)
    m = rng.randint(0, 2)
    objs = [(d, m)]
    for _ in range(length):
        d = min(max_deg + 3, d + rng.randint(0, 2))
        m = min(max_width + 2, m + rng.randint(0, 1))
        objs.append((d, m))
    return objs


def rand_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def rand_combo(rng: random.Random, r: int, source, target, terms: int = 3) -> vc.FormalCombo:
    out: dict = {}
    for _ in range(terms):
        a = rand_morphism(rng, r, source, target)
        out[a] = out.get(a, 0) + rng.choice([-2, -1, 1, 3])
    return vc.FormalCombo(out, source=source, target=target)


# ---------------------------------------------------------------------------
# category suites


def suite_associativity(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("associativity")
    for _ in range(cases):
        r = rng.randint(1, 3)
        o0, o1, o2, o3 = rand_chain(rng, 3)
        a = rand_morphism(rng, r, o0, o1)
        b = rand_morphism(rng, r, o1, o2)
        c = rand_morphism(rng, r, o2, o3)
        res.cases += 1
        if vc.compose(c, vc.compose(b, a)) != vc.compose(vc.compose(c, b), a):
            res.fail((a, b, c))
        if vc.compose(vc.identity(r, o1), a) != a or vc.compose(a, vc.identity(r, o0)) != a:
            res.fail(("identity", a))
    return res


def suite_word_bijection(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("encode/decode bijection")
    for _ in range(cases):
        r = rng.randint(1, 3)
        src, tgt = rand_chain(rng, 1)
        a = rand_morphism(rng, r, src, tgt)
        res.cases += 1
        back = vc.word_decode(vc.word_encode(a), src, r=r, target_degree=tgt[0])
        if back != a:
            res.fail(a)
    # injectivity on whole hom-sets
    for r in (1, 2):
        for d, m, e, n in itertools.product(range(3), repeat=4):
            words = [vc.word_encode(a) for a in vc.all_morphisms(r, (d, m), (e, n))]
            res.cases += len(words)
            if len(set(words)) != len(words):
                res.fail(("collision", r, (d, m), (e, n)))
    return res


def suite_divides_higman(rng: random.Random, cases: int | None = None) -> SuiteResult:
    """Exhaustive: source (1,1), every target e, n <= 3, r = 2."""
    res = SuiteResult("divides <=> Higman")
    src = (1, 1)
    morphs = [a for e in range(1, 4) for n in range(1, 4) for a in vc.all_morphisms(2, src, (e, n))]
    words = {a: vc.word_encode(a) for a in morphs}
    for a in morphs:
        for g in morphs:
            res.cases += 1
            beta = vc.divides(a, g)
            if (beta is not None) != vc.higman_leq(words[a], words[g]):
                res.fail((a, g))
            elif beta is not None and vc.compose(beta, a) != g:
                res.fail(("bad factor", a, g, beta))
    return res


def suite_lex_order(rng: random.Random, cases: int) -> SuiteResult:
    """lex_compare is compatible with left composition."""
    res = SuiteResult("lex order vs composition")
    for _ in range(cases):
        r = rng.randint(1, 3)
        o0, o1, o2 = rand_chain(rng, 2)
        a = rand_morphism(rng, r, o0, o1)
        g = rand_morphism(rng, r, o0, o1)
        b = rand_morphism(rng, r, o1, o2)
        res.cases += 1
        if vc.lex_compare(a, g) != vc.lex_compare(vc.compose(b, a), vc.compose(b, g)):
            res.fail((a, g, b))
    return res


def suite_sigma_action(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("sigma action axioms")
    for _ in range(cases):
        r = rng.randint(1, 3)
        src, tgt = rand_chain(rng, 1)
        a = rand_morphism(rng, r, src, tgt)
        n = tgt[1]
        s, t = rand_perm(rng, n), rand_perm(rng, n)
        res.cases += 1
        ident, _ = vc.sigma_act(tuple(range(n)), a)
        step, _ = vc.sigma_act(s, vc.sigma_act(t, a)[0])
        once, _ = vc.sigma_act(vc.perm_compose(s, t), a)
        if ident != a or step != once:
            res.fail((s, t, a))
    return res


def suite_sigma_composition(rng: random.Random, cases: int) -> SuiteResult:
    """sigma(beta alpha) = sigma(beta) tau(alpha), tau induced via beta_1."""
    res = SuiteResult("sigma(ba) = sigma(b) tau(a)")
    for _ in range(cases):
        r = rng.randint(1, 3)
        o0, o1, o2 = rand_chain(rng, 2)
        a = rand_morphism(rng, r, o0, o1)
        b = rand_morphism(rng, r, o1, o2)
        s = rand_perm(rng, o2[1])
        sb, tau = vc.sigma_act(s, b)
        ta, _ = vc.sigma_act(tau, a)
        res.cases += 1
        if vc.sigma_act(s, vc.compose(b, a))[0] != vc.compose(sb, ta):
            res.fail((s, a, b))
    return res


def suite_symmetrize(rng: random.Random, cases: int) -> SuiteResult:
    """pi is an idempotent projector onto invariants and pi(b a) = pi(b) a for invariant a."""
    res = SuiteResult("symmetrize identities")
    for _ in range(cases):
        r = rng.randint(1, 2)
        o0, o1, o2 = rand_chain(rng, 2, max_width=2)
        b = rand_combo(rng, r, o1, o2)
        a = vc.symmetrize(rand_combo(rng, r, o0, o1))
        pb = vc.symmetrize(b)
        res.cases += 1
        if vc.symmetrize(pb) != pb or not vc.is_invariant(pb) or not vc.is_invariant(a):
            res.fail(("projector", b))
        if vc.symmetrize(vc.compose_combo(b, a)) != vc.compose_combo(pb, a):
            res.fail(("pi(ba)", b, a))
    return res


def suite_hom_count(rng: random.Random, cases: int | None = None) -> SuiteResult:
    """Exhaustive: d, e, m, n <= 3 and r <= 3."""
    res = SuiteResult("hom_count vs enumeration")
    for r in range(1, 4):
        for d, m, e, n in itertools.product(range(4), repeat=4):
            res.cases += 1
            homs = set(vc.all_morphisms(r, (d, m), (e, n)))
            if len(homs) != vc.hom_count(r, (d, m), (e, n)):
                res.fail((r, (d, m), (e, n), len(homs)))
    return res


# ---------------------------------------------------------------------------
# secant and dimension suites


SECANT_CELLS = [(d, m) for d in range(1, 6) for m in range(2, 5)]


def suite_secant_chain(rng: random.Random, cases: int | None = None) -> SuiteResult:
    res = SuiteResult("secant chain and ideal closure")
    B = ga.p1()
    for r in (1, 2, 3):
        for d, m in SECANT_CELLS:
            res.cases += 1
            if not chain_check(B, r, d, m):
                res.fail(("chain", r, d, m))
            if not ideal_closure_check(B, r, d, m):
                res.fail(("closure", r, d, m))
    return res


def suite_submodule(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("submodule closure")
    B = ga.p1()
    for r in (1, 2):
        rep = submodule_closure_check(B, r, cases // 2, cells=SECANT_CELLS, seed=rng.randrange(2**32))
        res.cases += rep.checked
        for v in rep.violations:
            res.fail(v[0])
    return res


def suite_free_module(rng: random.Random, cases: int | None = None) -> SuiteResult:
    """Grid d <= 4, e <= d, n <= m <= 4 on k[s, t]."""
    res = SuiteResult("free module dimension")
    B = ga.p1()
    for d in range(5):
        for e in range(d + 1):
            for m in range(5):
                for n in range(m + 1):
                    res.cases += 1
                    if not free_module_dim_check(B, d, e, n, m):
                        res.fail((d, e, n, m))
    return res


CATEGORY_SUITES: dict[str, tuple[Callable, int | None]] = {
    "associativity": (suite_associativity, 1000),
    "words": (suite_word_bijection, 1000),
    "divides": (suite_divides_higman, None),
    "lex": (suite_lex_order, 1000),
    "sigma": (suite_sigma_action, 1000),
    "sigmacompose": (suite_sigma_composition, 1000),
    "symmetrize": (suite_symmetrize, 1000),
    "homcount": (suite_hom_count, None),
}

SECANT_SUITES: dict[str, tuple[Callable, int | None]] = {
    "chain": (suite_secant_chain, None),
    "submodule": (suite_submodule, 200),
}

ALL_SUITES = {**CATEGORY_SUITES, **SECANT_SUITES, "freemodule": (suite_free_module, None)}


def run_selftest(seed: int = DEFAULT_SEED, names=None, *, scale: float = 1.0) -> SelftestReport:
    """Run the named suites (all by default); ``scale`` multiplies sampled case counts."""
    report = SelftestReport(seed)
    for name in names or ALL_SUITES:
        fn, cases = ALL_SUITES[name]
        rng = random.Random(f"{seed}:{name}")
        start = time.perf_counter()
        res = fn(rng, None if cases is None else max(1, int(cases * scale)))
        res.seconds = time.perf_counter() - start
        report.suites.append(res)
    return report
