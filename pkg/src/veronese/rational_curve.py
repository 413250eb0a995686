"""Secant ideals of rational normal curves: the quartic/quintic example.

Over B = k[s, t] write x_i = s^i t^(4-i) and y_j = s^j t^(5-j).  A tensor
preimage of the 3x3 catalecticant determinant in B_4^{(x)3} is pushed to
B_5^{(x)3} by multiplying with ``tst`` and with the invariant
``stt + tst + tts``.  Only the second image lands in the ideal spanned by
the 3x3 minors of the quintic catalecticant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import graded_algebra as ga
from .exact_linalg import Subspace
from .graded_algebra import AlgElement, BasicMorphismB, GradedAlgebra, SymElement, TensorElement
from .secant_ideals import catalecticant_minors, ideal_piece_from_generators, secant

# x0 x2 x4 - x0 x3 x3 + x1 x2 x3 - x1 x1 x4 + x2 x1 x3 - x2 x2 x2
DET_X_PREIMAGE = {
    (0, 2, 4): 1,
    (0, 3, 3): -1,
    (1, 2, 3): 1,
    (1, 1, 4): -1,
    (2, 1, 3): 1,
    (2, 2, 2): -1,
}

# the three images under stt, tst, tts, as ordered tensors in the y's
F1 = {(0, 3, 4): 1, (0, 4, 3): -1, (1, 3, 3): 1, (1, 2, 4): -1, (2, 2, 3): 1, (2, 3, 2): -1}
F2 = {(1, 2, 4): 1, (1, 3, 3): -1, (2, 2, 3): 1, (2, 1, 4): -1, (3, 1, 3): 1, (3, 2, 2): -1}
F3 = {(0, 2, 5): 1, (0, 3, 4): -1, (1, 2, 4): 1, (1, 1, 5): -1, (2, 1, 4): 1, (2, 2, 3): -1}

T, S = 0, 1  # indices of t and s in B_1


def multiplier(B: GradedAlgebra, letters: str) -> BasicMorphismB:
    """The morphism (4,3) -> (5,3) multiplying slot k by letters[k] in {s, t}."""
    vals = tuple(AlgElement.basis_element(B, 1, S if c == "s" else T) for c in letters)
    return BasicMorphismB.make((4, 3), (5, 3), (0, 1, 2), {}, vals)


@dataclass
class Verdict:
    label: str
    expected: bool
    observed: bool
    vector: SymElement | None = None

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        word = "true" if self.observed else "false"
        mark = "ok" if self.ok else "MISMATCH"
        return f"{self.label} --{word}  [{mark}]"


@dataclass
class ExampleReport:
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def lines(self) -> list[str]:
        return [v.line() for v in self.verdicts]


def minors_of_y() -> Subspace:
    return ideal_piece_from_generators(catalecticant_minors(5, 3), 3)


def images(B: GradedAlgebra | None = None) -> dict[str, TensorElement]:
    B = B or ga.p1()
    pre = TensorElement.of(B, 4, 3, DET_X_PREIMAGE)
    return {w: ga.apply_basic_tensor(B, multiplier(B, w), pre) for w in ("stt", "tst", "tts")}


def check_example() -> ExampleReport:
    B = ga.p1()
    ideal = minors_of_y()
    img = images(B)
    report = ExampleReport()

    def add(label, expected, vec, space=ideal):
        report.verdicts.append(Verdict(label, expected, space.contains(vec.sparse()), vec))

    # the listed images are the ones the multipliers produce
    listed = {"tst": F1, "stt": F2, "tts": F3}
    for w, terms in listed.items():
        same = img[w] == TensorElement.of(B, 5, 3, terms)
        report.verdicts.append(Verdict(f"{w} * preimage == listed tensor", True, same))

    det_x = catalecticant_minors(4, 3)[0]
    pre_sym = ga.tensor_to_sym(TensorElement.of(B, 4, 3, DET_X_PREIMAGE))
    report.verdicts.append(Verdict("preimage symmetrizes to det X", True, pre_sym == det_x))
    add("det X in I(2)_{4,3}", True, det_x, secant(B, 2, 4, 3))

    f1 = ga.tensor_to_sym(img["tst"])
    f2 = ga.tensor_to_sym(img["stt"])
    f3 = ga.tensor_to_sym(img["tts"])
    add("I+ideal(f1) == I", False, f1)
    # the stt image cancels completely once the slots commute
    report.verdicts.append(Verdict("f2 == 0 in Sym^3(B_5)", True, f2.is_zero(), f2))
    add("I+ideal(f1+f2+f3) == I", True, f1 + f2 + f3)
    return report
