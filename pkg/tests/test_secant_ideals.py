import math

import pytest

from veronese import graded_algebra as ga
from veronese import secant_ideals as si
from veronese.exact_linalg import Subspace, span
from veronese.graded_algebra import SymElement
from veronese.rational_curve import DET_X_PREIMAGE, F1, F2, F3, check_example, images, minors_of_y
from veronese.graded_algebra import TensorElement


def test_ideal_one_small_widths(P1):
    assert si.ideal_one(P1, 3, 0).dim == 0
    assert si.ideal_one(P1, 3, 1).dim == 0
    assert si.ideal_one(P1, 2, 2).dim == 1


@pytest.mark.parametrize("d", range(2, 9))
def test_ideal_one_quadrics(P1, d):
    assert si.ideal_one(P1, d, 2).dim == math.comb(d, 2) == math.comb(d + 2, 2) - (2 * d + 1)


def test_twisted_cubic_hilbert(P1):
    assert si.sec_hilbert(P1, 1, 3, 5) == [1] + [3 * m + 1 for m in range(1, 6)]


def test_secant_hilbert_values(P1):
    assert si.sec_hilbert(P1, 2, 4, 3)[3] == 34
    # nothing is killed before width r + 1
    assert si.sec_hilbert(P1, 3, 2, 3) == [ga.sym_dim(3, m) for m in range(4)]


def test_polynomial_veronese_quadrics():
    assert si.ideal_one(ga.polynomial(2), 2, 2).dim == 1
    assert si.ideal_one(ga.polynomial(3), 2, 2).dim == 21 - 15


def test_det_x_spans_the_cubic_piece(P1):
    (det_x,) = si.catalecticant_minors(4, 3)
    piece = si.secant(P1, 2, 4, 3)
    assert piece.dim == 1
    assert piece == span(piece.ambient_dim, [det_x.sparse()])


def test_minors_of_y_span_the_cubic_piece(P1):
    minors = si.catalecticant_minors(5, 3)
    assert len(minors) == 4
    piece = si.secant(P1, 2, 5, 3)
    assert piece.dim == 4
    assert piece == si.ideal_piece_from_generators(minors, 3)


def test_twisted_cubic_quadrics_are_minors(P1):
    minors = si.catalecticant_minors(3, 2)
    assert len(minors) == 3
    assert si.ideal_piece_from_generators(minors, 2) == si.ideal_one(P1, 3, 2)


def test_catalecticant_matches_hand_expansion():
    (det_x,) = si.catalecticant_minors(4, 3)
    expected = {(0, 2, 4): 1, (0, 3, 3): -1, (1, 1, 4): -1, (1, 2, 3): 2, (2, 2, 2): -1}
    assert det_x.terms == expected
    with pytest.raises(si.SecantError):
        si.catalecticant_minors(3, 3)


def test_generator_piece_one_width_up(P1):
    (det_x,) = si.catalecticant_minors(4, 3)
    assert si.ideal_piece_from_generators([det_x], 4).dim == 5
    with pytest.raises(si.SecantError):
        si.ideal_piece_from_generators([det_x], 2)


def test_chain_and_ideal_closure(P1):
    for r in (1, 2, 3):
        for d in range(1, 6):
            for m in range(0, 5):
                assert si.chain_check(P1, r, d, m)
                assert si.ideal_closure_check(P1, r, d, m)


def test_low_widths_vanish(P1):
    for r in (1, 2, 3):
        for d in range(1, 6):
            for m in range(0, r + 1):
                assert si.secant(P1, r, d, m).dim == 0


def test_recursion_from_r_zero(P1):
    """Running the comultiplication step on I(0) = Sym^{>0} reproduces I(1)."""
    cache = si.SecantCache(P1)
    d = 3
    for k in range(6):
        n = ga.sym_dim(P1.dim(d), k)
        cache.store[(0, d, k)] = Subspace.zero(n) if k == 0 else Subspace.full(n)
        cache.store[(1, d, k)] = si.ideal_one(P1, d, k)
    for m in range(2, 6):
        assert si._secant_step(cache, 1, d, m) == si.ideal_one(P1, d, m)


def test_membership_errors(P1):
    f = SymElement.of(P1, 4, 2, {(0, 1): 1})
    with pytest.raises(si.SecantError):
        si.is_in_secant(P1, 2, 4, 3, f)
    assert si.is_in_secant(P1, 2, 4, 3, SymElement.of(P1, 4, 3))
    with pytest.raises(si.SecantError):
        si.secant(P1, 0, 2, 2)


def test_submodule_closure(P1):
    for r in (1, 2):
        rep = si.submodule_closure_check(P1, r, 40, cells=[(d, m) for d in range(1, 5) for m in range(2, 4)], seed=r)
        assert rep.checked == 40 and rep.ok


def test_minimal_generators(P1):
    assert si.minimal_generator_count(P1, 1, 3, 2) == 3
    assert si.minimal_generator_count(P1, 1, 3, 3) == 0
    assert si.minimal_generator_count(P1, 2, 5, 3) == 4
    assert si.minimal_generator_count(P1, 2, 5, 4) == 0


def test_tensor_images_of_det_x(P1):
    img = images(P1)
    assert img["tst"] == TensorElement.of(P1, 5, 3, F1)
    assert img["stt"] == TensorElement.of(P1, 5, 3, F2)
    assert img["tts"] == TensorElement.of(P1, 5, 3, F3)
    assert ga.tensor_to_sym(TensorElement.of(P1, 4, 3, DET_X_PREIMAGE)) == si.catalecticant_minors(4, 3)[0]


def test_example_membership_verdicts(P1):
    img = {k: ga.tensor_to_sym(v) for k, v in images(P1).items()}
    ideal = minors_of_y()
    assert ideal == si.secant(P1, 2, 5, 3)
    assert not ideal.contains(img["tst"].sparse())
    assert img["stt"].is_zero()
    assert ideal.contains((img["stt"] + img["tst"] + img["tts"]).sparse())
    assert not ideal.contains(img["tts"].sparse())
    assert check_example().ok
