import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _checks import ctc_check
from lineocr.ctc import (
    CTCInfeasibleError,
    collapse,
    ctc_brute_force,
    ctc_loss,
    extend_with_blanks,
    greedy_decode,
)


def random_instance(rng):
    t_len = int(rng.integers(1, 7))
    n_cls = int(rng.integers(2, 5))
    tgt_len = int(rng.integers(0, 4))
    target = [int(x) for x in rng.integers(1, n_cls, size=tgt_len)]
    probs = rng.dirichlet(np.ones(n_cls), size=t_len)
    return probs, target


def test_extend_with_blanks():
    np.testing.assert_array_equal(extend_with_blanks([3, 1]), [0, 3, 0, 1, 0])


def test_loss_matches_brute_force_on_random_instances():
    rng = np.random.default_rng(0)
    checked = 0
    while checked < 100:
        probs, target = random_instance(rng)
        try:
            oracle = ctc_brute_force(probs, target)
        except CTCInfeasibleError:
            with pytest.raises(CTCInfeasibleError):
                ctc_loss(probs, target)
            continue
        loss, _ = ctc_loss(probs, target)
        assert abs(loss - oracle) <= 1e-9
        checked += 1


def test_single_frame_hand_computed():
    probs = np.array([[0.25, 0.75]])
    assert ctc_loss(probs, [1])[0] == pytest.approx(-math.log(0.75))
    assert ctc_loss(probs, [])[0] == pytest.approx(-math.log(0.25))


def test_two_frames_sum_over_paths():
    probs = np.array([[0.5, 0.3, 0.2], [0.1, 0.6, 0.3]])
    # paths to "1": (1,1) (1,0) (0,1)
    p = 0.3 * 0.6 + 0.3 * 0.1 + 0.5 * 0.6
    assert ctc_loss(probs, [1])[0] == pytest.approx(-math.log(p), abs=1e-12)


def test_repeated_label_needs_separating_blank():
    probs = np.full((2, 2), 0.5)
    with pytest.raises(CTCInfeasibleError):
        ctc_loss(probs, [1, 1])
    probs = np.full((3, 2), 0.5)
    # only path: 1 0 1
    assert ctc_loss(probs, [1, 1])[0] == pytest.approx(-math.log(0.125))


def test_infeasible_and_zero_probability():
    with pytest.raises(CTCInfeasibleError):
        ctc_loss(np.full((2, 3), 1 / 3), [1, 2, 1])
    probs = np.array([[1.0, 0.0], [1.0, 0.0]])
    loss, grad = ctc_loss(probs, [1])
    assert loss == math.inf
    assert not grad.any()
    assert ctc_brute_force(probs, [1]) == math.inf


def test_brute_force_refuses_large_instances():
    with pytest.raises(ValueError):
        ctc_brute_force(np.full((12, 5), 0.2), [1])


def test_bad_labels_rejected():
    with pytest.raises(ValueError):
        ctc_loss(np.full((4, 3), 1 / 3), [0])
    with pytest.raises(ValueError):
        ctc_loss(np.full((4, 3), 1 / 3), [3])


@pytest.mark.parametrize("seed", range(5))
def test_gradient_matches_finite_differences(seed):
    assert ctc_check(seed) <= 1e-4


def test_gradient_rows_sum_to_zero():
    rng = np.random.default_rng(1)
    probs = rng.dirichlet(np.ones(4), size=6)
    _, grad = ctc_loss(probs, [1, 3])
    np.testing.assert_allclose(grad.sum(axis=1), 0.0, atol=1e-12)


def test_collapse_worked_example():
    letters = {"-": 0, "A": 1, "B": 2, "C": 3}
    path = [letters[c] for c in "AA--B--CA--A-"]
    inv = {v: k for k, v in letters.items()}
    assert "".join(inv[x] for x in collapse(path)) == "ABCAA"


def expand(target, repeats, blanks):
    """A frame path that collapses back to ``target``."""
    path = [0] * blanks[0]
    for i, x in enumerate(target):
        if i > 0 and target[i - 1] == x:
            path.append(0)
        path += [x] * repeats[i]
        path += [0] * blanks[i + 1]
    return path


@settings(max_examples=1000, deadline=None)
@given(st.data())
def test_collapse_inverts_expansion(data):
    target = data.draw(st.lists(st.integers(1, 4), max_size=10))
    repeats = data.draw(st.lists(st.integers(1, 3), min_size=len(target), max_size=len(target)))
    blanks = data.draw(st.lists(st.integers(0, 2), min_size=len(target) + 1, max_size=len(target) + 1))
    assert collapse(expand(target, repeats, blanks)) == target


def test_greedy_decode_positions_and_confidences():
    probs = np.array(
        [
            [0.1, 0.8, 0.1],
            [0.2, 0.6, 0.2],
            [0.7, 0.2, 0.1],
            [0.1, 0.1, 0.8],
            [0.3, 0.3, 0.4],
        ]
    )
    d = greedy_decode(probs)
    assert d.labels == [1, 2]
    assert d.positions == [(0, 2), (3, 5)]
    assert d.confidences == pytest.approx([0.7, 0.6])


def test_greedy_decode_all_blank():
    d = greedy_decode(np.array([[0.9, 0.1], [0.6, 0.4]]))
    assert d.labels == [] and d.positions == [] and d.confidences == []
