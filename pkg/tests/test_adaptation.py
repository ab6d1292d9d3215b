import math

import numpy as np
import pytest

from capvqa.adaptation import (
    LowRankAdapter,
    SegmentedSample,
    caption_nll,
    lora_merge,
    vqa_nll,
)


def _brute_force_merge(w, b, a):
    d_out, rank = len(b), len(b[0])
    d_in = len(a[0])
    out = [[0.0] * d_in for _ in range(d_out)]
    for i in range(d_out):
        for j in range(d_in):
            acc = w[i][j]
            for k in range(rank):
                acc += b[i][k] * a[k][j]
            out[i][j] = acc
    return np.array(out)


def test_zero_update_is_bit_identical():
    rng = np.random.default_rng(61)
    w = rng.normal(size=(4, 4))
    adapter = LowRankAdapter(b=np.zeros((4, 2)), a=rng.normal(size=(2, 4)))
    merged = lora_merge(w, adapter)
    assert (merged == w).all()


def test_rank_one_outer_product():
    w = np.zeros((2, 2))
    adapter = LowRankAdapter(b=np.array([[1.0], [0.0]]), a=np.array([[0.0, 2.0]]))
    assert lora_merge(w, adapter).tolist() == [[0.0, 2.0], [0.0, 0.0]]


def test_random_merge_matches_brute_force_multiply():
    rng = np.random.default_rng(62)
    for _ in range(20):
        w = rng.normal(size=(5, 5))
        b = rng.normal(size=(5, 2))
        a = rng.normal(size=(2, 5))
        merged = lora_merge(w, LowRankAdapter(b=b, a=a))
        expected = _brute_force_merge(w.tolist(), b.tolist(), a.tolist())
        assert np.abs(merged - expected).max() < 1e-12


def test_full_rank_identity_recovers_any_update():
    rng = np.random.default_rng(63)
    for _ in range(10):
        w = rng.normal(size=(3, 3))
        delta = rng.normal(size=(3, 3))
        adapter = LowRankAdapter(b=np.eye(3), a=delta)
        assert np.abs(lora_merge(w, adapter) - (w + delta)).max() < 1e-15


def test_dimension_checks():
    with pytest.raises(ValueError):
        LowRankAdapter(b=np.zeros((3, 2)), a=np.zeros((3, 3)))
    with pytest.raises(ValueError):
        lora_merge(np.zeros((4, 4)), LowRankAdapter(b=np.zeros((3, 1)), a=np.zeros((1, 3))))
    with pytest.raises(ValueError):
        lora_merge(np.zeros(4), LowRankAdapter(b=np.zeros((4, 1)), a=np.zeros((1, 4))))


def _sample(segment=1, p=(0,), v=(0,)):
    return SegmentedSample(segment=segment, captions={"p": list(p), "v": list(v)})


def test_sample_validation():
    with pytest.raises(ValueError):
        SegmentedSample(segment=1, captions={"p": [0]})
    with pytest.raises(ValueError):
        SegmentedSample(segment=1, captions={"p": [0], "v": []})


def test_certain_model_has_zero_loss():
    dists = {
        (1, "p", 1): [1.0, 0.0],
        (1, "v", 1): [0.0, 1.0],
    }
    assert caption_nll(dists, [_sample(p=(0,), v=(1,))]) == 0.0


def test_uniform_two_token_caption():
    uniform = [0.25, 0.25, 0.25, 0.25]
    dists = {
        (1, "p", 1): uniform,
        (1, "p", 2): uniform,
        (1, "v", 1): [1.0, 0.0, 0.0, 0.0],
    }
    loss = caption_nll(dists, [_sample(p=(0, 3), v=(0,))])
    assert loss == pytest.approx(2 * math.log(4), abs=1e-12)


def test_one_token_per_stream_at_half():
    dists = {
        (1, "p", 1): [0.5, 0.5],
        (1, "v", 1): [0.5, 0.5],
    }
    loss = caption_nll(dists, [_sample(p=(0,), v=(1,))])
    assert loss == pytest.approx(2 * math.log(2), abs=1e-12)


def test_missing_slot_rejected():
    with pytest.raises(ValueError):
        caption_nll({(1, "p", 1): [1.0, 0.0]}, [_sample(p=(0,), v=(0,))])


def test_zero_probability_reports_infinity():
    dists = {
        (1, "p", 1): [0.0, 1.0],
        (1, "v", 1): [1.0, 0.0],
    }
    assert caption_nll(dists, [_sample(p=(0,), v=(0,))]) == math.inf


def test_invalid_distributions_rejected():
    with pytest.raises(ValueError):
        caption_nll({(1, "p", 1): [0.7, 0.7], (1, "v", 1): [1.0, 0.0]},
                    [_sample(p=(0,), v=(0,))])
    with pytest.raises(ValueError):
        caption_nll({(1, "p", 1): [-0.5, 1.5], (1, "v", 1): [1.0, 0.0]},
                    [_sample(p=(0,), v=(0,))])


def test_caption_nll_is_additive_over_samples():
    rng = np.random.default_rng(64)
    dists = {}
    samples = []
    for segment in (1, 2, 3):
        tokens = {"p": [], "v": []}
        for kind in ("p", "v"):
            for t in range(1, rng.integers(1, 4) + 1):
                probs = rng.dirichlet(np.ones(5))
                dists[(segment, kind, t)] = probs.tolist()
                tokens[kind].append(int(rng.integers(5)))
        samples.append(SegmentedSample(segment=segment, captions=tokens))
    combined = caption_nll(dists, samples)
    parts = sum(caption_nll(dists, [sample]) for sample in samples)
    assert combined == pytest.approx(parts, abs=1e-9)
    assert combined >= 0.0


def test_vqa_nll_examples():
    assert vqa_nll([[1.0, 0.0]], [0]) == 0.0
    assert vqa_nll([[0.25] * 4], [2]) == pytest.approx(math.log(4), abs=1e-12)
    assert vqa_nll([[0.5, 0.5], [0.25, 0.25, 0.25, 0.25]], [0, 1]) == pytest.approx(
        math.log(2) + math.log(4), abs=1e-12
    )


def test_vqa_nll_validation():
    with pytest.raises(ValueError):
        vqa_nll([[1.0]], [0])
    with pytest.raises(ValueError):
        vqa_nll([[0.5, 0.5]], [2])
    with pytest.raises(ValueError):
        vqa_nll([[0.5, 0.5]], [0, 1])
    assert vqa_nll([[0.0, 1.0]], [0]) == math.inf
