"""Desk-scale training arithmetic: low-rank weight merges and the two
negative log-likelihood objectives (caption generation and multiple-choice
answering).

These are the loss functions a fine-tuning run would minimize, evaluated
on explicit per-position probability tables small enough to check by
hand. No gradients, no optimizers, no model inference: the full-scale
decoupled optimization trains each objective independently, and that
independence is exactly why the two functions here share no state. Natural
log throughout.
"""

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

CAPTION_KINDS = ("p", "v")  # pedestrian / vehicle caption streams

_PROB_SUM_TOL = 1e-9


@dataclass
class LowRankAdapter:
    """Weight update factored as b @ a with rank = b.shape[1]."""

    b: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        self.b = np.asarray(self.b, dtype=float)
        self.a = np.asarray(self.a, dtype=float)
        if self.b.ndim != 2 or self.a.ndim != 2:
            raise ValueError("adapter factors must be 2-D matrices")
        if self.b.shape[1] != self.a.shape[0]:
            raise ValueError(
                f"rank mismatch: b is {self.b.shape}, a is {self.a.shape}"
            )

    @property
    def rank(self) -> int:
        return self.b.shape[1]

    def delta(self) -> np.ndarray:
        return self.b @ self.a


@dataclass
class SegmentedSample:
    """Realized token ids for both caption streams of one segment."""

    segment: int
    captions: Mapping[str, Sequence[int]]

    def __post_init__(self):
        if set(self.captions) != set(CAPTION_KINDS):
            raise ValueError(
                f"captions must be keyed by {CAPTION_KINDS}, got {sorted(self.captions)}"
            )
        for kind, tokens in self.captions.items():
            if len(tokens) == 0:
                raise ValueError(
                    f"segment {self.segment} caption {kind!r} must be non-empty"
                )


def lora_merge(w: np.ndarray, adapter: LowRankAdapter) -> np.ndarray:
    """Return w + b @ a without modifying w."""
    w = np.asarray(w, dtype=float)
    if w.ndim != 2:
        raise ValueError("weight matrix must be 2-D")
    if adapter.b.shape[0] != w.shape[0] or adapter.a.shape[1] != w.shape[1]:
        raise ValueError(
            f"adapter update shape {(adapter.b.shape[0], adapter.a.shape[1])} "
            f"does not match weight shape {w.shape}"
        )
    return w + adapter.delta()


def _checked_probability(vector: Sequence[float], index: int, slot: str) -> float:
    probs = np.asarray(vector, dtype=float)
    if probs.ndim != 1:
        raise ValueError(f"distribution at {slot} must be a 1-D vector")
    if (probs < 0).any():
        raise ValueError(f"distribution at {slot} has negative entries")
    if abs(float(probs.sum()) - 1.0) > _PROB_SUM_TOL:
        raise ValueError(
            f"distribution at {slot} sums to {float(probs.sum())!r}, not 1"
        )
    if not 0 <= index < probs.shape[0]:
        raise ValueError(
            f"realized index {index} at {slot} is outside the {probs.shape[0]}-way support"
        )
    return float(probs[index])


def caption_nll(
    dists: Mapping[tuple[int, str, int], Sequence[float]],
    samples: Sequence[SegmentedSample],
) -> float:
    """-sum of ln P(token) over every (segment, stream, position) slot.

    `dists` maps (segment, kind, position) to a vocabulary distribution;
    positions are 1-based within each caption. A zero probability at any
    realized token makes the loss infinite, reported as math.inf.
    """
    log_probs = []
    hit_zero = False
    for sample in samples:
        for kind in CAPTION_KINDS:
            tokens = sample.captions[kind]
            for t, token in enumerate(tokens, start=1):
                key = (sample.segment, kind, t)
                if key not in dists:
                    raise ValueError(f"no distribution for slot {key}")
                p = _checked_probability(dists[key], token, slot=str(key))
                if p == 0.0:
                    hit_zero = True
                else:
                    log_probs.append(math.log(p))
    if hit_zero:
        return math.inf
    return -math.fsum(log_probs) or 0.0


def vqa_nll(
    answer_dists: Sequence[Sequence[float]], gold: Sequence[int]
) -> float:
    """-sum of ln P(gold answer) over the question set."""
    if len(answer_dists) != len(gold):
        raise ValueError(
            f"{len(answer_dists)} distributions vs {len(gold)} gold indices"
        )
    log_probs = []
    hit_zero = False
    for j, (vector, index) in enumerate(zip(answer_dists, gold)):
        if len(vector) < 2:
            raise ValueError(f"question {j} needs at least 2 options")
        p = _checked_probability(vector, index, slot=f"question {j}")
        if p == 0.0:
            hit_zero = True
        else:
            log_probs.append(math.log(p))
    if hit_zero:
        return math.inf
    return -math.fsum(log_probs) or 0.0
