"""Corpus scoring pipeline: per-segment metrics, split means, accuracy.

Every (scenario, phase, perspective) pair is one scoring unit: its
predicted caption is the candidate, the ground-truth caption its single
reference. Units are scored independently (optionally on a thread pool)
and reduced in a fixed sorted order, so the result is byte-stable for any
worker count. The TF-IDF statistics for the consensus metric are built
per split, over that split's reference captions, before any unit is
scored.

Missing units score against an empty candidate (which gives 0 on every
metric); strict completeness checking lives in the CLI via
`dataset_io.validate`.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Sequence

from .bleu import bleu4
from .cider import DEFAULT_SCALE, CiderCorpusIdf, cider, compute_idf
from .composite import SplitScores
from .dataset_io import PHASES, SPLITS, PredictionSet, ScenarioSet
from .meteor import DEFAULT_PARAMS as DEFAULT_METEOR_PARAMS
from .meteor import MeteorParams, meteor
from .rouge import rouge_l
from .text_norm import DEFAULT_TOKENIZER, TokenizerConfig, tokenize

PERSPECTIVES = ("pedestrian", "vehicle")


@dataclass(frozen=True)
class ScoringConfig:
    tokenizer: TokenizerConfig = DEFAULT_TOKENIZER
    bleu_zero_policy: str = "hard-zero"
    rouge_convention: str = "precision-ratio"
    meteor_params: MeteorParams = DEFAULT_METEOR_PARAMS
    cider_scale: float = DEFAULT_SCALE
    cider_length_penalty_sigma: float | None = None


DEFAULT_CONFIG = ScoringConfig()


@dataclass(frozen=True)
class SegmentScore:
    scenario_id: str
    phase: str
    perspective: str
    bleu4: float
    meteor: float
    rouge_l: float
    cider: float


@dataclass
class CaptionScores:
    internal: SplitScores
    external: SplitScores
    segments: list[SegmentScore] = field(default_factory=list)


@dataclass(frozen=True)
class _Unit:
    scenario_id: str
    phase: str
    perspective: str
    candidate: tuple[str, ...]
    reference: tuple[str, ...]


def _collect_units(
    gt: ScenarioSet, pred: PredictionSet, config: ScoringConfig
) -> dict[str, list[_Unit]]:
    pred_index: dict[tuple[str, str], object] = {}
    for scenario in pred.scenarios:
        for segment in scenario.segments:
            pred_index[(scenario.id, segment.phase)] = segment

    units: dict[str, list[_Unit]] = {split: [] for split in SPLITS}
    for scenario in sorted(gt.scenarios, key=lambda s: s.id):
        for segment in sorted(scenario.segments, key=lambda g: PHASES.index(g.phase)):
            predicted = pred_index.get((scenario.id, segment.phase))
            for perspective in PERSPECTIVES:
                reference = getattr(segment, f"{perspective}_caption")
                candidate = (
                    getattr(predicted, f"{perspective}_caption") if predicted else ""
                )
                units[scenario.split].append(
                    _Unit(
                        scenario_id=scenario.id,
                        phase=segment.phase,
                        perspective=perspective,
                        candidate=tuple(tokenize(candidate, config.tokenizer)),
                        reference=tuple(tokenize(reference, config.tokenizer)),
                    )
                )
    return units


def _score_unit(unit: _Unit, idf: CiderCorpusIdf, config: ScoringConfig) -> SegmentScore:
    references = [unit.reference]
    return SegmentScore(
        scenario_id=unit.scenario_id,
        phase=unit.phase,
        perspective=unit.perspective,
        bleu4=bleu4(unit.candidate, references, config.bleu_zero_policy).score,
        meteor=meteor(unit.candidate, references, config.meteor_params).score,
        rouge_l=rouge_l(unit.candidate, unit.reference, config.rouge_convention).score,
        cider=cider(
            unit.candidate,
            references,
            idf,
            scale=config.cider_scale,
            length_penalty_sigma=config.cider_length_penalty_sigma,
        ).score,
    )


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values) if values else 0.0


def score_captions(
    gt: ScenarioSet,
    pred: PredictionSet,
    config: ScoringConfig = DEFAULT_CONFIG,
    workers: int = 1,
) -> CaptionScores:
    """Score a caption submission against ground truth, per split."""
    units_by_split = _collect_units(gt, pred, config)

    split_results: dict[str, SplitScores] = {}
    all_segments: list[SegmentScore] = []
    for split in SPLITS:
        units = units_by_split[split]
        if units:
            idf = compute_idf([[unit.reference] for unit in units])
            if workers > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    scored = list(
                        pool.map(lambda u: _score_unit(u, idf, config), units)
                    )
            else:
                scored = [_score_unit(unit, idf, config) for unit in units]
        else:
            scored = []
        all_segments.extend(scored)
        split_results[split] = SplitScores(
            split=split,
            bleu4=_mean([s.bleu4 for s in scored]),
            meteor=_mean([s.meteor for s in scored]),
            rouge_l=_mean([s.rouge_l for s in scored]),
            cider=_mean([s.cider for s in scored]),
            segments=len(units) // len(PERSPECTIVES),
        )
    return CaptionScores(
        internal=split_results["internal"],
        external=split_results["external"],
        segments=all_segments,
    )


def identity_scores(gt: ScenarioSet, config: ScoringConfig = DEFAULT_CONFIG) -> CaptionScores:
    """Score the ground truth against itself (upper-bound sanity check)."""
    as_predictions = PredictionSet(
        scenarios=[replace(s, split=None) for s in gt.scenarios]
    )
    return score_captions(gt, as_predictions, config)
