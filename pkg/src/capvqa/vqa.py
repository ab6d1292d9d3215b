"""Multiple-choice answer normalization and top-1 accuracy.

Models answer in free text; `normalize_answer` maps that text onto an
option index using three rules, tried in order:

1. a choice letter ("B", "b)", "A. <anything>") — a single A-Z letter at
   the start, either alone or followed by '.', ')' or ':';
2. exact match of the normalized answer against a normalized option;
3. a unique option whose normalized tokens appear contiguously inside the
   normalized answer.

Anything else (including containment that matches two or more options) is
NO_ANSWER, which scores as incorrect. Accuracy is kept as an exact
fraction so correct == acc * total holds without rounding games.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import SchemaError, ValidationFailure
from .text_norm import TokenizerConfig, tokenize

NO_ANSWER = None

MISSING_POLICIES = ("missing-is-wrong", "strict")

_CHOICE_LETTER = re.compile(r"\s*([A-Za-z])\s*(?:[.):]|$)")
_STRIP_TOKENIZER = TokenizerConfig(punctuation_policy="strip")


def _normalize_tokens(text: str) -> tuple[str, ...]:
    return tuple(tokenize(text, _STRIP_TOKENIZER))


@dataclass
class VqaItem:
    id: str
    segment_id: str
    question: str
    options: list[str]
    gold: int
    _normalized_options: list[tuple[str, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.options) < 2:
            raise SchemaError(
                f"question {self.id!r} needs at least 2 options, got {len(self.options)}"
            )
        if not 0 <= self.gold < len(self.options):
            raise SchemaError(
                f"question {self.id!r} gold index {self.gold} is outside "
                f"[0, {len(self.options)})"
            )
        self._normalized_options = [_normalize_tokens(opt) for opt in self.options]
        if len(set(self._normalized_options)) != len(self.options):
            raise SchemaError(
                f"question {self.id!r} has options that collide after normalization"
            )


@dataclass
class VqaPrediction:
    id: str
    raw: str


@dataclass
class AccuracyResult:
    total: int
    correct: int
    acc: Fraction

    @property
    def acc_float(self) -> float:
        return float(self.acc)


def normalize_answer(raw: str, options: Sequence[str]) -> int | None:
    """Resolve a free-form answer to a 0-based option index, or NO_ANSWER.

    Total and deterministic: never raises on arbitrary text.
    """
    if not options:
        raise ValueError("normalize_answer requires a non-empty option list")

    match = _CHOICE_LETTER.match(raw)
    if match:
        index = ord(match.group(1).upper()) - ord("A")
        if index < len(options):
            return index

    raw_tokens = _normalize_tokens(raw)
    normalized_options = [_normalize_tokens(opt) for opt in options]
    for index, opt_tokens in enumerate(normalized_options):
        if raw_tokens == opt_tokens:
            return index

    contained = []
    for index, opt_tokens in enumerate(normalized_options):
        if opt_tokens and _is_sublist(opt_tokens, raw_tokens):
            contained.append(index)
    if len(contained) == 1:
        return contained[0]
    return NO_ANSWER


def _is_sublist(needle: tuple[str, ...], haystack: tuple[str, ...]) -> bool:
    span = len(needle)
    return any(
        haystack[i : i + span] == needle for i in range(len(haystack) - span + 1)
    )


def accuracy(
    items: Sequence[VqaItem],
    predictions: Sequence[VqaPrediction],
    missing_policy: str = "missing-is-wrong",
) -> AccuracyResult:
    """Top-1 accuracy over all items.

    Items without a prediction count as wrong under `missing-is-wrong`
    and raise under `strict`. Extra predictions for unknown items are
    ignored. Prediction order never affects the result.
    """
    if missing_policy not in MISSING_POLICIES:
        raise ValueError(
            f"missing_policy must be one of {MISSING_POLICIES}, got {missing_policy!r}"
        )
    if not items:
        raise ValueError("accuracy requires at least one item")
    seen_items = set()
    for item in items:
        if item.id in seen_items:
            raise SchemaError(f"duplicate question id {item.id!r}")
        seen_items.add(item.id)

    by_id: dict[str, str] = {}
    for prediction in predictions:
        if prediction.id in by_id:
            raise SchemaError(f"duplicate prediction id {prediction.id!r}")
        by_id[prediction.id] = prediction.raw

    missing = [item.id for item in items if item.id not in by_id]
    if missing and missing_policy == "strict":
        raise ValidationFailure(
            f"{len(missing)} item(s) have no prediction: {', '.join(sorted(missing))}",
            report=sorted(missing),
        )

    correct = 0
    for item in items:
        raw = by_id.get(item.id)
        if raw is None:
            continue
        if normalize_answer(raw, item.options) == item.gold:
            correct += 1
    total = len(items)
    return AccuracyResult(total=total, correct=correct, acc=Fraction(correct, total))
