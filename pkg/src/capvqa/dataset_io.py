"""Loaders, validators and serializers for the on-disk JSON formats.

Caption ground truth:

    {"scenarios": [{"id": str, "split": "internal"|"external",
                    "segments": [{"phase": <one of five>,
                                  "pedestrian_caption": str,
                                  "vehicle_caption": str}]}]}

Caption predictions use the same shape minus "split" (the split is taken
from the ground truth by id at scoring time). VQA files:

    {"questions": [{"id", "segment", "question", "options": [...], "correct": int}]}
    {"answers": [{"id", "raw"}]}

All files are UTF-8 JSON. Loading is strict about structure (every error
names the offending record) but deliberately lenient about cross-file
alignment: a prediction for an unknown scenario loads fine and is flagged
by `validate`, so partial submissions can still be inspected.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import SchemaError
from .vqa import VqaItem, VqaPrediction

PHASES = ("prerecognition", "recognition", "judgment", "action", "avoidance")
SPLITS = ("internal", "external")


@dataclass
class Segment:
    phase: str
    pedestrian_caption: str
    vehicle_caption: str


@dataclass
class Scenario:
    id: str
    segments: list[Segment]
    split: str | None = None


@dataclass
class ScenarioSet:
    scenarios: list[Scenario]

    def by_id(self) -> dict[str, Scenario]:
        return {scenario.id: scenario for scenario in self.scenarios}

    def segment_keys(self) -> set[tuple[str, str]]:
        return {
            (scenario.id, segment.phase)
            for scenario in self.scenarios
            for segment in scenario.segments
        }

    @property
    def num_segments(self) -> int:
        return sum(len(scenario.segments) for scenario in self.scenarios)


class PredictionSet(ScenarioSet):
    """Same shape as ScenarioSet; split is always None."""


@dataclass
class ValidationReport:
    missing_segments: list[tuple[str, str]] = field(default_factory=list)
    extra_segments: list[tuple[str, str]] = field(default_factory=list)
    malformed_entries: list[str] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.missing_segments or self.extra_segments or self.malformed_entries)

    def summary(self) -> str:
        lines = []
        for scenario_id, phase in self.missing_segments:
            lines.append(f"missing: {scenario_id}/{phase}")
        for scenario_id, phase in self.extra_segments:
            lines.append(f"extra: {scenario_id}/{phase}")
        for locator in self.malformed_entries:
            lines.append(f"malformed: {locator}")
        return "\n".join(lines) if lines else "submission is complete and well-formed"


def _load_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"{path} is not valid JSON: {exc.msg}",
            locator=f"line {exc.lineno}, column {exc.colno}",
        ) from exc


def _expect(value, expected_type, locator: str):
    if not isinstance(value, expected_type):
        raise SchemaError(
            f"expected {expected_type.__name__}, got {type(value).__name__}",
            locator=locator,
        )
    return value


def _field(record: dict, name: str, expected_type, locator: str):
    if name not in record:
        raise SchemaError(f"missing field {name!r}", locator=locator)
    return _expect(record[name], expected_type, f"{locator}.{name}")


def _parse_scenarios(doc, path, with_split: bool) -> list[Scenario]:
    root = _expect(doc, dict, str(path))
    raw_scenarios = _field(root, "scenarios", list, str(path))
    scenarios = []
    seen_ids = set()
    for s_idx, raw in enumerate(raw_scenarios):
        locator = f"scenarios[{s_idx}]"
        record = _expect(raw, dict, locator)
        scenario_id = _field(record, "id", str, locator)
        if scenario_id in seen_ids:
            raise SchemaError(f"duplicate scenario id {scenario_id!r}", locator=locator)
        seen_ids.add(scenario_id)
        split = None
        if with_split:
            split = _field(record, "split", str, locator)
            if split not in SPLITS:
                raise SchemaError(
                    f"split must be one of {SPLITS}, got {split!r}",
                    locator=f"{locator}.split",
                )
        segments = []
        seen_phases = set()
        for g_idx, raw_segment in enumerate(_field(record, "segments", list, locator)):
            seg_locator = f"{locator}.segments[{g_idx}]"
            seg = _expect(raw_segment, dict, seg_locator)
            phase = _field(seg, "phase", str, seg_locator)
            if phase not in PHASES:
                raise SchemaError(
                    f"phase must be one of {PHASES}, got {phase!r}",
                    locator=f"{seg_locator}.phase",
                )
            if phase in seen_phases:
                raise SchemaError(
                    f"duplicate phase {phase!r} in scenario {scenario_id!r}",
                    locator=seg_locator,
                )
            seen_phases.add(phase)
            segments.append(
                Segment(
                    phase=phase,
                    pedestrian_caption=_field(seg, "pedestrian_caption", str, seg_locator),
                    vehicle_caption=_field(seg, "vehicle_caption", str, seg_locator),
                )
            )
        scenarios.append(Scenario(id=scenario_id, segments=segments, split=split))
    return scenarios


def load_ground_truth(path) -> ScenarioSet:
    """Load and schema-check a ground-truth caption file."""
    return ScenarioSet(scenarios=_parse_scenarios(_load_json(path), path, with_split=True))


def load_predictions(path) -> PredictionSet:
    """Load and schema-check a caption submission file."""
    return PredictionSet(scenarios=_parse_scenarios(_load_json(path), path, with_split=False))


def scenario_set_to_dict(scenario_set: ScenarioSet) -> dict:
    """Inverse of the loaders; load(dump(x)) round-trips to an equal value."""
    scenarios = []
    for scenario in scenario_set.scenarios:
        record: dict[str, Any] = {"id": scenario.id}
        if scenario.split is not None:
            record["split"] = scenario.split
        record["segments"] = [
            {
                "phase": segment.phase,
                "pedestrian_caption": segment.pedestrian_caption,
                "vehicle_caption": segment.vehicle_caption,
            }
            for segment in scenario.segments
        ]
        scenarios.append(record)
    return {"scenarios": scenarios}


def validate(gt: ScenarioSet, pred: ScenarioSet) -> ValidationReport:
    """Exhaustive (scenario, phase) diff between ground truth and submission."""
    gt_keys = gt.segment_keys()
    pred_keys = pred.segment_keys()
    return ValidationReport(
        missing_segments=sorted(gt_keys - pred_keys),
        extra_segments=sorted(pred_keys - gt_keys),
        malformed_entries=[],
    )


def load_vqa_items(path) -> list[VqaItem]:
    """Load the VQA gold file."""
    root = _expect(_load_json(path), dict, str(path))
    items = []
    seen_ids = set()
    for idx, raw in enumerate(_field(root, "questions", list, str(path))):
        locator = f"questions[{idx}]"
        record = _expect(raw, dict, locator)
        item_id = _field(record, "id", str, locator)
        if item_id in seen_ids:
            raise SchemaError(f"duplicate question id {item_id!r}", locator=locator)
        seen_ids.add(item_id)
        options = _field(record, "options", list, locator)
        for o_idx, option in enumerate(options):
            _expect(option, str, f"{locator}.options[{o_idx}]")
        try:
            items.append(
                VqaItem(
                    id=item_id,
                    segment_id=_field(record, "segment", str, locator),
                    question=_field(record, "question", str, locator),
                    options=list(options),
                    gold=_field(record, "correct", int, locator),
                )
            )
        except SchemaError as exc:
            raise SchemaError(str(exc), locator=locator) from exc
    return items


def load_vqa_predictions(path) -> list[VqaPrediction]:
    """Load the VQA submission file; id collisions are caught at scoring time."""
    root = _expect(_load_json(path), dict, str(path))
    predictions = []
    for idx, raw in enumerate(_field(root, "answers", list, str(path))):
        locator = f"answers[{idx}]"
        record = _expect(raw, dict, locator)
        predictions.append(
            VqaPrediction(
                id=_field(record, "id", str, locator),
                raw=_field(record, "raw", str, locator),
            )
        )
    return predictions
