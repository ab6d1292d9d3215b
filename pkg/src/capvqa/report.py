"""Result tables and leaderboards.

Numbers are rendered with 4 decimal places in markdown and csv; the json
format preserves full precision and round-trips. Rendering is a pure
function of its inputs: equal inputs give byte-identical documents.
"""

import json
from dataclasses import dataclass
from typing import Sequence

from .composite import SplitScores

FORMATS = ("markdown", "csv", "json")

TABLE_COLUMNS = (
    "Model",
    "BLEU-4_i",
    "METEOR_i",
    "ROUGE-L_i",
    "CIDEr_i",
    "BLEU-4_e",
    "METEOR_e",
    "ROUGE-L_e",
    "CIDEr_e",
    "Acc",
    "S2",
)


@dataclass
class ResultRow:
    label: str
    internal: SplitScores
    external: SplitScores
    acc: float
    s2: float

    def values(self) -> tuple[float, ...]:
        return (
            self.internal.bleu4,
            self.internal.meteor,
            self.internal.rouge_l,
            self.internal.cider,
            self.external.bleu4,
            self.external.meteor,
            self.external.rouge_l,
            self.external.cider,
            self.acc,
            self.s2,
        )


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _csv_field(text: str) -> str:
    if any(c in text for c in ',"\n\r'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _csv_line(fields: Sequence[str]) -> str:
    return ",".join(_csv_field(f) for f in fields)


def _markdown_table(header: Sequence[str], body: Sequence[Sequence[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in body)
    return "\n".join(lines) + "\n"


def render_table(rows: Sequence[ResultRow], format: str = "markdown") -> str:
    """Render result rows in the benchmark's split-column layout."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if not rows:
        raise ValueError("render_table requires at least one row")
    if format == "json":
        doc = [
            {
                "label": row.label,
                "internal": row.internal.as_dict(),
                "external": row.external.as_dict(),
                "acc": row.acc,
                "s2": row.s2,
            }
            for row in rows
        ]
        return json.dumps(doc, indent=2) + "\n"
    body = [[row.label] + [_fmt(v) for v in row.values()] for row in rows]
    if format == "csv":
        lines = [_csv_line(TABLE_COLUMNS)]
        lines.extend(_csv_line(row) for row in body)
        return "\n".join(lines) + "\n"
    return _markdown_table(TABLE_COLUMNS, body)


def parse_table_json(document: str) -> list[ResultRow]:
    """Inverse of render_table(..., format="json")."""
    rows = []
    for record in json.loads(document):
        rows.append(
            ResultRow(
                label=record["label"],
                internal=SplitScores(split="internal", **record["internal"]),
                external=SplitScores(split="external", **record["external"]),
                acc=record["acc"],
                s2=record["s2"],
            )
        )
    return rows


def render_split_table(splits: Sequence[SplitScores], format: str = "markdown") -> str:
    """Per-split caption metrics (one row per split)."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if format == "json":
        doc = [dict(split=s.split, segments=s.segments, **s.as_dict()) for s in splits]
        return json.dumps(doc, indent=2) + "\n"
    header = ("Split", "BLEU-4", "METEOR", "ROUGE-L", "CIDEr")
    body = [
        [s.split, _fmt(s.bleu4), _fmt(s.meteor), _fmt(s.rouge_l), _fmt(s.cider)]
        for s in splits
    ]
    if format == "csv":
        return "\n".join([_csv_line(header)] + [_csv_line(r) for r in body]) + "\n"
    return _markdown_table(header, body)


@dataclass
class RankedEntry:
    rank: int
    name: str
    s2: float


def rank_leaderboard(entries: Sequence[tuple[str, float]]) -> list[RankedEntry]:
    """Rank (name, s2) pairs: descending score, name breaks ties, ranks 1-based."""
    ordered = sorted(entries, key=lambda e: (-e[1], e[0]))
    return [
        RankedEntry(rank=i, name=name, s2=score)
        for i, (name, score) in enumerate(ordered, start=1)
    ]


def render_leaderboard(ranked: Sequence[RankedEntry], format: str = "markdown") -> str:
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}")
    if format == "json":
        doc = [{"rank": e.rank, "name": e.name, "s2": e.s2} for e in ranked]
        return json.dumps(doc, indent=2) + "\n"
    header = ("Rank", "Team", "S2")
    body = [[str(e.rank), e.name, _fmt(e.s2)] for e in ranked]
    if format == "csv":
        return "\n".join([_csv_line(header)] + [_csv_line(r) for r in body]) + "\n"
    return _markdown_table(header, body)
