"""Command-line entry point.

Subcommands:

    capvqa score-captions --gt-captions GT --pred-captions PRED
    capvqa score-vqa      --gt-vqa GOLD --pred-vqa PRED
    capvqa score-all      --gt-captions GT --pred-captions PRED
                          --gt-vqa GOLD --pred-vqa PRED
    capvqa validate       --gt-captions GT --pred-captions PRED

Exit codes: 0 success, 1 validation failure (strict mode or the validate
subcommand), 2 I/O, schema or argument errors. Scoring flags default to
the benchmark's standard conventions, and equal inputs produce
byte-identical output regardless of worker count.
"""

import argparse
import json
import os
import sys

from . import composite, dataset_io, report, scoring, vqa
from .bleu import ZERO_PRECISION_POLICIES
from .errors import SchemaError, ValidationFailure
from .meteor import MeteorParams
from .rouge import BETA_CONVENTIONS

WORKERS_ENV_VAR = "CAPVQA_WORKERS"


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return int(env)
    return os.cpu_count() or 1


def _add_caption_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--gt-captions", required=True, help="ground-truth caption JSON")
    parser.add_argument("--pred-captions", required=True, help="predicted caption JSON")
    parser.add_argument(
        "--bleu-zero-policy",
        choices=ZERO_PRECISION_POLICIES,
        default="hard-zero",
        help="how BLEU handles a zero n-gram precision (default: %(default)s)",
    )
    parser.add_argument(
        "--rouge-convention",
        choices=BETA_CONVENTIONS,
        default="precision-ratio",
        help="ROUGE-L beta convention (default: %(default)s)",
    )
    parser.add_argument("--meteor-alpha", type=float, default=0.9)
    parser.add_argument("--meteor-beta", type=float, default=3.0)
    parser.add_argument("--meteor-gamma", type=float, default=0.5)
    parser.add_argument(
        "--cider-scale",
        type=float,
        default=10.0,
        help="display scale applied to the consensus metric (default: %(default)s)",
    )
    parser.add_argument(
        "--cider-length-penalty-sigma",
        type=float,
        default=None,
        help="enable the Gaussian length penalty variant with this sigma",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"scoring worker count (default: ${WORKERS_ENV_VAR} or cpu count)",
    )


def _add_vqa_flags(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--gt-vqa", required=required, help="VQA gold JSON")
    parser.add_argument("--pred-vqa", required=required, help="VQA answers JSON")


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format", choices=report.FORMATS, default="markdown",
        help="output document format (default: %(default)s)",
    )
    parser.add_argument("--output", default=None, help="write the document here instead of stdout")
    parser.add_argument(
        "--strict", action="store_true",
        help="fail (exit 1) unless the submission is complete and aligned",
    )


def _emit(document: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)


def _scoring_config(args) -> scoring.ScoringConfig:
    return scoring.ScoringConfig(
        bleu_zero_policy=args.bleu_zero_policy,
        rouge_convention=args.rouge_convention,
        meteor_params=MeteorParams(
            alpha=args.meteor_alpha, beta=args.meteor_beta, gamma=args.meteor_gamma
        ),
        cider_scale=args.cider_scale,
        cider_length_penalty_sigma=args.cider_length_penalty_sigma,
    )


def _workers(args) -> int:
    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def _score_caption_files(args) -> scoring.CaptionScores:
    gt = dataset_io.load_ground_truth(args.gt_captions)
    pred = dataset_io.load_predictions(args.pred_captions)
    if args.strict:
        validation = dataset_io.validate(gt, pred)
        if not validation.is_empty():
            raise ValidationFailure(validation.summary(), report=validation)
    return scoring.score_captions(gt, pred, _scoring_config(args), workers=_workers(args))


def cmd_score_captions(args) -> int:
    scores = _score_caption_files(args)
    _emit(report.render_split_table([scores.internal, scores.external], args.format), args)
    return 0


def _score_vqa_files(args) -> vqa.AccuracyResult:
    items = dataset_io.load_vqa_items(args.gt_vqa)
    predictions = dataset_io.load_vqa_predictions(args.pred_vqa)
    policy = "strict" if args.strict else "missing-is-wrong"
    return vqa.accuracy(items, predictions, missing_policy=policy)


def cmd_score_vqa(args) -> int:
    result = _score_vqa_files(args)
    if args.format == "json":
        document = json.dumps(
            {"total": result.total, "correct": result.correct, "acc": result.acc_float},
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        document = f"total,correct,acc\n{result.total},{result.correct},{result.acc_float:.4f}\n"
    else:
        document = (
            f"Total: {result.total}\n"
            f"Correct: {result.correct}\n"
            f"Acc: {result.acc_float:.4f}\n"
        )
    _emit(document, args)
    return 0


def cmd_score_all(args) -> int:
    if args.acc is None and not (args.gt_vqa and args.pred_vqa):
        raise ValueError("score-all needs --gt-vqa and --pred-vqa, or an --acc override")
    caption_scores = _score_caption_files(args)
    if args.acc is not None:
        acc = args.acc
    else:
        acc = _score_vqa_files(args).acc_float
    aggregated = composite.aggregate_splits(
        caption_scores.internal, caption_scores.external, mode=args.aggregation
    )
    cap = composite.cap_score(**aggregated)
    final = composite.s2(cap, acc)

    row = report.ResultRow(
        label=args.label,
        internal=caption_scores.internal,
        external=caption_scores.external,
        acc=final.acc,
        s2=final.s2,
    )
    if args.format == "json":
        percent = final.as_percent()
        document = json.dumps(
            {
                "label": args.label,
                "internal": dict(
                    segments=caption_scores.internal.segments,
                    **caption_scores.internal.as_dict(),
                ),
                "external": dict(
                    segments=caption_scores.external.segments,
                    **caption_scores.external.as_dict(),
                ),
                "aggregated": aggregated,
                "cap_score": final.cap_score,
                "acc": final.acc,
                "s2": final.s2,
                "percent": percent,
            },
            indent=2,
        ) + "\n"
    else:
        table = report.render_table([row], args.format)
        percent = final.as_percent()
        document = (
            table
            + "\n"
            + f"Cap_Score: {final.cap_score:.4f} ({percent['cap_score']:.4f}%)\n"
            + f"Acc: {final.acc:.4f} ({percent['acc']:.4f}%)\n"
            + f"S2: {final.s2:.4f} ({percent['s2']:.4f}%)\n"
        )
    _emit(document, args)
    return 0


def cmd_validate(args) -> int:
    gt = dataset_io.load_ground_truth(args.gt_captions)
    pred = dataset_io.load_predictions(args.pred_captions)
    validation = dataset_io.validate(gt, pred)
    sys.stdout.write(validation.summary() + "\n")
    return 0 if validation.is_empty() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capvqa",
        description="Score caption and multiple-choice VQA submissions for "
        "dual-task traffic-video benchmarks.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("score-captions", help="caption metrics per split")
    _add_caption_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_score_captions)

    p = sub.add_parser("score-vqa", help="multiple-choice answer accuracy")
    _add_vqa_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_score_vqa)

    p = sub.add_parser("score-all", help="both tasks plus the composite scores")
    _add_caption_flags(p)
    _add_vqa_flags(p, required=False)
    _add_output_flags(p)
    p.add_argument(
        "--aggregation",
        choices=composite.AGGREGATION_MODES,
        default="mean",
        help="how the two splits combine (default: %(default)s)",
    )
    p.add_argument("--label", default="run", help="row label for the report")
    p.add_argument(
        "--acc",
        type=float,
        default=None,
        help="override VQA accuracy with a known fraction in [0, 1]",
    )
    p.set_defaults(func=cmd_score_all)

    p = sub.add_parser("validate", help="diff a submission against ground truth")
    p.add_argument("--gt-captions", required=True)
    p.add_argument("--pred-captions", required=True)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_help(sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValidationFailure as exc:
        sys.stderr.write(f"validation failed:\n{exc}\n")
        return 1
    except (SchemaError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
