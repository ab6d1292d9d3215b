"""Sentence-level BLEU-4 with uniform weights and brevity penalty.

BLEU-4 = BP * exp(sum_n w_n * ln p_n) with w_n = 1/4, where p_n is the
modified n-gram precision for orders 1..4 and BP penalizes candidates
shorter than the reference: BP = 1 if c > r else exp(1 - r/c).

Unsmoothed by default: any p_n of zero forces a zero score. The
`epsilon` policy floors zero precisions at 1e-9 for head-to-head
comparisons with smoothing scorers.
"""

import math
from dataclasses import dataclass
from typing import Sequence

from .ngrams import MAX_ORDER, clipped_matches, extract_ngrams

ZERO_PRECISION_POLICIES = ("hard-zero", "epsilon")
EPSILON_FLOOR = 1e-9


@dataclass
class BleuBreakdown:
    precisions: tuple[float, float, float, float]
    brevity_penalty: float
    score: float


def effective_reference_length(candidate_len: int, references: Sequence[Sequence[str]]) -> int:
    """Length of the reference closest to the candidate, ties to shorter."""
    best = None
    for ref in references:
        rlen = len(ref)
        if best is None:
            best = rlen
            continue
        if abs(rlen - candidate_len) < abs(best - candidate_len):
            best = rlen
        elif abs(rlen - candidate_len) == abs(best - candidate_len) and rlen < best:
            best = rlen
    return best


def bleu4(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    zero_policy: str = "hard-zero",
) -> BleuBreakdown:
    """Score one candidate against one or more references.

    An empty candidate scores 0 (its brevity penalty degenerates to 0);
    an empty reference list is a caller error.
    """
    if not references:
        raise ValueError("bleu4 requires at least one reference")
    if zero_policy not in ZERO_PRECISION_POLICIES:
        raise ValueError(
            f"zero_policy must be one of {ZERO_PRECISION_POLICIES}, got {zero_policy!r}"
        )

    c = len(candidate)
    r = effective_reference_length(c, references)
    if c == 0:
        return BleuBreakdown(precisions=(0.0,) * 4, brevity_penalty=0.0, score=0.0)
    bp = 1.0 if c > r else math.exp(1.0 - r / c)

    precisions = []
    for n in range(1, MAX_ORDER + 1):
        cand_counts = extract_ngrams(candidate, n)
        total = cand_counts.total()
        if total == 0:
            p = 0.0
        else:
            ref_counts = [extract_ngrams(ref, n) for ref in references]
            p = clipped_matches(cand_counts, ref_counts) / total
        if p == 0.0 and zero_policy == "epsilon":
            p = EPSILON_FLOOR
        precisions.append(p)

    if any(p == 0.0 for p in precisions):
        score = 0.0
    else:
        score = bp * math.exp(sum(math.log(p) for p in precisions) / MAX_ORDER)
    return BleuBreakdown(
        precisions=tuple(precisions), brevity_penalty=bp, score=score
    )
