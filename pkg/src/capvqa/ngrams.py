"""n-gram extraction and clipped matching, shared by BLEU and CIDEr."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

MAX_ORDER = 4


@dataclass
class NGramCounts:
    """Counts of every contiguous n-token window of one sequence."""

    order: int
    counts: Counter = field(default_factory=Counter)

    def total(self) -> int:
        return sum(self.counts.values())


def extract_ngrams(tokens: Sequence[str], n: int) -> NGramCounts:
    """Count every n-token window with multiplicity.

    A sequence shorter than n has no windows and yields empty counts.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"n-gram order must be in [1, {MAX_ORDER}], got {n}")
    counts = Counter(
        tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
    )
    return NGramCounts(order=n, counts=counts)


def clipped_matches(candidate: NGramCounts, references: Sequence[NGramCounts]) -> int:
    """Candidate n-gram count clipped to the per-gram maximum over references.

    This is the numerator of BLEU's modified precision: each candidate
    n-gram earns credit at most as many times as its best reference
    contains it.
    """
    for ref in references:
        if ref.order != candidate.order:
            raise ValueError(
                f"order mismatch: candidate has {candidate.order}, "
                f"reference has {ref.order}"
            )
    matched = 0
    for gram, count in candidate.counts.items():
        best = max((ref.counts.get(gram, 0) for ref in references), default=0)
        matched += min(count, best)
    return matched
