"""Consensus caption scoring via TF-IDF weighted n-gram cosines.

For each order n in 1..4 the candidate and every reference are mapped to
sparse TF-IDF vectors over their n-grams; the per-order score is the mean
cosine against the reference set, and the final score averages the four
orders and applies a display scale.

Document frequency is counted at the reference-set level: an n-gram
contributes once per set no matter how many of the set's references (or
repetitions) contain it. IDF is ln(num_docs / df); n-grams never seen in
the corpus fall back to df = 1. Published values for this metric family
sit above 1, which a plain average of cosines cannot produce, so the
conventional scale of 10 is the default and is configurable.

Scoring is two-phase: build an immutable `CiderCorpusIdf` over the
evaluation corpus once, then score any number of candidates against it
(concurrently if desired).
"""

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ngrams import MAX_ORDER, extract_ngrams

DEFAULT_SCALE = 10.0


@dataclass(frozen=True)
class CiderCorpusIdf:
    """Reference-set document frequencies for one evaluation corpus."""

    num_docs: int
    df: Mapping[int, Mapping[tuple, int]] = field(repr=False)

    def idf(self, gram: tuple) -> float:
        df = self.df[len(gram)].get(gram, 1)
        return math.log(self.num_docs / df)


@dataclass
class CiderBreakdown:
    per_n: tuple[float, float, float, float]
    score: float


def compute_idf(corpus: Sequence[Sequence[Sequence[str]]]) -> CiderCorpusIdf:
    """Count, per order, how many reference sets contain each n-gram.

    `corpus` is one reference set per scoring unit, each set a list of
    token sequences. Order-independent: shuffling the corpus yields the
    same statistics.
    """
    if not corpus:
        raise ValueError("cider idf requires a non-empty corpus")
    df: dict[int, dict[tuple, int]] = {n: {} for n in range(1, MAX_ORDER + 1)}
    for references in corpus:
        for n in range(1, MAX_ORDER + 1):
            seen = set()
            for reference in references:
                seen.update(extract_ngrams(reference, n).counts)
            for gram in seen:
                df[n][gram] = df[n].get(gram, 0) + 1
    return CiderCorpusIdf(num_docs=len(corpus), df=df)


def tfidf_vector(tokens: Sequence[str], n: int, idf: CiderCorpusIdf) -> dict[tuple, float]:
    """Sparse TF-IDF vector over the order-n n-grams of one caption."""
    counts = extract_ngrams(tokens, n)
    total = counts.total()
    if total == 0:
        return {}
    return {
        gram: (count / total) * idf.idf(gram)
        for gram, count in counts.counts.items()
    }


def _cosine(a: Mapping[tuple, float], b: Mapping[tuple, float]) -> float:
    # zero vectors (empty captions, single-document corpora) score 0
    norm_a = math.sqrt(math.fsum(v * v for v in a.values()))
    norm_b = math.sqrt(math.fsum(v * v for v in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    dot = math.fsum(v * b.get(k, 0.0) for k, v in a.items())
    return dot / (norm_a * norm_b)


def cider(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    idf: CiderCorpusIdf,
    scale: float = DEFAULT_SCALE,
    length_penalty_sigma: float | None = None,
) -> CiderBreakdown:
    """Score one candidate against its reference set.

    `length_penalty_sigma` switches on the Gaussian length penalty used by
    the -D variant of this metric (off by default; the plain cosine form
    is the primary definition here).
    """
    if not references:
        raise ValueError("cider requires at least one reference")
    per_n = []
    for n in range(1, MAX_ORDER + 1):
        cand_vec = tfidf_vector(candidate, n, idf)
        sims = []
        for reference in references:
            sim = _cosine(cand_vec, tfidf_vector(reference, n, idf))
            if length_penalty_sigma is not None:
                delta = len(candidate) - len(reference)
                sim *= math.exp(-(delta * delta) / (2.0 * length_penalty_sigma**2))
            sims.append(sim)
        per_n.append(math.fsum(sims) / len(references))
    score = scale * math.fsum(per_n) / MAX_ORDER
    return CiderBreakdown(per_n=tuple(per_n), score=score)
