"""METEOR with exact-match unigram alignment and fragmentation penalty.

score = F_mean * (1 - penalty), where F_mean = P*R / (alpha*P + (1-alpha)*R)
over matched unigrams, and penalty = gamma * (ch/m)**beta with ch the
number of contiguous matched chunks. Matching is surface-form only: no
stemming or synonym stages, so scores are reproducible without lexical
resources.

The alignment maximizes the number of matched unigrams and, among all
such matchings, minimizes the chunk count. The search is exhaustive while
the number of distinct max-cardinality matchings stays within
`max_search` (default 10_000); beyond that a deterministic left-to-right
greedy pass is used that prefers reference positions extending the
current chunk.
"""

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

DEFAULT_MAX_SEARCH = 10_000


@dataclass(frozen=True)
class MeteorParams:
    alpha: float = 0.9
    beta: float = 3.0
    gamma: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if self.beta <= 0.0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must be in [0, 1], got {self.gamma}")


DEFAULT_PARAMS = MeteorParams()


@dataclass
class MeteorAlignment:
    matches: int      # matched unigram occurrences (m)
    chunks: int       # contiguous matched chunks (ch); 0 iff m == 0
    candidate_len: int
    reference_len: int


@dataclass
class MeteorBreakdown:
    precision: float
    recall: float
    f_mean: float
    penalty: float
    score: float


def _count_chunks(pairs: Sequence[tuple[int, int]]) -> int:
    # pairs are (candidate_pos, reference_pos), sorted by candidate_pos
    if not pairs:
        return 0
    chunks = 1
    for (c0, r0), (c1, r1) in zip(pairs, pairs[1:]):
        if c1 != c0 + 1 or r1 != r0 + 1:
            chunks += 1
    return chunks


def _matching_count(candidate: Sequence[str], reference: Sequence[str], cap: int) -> int:
    """Number of distinct max-cardinality matchings, saturating at cap + 1."""
    cand_counts = Counter(candidate)
    ref_counts = Counter(reference)
    total = 1
    for word, c in cand_counts.items():
        r = ref_counts.get(word, 0)
        if r == 0:
            continue
        m = min(c, r)
        total *= math.comb(c, m) * math.comb(r, m) * math.factorial(m)
        if total > cap:
            return cap + 1
    return total


def _align_exhaustive(candidate: Sequence[str], reference: Sequence[str]) -> tuple[int, int]:
    ref_positions = defaultdict(list)
    for j, tok in enumerate(reference):
        ref_positions[tok].append(j)
    target = sum((Counter(candidate) & Counter(reference)).values())
    if target == 0:
        return 0, 0

    used = [False] * len(reference)
    unused_ref = Counter(reference)
    cand_remaining = Counter(candidate)
    pairs: list[tuple[int, int]] = []
    best_chunks = len(candidate) + 1

    def reachable(matched: int) -> bool:
        potential = sum(
            min(count, unused_ref[word])
            for word, count in cand_remaining.items()
            if word in ref_positions
        )
        return matched + potential >= target

    def dfs(i: int, matched: int):
        nonlocal best_chunks
        if not reachable(matched):
            return
        if i == len(candidate):
            best_chunks = min(best_chunks, _count_chunks(pairs))
            return
        tok = candidate[i]
        cand_remaining[tok] -= 1
        for j in ref_positions.get(tok, ()):
            if used[j]:
                continue
            used[j] = True
            unused_ref[tok] -= 1
            pairs.append((i, j))
            dfs(i + 1, matched + 1)
            pairs.pop()
            unused_ref[tok] += 1
            used[j] = False
        dfs(i + 1, matched)  # leave position i unmatched
        cand_remaining[tok] += 1

    dfs(0, 0)
    return target, best_chunks


def _align_greedy(candidate: Sequence[str], reference: Sequence[str]) -> tuple[int, int]:
    ref_positions = defaultdict(list)
    for j, tok in enumerate(reference):
        ref_positions[tok].append(j)
    used = [False] * len(reference)
    matches = 0
    chunks = 0
    prev = None  # (candidate_pos, reference_pos) of the last match
    for i, tok in enumerate(candidate):
        positions = ref_positions.get(tok)
        if not positions:
            continue
        j = None
        if prev is not None and prev[0] == i - 1:
            ext = prev[1] + 1
            if ext < len(reference) and not used[ext] and reference[ext] == tok:
                j = ext
        if j is None:
            for cand_j in positions:
                if not used[cand_j]:
                    j = cand_j
                    break
        if j is None:
            continue
        used[j] = True
        matches += 1
        if prev is None or prev[0] != i - 1 or prev[1] != j - 1:
            chunks += 1
        prev = (i, j)
    return matches, chunks


def align(
    candidate: Sequence[str],
    reference: Sequence[str],
    max_search: int = DEFAULT_MAX_SEARCH,
) -> MeteorAlignment:
    """One-to-one exact-match alignment: most matches, then fewest chunks."""
    if _matching_count(candidate, reference, max_search) <= max_search:
        matches, chunks = _align_exhaustive(candidate, reference)
    else:
        matches, chunks = _align_greedy(candidate, reference)
    return MeteorAlignment(
        matches=matches,
        chunks=chunks,
        candidate_len=len(candidate),
        reference_len=len(reference),
    )


def _score_single(
    candidate: Sequence[str], reference: Sequence[str], params: MeteorParams
) -> MeteorBreakdown:
    alignment = align(candidate, reference)
    m = alignment.matches
    if m == 0:
        return MeteorBreakdown(0.0, 0.0, 0.0, 0.0, 0.0)
    precision = m / alignment.candidate_len
    recall = m / alignment.reference_len
    f_mean = precision * recall / (
        params.alpha * precision + (1 - params.alpha) * recall
    )
    penalty = params.gamma * (alignment.chunks / m) ** params.beta
    return MeteorBreakdown(
        precision=precision,
        recall=recall,
        f_mean=f_mean,
        penalty=penalty,
        score=f_mean * (1.0 - penalty),
    )


def meteor(
    candidate: Sequence[str],
    references: Sequence[Sequence[str]],
    params: MeteorParams = DEFAULT_PARAMS,
) -> MeteorBreakdown:
    """Best METEOR over the given references (ties keep the earliest)."""
    if not references:
        raise ValueError("meteor requires at least one reference")
    best = None
    for reference in references:
        result = _score_single(candidate, reference, params)
        if best is None or result.score > best.score:
            best = result
    return best
