"""Walk through the four caption metrics on a single traffic caption pair.

Run:  python demos/01_metric_walkthrough.py
"""

from capvqa import bleu4, cider, compute_idf, meteor, rouge_l, tokenize

# A generated caption and the annotator's reference for the same segment.
generated = "The pedestrian crossed the road quickly, looking at the sedan."
reference = "The pedestrian crossed the wet road quickly while watching the sedan."

candidate = tokenize(generated)
gold = tokenize(reference)
print("candidate tokens:", candidate)
print("reference tokens:", gold)
print()

# BLEU-4: clipped n-gram precision with a brevity penalty.
b = bleu4(candidate, [gold])
print("BLEU-4")
for n, p in enumerate(b.precisions, start=1):
    print(f"  p{n} = {p:.4f}")
print(f"  brevity penalty = {b.brevity_penalty:.4f}")
print(f"  score = {b.score:.4f}")
print()

# METEOR: unigram alignment with a fragmentation penalty. The penalty
# grows with the number of contiguous matched chunks, so shuffled word
# order costs points even when every word matches.
m = meteor(candidate, [gold])
print("METEOR")
print(f"  precision = {m.precision:.4f}, recall = {m.recall:.4f}")
print(f"  f_mean = {m.f_mean:.4f}, penalty = {m.penalty:.4f}")
print(f"  score = {m.score:.4f}")
print()

# ROUGE-L: longest common subsequence, order-preserving but not contiguous.
r = rouge_l(candidate, gold)
print("ROUGE-L")
print(f"  lcs = {r.lcs} tokens, R = {r.recall:.4f}, P = {r.precision:.4f}")
print(f"  score = {r.score:.4f}")
print()

# CIDEr: TF-IDF weighted n-gram cosine against the reference set. The IDF
# statistics come from a corpus of reference sets; rare, informative
# n-grams dominate the score while boilerplate words carry no weight.
corpus = [
    [gold],
    [tokenize("The vehicle slowed down and stopped before the crosswalk.")],
    [tokenize("A cyclist waited at the junction for the light to change.")],
]
idf = compute_idf(corpus)
c = cider(candidate, [gold], idf)
print("CIDEr (corpus of 3 reference sets, scale 10)")
for n, value in enumerate(c.per_n, start=1):
    print(f"  order-{n} cosine = {value:.4f}")
print(f"  score = {c.score:.4f}")
