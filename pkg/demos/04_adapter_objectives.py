"""Low-rank weight merges and the two task losses, at desk scale.

A fine-tuned checkpoint is the base weight matrix plus a rank-r update
b @ a; the two task objectives are plain negative log-likelihoods over
realized tokens and gold answers. Everything here is small enough to
check against a calculator.

Run:  python demos/04_adapter_objectives.py
"""

import math

import numpy as np

from capvqa import LowRankAdapter, SegmentedSample, caption_nll, lora_merge, vqa_nll

rng = np.random.default_rng(8)

# A 6x6 "layer" with a rank-2 update: 24 trainable numbers instead of 36.
d, r = 6, 2
w = rng.normal(size=(d, d))
adapter = LowRankAdapter(b=rng.normal(size=(d, r)) * 0.1, a=rng.normal(size=(r, d)) * 0.1)
merged = lora_merge(w, adapter)
print(f"base weight norm      {np.linalg.norm(w):.4f}")
print(f"update norm           {np.linalg.norm(adapter.delta()):.4f} (rank {adapter.rank})")
print(f"merged weight norm    {np.linalg.norm(merged):.4f}")
print()

# Caption loss over one segment with both caption streams. Distributions
# are per (segment, stream, position); tokens index a 4-symbol vocabulary.
confident = [0.85, 0.05, 0.05, 0.05]
uniform = [0.25, 0.25, 0.25, 0.25]
dists = {
    (1, "p", 1): confident,  # pedestrian caption, first token
    (1, "p", 2): uniform,
    (1, "v", 1): confident,  # vehicle caption, first token
}
sample = SegmentedSample(segment=1, captions={"p": [0, 2], "v": [0]})
loss = caption_nll(dists, [sample])
expected = -(2 * math.log(0.85) + math.log(0.25))
print(f"caption NLL           {loss:.6f} (hand sum {expected:.6f})")

# Answer loss over three questions: certain, hedged, uniform.
answer_dists = [
    [0.97, 0.01, 0.01, 0.01],
    [0.50, 0.30, 0.10, 0.10],
    uniform,
]
gold = [0, 0, 3]
print(f"answer NLL            {vqa_nll(answer_dists, gold):.6f}")
print(f"certain model         {vqa_nll([[1.0, 0.0]], [0]):.6f} (zero loss)")
print(f"impossible token      {caption_nll({(1, 'p', 1): [0.0, 1.0], (1, 'v', 1): [1.0, 0.0]}, [SegmentedSample(segment=1, captions={'p': [0], 'v': [0]})])}")
