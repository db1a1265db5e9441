"""The time-constrained edit distance.

On hour-long recordings the plain edit distance happily matches a word
with an occurrence minutes away, because one substitution is cheaper
than an insertion plus a deletion. A collar forbids correct/substitution
matches between words farther apart than a few seconds, which both makes
alignments humanly plausible and lets the matrix be pruned to a narrow
band around the diagonal.
"""

import time

from mtwer import UNBOUNDED, WordToken, lev, tc_lev

# Two identical words, 100 seconds apart.
ref = [WordToken("hello", 0.0, 1.0)]
hyp = [WordToken("hello", 100.0, 101.0)]
print("collar 5:      ", tc_lev(ref, hyp, collar=5).counts)
print("collar inf:    ", tc_lev(ref, hyp, collar=UNBOUNDED).counts)

# The distance is nonincreasing in the collar and reaches the plain
# distance in the limit.
for collar in [0, 10, 50, 99, 100, UNBOUNDED]:
    print(f"collar {collar!s:>5}: distance {tc_lev(ref, hyp, collar=collar).distance}")

# Banded pruning makes the cost linear in the sequence length when the
# temporal overlap is bounded: a 40-minute monologue aligns in
# milliseconds.
words = [WordToken(f"w{i % 50}", 0.4 * i, 0.4 * i + 0.3) for i in range(6000)]
noisy = [WordToken(w.word if i % 13 else "uh", w.begin_time + 0.1, w.end_time + 0.1)
         for i, w in enumerate(words)]
start = time.monotonic()
banded = tc_lev(words, noisy, collar=5)
print(f"6000x6000 banded: distance {banded.distance} in {time.monotonic() - start:.3f}s")

start = time.monotonic()
full = lev([t.word for t in words], [t.word for t in noisy])
print(f"6000x6000 full:   distance {full.distance} in {time.monotonic() - start:.3f}s")
