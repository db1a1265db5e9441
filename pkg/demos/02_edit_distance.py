"""Edit distance, alignment traces, and cost schemes."""

from mtwer import CostScheme, lev

ref = "the quick brown fox jumps".split()
hyp = "the quik brown box fox jumps".split()

result = lev(ref, hyp)
print("distance:", result.distance)
print("counts:  ", result.counts)

# The trace is the backtraced sequence of edit operations; replaying it
# transforms the reference into the hypothesis.
for op in result.trace:
    r = ref[op.ref_index] if op.ref_index is not None else "*"
    h = hyp[op.hyp_index] if op.hyp_index is not None else "*"
    print(f"  {op.kind.value:<12} {r:>6} -> {h}")

# Costs are configurable. (4, 4, 3, 0) prefers substitutions over
# insertion/deletion pairs; distances change, error RATES do not, only
# which minimal alignment gets reported.
alt = lev(ref, hyp, CostScheme(c_insert=4, c_delete=4, c_substitute=3))
print("with (4,4,3,0):", alt.distance, alt.counts)
