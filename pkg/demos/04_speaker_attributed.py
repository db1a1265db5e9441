"""Speaker-attributed metrics: cpWER, tcpWER, DER, DA-WER.

The running example: three reference speakers, a recognizer that
produced two output streams, interleaving the speakers and dropping a
word. Capital letters stand in for words.
"""

from mtwer import Segment, cp_wer, da_wer, der, validate

ref = validate(
    [
        Segment("demo", "spk1", "A B C", begin_time=0, end_time=3),
        Segment("demo", "spk3", "G", begin_time=3, end_time=4),
        Segment("demo", "spk2", "E F", begin_time=4, end_time=6),
        Segment("demo", "spk1", "D", begin_time=6, end_time=7),
        Segment("demo", "spk3", "H", begin_time=7, end_time=8),
    ]
)
hyp = validate(
    [
        Segment("demo", "s2", "A B", begin_time=0, end_time=2),
        Segment("demo", "s1", "C D", begin_time=2, end_time=6),
        Segment("demo", "s2", "E", begin_time=4, end_time=5),
        Segment("demo", "s1", "F H", begin_time=6, end_time=8),
    ]
)

# cpWER concatenates each label's segments and finds the one-to-one
# speaker mapping with the fewest word errors. With three speakers but
# two streams, one speaker maps to an empty dummy: all its words count
# as deletions.
result = cp_wer(ref, hyp)
print("cpWER :", result.error_rate, result.counts)
print("mapping:", result.mapping.pairs)

# tcpWER is the same computation under a temporal collar; it upper-
# bounds cpWER and punishes words placed at the wrong time.
print("tcpWER:", cp_wer(ref, hyp, collar=5).error_rate)

# The diarization error rate only looks at who-spoke-when.
d = der(ref, hyp)
print("DER   :", round(d.error_rate, 4), d.counts)

# DA-WER scores words under the DER-optimal mapping instead of the
# word-optimal one; with very similar speaker activities that mapping
# can be word-wise arbitrary, which is its known weakness.
print("DA-WER:", da_wer(ref, hyp).error_rate)
