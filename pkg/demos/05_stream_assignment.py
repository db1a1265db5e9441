"""Speaker-agnostic metrics: ORC-WER, MIMO-WER, DI-cpWER.

Same session as demo 04. These metrics ignore (or repair) speaker
attribution by re-assigning segments:

* ORC assigns each reference utterance to one hypothesis stream,
  keeping the global utterance order.
* MIMO relaxes that to per-speaker order, so utterances of different
  speakers may interleave differently than in the reference.
* DI-cp swaps the roles: hypothesis segments are relabeled onto
  reference speakers. Its gap to cpWER estimates how many errors were
  caused by speaker confusion.
"""

from mtwer import (
    TimestampMode,
    cp_wer,
    di_cp_wer,
    explode_to_word_level,
    mimo_wer,
    orc_wer,
)

from importlib import import_module

demo04 = import_module("04_speaker_attributed")
ref, hyp = demo04.ref, demo04.hyp

for name, fn in [("ORC-WER", orc_wer), ("MIMO-WER", mimo_wer), ("DI-cpWER", di_cp_wer)]:
    result = fn(ref, hyp)
    print(f"{name:<9}: rate {result.error_rate:<6} counts {result.counts}")
    print(f"           labels {result.assignment.labels} order {result.assignment.order}")

# cpWER - DI-cpWER here is 87.5% - 25% = 62.5 points: most of this
# session's errors come from speaker confusion, not misrecognition.
print("speaker-confusion estimate:",
      cp_wer(ref, hyp).error_rate - di_cp_wer(ref, hyp).error_rate)

# Word-level variants explode segments first, dropping the
# utterance-consistency constraint.
wl_ref = explode_to_word_level(ref, TimestampMode.CHARACTER_BASED)
wl_hyp = explode_to_word_level(hyp, TimestampMode.CHARACTER_BASED)
print("wl-ORC-WER  :", orc_wer(wl_ref, wl_hyp).error_rate)
print("wl-DI-cpWER :", di_cp_wer(wl_ref, wl_hyp).error_rate)

# Time-constrained variants take a collar like tcpWER; besides more
# plausible matchings, the collar prunes the search drastically, which
# is what makes tcORC/tcMIMO feasible on hour-long sessions.
print("tcORC-WER   :", orc_wer(ref, hyp, collar=5).error_rate)
