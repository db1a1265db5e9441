"""Emitting an interactive alignment page.

Metric values say how many errors a system made; the alignment page
shows where. Words are drawn on a shared vertical time axis (reference
left, hypothesis right); matched words are connected with lines,
color-coded correct/substitution, with insertions and deletions left
unconnected.
"""

from importlib import import_module

from mtwer import build_alignment_document, emit_alignment_html, score_session

demo04 = import_module("04_speaker_attributed")
ref, hyp = demo04.ref, demo04.hyp

result = score_session("dicpwer", ref, hyp)
document = build_alignment_document("demo", ref, hyp, result, "dicpwer")
print(f"{len(document['ref_words'])} reference words, "
      f"{len(document['hyp_words'])} hypothesis words, "
      f"{len(document['matches'])} match records")

out = emit_alignment_html([document], "alignment.html")
print(f"wrote {out} (open in a browser; self-contained, works offline)")

# The same page comes out of the command line:
#   mtwer align --metric dicpwer --ref ref.json --hyp hyp.json --out alignment.html
