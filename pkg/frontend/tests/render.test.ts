import { describe, expect, it } from "vitest";

import { render } from "../src/view";
import type { AlignmentDocument } from "../src/schema";
import golden from "./fixtures/golden_di_cp.json";

const doc = golden as AlignmentDocument;

function mounted(document_: unknown = doc) {
  const host = document.createElement("div");
  render(host, document_);
  return host;
}

describe("rendering the golden session", () => {
  it("draws one connector or mark per match record, with the expected kinds", () => {
    const host = mounted();
    expect(host.querySelectorAll("line.connector.correct")).toHaveLength(6);
    expect(host.querySelectorAll("line.connector.substitution")).toHaveLength(1);
    expect(host.querySelectorAll("circle.mark.deletion")).toHaveLength(1);
    expect(host.querySelectorAll("circle.mark.insertion")).toHaveLength(0);
    const connectors = host.querySelectorAll("line.connector").length;
    const marks = host.querySelectorAll("circle.mark").length;
    expect(connectors + marks).toBe(doc.matches.length);
  });

  it("renders every word of the document", () => {
    const host = mounted();
    expect(host.querySelectorAll("g.word.ref")).toHaveLength(doc.ref_words.length);
    expect(host.querySelectorAll("g.word.hyp")).toHaveLength(doc.hyp_words.length);
  });

  it("shows lane labels and the legend", () => {
    const host = mounted();
    const labels = [...host.querySelectorAll("text.lane-label")].map((t) => t.textContent);
    expect(labels).toEqual(["Reference", "Hypothesis"]);
    const legend = [...host.querySelectorAll(".legend li")].map((li) => li.textContent);
    expect(legend).toEqual(["correct", "substitution", "insertion", "deletion"]);
  });

  it("is a pure function of the document", () => {
    const a = mounted();
    const b = mounted();
    expect(a.innerHTML).toBe(b.innerHTML);
  });

  it("fits the whole session initially", () => {
    const host = document.createElement("div");
    const view = render(host, doc);
    expect(view.viewWindow).toEqual(view.sessionExtent);
    expect(view.sessionExtent.t0).toBe(0);
    expect(view.sessionExtent.t1).toBe(8);
  });

  it("addresses the panel by session id", () => {
    const host = mounted();
    const panel = host.querySelector(".panel") as HTMLElement;
    expect(panel.dataset.sessionId).toBe("demo");
  });
});

describe("degenerate documents", () => {
  it("renders an empty timeline with an axis for an empty session", () => {
    const empty: AlignmentDocument = {
      session_id: "empty",
      ref_words: [],
      hyp_words: [],
      matches: [],
    };
    const host = mounted(empty);
    expect(host.querySelector("svg.timeline")).not.toBeNull();
    expect(host.querySelectorAll(".axis text.tick").length).toBeGreaterThan(0);
    expect(host.querySelectorAll("g.word")).toHaveLength(0);
    expect(host.querySelector(".diagnostics")).toBeNull();
  });

  it("positions untimed words by their ordinal", () => {
    const untimed: AlignmentDocument = {
      session_id: "untimed",
      ref_words: [
        { word: "a", begin: null, end: null, speaker: "s" },
        { word: "b", begin: null, end: null, speaker: "s" },
      ],
      hyp_words: [],
      matches: [
        { kind: "deletion", ref_index: 0 },
        { kind: "deletion", ref_index: 1 },
      ],
    };
    const host = mounted(untimed);
    const boxes = [...host.querySelectorAll("g.word.ref rect")];
    const ys = boxes.map((r) => Number(r.getAttribute("y")));
    expect(ys[0]).toBeLessThan(ys[1]);
  });
});
