import { describe, expect, it } from "vitest";

import { validateDocument } from "../src/schema";
import { render } from "../src/view";
import { mount } from "../src/main";
import type { AlignmentDocument } from "../src/schema";
import golden from "./fixtures/golden_di_cp.json";

describe("schema validation", () => {
  it("accepts the golden document", () => {
    expect(validateDocument(golden)).toEqual([]);
  });

  it("names the offending match record", () => {
    const bad = {
      session_id: "s",
      ref_words: [{ word: "a", begin: 0, end: 1, speaker: "x" }],
      hyp_words: [],
      matches: [{ kind: "deletion", ref_index: 12 }],
    };
    const problems = validateDocument(bad);
    expect(problems.some((p) => p.includes("matches[0]") && p.includes("out of range"))).toBe(
      true,
    );
  });

  it("rejects kind/side mismatches", () => {
    const bad = {
      session_id: "s",
      ref_words: [{ word: "a", begin: 0, end: 1, speaker: "x" }],
      hyp_words: [{ word: "a", begin: 0, end: 1, stream: "y", assigned_speaker: null }],
      matches: [{ kind: "correct", ref_index: 0 }],
    };
    expect(validateDocument(bad).some((p) => p.includes("must carry hyp_index"))).toBe(true);
  });
});

describe("diagnostic panel", () => {
  it("renders a diagnostics panel instead of a blank page", () => {
    const host = document.createElement("div");
    const bad = {
      session_id: "broken",
      ref_words: [],
      hyp_words: [],
      matches: [{ kind: "deletion", ref_index: 3 }],
    };
    render(host, bad);
    const panel = host.querySelector(".diagnostics");
    expect(panel).not.toBeNull();
    expect(panel!.textContent).toContain("matches[0]");
    expect(host.querySelector("svg.timeline")).toBeNull();
    expect(host.textContent!.length).toBeGreaterThan(0);
  });

  it("handles a non-object document", () => {
    const host = document.createElement("div");
    render(host, 42);
    expect(host.querySelector(".diagnostics")).not.toBeNull();
  });
});

describe("page mounting", () => {
  it("mounts one panel per embedded document", () => {
    const root = document.createElement("div");
    const other = { ...(golden as AlignmentDocument), session_id: "second" };
    const views = mount(root, [golden, other]);
    expect(views).toHaveLength(2);
    const ids = [...root.querySelectorAll(".panel")].map(
      (p) => (p as HTMLElement).dataset.sessionId,
    );
    expect(ids).toEqual(["demo", "second"]);
    expect(root.querySelectorAll(".controls")).toHaveLength(2);
  });

  it("clicking a word opens its detail", () => {
    const root = document.createElement("div");
    mount(root, [golden]);
    const word = root.querySelector("g.word.ref") as SVGGElement;
    word.querySelector("rect")!.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(root.querySelector(".detail")!.textContent).toContain("word: A");
  });
});
