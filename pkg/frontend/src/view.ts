// Trace-alignment rendering and interaction.
//
// One panel per session: reference words in a left lane, hypothesis
// words in a right lane, a shared time axis flowing downward. Words
// matched as correct or substituted are connected with a line;
// insertions and deletions stay unconnected and get a mark on their
// lane. Rendering is a pure function of (document, view state): the
// same document always produces the same DOM.

import {
  AlignmentDocument,
  Match,
  MatchKind,
  validateDocument,
} from "./schema";

// Fixed legend; keep in sync with nothing else, this is the contract.
export const KIND_COLORS: Record<MatchKind, string> = {
  correct: "#228833",
  substitution: "#ee7733",
  insertion: "#4477aa",
  deletion: "#cc3311",
};

const WIDTH = 680;
const HEIGHT = 520;
const TOP = 40;
const BOTTOM = HEIGHT - 20;
const LANES = {
  ref: { x0: 70, x1: 300 },
  hyp: { x0: 380, x1: 610 },
};
const MIN_SPAN = 0.25; // seconds; zoom limit
const MIN_BOX = 4; // px; point-timestamped words still get a visible box

type Side = "ref" | "hyp";

interface Interval {
  t0: number;
  t1: number;
}

export interface Selection {
  matchIndex: number | null;
  side: Side | null;
  wordIndex: number | null;
}

const SVG = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  name: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG, name);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

/** Word time with a deterministic fallback for missing timestamps. */
function wordInterval(begin: number | null, end: number | null, ordinal: number): Interval {
  const t0 = begin ?? ordinal;
  const t1 = end ?? t0 + 1;
  return { t0, t1: Math.max(t0, t1) };
}

export class AlignmentView {
  readonly doc: AlignmentDocument;
  readonly problems: string[];
  private readonly container: HTMLElement;
  private readonly refTimes: Interval[];
  private readonly hypTimes: Interval[];
  private readonly extent: Interval;
  private readonly errorOrder: number[]; // match indices, in time order
  private window: Interval;
  private errorCursor = -1;
  private selection: Selection = { matchIndex: null, side: null, wordIndex: null };

  constructor(container: HTMLElement, doc: AlignmentDocument) {
    this.container = container;
    this.doc = doc;
    this.problems = validateDocument(doc);
    if (this.problems.length > 0) {
      this.refTimes = [];
      this.hypTimes = [];
      this.extent = { t0: 0, t1: 1 };
      this.window = { ...this.extent };
      this.errorOrder = [];
      this.render();
      return;
    }
    this.refTimes = doc.ref_words.map((w, i) => wordInterval(w.begin, w.end, i));
    this.hypTimes = doc.hyp_words.map((w, i) => wordInterval(w.begin, w.end, i));
    const all = [...this.refTimes, ...this.hypTimes];
    this.extent =
      all.length === 0
        ? { t0: 0, t1: 1 }
        : {
            t0: Math.min(...all.map((i) => i.t0)),
            t1: Math.max(...all.map((i) => i.t1)),
          };
    if (this.extent.t1 - this.extent.t0 < MIN_SPAN) {
      this.extent.t1 = this.extent.t0 + MIN_SPAN;
    }
    this.window = { ...this.extent };
    this.errorOrder = doc.matches
      .map((m, i) => ({ m, i }))
      .filter(({ m }) => m.kind !== "correct")
      .sort((a, b) => this.matchTime(a.m) - this.matchTime(b.m) || a.i - b.i)
      .map(({ i }) => i);
    this.render();
  }

  // -- interaction ---------------------------------------------------------

  /** Zoom by a factor around the window center (or a given time). */
  zoom(factor: number, center?: number): void {
    if (this.problems.length > 0) return;
    const span = this.window.t1 - this.window.t0;
    const target = Math.min(
      Math.max(span / factor, MIN_SPAN),
      this.extent.t1 - this.extent.t0,
    );
    const mid = center ?? (this.window.t0 + this.window.t1) / 2;
    this.window = this.clampWindow({ t0: mid - target / 2, t1: mid + target / 2 });
    this.render();
  }

  /** Pan by a number of seconds; clamps to the session extent. */
  pan(deltaSeconds: number): void {
    if (this.problems.length > 0) return;
    this.window = this.clampWindow({
      t0: this.window.t0 + deltaSeconds,
      t1: this.window.t1 + deltaSeconds,
    });
    this.render();
  }

  /** Jump to the next non-correct match in time order; cycles. */
  nextError(): number | null {
    return this.stepError(1);
  }

  prevError(): number | null {
    return this.stepError(-1);
  }

  /** Show a word's text, times, labels, and match kind in the detail panel. */
  selectWord(side: Side, index: number): void {
    if (this.problems.length > 0) return;
    const matchIndex = this.doc.matches.findIndex((m) =>
      side === "ref" ? m.ref_index === index : m.hyp_index === index,
    );
    this.selection = { side, wordIndex: index, matchIndex: matchIndex >= 0 ? matchIndex : null };
    this.render();
  }

  get selected(): Selection {
    return this.selection;
  }

  /** Currently visible time window (clamped to the session extent). */
  get viewWindow(): Interval {
    return { ...this.window };
  }

  get sessionExtent(): Interval {
    return { ...this.extent };
  }

  private stepError(direction: 1 | -1): number | null {
    if (this.problems.length > 0 || this.errorOrder.length === 0) return null;
    const n = this.errorOrder.length;
    this.errorCursor =
      this.errorCursor < 0 && direction < 0
        ? n - 1
        : (((this.errorCursor + direction) % n) + n) % n;
    const matchIndex = this.errorOrder[this.errorCursor];
    const match = this.doc.matches[matchIndex];
    this.selection = {
      matchIndex,
      side: match.ref_index !== undefined ? "ref" : "hyp",
      wordIndex: match.ref_index !== undefined ? match.ref_index : match.hyp_index!,
    };
    this.ensureVisible(this.matchTime(match));
    this.render();
    return matchIndex;
  }

  private matchTime(match: Match): number {
    if (match.ref_index !== undefined) return this.refTimes[match.ref_index].t0;
    return this.hypTimes[match.hyp_index!].t0;
  }

  private ensureVisible(t: number): void {
    if (t < this.window.t0 || t > this.window.t1) {
      const span = this.window.t1 - this.window.t0;
      this.window = this.clampWindow({ t0: t - span / 2, t1: t + span / 2 });
    }
  }

  private clampWindow(w: Interval): Interval {
    const span = Math.min(w.t1 - w.t0, this.extent.t1 - this.extent.t0);
    let t0 = Math.max(w.t0, this.extent.t0);
    t0 = Math.min(t0, this.extent.t1 - span);
    return { t0, t1: t0 + span };
  }

  // -- rendering -----------------------------------------------------------

  private y(t: number): number {
    const span = this.window.t1 - this.window.t0;
    return TOP + ((t - this.window.t0) / span) * (BOTTOM - TOP);
  }

  render(): void {
    this.container.textContent = "";
    const panel = document.createElement("section");
    panel.className = "panel";
    panel.dataset.sessionId = this.doc?.session_id ?? "";

    const header = document.createElement("header");
    const title = document.createElement("h2");
    title.textContent = this.doc?.session_id ?? "(invalid document)";
    header.appendChild(title);
    if (this.doc?.metric) {
      const metric = document.createElement("span");
      metric.className = "metric";
      metric.textContent = this.doc.metric;
      header.appendChild(metric);
    }
    panel.appendChild(header);

    if (this.problems.length > 0) {
      panel.appendChild(this.renderDiagnostics());
      this.container.appendChild(panel);
      return;
    }

    const body = document.createElement("div");
    body.className = "panel-body";
    body.appendChild(this.renderTimeline());
    body.appendChild(this.renderDetail());
    panel.appendChild(body);
    panel.appendChild(this.renderLegend());
    this.container.appendChild(panel);
  }

  private renderDiagnostics(): HTMLElement {
    const box = document.createElement("div");
    box.className = "diagnostics";
    const head = document.createElement("p");
    head.textContent = "The embedded alignment document is not usable:";
    box.appendChild(head);
    const list = document.createElement("ul");
    for (const problem of this.problems) {
      const item = document.createElement("li");
      item.textContent = problem;
      list.appendChild(item);
    }
    box.appendChild(list);
    return box;
  }

  private renderTimeline(): SVGSVGElement {
    const svg = svgEl("svg", {
      class: "timeline",
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      width: WIDTH,
      height: HEIGHT,
    });

    const defs = svgEl("defs");
    const clip = svgEl("clipPath", { id: `clip-${this.doc.session_id}` });
    clip.appendChild(svgEl("rect", { x: 0, y: TOP - 8, width: WIDTH, height: BOTTOM - TOP + 16 }));
    defs.appendChild(clip);
    svg.appendChild(defs);

    svg.appendChild(this.renderAxis());

    for (const [side, label] of [
      ["ref", "Reference"],
      ["hyp", "Hypothesis"],
    ] as const) {
      const lane = LANES[side];
      const text = svgEl("text", {
        class: "lane-label",
        x: (lane.x0 + lane.x1) / 2,
        y: TOP - 16,
        "text-anchor": "middle",
      });
      text.textContent = label;
      svg.appendChild(text);
    }

    const content = svgEl("g", {
      class: "content",
      "clip-path": `url(#clip-${this.doc.session_id})`,
    });
    content.appendChild(this.renderWords("ref"));
    content.appendChild(this.renderWords("hyp"));
    content.appendChild(this.renderMatches());
    svg.appendChild(content);
    return svg;
  }

  private renderAxis(): SVGGElement {
    const axis = svgEl("g", { class: "axis" });
    const x = 40;
    axis.appendChild(
      svgEl("line", { x1: x, y1: TOP, x2: x, y2: BOTTOM, stroke: "#999" }),
    );
    const ticks = 6;
    for (let i = 0; i <= ticks; i++) {
      const t = this.window.t0 + ((this.window.t1 - this.window.t0) * i) / ticks;
      const y = this.y(t);
      axis.appendChild(svgEl("line", { x1: x - 4, y1: y, x2: x, y2: y, stroke: "#999" }));
      const label = svgEl("text", {
        class: "tick",
        x: x - 8,
        y: y + 4,
        "text-anchor": "end",
      });
      label.textContent = `${t.toFixed(2)}s`;
      axis.appendChild(label);
    }
    return axis;
  }

  private renderWords(side: Side): SVGGElement {
    const group = svgEl("g", { class: `words-${side}` });
    const lane = LANES[side];
    const words = side === "ref" ? this.doc.ref_words : this.doc.hyp_words;
    const times = side === "ref" ? this.refTimes : this.hypTimes;
    words.forEach((w, i) => {
      const { t0, t1 } = times[i];
      const y0 = this.y(t0);
      const height = Math.max(this.y(t1) - y0, MIN_BOX);
      const g = svgEl("g", { class: `word ${side}` });
      g.dataset.index = String(i);
      if (this.selection.side === side && this.selection.wordIndex === i) {
        g.classList.add("selected");
      }
      g.appendChild(
        svgEl("rect", {
          x: lane.x0,
          y: y0,
          width: lane.x1 - lane.x0,
          height,
          rx: 2,
          fill: "#f2f2f2",
          stroke: "#666",
        }),
      );
      const text = svgEl("text", {
        x: (lane.x0 + lane.x1) / 2,
        y: y0 + height / 2 + 4,
        "text-anchor": "middle",
      });
      text.textContent = w.word;
      g.appendChild(text);
      group.appendChild(g);
    });
    return group;
  }

  private renderMatches(): SVGGElement {
    const group = svgEl("g", { class: "matches" });
    this.doc.matches.forEach((m, i) => {
      const selected = this.selection.matchIndex === i;
      if (m.ref_index !== undefined && m.hyp_index !== undefined) {
        // Connector between the two lanes.
        const r = this.refTimes[m.ref_index];
        const h = this.hypTimes[m.hyp_index];
        const line = svgEl("line", {
          class: `connector ${m.kind}`,
          x1: LANES.ref.x1,
          y1: this.y((r.t0 + r.t1) / 2),
          x2: LANES.hyp.x0,
          y2: this.y((h.t0 + h.t1) / 2),
          stroke: KIND_COLORS[m.kind],
          "stroke-width": selected ? 4 : 2,
        });
        line.dataset.matchIndex = String(i);
        if (selected) line.classList.add("selected");
        group.appendChild(line);
      } else {
        // Unconnected mark on the side that has the word.
        const onRef = m.ref_index !== undefined;
        const times = onRef ? this.refTimes[m.ref_index!] : this.hypTimes[m.hyp_index!];
        const lane = onRef ? LANES.ref : LANES.hyp;
        const mark = svgEl("circle", {
          class: `mark ${m.kind}`,
          cx: onRef ? lane.x1 + 8 : lane.x0 - 8,
          cy: this.y((times.t0 + times.t1) / 2),
          r: selected ? 7 : 5,
          fill: KIND_COLORS[m.kind],
        });
        mark.dataset.matchIndex = String(i);
        if (selected) mark.classList.add("selected");
        group.appendChild(mark);
      }
    });
    return group;
  }

  private renderDetail(): HTMLElement {
    const aside = document.createElement("aside");
    aside.className = "detail";
    const { side, wordIndex, matchIndex } = this.selection;
    if (side === null || wordIndex === null) {
      aside.textContent = "Select a word or press next error.";
      return aside;
    }
    const add = (label: string, value: string) => {
      const row = document.createElement("p");
      const name = document.createElement("strong");
      name.textContent = `${label}: `;
      row.appendChild(name);
      row.appendChild(document.createTextNode(value));
      aside.appendChild(row);
    };
    const times = side === "ref" ? this.refTimes[wordIndex] : this.hypTimes[wordIndex];
    if (side === "ref") {
      const w = this.doc.ref_words[wordIndex];
      add("word", w.word);
      add("speaker", w.speaker);
    } else {
      const w = this.doc.hyp_words[wordIndex];
      add("word", w.word);
      add("stream", w.stream);
      add("assigned speaker", w.assigned_speaker ?? "(none)");
    }
    add("time", `${times.t0.toFixed(3)}s to ${times.t1.toFixed(3)}s`);
    const match = matchIndex !== null ? this.doc.matches[matchIndex] : null;
    add("match", match ? match.kind : "(unmatched)");
    if (match?.kind === "deletion") {
      add("note", "no hypothesis counterpart");
    } else if (match?.kind === "insertion") {
      add("note", "no reference counterpart");
    } else if (match && match.ref_index !== undefined && match.hyp_index !== undefined) {
      const other =
        side === "ref"
          ? this.doc.hyp_words[match.hyp_index].word
          : this.doc.ref_words[match.ref_index].word;
      add(side === "ref" ? "hypothesis word" : "reference word", other);
    }
    return aside;
  }

  private renderLegend(): HTMLElement {
    const legend = document.createElement("ul");
    legend.className = "legend";
    for (const kind of Object.keys(KIND_COLORS) as MatchKind[]) {
      const item = document.createElement("li");
      item.className = `legend-${kind}`;
      const swatch = document.createElement("span");
      swatch.className = "swatch";
      swatch.style.background = KIND_COLORS[kind];
      item.appendChild(swatch);
      item.appendChild(document.createTextNode(kind));
      legend.appendChild(item);
    }
    return legend;
  }
}

/** Render a document into a container; never leaves it blank. */
export function render(container: HTMLElement, doc: unknown): AlignmentView {
  return new AlignmentView(container, doc as AlignmentDocument);
}
