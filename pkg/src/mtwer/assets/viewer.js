"use strict";
(() => {
  // src/schema.ts
  var KINDS = ["correct", "substitution", "insertion", "deletion"];
  var NEEDS = {
    correct: { ref: true, hyp: true },
    substitution: { ref: true, hyp: true },
    insertion: { ref: false, hyp: true },
    deletion: { ref: true, hyp: false }
  };
  function isObject(value) {
    return typeof value === "object" && value !== null && !Array.isArray(value);
  }
  function validateDocument(value) {
    const problems = [];
    if (!isObject(value)) {
      return [`document: expected an object, got ${typeof value}`];
    }
    if (typeof value.session_id !== "string") {
      problems.push("document: missing string session_id");
    }
    for (const key of ["ref_words", "hyp_words", "matches"]) {
      if (!Array.isArray(value[key])) {
        problems.push(`document: missing array ${key}`);
      }
    }
    if (problems.length > 0) {
      return problems;
    }
    const doc = value;
    doc.ref_words.forEach((w, i) => {
      if (!isObject(w) || typeof w.word !== "string" || typeof w.speaker !== "string") {
        problems.push(`ref_words[${i}]: needs string word and speaker`);
      }
    });
    doc.hyp_words.forEach((w, i) => {
      if (!isObject(w) || typeof w.word !== "string" || typeof w.stream !== "string") {
        problems.push(`hyp_words[${i}]: needs string word and stream`);
      }
    });
    doc.matches.forEach((m, i) => {
      if (!isObject(m) || !KINDS.includes(m.kind)) {
        problems.push(`matches[${i}]: unknown kind ${JSON.stringify(m?.kind)}`);
        return;
      }
      const needs = NEEDS[m.kind];
      if (needs.ref !== (m.ref_index !== void 0)) {
        problems.push(
          `matches[${i}]: kind ${m.kind} must ${needs.ref ? "" : "not "}carry ref_index`
        );
      }
      if (needs.hyp !== (m.hyp_index !== void 0)) {
        problems.push(
          `matches[${i}]: kind ${m.kind} must ${needs.hyp ? "" : "not "}carry hyp_index`
        );
      }
      if (m.ref_index !== void 0 && (m.ref_index < 0 || m.ref_index >= doc.ref_words.length)) {
        problems.push(
          `matches[${i}]: ref_index ${m.ref_index} out of range (${doc.ref_words.length} reference words)`
        );
      }
      if (m.hyp_index !== void 0 && (m.hyp_index < 0 || m.hyp_index >= doc.hyp_words.length)) {
        problems.push(
          `matches[${i}]: hyp_index ${m.hyp_index} out of range (${doc.hyp_words.length} hypothesis words)`
        );
      }
    });
    return problems;
  }

  // src/view.ts
  var KIND_COLORS = {
    correct: "#228833",
    substitution: "#ee7733",
    insertion: "#4477aa",
    deletion: "#cc3311"
  };
  var WIDTH = 680;
  var HEIGHT = 520;
  var TOP = 40;
  var BOTTOM = HEIGHT - 20;
  var LANES = {
    ref: { x0: 70, x1: 300 },
    hyp: { x0: 380, x1: 610 }
  };
  var MIN_SPAN = 0.25;
  var MIN_BOX = 4;
  var SVG = "http://www.w3.org/2000/svg";
  function svgEl(name, attrs = {}) {
    const el = document.createElementNS(SVG, name);
    for (const [key, value] of Object.entries(attrs)) {
      el.setAttribute(key, String(value));
    }
    return el;
  }
  function wordInterval(begin, end, ordinal) {
    const t0 = begin ?? ordinal;
    const t1 = end ?? t0 + 1;
    return { t0, t1: Math.max(t0, t1) };
  }
  var AlignmentView = class {
    constructor(container, doc) {
      this.errorCursor = -1;
      this.selection = { matchIndex: null, side: null, wordIndex: null };
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
      this.extent = all.length === 0 ? { t0: 0, t1: 1 } : {
        t0: Math.min(...all.map((i) => i.t0)),
        t1: Math.max(...all.map((i) => i.t1))
      };
      if (this.extent.t1 - this.extent.t0 < MIN_SPAN) {
        this.extent.t1 = this.extent.t0 + MIN_SPAN;
      }
      this.window = { ...this.extent };
      this.errorOrder = doc.matches.map((m, i) => ({ m, i })).filter(({ m }) => m.kind !== "correct").sort((a, b) => this.matchTime(a.m) - this.matchTime(b.m) || a.i - b.i).map(({ i }) => i);
      this.render();
    }
    // -- interaction ---------------------------------------------------------
    /** Zoom by a factor around the window center (or a given time). */
    zoom(factor, center) {
      if (this.problems.length > 0) return;
      const span = this.window.t1 - this.window.t0;
      const target = Math.min(
        Math.max(span / factor, MIN_SPAN),
        this.extent.t1 - this.extent.t0
      );
      const mid = center ?? (this.window.t0 + this.window.t1) / 2;
      this.window = this.clampWindow({ t0: mid - target / 2, t1: mid + target / 2 });
      this.render();
    }
    /** Pan by a number of seconds; clamps to the session extent. */
    pan(deltaSeconds) {
      if (this.problems.length > 0) return;
      this.window = this.clampWindow({
        t0: this.window.t0 + deltaSeconds,
        t1: this.window.t1 + deltaSeconds
      });
      this.render();
    }
    /** Jump to the next non-correct match in time order; cycles. */
    nextError() {
      return this.stepError(1);
    }
    prevError() {
      return this.stepError(-1);
    }
    /** Show a word's text, times, labels, and match kind in the detail panel. */
    selectWord(side, index) {
      if (this.problems.length > 0) return;
      const matchIndex = this.doc.matches.findIndex(
        (m) => side === "ref" ? m.ref_index === index : m.hyp_index === index
      );
      this.selection = { side, wordIndex: index, matchIndex: matchIndex >= 0 ? matchIndex : null };
      this.render();
    }
    get selected() {
      return this.selection;
    }
    /** Currently visible time window (clamped to the session extent). */
    get viewWindow() {
      return { ...this.window };
    }
    get sessionExtent() {
      return { ...this.extent };
    }
    stepError(direction) {
      if (this.problems.length > 0 || this.errorOrder.length === 0) return null;
      const n = this.errorOrder.length;
      this.errorCursor = this.errorCursor < 0 && direction < 0 ? n - 1 : ((this.errorCursor + direction) % n + n) % n;
      const matchIndex = this.errorOrder[this.errorCursor];
      const match = this.doc.matches[matchIndex];
      this.selection = {
        matchIndex,
        side: match.ref_index !== void 0 ? "ref" : "hyp",
        wordIndex: match.ref_index !== void 0 ? match.ref_index : match.hyp_index
      };
      this.ensureVisible(this.matchTime(match));
      this.render();
      return matchIndex;
    }
    matchTime(match) {
      if (match.ref_index !== void 0) return this.refTimes[match.ref_index].t0;
      return this.hypTimes[match.hyp_index].t0;
    }
    ensureVisible(t) {
      if (t < this.window.t0 || t > this.window.t1) {
        const span = this.window.t1 - this.window.t0;
        this.window = this.clampWindow({ t0: t - span / 2, t1: t + span / 2 });
      }
    }
    clampWindow(w) {
      const span = Math.min(w.t1 - w.t0, this.extent.t1 - this.extent.t0);
      let t0 = Math.max(w.t0, this.extent.t0);
      t0 = Math.min(t0, this.extent.t1 - span);
      return { t0, t1: t0 + span };
    }
    // -- rendering -----------------------------------------------------------
    y(t) {
      const span = this.window.t1 - this.window.t0;
      return TOP + (t - this.window.t0) / span * (BOTTOM - TOP);
    }
    render() {
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
    renderDiagnostics() {
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
    renderTimeline() {
      const svg = svgEl("svg", {
        class: "timeline",
        viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
        width: WIDTH,
        height: HEIGHT
      });
      const defs = svgEl("defs");
      const clip = svgEl("clipPath", { id: `clip-${this.doc.session_id}` });
      clip.appendChild(svgEl("rect", { x: 0, y: TOP - 8, width: WIDTH, height: BOTTOM - TOP + 16 }));
      defs.appendChild(clip);
      svg.appendChild(defs);
      svg.appendChild(this.renderAxis());
      for (const [side, label] of [
        ["ref", "Reference"],
        ["hyp", "Hypothesis"]
      ]) {
        const lane = LANES[side];
        const text = svgEl("text", {
          class: "lane-label",
          x: (lane.x0 + lane.x1) / 2,
          y: TOP - 16,
          "text-anchor": "middle"
        });
        text.textContent = label;
        svg.appendChild(text);
      }
      const content = svgEl("g", {
        class: "content",
        "clip-path": `url(#clip-${this.doc.session_id})`
      });
      content.appendChild(this.renderWords("ref"));
      content.appendChild(this.renderWords("hyp"));
      content.appendChild(this.renderMatches());
      svg.appendChild(content);
      return svg;
    }
    renderAxis() {
      const axis = svgEl("g", { class: "axis" });
      const x = 40;
      axis.appendChild(
        svgEl("line", { x1: x, y1: TOP, x2: x, y2: BOTTOM, stroke: "#999" })
      );
      const ticks = 6;
      for (let i = 0; i <= ticks; i++) {
        const t = this.window.t0 + (this.window.t1 - this.window.t0) * i / ticks;
        const y = this.y(t);
        axis.appendChild(svgEl("line", { x1: x - 4, y1: y, x2: x, y2: y, stroke: "#999" }));
        const label = svgEl("text", {
          class: "tick",
          x: x - 8,
          y: y + 4,
          "text-anchor": "end"
        });
        label.textContent = `${t.toFixed(2)}s`;
        axis.appendChild(label);
      }
      return axis;
    }
    renderWords(side) {
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
            stroke: "#666"
          })
        );
        const text = svgEl("text", {
          x: (lane.x0 + lane.x1) / 2,
          y: y0 + height / 2 + 4,
          "text-anchor": "middle"
        });
        text.textContent = w.word;
        g.appendChild(text);
        group.appendChild(g);
      });
      return group;
    }
    renderMatches() {
      const group = svgEl("g", { class: "matches" });
      this.doc.matches.forEach((m, i) => {
        const selected = this.selection.matchIndex === i;
        if (m.ref_index !== void 0 && m.hyp_index !== void 0) {
          const r = this.refTimes[m.ref_index];
          const h = this.hypTimes[m.hyp_index];
          const line = svgEl("line", {
            class: `connector ${m.kind}`,
            x1: LANES.ref.x1,
            y1: this.y((r.t0 + r.t1) / 2),
            x2: LANES.hyp.x0,
            y2: this.y((h.t0 + h.t1) / 2),
            stroke: KIND_COLORS[m.kind],
            "stroke-width": selected ? 4 : 2
          });
          line.dataset.matchIndex = String(i);
          if (selected) line.classList.add("selected");
          group.appendChild(line);
        } else {
          const onRef = m.ref_index !== void 0;
          const times = onRef ? this.refTimes[m.ref_index] : this.hypTimes[m.hyp_index];
          const lane = onRef ? LANES.ref : LANES.hyp;
          const mark = svgEl("circle", {
            class: `mark ${m.kind}`,
            cx: onRef ? lane.x1 + 8 : lane.x0 - 8,
            cy: this.y((times.t0 + times.t1) / 2),
            r: selected ? 7 : 5,
            fill: KIND_COLORS[m.kind]
          });
          mark.dataset.matchIndex = String(i);
          if (selected) mark.classList.add("selected");
          group.appendChild(mark);
        }
      });
      return group;
    }
    renderDetail() {
      const aside = document.createElement("aside");
      aside.className = "detail";
      const { side, wordIndex, matchIndex } = this.selection;
      if (side === null || wordIndex === null) {
        aside.textContent = "Select a word or press next error.";
        return aside;
      }
      const add = (label, value) => {
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
      } else if (match && match.ref_index !== void 0 && match.hyp_index !== void 0) {
        const other = side === "ref" ? this.doc.hyp_words[match.hyp_index].word : this.doc.ref_words[match.ref_index].word;
        add(side === "ref" ? "hypothesis word" : "reference word", other);
      }
      return aside;
    }
    renderLegend() {
      const legend = document.createElement("ul");
      legend.className = "legend";
      for (const kind of Object.keys(KIND_COLORS)) {
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
  };
  function render(container, doc) {
    return new AlignmentView(container, doc);
  }

  // src/main.ts
  var STYLE = `
  body { font-family: system-ui, sans-serif; margin: 1rem; color: #222; }
  .panel { margin-bottom: 2rem; }
  .panel header { display: flex; align-items: baseline; gap: .75rem; }
  .panel .metric { color: #666; font-size: .9rem; }
  .panel-body { display: flex; gap: 1rem; align-items: flex-start; }
  .timeline { border: 1px solid #ddd; background: #fff; flex: none; }
  .timeline text { font-size: 11px; }
  .timeline .lane-label { font-size: 13px; font-weight: 600; }
  .word rect { cursor: pointer; }
  .word.selected rect { stroke: #000; stroke-width: 2; }
  .detail { min-width: 14rem; border: 1px solid #ddd; padding: .5rem .75rem; }
  .detail p { margin: .25rem 0; }
  .legend { list-style: none; display: flex; gap: 1rem; padding: 0; }
  .legend .swatch { display: inline-block; width: .8em; height: .8em;
                    margin-right: .35em; border-radius: 2px; }
  .controls { margin: .25rem 0 .5rem; display: flex; gap: .5rem; }
  .diagnostics { border: 2px solid #cc3311; padding: .5rem .75rem; }
`;
  function mountControls(host, view) {
    const controls = document.createElement("div");
    controls.className = "controls";
    const button = (label, onClick) => {
      const b = document.createElement("button");
      b.textContent = label;
      b.addEventListener("click", onClick);
      controls.appendChild(b);
    };
    button("zoom in", () => view.zoom(1.5));
    button("zoom out", () => view.zoom(1 / 1.5));
    button("pan up", () => view.pan(-1));
    button("pan down", () => view.pan(1));
    button("prev error", () => view.prevError());
    button("next error", () => view.nextError());
    host.appendChild(controls);
  }
  function wireWordClicks(host, view) {
    host.addEventListener("click", (event) => {
      const target = event.target;
      const wordEl = target?.closest?.(".word");
      if (!wordEl) return;
      const side = wordEl.classList.contains("ref") ? "ref" : "hyp";
      view.selectWord(side, Number(wordEl.dataset.index));
    });
  }
  function mount(root, documents) {
    const style = document.createElement("style");
    style.textContent = STYLE;
    root.appendChild(style);
    return documents.map((doc) => {
      const outer = document.createElement("div");
      root.appendChild(outer);
      const panelHost = document.createElement("div");
      const view = render(panelHost, doc);
      mountControls(outer, view);
      outer.appendChild(panelHost);
      wireWordClicks(panelHost, view);
      return view;
    });
  }
  function boot() {
    const root = document.getElementById("app");
    const data = document.getElementById("alignment-data");
    if (!root) return;
    let documents = [];
    try {
      documents = JSON.parse(data?.textContent ?? "[]");
      if (!Array.isArray(documents)) {
        throw new Error("embedded alignment data is not an array");
      }
    } catch (err) {
      const box = document.createElement("div");
      box.className = "diagnostics";
      box.textContent = `Embedded alignment data is unreadable: ${err}`;
      root.appendChild(box);
      return;
    }
    mount(root, documents);
  }
  if (typeof document !== "undefined" && document.getElementById("alignment-data")) {
    boot();
  }
})();
