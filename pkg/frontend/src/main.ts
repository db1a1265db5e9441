// Page entry: reads the embedded alignment documents and mounts one
// interactive panel per session, with basic controls wired to the view.

import { AlignmentView, render } from "./view";

const STYLE = `
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

function mountControls(host: HTMLElement, view: AlignmentView): void {
  const controls = document.createElement("div");
  controls.className = "controls";
  const button = (label: string, onClick: () => void) => {
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

function wireWordClicks(host: HTMLElement, view: AlignmentView): void {
  host.addEventListener("click", (event) => {
    const target = event.target as Element | null;
    const wordEl = target?.closest?.(".word") as HTMLElement | null;
    if (!wordEl) return;
    const side = wordEl.classList.contains("ref") ? "ref" : "hyp";
    view.selectWord(side, Number(wordEl.dataset.index));
  });
}

export function mount(root: HTMLElement, documents: unknown[]): AlignmentView[] {
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

function boot(): void {
  const root = document.getElementById("app");
  const data = document.getElementById("alignment-data");
  if (!root) return;
  let documents: unknown[] = [];
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
