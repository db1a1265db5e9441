// Boot path: the bundle is inlined into an emitted page that carries
// the documents in a JSON script tag and an #app mount point.

import { describe, expect, it } from "vitest";

import golden from "./fixtures/golden_di_cp.json";

describe("page boot", () => {
  it("renders panels from the embedded JSON on import", async () => {
    const data = document.createElement("script");
    data.id = "alignment-data";
    data.type = "application/json";
    data.textContent = JSON.stringify([golden]);
    document.body.appendChild(data);
    const app = document.createElement("div");
    app.id = "app";
    document.body.appendChild(app);

    await import("../src/main");

    expect(app.querySelectorAll(".panel")).toHaveLength(1);
    expect(app.querySelectorAll("line.connector.correct")).toHaveLength(6);
  });
});
