/** Readiness contract: data-render-status reaches "ready" for every golden
 * fixture and "error" for anything that does not decode. */

import { describe, expect, it } from "vitest";

import { renderInto } from "../src/renderPage.js";
import { golden, goldenNames, renderguardFixture } from "./helpers.js";

function status(): string | null {
  return document.body.getAttribute("data-render-status");
}

describe("golden fixtures reach ready", () => {
  for (const name of goldenNames()) {
    it(`${name} renders ready`, () => {
      const res = renderInto(document, JSON.stringify(golden(name).a2ui));
      expect(res.status).toBe("ready");
      expect(status()).toBe("ready");
    });
  }
});

describe("malformed input reaches error", () => {
  const bad: Array<[string, string | null]> = [
    ["truncated json", '{"text_response": "x", "a2ui": ['],
    ["not json at all", "definitely not json %%%"],
    ["non-array payload", '{"x": 1}'],
    ["scalar payload", "42"],
    ["message not an object", "[42]"],
    ["component item not an object", '[{"surfaceUpdate": {"surfaceId": "s1", "components": [42]}}]'],
    ["missing payload", null],
  ];
  for (const [label, payload] of bad) {
    it(`${label} renders error`, () => {
      const res = renderInto(document, payload);
      expect(res.status).toBe("error");
      expect(status()).toBe("error");
      expect(document.querySelector(".a2-decode-error")).not.toBeNull();
    });
  }
});

describe("surface selection", () => {
  it("uses the first surface id present", () => {
    const res = renderInto(document, JSON.stringify(golden("g01_card_basic").a2ui));
    expect(res.session!.surfaceId).toBe("s1");
  });

  it("falls back to a default id when no message carries one", () => {
    const res = renderInto(document, "[]");
    expect(res.status).toBe("ready");
    expect(res.session!.surfaceId).toBe("main");
    expect(document.querySelector(".a2-empty")).not.toBeNull();
  });

  it("honors an explicit surface override", () => {
    const res = renderInto(document, JSON.stringify(golden("g01_card_basic").a2ui), {
      surface: "elsewhere",
    });
    expect(res.status).toBe("ready");
    expect(res.session!.surfaceId).toBe("elsewhere");
    expect(document.querySelector(".a2-empty")).not.toBeNull();
  });

  it("renders the first surface plus a visible warning on multi-surface input", () => {
    const doc = renderguardFixture("rc3_two_surfaces");
    const sids: string[] = [];
    for (const m of doc.a2ui) {
      const body = Object.values(m)[0] as any;
      if (body?.surfaceId && !sids.includes(body.surfaceId)) sids.push(body.surfaceId);
    }
    expect(sids.length).toBeGreaterThan(1);

    const res = renderInto(document, JSON.stringify(doc.a2ui));
    expect(res.status).toBe("ready");
    expect(res.session!.surfaceId).toBe(sids[0]);
    const warning = document.querySelector(".a2-warning");
    expect(warning).not.toBeNull();
    expect(warning!.textContent).toContain(sids[1]);
    expect(document.querySelector(".a2-tree [data-component-id]")).not.toBeNull();
  });
});

describe("fault rendering", () => {
  it("delete of a never-seen surface shows an inline diagnostic, not a blank page", () => {
    const res = renderInto(document, JSON.stringify(golden("g20_delete_only").a2ui));
    expect(res.status).toBe("ready");
    const faults = document.querySelectorAll(".a2-fault");
    expect(faults.length).toBeGreaterThan(0);
    expect(document.body.textContent).toContain("never seen");
  });

  it("a dangling root renders an error panel inside the stage", () => {
    const messages = [
      { beginRendering: { surfaceId: "s1", root: "ghost" } },
    ];
    const res = renderInto(document, JSON.stringify(messages));
    expect(res.status).toBe("ready"); // decode worked; the fault is inline
    expect(document.querySelector(".a2-error")!.textContent).toContain("ghost");
  });
});
