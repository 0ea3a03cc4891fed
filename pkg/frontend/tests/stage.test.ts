/** PreviewStage geometry: 420 px wide, clipped at 1600 px, 24 px padding. */

import { describe, expect, it } from "vitest";

import { renderInto } from "../src/renderPage.js";
import { golden } from "./helpers.js";

function computed(el: Element): CSSStyleDeclaration {
  return window.getComputedStyle(el);
}

describe("PreviewStage dimensions", () => {
  it("holds 420/1600/24 on a rendered fixture", () => {
    const res = renderInto(document, JSON.stringify(golden("g01_card_basic").a2ui));
    const cs = computed(res.stage);
    expect(cs.getPropertyValue("width")).toBe("420px");
    expect(cs.getPropertyValue("max-height")).toBe("1600px");
    expect(cs.getPropertyValue("padding-top")).toBe("24px");
    expect(cs.getPropertyValue("padding-right")).toBe("24px");
    expect(cs.getPropertyValue("padding-bottom")).toBe("24px");
    expect(cs.getPropertyValue("padding-left")).toBe("24px");
  });

  it("is a rounded, clipped container with a drop shadow", () => {
    const res = renderInto(document, JSON.stringify(golden("g01_card_basic").a2ui));
    const cs = computed(res.stage);
    expect(cs.getPropertyValue("overflow")).toBe("hidden");
    expect(cs.getPropertyValue("border-radius")).toBe("16px");
    expect(cs.getPropertyValue("box-shadow")).not.toBe("");
  });

  it("keeps its geometry on the error page too", () => {
    const res = renderInto(document, "not json");
    const cs = computed(res.stage);
    expect(res.status).toBe("error");
    expect(cs.getPropertyValue("width")).toBe("420px");
    expect(cs.getPropertyValue("max-height")).toBe("1600px");
  });
});
