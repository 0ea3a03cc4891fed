/** Event parity: for every shared fixture the browser-side dispatch must
 * produce the reference processor's event, field for field. */

import { describe, expect, it } from "vitest";

import { Processor } from "../src/processor.js";
import { parseMessages } from "../src/protocol.js";
import { asJson, mountSession, parityCases } from "./helpers.js";

const cases = parityCases();

describe("processor-level parity", () => {
  for (const c of cases) {
    it(`${c.name}: dispatchAction matches the frozen events`, () => {
      const proc = new Processor();
      proc.applyAll(parseMessages(c.messages));
      const got = c.interactions.map((i: any) =>
        proc.dispatchAction(i.surfaceId, i.componentId, i.userValues),
      );
      expect(asJson(got)).toEqual(c.expectedEvents);
      expect(proc.faults).toEqual([]);
    });
  }
});

describe("session-level parity (through the render path)", () => {
  for (const c of cases) {
    it(`${c.name}: interact() emits the frozen events`, () => {
      const session = mountSession(c.messages);
      for (const i of c.interactions) {
        expect(i.surfaceId).toBe(session.surfaceId);
        const ev = session.interact(i.componentId, i.userValues);
        expect(ev).not.toBeNull();
      }
      expect(asJson(session.events)).toEqual(c.expectedEvents);
      expect(JSON.parse(session.eventLogJson())).toEqual(c.expectedEvents);
    });
  }
});

describe("non-interactive targets", () => {
  it("unknown component is a no-op with a console note", () => {
    const c = cases[0];
    const session = mountSession(c.messages);
    const before = session.events.length;
    expect(session.interact("no_such_component")).toBeNull();
    expect(session.interact("title")).toBeNull(); // a Label has no action
    expect(session.events.length).toBe(before);
  });
});
