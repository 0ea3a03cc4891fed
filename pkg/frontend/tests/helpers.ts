import { readFileSync, readdirSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { RenderSession } from "../src/session.js";

// Shared fixture corpus lives with the reference implementation.
export const FIXTURES = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)),
  "../../src/a2uikit/resources/fixtures",
);

export function readJson(...segments: string[]): any {
  return JSON.parse(readFileSync(path.join(FIXTURES, ...segments), "utf8"));
}

export function goldenNames(): string[] {
  return readdirSync(path.join(FIXTURES, "golden"))
    .filter((f) => f.endsWith(".json"))
    .map((f) => f.replace(/\.json$/, ""))
    .sort();
}

export function golden(name: string): any {
  return readJson("golden", `${name}.json`);
}

export function parityCases(): any[] {
  return readdirSync(path.join(FIXTURES, "parity"))
    .filter((f) => f.endsWith(".json"))
    .sort()
    .map((f) => readJson("parity", f));
}

export function renderguardFixture(name: string): any {
  return readJson("renderguard", `${name}.json`);
}

/** Mount a message array into a fresh container on the global document. */
export function mountSession(a2ui: unknown[], opts: { surface?: string | null } = {}): RenderSession {
  document.body.textContent = "";
  const host = document.createElement("div");
  document.body.appendChild(host);
  const session = new RenderSession(document);
  session.mount(host, a2ui, opts);
  return session;
}

/** Round-trip through JSON so undefined slips and prototypes would show up. */
export function asJson(v: unknown): unknown {
  return JSON.parse(JSON.stringify(v));
}
