/** /render page bootstrap: decode the payload, mount the PreviewStage,
 * signal readiness through the data-render-status body attribute.
 *
 * Message application is synchronous, so the status flips to "ready" (or
 * "error") as soon as this module finishes; nothing is deferred.
 */

import { decodePayload } from "./protocol.js";
import { RenderSession } from "./session.js";

export const STAGE_WIDTH_PX = 420;
export const STAGE_MAX_HEIGHT_PX = 1600;
export const STAGE_PADDING_PX = 24;

export interface BootResult {
  status: "ready" | "error";
  session: RenderSession | null;
  stage: HTMLElement;
}

declare global {
  interface Window {
    __A2UI_PAYLOAD__?: string;
    a2uiEventLog?: () => string;
    a2uiInteract?: (componentId: string, userValues?: Record<string, unknown>) => unknown;
  }
}

/** Fixed-geometry preview container: 420 px wide, clipped to 1600 px,
 * 24 px inner padding, rounded with a drop shadow. */
function buildStage(doc: Document): HTMLElement {
  const wrap = doc.createElement("div");
  wrap.className = "a2-stage-wrap";
  const stage = doc.createElement("div");
  stage.className = "a2-stage";
  stage.id = "preview-stage";
  stage.style.width = `${STAGE_WIDTH_PX}px`;
  stage.style.maxHeight = `${STAGE_MAX_HEIGHT_PX}px`;
  stage.style.padding = `${STAGE_PADDING_PX}px`;
  stage.style.boxSizing = "border-box";
  stage.style.borderRadius = "16px";
  stage.style.overflow = "hidden";
  stage.style.boxShadow = "0 12px 32px rgba(16, 24, 40, 0.18)";
  stage.style.background = "#ffffff";
  stage.style.margin = "32px auto";
  wrap.appendChild(stage);
  doc.body.appendChild(wrap);
  return stage;
}

export function renderInto(
  doc: Document,
  payload: string | null,
  opts: { surface?: string | null } = {},
): BootResult {
  doc.body.textContent = "";
  doc.body.setAttribute("data-render-status", "loading");
  const stage = buildStage(doc);
  try {
    if (payload === null || payload === "") {
      throw new Error("no messages payload provided (use ?messages=... or POST a body)");
    }
    const rawMessages = decodePayload(payload);
    const content = doc.createElement("div");
    content.className = "a2-stage-content";
    content.style.maxHeight = `${STAGE_MAX_HEIGHT_PX - 2 * STAGE_PADDING_PX}px`;
    content.style.overflowY = "auto";
    stage.appendChild(content);
    const session = new RenderSession(doc);
    session.mount(content, rawMessages, { surface: opts.surface ?? null });
    doc.body.setAttribute("data-render-status", "ready");
    return { status: "ready", session, stage };
  } catch (e) {
    const panel = doc.createElement("div");
    panel.className = "a2-error a2-decode-error";
    panel.textContent = `cannot render: ${(e as Error).message}`;
    stage.appendChild(panel);
    doc.body.setAttribute("data-render-status", "error");
    return { status: "error", session: null, stage };
  }
}

/** Entry point used by render.html. Query parameters win; a POST-injected
 * window payload is the fallback for large message arrays. */
export function bootFromLocation(win: Window): BootResult {
  const params = new URLSearchParams(win.location.search);
  const payload = params.get("messages") ?? win.__A2UI_PAYLOAD__ ?? null;
  const result = renderInto(win.document, payload, { surface: params.get("surface") });
  win.a2uiEventLog = () => (result.session ? result.session.eventLogJson() : "[]");
  win.a2uiInteract = (componentId, userValues) =>
    result.session ? result.session.interact(componentId, userValues) : null;
  return result;
}
