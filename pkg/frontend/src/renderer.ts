/** Widget catalog: ResolvedNode trees to live DOM.
 *
 * Every component type gets a hand-written element builder; unknown types
 * render a visible placeholder and processing faults render as inline
 * diagnostics, so the stage never goes blank. Styling is deliberately
 * minimal and deterministic (system fonts, fixed palette, no animation)
 * to keep screenshots stable.
 */

import { bindingPath, isPlainObject } from "./protocol.js";
import { ProcessorError, ResolvedNode, joinPath } from "./processor.js";
import type { RenderSession } from "./session.js";

export const KEYPAD_LENGTH = 6;

interface Ctx {
  session: RenderSession;
  doc: Document;
}

type WidgetFn = (node: ResolvedNode, ctx: Ctx) => HTMLElement;

// -- small helpers -----------------------------------------------------

function el(doc: Document, tag: string, className?: string, text?: string): HTMLElement {
  const e = doc.createElement(tag);
  if (className) e.className = className;
  if (text !== undefined) e.textContent = text;
  return e;
}

function num(v: unknown, fallback: number): number {
  return typeof v === "number" && Number.isFinite(v) ? v : fallback;
}

function str(v: unknown, fallback = ""): string {
  if (typeof v === "string") return v;
  if (typeof v === "number" || typeof v === "boolean") return String(v);
  return fallback;
}

function isRefMarker(v: unknown): v is { $ref: number } {
  return isPlainObject(v) && typeof v["$ref"] === "number";
}

function isDupMarker(v: unknown): v is { $dup: string } {
  return isPlainObject(v) && typeof v["$dup"] === "string";
}

/** DOM for one child marker ({$ref}/{$dup}); null when not a marker. */
function childEl(node: ResolvedNode, marker: unknown, ctx: Ctx): HTMLElement | null {
  if (isRefMarker(marker)) {
    const child = node.children[marker.$ref];
    if (child !== undefined) return renderNode(child, ctx);
  }
  if (isDupMarker(marker)) {
    return el(ctx.doc, "div", "a2-diag a2-dup", `duplicate reference: ${marker.$dup}`);
  }
  return null;
}

function appendChildMarker(host: HTMLElement, node: ResolvedNode, marker: unknown, ctx: Ctx): void {
  const child = childEl(node, marker, ctx);
  if (child !== null) host.appendChild(child);
}

interface SelectionItem {
  value: string;
  label: string;
  description: string | null;
}

function selectionItems(node: ResolvedNode): SelectionItem[] {
  const raw = node.props["items"];
  if (!Array.isArray(raw)) return [];
  const out: SelectionItem[] = [];
  for (const item of raw) {
    if (!isPlainObject(item)) continue;
    out.push({
      value: str(item["value"]),
      label: str(item["label"], str(item["value"])),
      description: typeof item["description"] === "string" ? item["description"] : null,
    });
  }
  return out;
}

function selectedValues(node: ResolvedNode): string[] {
  const sel = node.props["selection"];
  return Array.isArray(sel) ? sel.filter((x): x is string => typeof x === "string") : [];
}

/** Absolute data path a widget's writable prop binds to, or null. */
function writablePath(node: ResolvedNode, ctx: Ctx, prop: string): string | null {
  const comp = ctx.session.component(node.id);
  const pv = comp?.props[prop];
  if (pv === undefined) return null;
  const rel = bindingPath(pv);
  if (rel === null) return null;
  return joinPath(node.context, rel);
}

function toggleSelection(node: ResolvedNode, ctx: Ctx, value: string): string[] | null {
  const absPath = writablePath(node, ctx, "selection");
  if (absPath === null) {
    console.info(`selection on '${node.id}' has no data binding; ignoring`);
    return null;
  }
  const current = selectedValues(node);
  const maxSel = num(node.props["maxSelections"], Infinity);
  let next: string[];
  if (maxSel === 1) {
    next = [value];
  } else if (current.includes(value)) {
    next = current.filter((x) => x !== value);
  } else if (current.length + 1 > maxSel) {
    return null; // cap reached; click is a no-op
  } else {
    next = [...current, value];
  }
  ctx.session.stageValue(absPath, next);
  ctx.session.render();
  return next;
}

/** Nearest tick value for a slider position. */
export function snapToTick(min: number, max: number, divisions: number, raw: number): number {
  if (!(max > min)) return min;
  const steps = Number.isFinite(divisions) && divisions > 0 ? divisions : max - min;
  const step = (max - min) / steps;
  const snapped = min + Math.round((raw - min) / step) * step;
  const clamped = Math.min(max, Math.max(min, snapped));
  return Math.round(clamped * 1e9) / 1e9; // shed float dust from the division
}

// -- markdown (tiny, deterministic subset) ------------------------------

function inlineMarkdown(doc: Document, host: HTMLElement, text: string): void {
  // **bold**, *italic*, `code`; everything else is plain text.
  const re = /(\*\*[^*]+\*\*|\*[^*]+\*|`[^`]+`)/g;
  let last = 0;
  for (const m of text.matchAll(re)) {
    const idx = m.index ?? 0;
    if (idx > last) host.appendChild(doc.createTextNode(text.slice(last, idx)));
    const tok = m[0];
    if (tok.startsWith("**")) host.appendChild(el(doc, "strong", undefined, tok.slice(2, -2)));
    else if (tok.startsWith("`")) host.appendChild(el(doc, "code", undefined, tok.slice(1, -1)));
    else host.appendChild(el(doc, "em", undefined, tok.slice(1, -1)));
    last = idx + tok.length;
  }
  if (last < text.length) host.appendChild(doc.createTextNode(text.slice(last)));
}

export function renderMarkdown(doc: Document, text: string): HTMLElement {
  const root = el(doc, "div", "a2-markdown");
  for (const block of text.split(/\n{2,}/)) {
    const lines = block.split("\n").filter((l) => l.trim().length > 0);
    if (lines.length === 0) continue;
    const heading = lines[0].match(/^(#{1,6})\s+(.*)$/);
    if (heading && lines.length === 1) {
      const level = Math.min(heading[1].length + 2, 6); // page headings stay larger
      inlineMarkdown(doc, root.appendChild(el(doc, `h${level}`)), heading[2]);
      continue;
    }
    if (lines.every((l) => /^\s*([-*]|\d+\.)\s+/.test(l))) {
      const ordered = /^\s*\d+\./.test(lines[0]);
      const list = root.appendChild(el(doc, ordered ? "ol" : "ul"));
      for (const line of lines) {
        const item = list.appendChild(el(doc, "li"));
        let body = line.replace(/^\s*([-*]|\d+\.)\s+/, "");
        const box = body.match(/^\[( |x|X)\]\s*(.*)$/);
        if (box) {
          item.appendChild(el(doc, "span", "a2-checkbox", box[1].trim() ? "☑" : "☐"));
          body = ` ${box[2]}`;
        }
        inlineMarkdown(doc, item as HTMLElement, body);
      }
      continue;
    }
    const p = root.appendChild(el(doc, "p"));
    inlineMarkdown(doc, p as HTMLElement, lines.join(" "));
  }
  return root;
}

// -- widget builders -----------------------------------------------------

const LABEL_TAGS: Record<string, string> = {
  displayLarge: "h1",
  displayMedium: "h1",
  displaySmall: "h2",
  headlineLarge: "h2",
  headlineMedium: "h3",
  headlineSmall: "h3",
  bodyLarge: "p",
  bodyMedium: "p",
  bodySmall: "p",
};

const FLEX_DISTRIBUTION: Record<string, string> = {
  start: "flex-start",
  center: "center",
  end: "flex-end",
  spaceBetween: "space-between",
  spaceAround: "space-around",
  spaceEvenly: "space-evenly",
};

const FLEX_ALIGNMENT: Record<string, string> = {
  start: "flex-start",
  center: "center",
  end: "flex-end",
  stretch: "stretch",
};

function flexContainer(node: ResolvedNode, ctx: Ctx, direction: "column" | "row"): HTMLElement {
  const root = el(ctx.doc, "div", direction === "column" ? "a2-col" : "a2-row");
  root.style.display = "flex";
  root.style.flexDirection = direction;
  root.style.gap = `${num(node.props["spacing"], 8)}px`;
  const dist = FLEX_DISTRIBUTION[str(node.props["distribution"])];
  if (dist) root.style.justifyContent = dist;
  const align = FLEX_ALIGNMENT[str(node.props["alignment"])];
  if (align) root.style.alignItems = align;

  const children = node.props["children"];
  if (Array.isArray(children)) {
    for (const marker of children) appendChildMarker(root, node, marker, ctx);
  }
  const template = node.props["template"];
  if (isPlainObject(template) && Array.isArray(template["instances"])) {
    for (const inst of template["instances"] as unknown[]) {
      appendChildMarker(root, node, inst, ctx);
    }
  }
  return root;
}

const WIDGETS: Record<string, WidgetFn> = {
  Card(node, ctx) {
    const root = el(ctx.doc, "section", "a2-card");
    appendChildMarker(root, node, node.props["child"], ctx);
    return root;
  },

  Column: (node, ctx) => flexContainer(node, ctx, "column"),
  Row: (node, ctx) => flexContainer(node, ctx, "row"),

  Label(node, ctx) {
    const size = str(node.props["size"], "bodyMedium");
    const root = el(ctx.doc, LABEL_TAGS[size] ?? "p", `a2-label a2-size-${size}`);
    const variant = str(node.props["variant"], "primary");
    root.classList.add(`a2-variant-${variant}`);
    root.textContent = str(node.props["text"]);
    return root;
  },

  Button(node, ctx) {
    const style = str(node.props["style"], "primary");
    const root = el(ctx.doc, "button", `a2-btn a2-btn-${style}`) as HTMLButtonElement;
    root.type = "button";
    appendChildMarker(root, node, node.props["child"], ctx);
    root.addEventListener("click", () => ctx.session.submit(node.id));
    return root;
  },

  Divider(node, ctx) {
    if (str(node.props["axis"], "horizontal") === "vertical") {
      return el(ctx.doc, "div", "a2-divider-v");
    }
    return el(ctx.doc, "hr", "a2-divider");
  },

  Icon(node, ctx) {
    const root = el(ctx.doc, "span", "a2-icon");
    root.classList.add(`a2-icon-${str(node.props["style"], "line")}`);
    const name = str(node.props["name"], "?");
    root.dataset.icon = name;
    root.textContent = name;
    return root;
  },

  Image(node, ctx) {
    const root = el(ctx.doc, "img", "a2-img") as HTMLImageElement;
    root.src = str(node.props["url"]);
    root.alt = str(node.props["alt"]);
    const size = str(node.props["size"], "medium");
    root.classList.add(`a2-img-${size}`);
    return root;
  },

  MarkdownView(node, ctx) {
    return renderMarkdown(ctx.doc, str(node.props["text"]));
  },

  OrderedDisplayList(node, ctx) {
    const root = el(ctx.doc, "ol", "a2-display-list");
    const items = node.props["items"];
    if (Array.isArray(items)) {
      for (const item of items) {
        if (!isPlainObject(item)) continue;
        const li = root.appendChild(el(ctx.doc, "li"));
        li.appendChild(el(ctx.doc, "strong", undefined, str(item["label"])));
        if (typeof item["description"] === "string") {
          li.appendChild(el(ctx.doc, "span", "a2-desc", ` ${item["description"]}`));
        }
      }
    }
    return root;
  },

  LinearProgress(node, ctx) {
    const root = el(ctx.doc, "div", "a2-progress");
    const value = Math.min(1, Math.max(0, num(node.props["value"], 0)));
    const label = str(node.props["label"]);
    if (label) root.appendChild(el(ctx.doc, "span", "a2-progress-label", label));
    const track = root.appendChild(el(ctx.doc, "div", "a2-progress-track"));
    const fill = track.appendChild(el(ctx.doc, "div", "a2-progress-fill"));
    fill.style.width = `${Math.round(value * 100)}%`;
    root.appendChild(el(ctx.doc, "span", "a2-progress-pct", `${Math.round(value * 100)}%`));
    return root;
  },

  CircularProgress(node, ctx) {
    const root = el(ctx.doc, "div", "a2-circular");
    const value = Math.min(1, Math.max(0, num(node.props["value"], 0)));
    root.appendChild(el(ctx.doc, "div", "a2-circular-dial", `${Math.round(value * 100)}%`));
    const label = str(node.props["label"]);
    if (label) root.appendChild(el(ctx.doc, "span", "a2-progress-label", label));
    return root;
  },

  Tabs(node, ctx) {
    const root = el(ctx.doc, "div", "a2-tabs");
    const st = ctx.session.uiState(node.id);
    const items = Array.isArray(node.props["tabItems"]) ? (node.props["tabItems"] as unknown[]) : [];
    const active = Math.min(num(st["active"], 0), Math.max(items.length - 1, 0));
    const head = root.appendChild(el(ctx.doc, "div", "a2-tabs-head"));
    items.forEach((item, i) => {
      if (!isPlainObject(item)) return;
      const btn = head.appendChild(
        el(ctx.doc, "button", "a2-tab", str(item["title"], `tab ${i + 1}`)),
      ) as HTMLButtonElement;
      btn.type = "button";
      if (i === active) btn.classList.add("a2-tab-active");
      btn.addEventListener("click", () => {
        st["active"] = i;
        ctx.session.render();
      });
    });
    const body = root.appendChild(el(ctx.doc, "div", "a2-tabs-body"));
    const current = items[active];
    if (isPlainObject(current)) appendChildMarker(body, node, current["child"], ctx);
    return root;
  },

  Carousel(node, ctx) {
    const root = el(ctx.doc, "div", "a2-carousel");
    const children = node.props["children"];
    if (Array.isArray(children)) {
      for (const marker of children) {
        const slide = root.appendChild(el(ctx.doc, "div", "a2-slide"));
        appendChildMarker(slide, node, marker, ctx);
      }
    }
    return root;
  },

  FullScreenModal(node, ctx) {
    const root = el(ctx.doc, "div", "a2-modal");
    const st = ctx.session.uiState(node.id);
    const open = st["open"] === true;
    const entry = root.appendChild(el(ctx.doc, "div", "a2-modal-entry"));
    entry.addEventListener("click", () => {
      st["open"] = true;
      ctx.session.render();
    });
    appendChildMarker(entry, node, node.props["entryPointChild"], ctx);
    const overlay = root.appendChild(el(ctx.doc, "div", "a2-modal-overlay"));
    overlay.dataset.open = open ? "true" : "false";
    if (!open) overlay.classList.add("a2-hidden");
    const panel = overlay.appendChild(el(ctx.doc, "div", "a2-modal-panel"));
    const close = panel.appendChild(el(ctx.doc, "button", "a2-modal-close", "close")) as HTMLButtonElement;
    close.type = "button";
    close.addEventListener("click", () => {
      st["open"] = false;
      ctx.session.render();
    });
    appendChildMarker(panel, node, node.props["contentChild"], ctx);
    return root;
  },

  SelectionList(node, ctx) {
    const root = el(ctx.doc, "div", "a2-sel-list");
    const selected = selectedValues(node);
    for (const item of selectionItems(node)) {
      const row = root.appendChild(el(ctx.doc, "button", "a2-sel-row")) as HTMLButtonElement;
      row.type = "button";
      row.dataset.value = item.value;
      const on = selected.includes(item.value);
      row.setAttribute("aria-pressed", on ? "true" : "false");
      row.appendChild(el(ctx.doc, "span", "a2-check", on ? "✓" : ""));
      const textBox = row.appendChild(el(ctx.doc, "span", "a2-sel-text"));
      textBox.appendChild(el(ctx.doc, "span", "a2-sel-label", item.label));
      if (item.description !== null) {
        textBox.appendChild(el(ctx.doc, "span", "a2-sel-desc", item.description));
      }
      row.addEventListener("click", () => toggleSelection(node, ctx, item.value));
    }
    return root;
  },

  SelectionWrap(node, ctx) {
    const root = el(ctx.doc, "div", "a2-sel-wrap");
    const selected = selectedValues(node);
    for (const item of selectionItems(node)) {
      const chip = root.appendChild(el(ctx.doc, "button", "a2-chip", item.label)) as HTMLButtonElement;
      chip.type = "button";
      chip.dataset.value = item.value;
      if (selected.includes(item.value)) chip.classList.add("a2-chip-on");
      chip.addEventListener("click", () => toggleSelection(node, ctx, item.value));
    }
    return root;
  },

  SelectionGrid(node, ctx) {
    const root = el(ctx.doc, "div", "a2-sel-grid");
    root.style.display = "grid";
    root.style.gridTemplateColumns = `repeat(${Math.max(1, num(node.props["columns"], 2))}, 1fr)`;
    const selected = selectedValues(node);
    for (const item of selectionItems(node)) {
      const cell = root.appendChild(el(ctx.doc, "button", "a2-cell")) as HTMLButtonElement;
      cell.type = "button";
      cell.dataset.value = item.value;
      if (selected.includes(item.value)) cell.classList.add("a2-cell-on");
      cell.appendChild(el(ctx.doc, "span", "a2-sel-label", item.label));
      if (item.description !== null) {
        cell.appendChild(el(ctx.doc, "span", "a2-sel-desc", item.description));
      }
      cell.addEventListener("click", () => toggleSelection(node, ctx, item.value));
    }
    return root;
  },

  OrderedSelectionList(node, ctx) {
    const root = el(ctx.doc, "div", "a2-sel-list a2-sel-ordered");
    const selected = selectedValues(node);
    for (const item of selectionItems(node)) {
      const row = root.appendChild(el(ctx.doc, "button", "a2-sel-row")) as HTMLButtonElement;
      row.type = "button";
      row.dataset.value = item.value;
      const order = selected.indexOf(item.value);
      row.appendChild(el(ctx.doc, "span", "a2-order", order >= 0 ? String(order + 1) : ""));
      const textBox = row.appendChild(el(ctx.doc, "span", "a2-sel-text"));
      textBox.appendChild(el(ctx.doc, "span", "a2-sel-label", item.label));
      if (item.description !== null) {
        textBox.appendChild(el(ctx.doc, "span", "a2-sel-desc", item.description));
      }
      row.addEventListener("click", () => toggleSelection(node, ctx, item.value));
    }
    return root;
  },

  ActionSelectionList(node, ctx) {
    const root = el(ctx.doc, "div", "a2-sel-list a2-sel-action");
    const selected = selectedValues(node);
    for (const item of selectionItems(node)) {
      const row = root.appendChild(el(ctx.doc, "button", "a2-sel-row")) as HTMLButtonElement;
      row.type = "button";
      row.dataset.value = item.value;
      row.appendChild(el(ctx.doc, "span", "a2-check", selected.includes(item.value) ? "✓" : ""));
      const textBox = row.appendChild(el(ctx.doc, "span", "a2-sel-text"));
      textBox.appendChild(el(ctx.doc, "span", "a2-sel-label", item.label));
      if (item.description !== null) {
        textBox.appendChild(el(ctx.doc, "span", "a2-sel-desc", item.description));
      }
      // picking an item submits immediately; the pick is its own capture
      row.addEventListener("click", () => {
        const absPath = writablePath(node, ctx, "selection");
        if (absPath !== null) {
          ctx.session.stageValue(absPath, [item.value]);
          ctx.session.interact(node.id, { [absPath]: [item.value] });
        } else {
          ctx.session.interact(node.id, {});
        }
      });
    }
    return root;
  },

  DropdownSelection(node, ctx) {
    const root = el(ctx.doc, "select", "a2-dropdown") as HTMLSelectElement;
    const selected = selectedValues(node);
    const placeholder = str(node.props["placeholder"]);
    if (placeholder) {
      const opt = root.appendChild(el(ctx.doc, "option", undefined, placeholder)) as HTMLOptionElement;
      opt.value = "";
      opt.disabled = true;
      if (selected.length === 0) opt.selected = true;
    }
    for (const item of selectionItems(node)) {
      const opt = root.appendChild(el(ctx.doc, "option", undefined, item.label)) as HTMLOptionElement;
      opt.value = item.value;
      if (selected.includes(item.value)) opt.selected = true;
    }
    root.addEventListener("change", () => {
      const absPath = writablePath(node, ctx, "selection");
      if (absPath === null || root.value === "") return;
      ctx.session.stageValue(absPath, [root.value]);
      ctx.session.render();
    });
    return root;
  },

  TickSlider(node, ctx) {
    const root = el(ctx.doc, "div", "a2-slider");
    const min = num(node.props["min"], 0);
    const max = Math.max(num(node.props["max"], min + 1), min + 1);
    const divisions = num(node.props["divisions"], max - min);
    const value = snapToTick(min, max, divisions, num(node.props["value"], min));
    const label = str(node.props["label"]);
    if (label) root.appendChild(el(ctx.doc, "span", "a2-slider-label", label));
    const input = root.appendChild(el(ctx.doc, "input")) as HTMLInputElement;
    input.type = "range";
    input.min = String(min);
    input.max = String(max);
    input.step = String((max - min) / (divisions > 0 ? divisions : max - min));
    input.value = String(value);
    const badge = root.appendChild(el(ctx.doc, "span", "a2-slider-value", String(value)));
    input.addEventListener("input", () => {
      const snapped = snapToTick(min, max, divisions, Number(input.value));
      input.value = String(snapped);
      badge.textContent = String(snapped);
      const absPath = writablePath(node, ctx, "value");
      if (absPath !== null) {
        ctx.session.stageValue(absPath, snapped);
        ctx.session.render();
      }
    });
    return root;
  },

  DateTimeInput(node, ctx) {
    const root = el(ctx.doc, "div", "a2-datetime");
    const enableDate = node.props["enableDate"] !== false;
    const enableTime = node.props["enableTime"] === true;
    const input = root.appendChild(el(ctx.doc, "input")) as HTMLInputElement;
    input.type = enableDate && enableTime ? "datetime-local" : enableTime ? "time" : "date";
    input.value = str(node.props["value"]);
    const first = str(node.props["firstDate"]);
    const last = str(node.props["lastDate"]);
    if (first) input.min = first;
    if (last) input.max = last;
    input.addEventListener("change", () => {
      const absPath = writablePath(node, ctx, "value");
      if (absPath === null) return;
      ctx.session.stageValue(absPath, input.value);
      ctx.session.render();
    });
    return root;
  },

  PasswordKeypad(node, ctx) {
    const root = el(ctx.doc, "div", "a2-keypad");
    const st = ctx.session.uiState(node.id);
    const entry = typeof st["entry"] === "string" ? (st["entry"] as string) : "";
    const dots = root.appendChild(el(ctx.doc, "div", "a2-keypad-dots"));
    dots.textContent = "●".repeat(entry.length) + "○".repeat(Math.max(0, KEYPAD_LENGTH - entry.length));
    const grid = root.appendChild(el(ctx.doc, "div", "a2-keypad-grid"));
    const keys = ["1", "2", "3", "4", "5", "6", "7", "8", "9", "back", "0"];
    for (const key of keys) {
      const btn = grid.appendChild(
        el(ctx.doc, "button", "a2-key", key === "back" ? "⌫" : key),
      ) as HTMLButtonElement;
      btn.type = "button";
      btn.dataset.key = key;
      btn.addEventListener("click", () => {
        if (key === "back") {
          st["entry"] = entry.slice(0, -1);
          ctx.session.render();
          return;
        }
        const next = entry + key;
        if (next.length >= KEYPAD_LENGTH) {
          // auto-submit on completion; the keypad captures only its own value
          st["entry"] = "";
          const absPath = writablePath(node, ctx, "value");
          ctx.session.interact(node.id, absPath !== null ? { [absPath]: next } : {});
          return;
        }
        st["entry"] = next;
        ctx.session.render();
      });
    }
    return root;
  },
};

export const KNOWN_TYPES: ReadonlySet<string> = new Set(Object.keys(WIDGETS));

// -- tree and surface assembly -------------------------------------------

export function renderNode(node: ResolvedNode, ctx: Ctx): HTMLElement {
  const impl = WIDGETS[node.type];
  let root: HTMLElement;
  if (impl === undefined) {
    root = el(ctx.doc, "div", "a2-unknown", `unknown component type '${node.type}'`);
    root.dataset.unknown = node.type;
  } else {
    root = impl(node, ctx);
  }
  root.dataset.componentId = node.id;
  root.dataset.componentType = node.type;
  for (const pointer of node.unresolved) {
    root.appendChild(el(ctx.doc, "span", "a2-diag a2-unbound", `unbound: ${pointer || "(value)"}`));
  }
  for (const flag of node.flags) {
    root.appendChild(el(ctx.doc, "span", "a2-diag a2-flag", flag));
  }
  return root;
}

export function renderSessionView(session: RenderSession): HTMLElement {
  const doc = session.doc;
  const ctx: Ctx = { session, doc };
  const root = el(doc, "div", "a2-surface");
  root.dataset.surfaceId = session.surfaceId;

  for (const warning of session.warnings) {
    root.appendChild(el(doc, "div", "a2-warning", `⚠ ${warning}`));
  }
  if (session.processor.faults.length > 0) {
    const box = root.appendChild(el(doc, "div", "a2-faults"));
    box.appendChild(el(doc, "div", "a2-faults-title", "processor faults"));
    const list = box.appendChild(el(doc, "ul"));
    for (const f of session.processor.faults) {
      list.appendChild(el(doc, "li", `a2-fault a2-fault-${f.kind}`, `${f.kind}: ${f.detail}`));
    }
  }

  const host = root.appendChild(el(doc, "div", "a2-tree"));
  const surface = session.surface();
  if (surface === undefined) {
    host.appendChild(
      el(doc, "div", "a2-empty", `surface '${session.surfaceId}' has no content to render`),
    );
    return root;
  }
  if (surface.root === null) {
    host.appendChild(
      el(doc, "div", "a2-empty", `surface '${session.surfaceId}' was never begun; nothing to show`),
    );
    return root;
  }
  try {
    host.appendChild(renderNode(session.processor.materialize(session.surfaceId), ctx));
  } catch (e) {
    if (e instanceof ProcessorError) {
      host.appendChild(el(doc, "div", "a2-error", `could not build the widget tree: ${e.message}`));
    } else {
      throw e;
    }
  }
  return root;
}
