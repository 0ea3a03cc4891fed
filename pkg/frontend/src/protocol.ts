/** A2UI wire protocol: message parsing and structural prop classification.
 *
 * This mirrors the reference processor's parse layer so that the widget
 * tree and the action events built here agree with it field for field.
 * Parsing is permissive above the envelope: well-formed objects always
 * parse, and softer defects surface later as processor faults or render
 * diagnostics.
 */

export const ACTION_KEYS = [
  "beginRendering",
  "surfaceUpdate",
  "dataModelUpdate",
  "deleteSurface",
] as const;

// Wire wrapper key -> literal prop kind.
const WRAPPER_KINDS: Record<string, "string" | "number" | "boolean" | "array"> = {
  literalString: "string",
  literalNumber: "number",
  literalBoolean: "boolean",
  literalArray: "array",
};

// Prop names whose bare-string values are component-id references.
export const CHILD_REF_PROPS = ["child", "entryPointChild", "contentChild"];

export type PropKind =
  | "string"
  | "number"
  | "boolean"
  | "array"
  | "path"
  | "bound"
  | "child"
  | "children"
  | "action"
  | "nested"
  | "items"
  | "opaque";

export interface ActionSpec {
  name: string | null;
  context: unknown;
}

export interface PropValue {
  kind: PropKind;
  value: unknown;
  wrapped?: boolean;
}

export interface BoundValue {
  path: unknown;
  literalKey: string;
  literal: unknown;
}

export interface ComponentInstance {
  id: string | null;
  typeName: string | null;
  props: Record<string, PropValue>;
}

export interface DataEntry {
  key: string | null;
  valueKind: "string" | "number" | "boolean" | null;
  value: unknown;
}

export type MessageBody =
  | { kind: "beginRendering"; surfaceId: string | null; root: string | null }
  | { kind: "surfaceUpdate"; surfaceId: string | null; components: ComponentInstance[] }
  | { kind: "dataModelUpdate"; surfaceId: string | null; path: string | null; contents: DataEntry[] }
  | { kind: "deleteSurface"; surfaceId: string | null };

export interface A2uiMessage {
  kind: string | null;
  body: MessageBody | null;
}

export class ShapeError extends Error {}

export function isPlainObject(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

export function hasOwn(obj: object, key: string): boolean {
  return Object.prototype.hasOwnProperty.call(obj, key);
}

function parseAction(raw: Record<string, unknown>): ActionSpec {
  const name = raw.name;
  return {
    name: typeof name === "string" ? name : null,
    context: raw.context === undefined ? null : raw.context,
  };
}

/** Classify one raw JSON prop value structurally.
 *
 * Prop names drive only the reference rules: child/entryPointChild/
 * contentChild strings are component refs, children string lists are ref
 * lists, action objects carry the event hook. Everything else is decided
 * by shape alone.
 */
export function parsePropValue(name: string, raw: unknown): PropValue {
  if (name === "action" && isPlainObject(raw)) {
    return { kind: "action", value: parseAction(raw) };
  }
  if (CHILD_REF_PROPS.includes(name) && typeof raw === "string") {
    return { kind: "child", value: raw };
  }
  if (name === "children" && Array.isArray(raw) && raw.every((x) => typeof x === "string")) {
    return { kind: "children", value: [...raw] };
  }

  if (typeof raw === "string") return { kind: "string", value: raw };
  if (typeof raw === "boolean") return { kind: "boolean", value: raw };
  if (typeof raw === "number") return { kind: "number", value: raw };

  if (isPlainObject(raw)) {
    const keys = Object.keys(raw);
    const bindingOnly =
      keys.length > 0 && keys.every((k) => k === "path" || hasOwn(WRAPPER_KINDS, k));
    if (bindingOnly) {
      if (keys.length === 1 && keys[0] === "path") {
        // {"path": non-string} is not a binding
        if (typeof raw.path !== "string") return { kind: "opaque", value: raw };
        return { kind: "path", value: raw.path };
      }
      if (keys.length === 1) {
        const wrapper = keys[0];
        const kind = WRAPPER_KINDS[wrapper];
        const val = raw[wrapper];
        if (kind === "array" && !(Array.isArray(val) && val.every((x) => typeof x === "string"))) {
          return { kind: "opaque", value: raw };
        }
        return { kind, value: val, wrapped: true };
      }
      if (keys.includes("path") && keys.length === 2) {
        const wrapper = keys.find((k) => k !== "path")!;
        const bound: BoundValue = { path: raw.path, literalKey: wrapper, literal: raw[wrapper] };
        return { kind: "bound", value: bound };
      }
      return { kind: "opaque", value: raw };
    }
    const nested: Record<string, PropValue> = {};
    for (const [k, v] of Object.entries(raw)) nested[k] = parsePropValue(k, v);
    return { kind: "nested", value: nested };
  }

  if (Array.isArray(raw)) {
    if (raw.every((x) => typeof x === "string")) return { kind: "array", value: [...raw] };
    if (raw.length > 0 && raw.every(isPlainObject)) {
      const items = raw.map((item) => {
        const out: Record<string, PropValue> = {};
        for (const [k, v] of Object.entries(item)) out[k] = parsePropValue(k, v);
        return out;
      });
      return { kind: "items", value: items };
    }
    return { kind: "opaque", value: raw };
  }

  return { kind: "opaque", value: raw };
}

/** Binding path consumed by a prop value, if any. */
export function bindingPath(pv: PropValue): string | null {
  if (pv.kind === "path") return pv.value as string;
  if (pv.kind === "bound") {
    const p = (pv.value as BoundValue).path;
    return typeof p === "string" ? p : null;
  }
  return null;
}

function parseComponent(raw: Record<string, unknown>): ComponentInstance {
  const cid = raw.id;
  const comp = raw.component;
  let typeName: string | null = null;
  let props: Record<string, PropValue> = {};
  if (isPlainObject(comp) && Object.keys(comp).length > 0) {
    typeName = Object.keys(comp)[0];
    const body = comp[typeName];
    if (isPlainObject(body)) {
      for (const [k, v] of Object.entries(body)) props[k] = parsePropValue(k, v);
    }
  }
  return { id: typeof cid === "string" ? cid : null, typeName, props };
}

function parseEntry(raw: Record<string, unknown>): DataEntry {
  const key = raw.key;
  let valueKind: DataEntry["valueKind"] = null;
  let value: unknown = null;
  const variants: Array<[string, "string" | "number" | "boolean"]> = [
    ["valueString", "string"],
    ["valueNumber", "number"],
    ["valueBoolean", "boolean"],
  ];
  for (const [wire, kind] of variants) {
    if (hasOwn(raw, wire) && valueKind === null) {
      valueKind = kind;
      value = raw[wire];
    }
  }
  return { key: typeof key === "string" ? key : null, valueKind, value };
}

function parseBody(kind: string, raw: Record<string, unknown>, where: string): MessageBody {
  const sidRaw = raw.surfaceId;
  const sid = typeof sidRaw === "string" ? sidRaw : null;
  if (kind === "beginRendering") {
    const root = raw.root;
    return { kind, surfaceId: sid, root: typeof root === "string" ? root : null };
  }
  if (kind === "surfaceUpdate") {
    const compsRaw = raw.components;
    const comps: ComponentInstance[] = [];
    if (Array.isArray(compsRaw)) {
      compsRaw.forEach((c, j) => {
        if (!isPlainObject(c)) {
          throw new ShapeError(`${where}/components/${j}: component item must be an object`);
        }
        comps.push(parseComponent(c));
      });
    } else if (compsRaw !== undefined && compsRaw !== null) {
      throw new ShapeError(`${where}/components: must be an array`);
    }
    return { kind, surfaceId: sid, components: comps };
  }
  if (kind === "dataModelUpdate") {
    const path = raw.path;
    const contentsRaw = raw.contents;
    const entries: DataEntry[] = [];
    if (Array.isArray(contentsRaw)) {
      contentsRaw.forEach((e, j) => {
        if (!isPlainObject(e)) {
          throw new ShapeError(`${where}/contents/${j}: entry must be an object`);
        }
        entries.push(parseEntry(e));
      });
    } else if (contentsRaw !== undefined && contentsRaw !== null) {
      throw new ShapeError(`${where}/contents: must be an array`);
    }
    return { kind, surfaceId: sid, path: typeof path === "string" ? path : null, contents: entries };
  }
  return { kind: "deleteSurface", surfaceId: sid };
}

function parseMessage(raw: Record<string, unknown>, where: string): A2uiMessage {
  const kind = Object.keys(raw).find((k) => (ACTION_KEYS as readonly string[]).includes(k)) ?? null;
  if (kind === null) return { kind: null, body: null };
  const bodyRaw = raw[kind];
  if (!isPlainObject(bodyRaw)) {
    throw new ShapeError(`${where}/${kind}: action body must be an object`);
  }
  return { kind, body: parseBody(kind, bodyRaw, `${where}/${kind}`) };
}

/** Parse a raw message array (the a2ui payload of an assistant response). */
export function parseMessages(rawList: unknown[]): A2uiMessage[] {
  return rawList.map((m, i) => {
    if (!isPlainObject(m)) throw new ShapeError(`/a2ui/${i}: message must be an object`);
    return parseMessage(m, `/a2ui/${i}`);
  });
}

/** Decode a /render payload: a JSON message array, or any object carrying
 * one under "a2ui" (full responses and exported bundles both qualify). */
export function decodePayload(text: string): unknown[] {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (e) {
    throw new ShapeError(`payload is not valid JSON: ${(e as Error).message}`);
  }
  if (Array.isArray(doc)) return doc;
  if (isPlainObject(doc) && Array.isArray(doc.a2ui)) return doc.a2ui;
  throw new ShapeError("payload must be a JSON array of messages (or an object with an 'a2ui' array)");
}
