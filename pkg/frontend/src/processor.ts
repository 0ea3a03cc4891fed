/** Surface lifecycle, data model, tree materialization, action dispatch.
 *
 * Port of the reference processor. The ActionEvent JSON shape is the
 * cross-implementation contract: for the same messages and the same user
 * values, dispatchAction here must produce the same event, field for
 * field, as the reference implementation. Keep the two in lockstep.
 */

import {
  A2uiMessage,
  ActionSpec,
  ComponentInstance,
  PropValue,
  hasOwn,
  isPlainObject,
  parsePropValue,
} from "./protocol.js";

export class ProcessorError extends Error {}
export class CycleDetected extends ProcessorError {}
export class DanglingChild extends ProcessorError {}

export interface Fault {
  kind: string; // "unknown-surface" | "type-overwrite" | "invalid-message"
  surfaceId: string | null;
  detail: string;
}

export interface Surface {
  surfaceId: string;
  begun: boolean;
  root: string | null;
  components: Map<string, ComponentInstance>;
  data: Record<string, unknown>;
}

export interface ActionEvent {
  surfaceId: string;
  componentId: string;
  action: string;
  context: Array<{ key: unknown; value: unknown }>;
  capturedValues: Record<string, unknown>;
}

export interface ResolvedNode {
  id: string;
  type: string;
  props: Record<string, unknown>;
  children: ResolvedNode[];
  unresolved: string[];
  flags: string[];
  // Data-model context the node was expanded under (template instances get
  // the item subtree). Not part of the serialized shape.
  context: string;
}

// Containers created here use a null prototype so data keys can never
// collide with Object.prototype members.
function emptyMap(): Record<string, unknown> {
  return Object.create(null) as Record<string, unknown>;
}

function setKey(obj: Record<string, unknown>, key: string, value: unknown): void {
  Object.defineProperty(obj, key, {
    value,
    writable: true,
    enumerable: true,
    configurable: true,
  });
}

/** Absolute data-model path for a write of key under prefix. */
export function joinPath(prefix: string | null | undefined, key: string): string {
  if (key.startsWith("/")) return key;
  const base = prefix === null || prefix === undefined || prefix === "" || prefix === "/" ? "" : prefix;
  return `${base}/${key}`;
}

/** Path segments; empty segments (doubled or trailing slashes) skipped. */
export function splitPath(path: string): string[] {
  return path.split("/").filter((s) => s.length > 0);
}

/** Value at path resolved from context; [value, found]. Absolute paths
 * ignore the context. */
export function resolvePath(
  model: Record<string, unknown>,
  context: string,
  path: string,
): [unknown, boolean] {
  let node: unknown = model;
  for (const seg of splitPath(joinPath(context, path))) {
    if (!isPlainObject(node) || !hasOwn(node, seg)) return [null, false];
    node = node[seg];
  }
  return [node, true];
}

/** Write a scalar at path, creating intermediate maps. Returns a fault
 * detail when the write clobbers a subtree or tunnels through a scalar
 * (last writer still wins). */
export function writePath(
  model: Record<string, unknown>,
  path: string,
  value: unknown,
): string | null {
  const segs = splitPath(path);
  if (segs.length === 0) return `cannot write to '${path}'`;
  let node = model;
  let detail: string | null = null;
  for (const seg of segs.slice(0, -1)) {
    let nxt: unknown = hasOwn(node, seg) ? node[seg] : undefined;
    if (!isPlainObject(nxt)) {
      if (hasOwn(node, seg)) {
        detail = `overwrote scalar at segment '${seg}' of '${path}'`;
      }
      nxt = emptyMap();
      setKey(node, seg, nxt);
    }
    node = nxt as Record<string, unknown>;
  }
  const last = segs[segs.length - 1];
  if (hasOwn(node, last) && isPlainObject(node[last])) {
    detail = `overwrote subtree at '${path}'`;
  }
  setKey(node, last, value);
  return detail;
}

export class Processor {
  surfaces = new Map<string, Surface>();
  faults: Fault[] = [];
  private everSeen = new Set<string>();

  applyAll(messages: A2uiMessage[]): void {
    for (const m of messages) this.apply(m);
  }

  apply(m: A2uiMessage): void {
    if (m.kind === null || m.body === null) {
      this.faults.push({ kind: "invalid-message", surfaceId: null, detail: "message carries no action key" });
      return;
    }
    const sid = m.body.surfaceId;
    if (sid === null) {
      this.faults.push({ kind: "invalid-message", surfaceId: null, detail: `${m.kind} without surfaceId` });
      return;
    }
    const body = m.body;
    if (body.kind === "deleteSurface") {
      if (!this.everSeen.has(sid)) {
        this.faults.push({ kind: "unknown-surface", surfaceId: sid, detail: "deleteSurface for a surface never seen" });
        return;
      }
      this.surfaces.delete(sid);
      return;
    }

    this.everSeen.add(sid);
    let surface = this.surfaces.get(sid);
    if (surface === undefined) {
      surface = { surfaceId: sid, begun: false, root: null, components: new Map(), data: emptyMap() };
      this.surfaces.set(sid, surface);
    }

    if (body.kind === "beginRendering") {
      surface.begun = true;
      if (body.root !== null) surface.root = body.root;
    } else if (body.kind === "surfaceUpdate") {
      for (const c of body.components) {
        if (c.id === null) {
          this.faults.push({ kind: "invalid-message", surfaceId: sid, detail: "component item without id" });
          continue;
        }
        surface.components.set(c.id, c);
      }
    } else {
      for (const entry of body.contents) {
        if (entry.key === null || entry.valueKind === null) {
          this.faults.push({ kind: "invalid-message", surfaceId: sid, detail: "data entry without key or value" });
          continue;
        }
        const detail = writePath(surface.data, joinPath(body.path, entry.key), entry.value);
        if (detail) this.faults.push({ kind: "type-overwrite", surfaceId: sid, detail });
      }
    }
  }

  materialize(sid: string): ResolvedNode {
    const surface = this.surfaces.get(sid);
    if (surface === undefined) throw new ProcessorError(`unknown surface '${sid}'`);
    if (surface.root === null) throw new ProcessorError(`surface '${sid}' has no root (never begun)`);
    return new Materializer(surface).node(surface.root, "/");
  }

  dispatchAction(
    sid: string,
    componentId: string,
    userValues?: Record<string, unknown> | null,
  ): ActionEvent {
    const surface = this.surfaces.get(sid);
    if (surface === undefined) throw new ProcessorError(`unknown surface '${sid}'`);
    const comp = surface.components.get(componentId);
    if (comp === undefined) throw new ProcessorError(`unknown component '${componentId}'`);
    const actionPv = comp.props["action"];
    if (actionPv === undefined || actionPv.kind !== "action") {
      throw new ProcessorError(`component '${componentId}' has no action`);
    }
    const spec = actionPv.value as ActionSpec;
    if (spec.name === null) throw new ProcessorError(`action on '${componentId}' has no name`);

    const captured: Record<string, unknown> = {};
    for (const [path, value] of Object.entries(userValues ?? {})) {
      const absPath = joinPath("/", path);
      writePath(surface.data, absPath, value);
      captured[absPath] = value;
    }

    const contextOut: Array<{ key: unknown; value: unknown }> = [];
    const rawCtx = Array.isArray(spec.context) ? spec.context : [];
    for (const entry of rawCtx) {
      if (!isPlainObject(entry)) {
        contextOut.push({ key: null, value: entry });
        continue;
      }
      const key = hasOwn(entry, "key") ? entry.key : null;
      const rawVal = hasOwn(entry, "value") ? entry.value : null;
      const pv = parsePropValue("value", rawVal);
      contextOut.push({ key, value: resolveValue(pv, surface.data, "/", []) });
    }
    return {
      surfaceId: sid,
      componentId,
      action: spec.name,
      context: contextOut,
      capturedValues: captured,
    };
  }
}

/** Plain-JSON value for a prop, pulling bindings out of the data model. */
export function resolveValue(
  pv: PropValue,
  data: Record<string, unknown>,
  context: string,
  unresolved: string[],
  pointer = "",
): unknown {
  switch (pv.kind) {
    case "string":
    case "number":
    case "boolean":
    case "array":
      return pv.value;
    case "path": {
      const [value, found] = resolvePath(data, context, pv.value as string);
      if (!found) {
        unresolved.push(pointer);
        return null;
      }
      return value;
    }
    case "bound": {
      const b = pv.value as { path: unknown; literal: unknown };
      if (typeof b.path !== "string") return b.literal;
      const [value, found] = resolvePath(data, context, b.path);
      return found ? value : b.literal;
    }
    case "action": {
      const spec = pv.value as ActionSpec;
      const out: Record<string, unknown> = {};
      if (spec.name !== null) out.name = spec.name;
      if (spec.context !== null) out.context = spec.context;
      return out;
    }
    case "nested": {
      const out: Record<string, unknown> = {};
      for (const [k, v] of Object.entries(pv.value as Record<string, PropValue>)) {
        out[k] = resolveValue(v, data, context, unresolved, `${pointer}/${k}`);
      }
      return out;
    }
    case "items":
      return (pv.value as Array<Record<string, PropValue>>).map((item, i) => {
        const out: Record<string, unknown> = {};
        for (const [k, v] of Object.entries(item)) {
          out[k] = resolveValue(v, data, context, unresolved, `${pointer}/${i}/${k}`);
        }
        return out;
      });
    default:
      return pv.value; // opaque / child / children handled by the tree walker
  }
}

class Materializer {
  private stack: string[] = [];
  private materialized = new Set<string>();

  constructor(private surface: Surface) {}

  node(cid: string, context: string): ResolvedNode {
    const comp = this.surface.components.get(cid);
    if (comp === undefined) {
      throw new DanglingChild(
        `component '${cid}' is not defined on surface '${this.surface.surfaceId}'`,
      );
    }
    if (this.stack.includes(cid)) {
      throw new CycleDetected(`reference cycle: ${[...this.stack, cid].join(" -> ")}`);
    }
    this.stack.push(cid);
    const out: ResolvedNode = {
      id: cid,
      type: comp.typeName ?? "?",
      props: {},
      children: [],
      unresolved: [],
      flags: [],
      context,
    };
    for (const [name, pv] of Object.entries(comp.props)) {
      out.props[name] = this.value(pv, out, context, name);
    }
    this.stack.pop();
    this.materialized.add(cid);
    return out;
  }

  /** Expand one component reference; returns the prop-side marker. */
  private ref(cid: string, node: ResolvedNode, context: string): Record<string, unknown> {
    if (this.materialized.has(cid) && !this.stack.includes(cid)) {
      node.flags.push(`duplicate-reference:${cid}`);
      return { $dup: cid };
    }
    const child = this.node(cid, context);
    node.children.push(child);
    return { $ref: node.children.length - 1 };
  }

  private value(pv: PropValue, node: ResolvedNode, context: string, pointer: string): unknown {
    if (pv.kind === "child") return this.ref(pv.value as string, node, context);
    if (pv.kind === "children") {
      return (pv.value as string[]).map((cid) => this.ref(cid, node, context));
    }
    if (pv.kind === "nested") {
      const sub = pv.value as Record<string, PropValue>;
      if (hasOwn(sub, "child") && hasOwn(sub, "dataPath") && pointer === "template") {
        return this.template(sub, node, context, pointer);
      }
      const out: Record<string, unknown> = {};
      for (const [k, v] of Object.entries(sub)) {
        out[k] = this.value(v, node, context, `${pointer}/${k}`);
      }
      return out;
    }
    if (pv.kind === "items") {
      return (pv.value as Array<Record<string, PropValue>>).map((item, i) => {
        const out: Record<string, unknown> = {};
        for (const [k, v] of Object.entries(item)) {
          out[k] = this.value(v, node, context, `${pointer}/${i}/${k}`);
        }
        return out;
      });
    }
    return resolveValue(pv, this.surface.data, context, node.unresolved, pointer);
  }

  private template(
    sub: Record<string, PropValue>,
    node: ResolvedNode,
    context: string,
    pointer: string,
  ): Record<string, unknown> {
    const dataPathPv = sub["dataPath"];
    const dataPath =
      dataPathPv.kind === "string" || dataPathPv.kind === "path"
        ? (dataPathPv.value as string)
        : null;
    const childPv = sub["child"];
    if (dataPath === null || childPv.kind !== "child") {
      node.flags.push("template-malformed");
      return { dataPath: null, instances: [] };
    }
    const [subtree, found] = resolvePath(this.surface.data, context, dataPath);
    if (!found) {
      node.unresolved.push(`${pointer}/dataPath`);
      return { dataPath, instances: [] };
    }
    if (!isPlainObject(subtree)) {
      node.flags.push("template-non-tree");
      return { dataPath, instances: [] };
    }
    const absBase = joinPath(context, dataPath);
    const instances: Array<Record<string, unknown>> = [];
    for (const key of Object.keys(subtree)) {
      const itemContext = joinPath(absBase, key);
      // Template instances re-expand the same child once per item key.
      const child = this.node(childPv.value as string, itemContext);
      node.children.push(child);
      instances.push({ key, $ref: node.children.length - 1 });
    }
    return { dataPath, instances };
  }
}

/** Serialized tree shape shared with the reference implementation. */
export function nodeToJson(node: ResolvedNode): Record<string, unknown> {
  return {
    id: node.id,
    type: node.type,
    props: node.props,
    children: node.children.map(nodeToJson),
    unresolved: node.unresolved,
    flags: node.flags,
  };
}
