/** RenderSession: one mounted surface, its data model, and the event log.
 *
 * The session owns a Processor (surface registry identical to the
 * reference implementation), renders the chosen surface's widget tree
 * into a container, and turns user gestures into ActionEvents. Events
 * are appended in dispatch order and never mutated afterwards.
 */

import { A2uiMessage, ComponentInstance, parseMessages } from "./protocol.js";
import { ActionEvent, Processor, ProcessorError, Surface, writePath } from "./processor.js";
import { renderSessionView } from "./renderer.js";

export interface MountOptions {
  surface?: string | null;
}

export const DEFAULT_SURFACE_ID = "main";

export class RenderSession {
  readonly processor = new Processor();
  readonly events: ActionEvent[] = [];
  readonly warnings: string[] = [];
  /** Staged user values: absolute data path -> latest value. Submitting
   * components pass these as the dispatch userValues. */
  readonly pending: Record<string, unknown> = {};
  surfaceId: string = DEFAULT_SURFACE_ID;
  container: HTMLElement | null = null;

  private uiStates = new Map<string, Record<string, unknown>>();

  constructor(readonly doc: Document) {}

  mount(container: HTMLElement, rawMessages: unknown[], opts: MountOptions = {}): void {
    const messages: A2uiMessage[] = parseMessages(rawMessages);
    this.processor.applyAll(messages);

    const ids: string[] = [];
    for (const m of messages) {
      const sid = m.body?.surfaceId ?? null;
      if (sid !== null && !ids.includes(sid)) ids.push(sid);
    }
    this.surfaceId = opts.surface ?? ids[0] ?? DEFAULT_SURFACE_ID;
    if (ids.length > 1) {
      this.warnings.push(
        `response touches ${ids.length} surfaces (${ids.join(", ")}); showing '${this.surfaceId}'`,
      );
    }
    this.container = container;
    this.render();
  }

  /** Rebuild the widget tree from current processor state. */
  render(): void {
    if (this.container === null) return;
    this.container.replaceChildren(renderSessionView(this));
  }

  surface(): Surface | undefined {
    return this.processor.surfaces.get(this.surfaceId);
  }

  component(cid: string): ComponentInstance | undefined {
    return this.surface()?.components.get(cid);
  }

  /** Per-widget UI state (active tab, keypad buffer) that survives
   * re-renders but is never part of the data model. */
  uiState(cid: string): Record<string, unknown> {
    let st = this.uiStates.get(cid);
    if (st === undefined) {
      st = {};
      this.uiStates.set(cid, st);
    }
    return st;
  }

  /** Record a user-edited value and reflect it in the data model so
   * bound props re-resolve on the next render. */
  stageValue(absPath: string, value: unknown): void {
    this.pending[absPath] = value;
    const surface = this.surface();
    if (surface !== undefined) writePath(surface.data, absPath, value);
  }

  /** Dispatch a component's action. Returns the event, or null (with a
   * console note) when the target is not interactive. */
  interact(componentId: string, userValues?: Record<string, unknown>): ActionEvent | null {
    let event: ActionEvent;
    try {
      event = this.processor.dispatchAction(this.surfaceId, componentId, userValues ?? {});
    } catch (e) {
      if (e instanceof ProcessorError) {
        console.info(`interact ignored: ${e.message}`);
        return null;
      }
      throw e;
    }
    this.events.push(event);
    this.render();
    return event;
  }

  /** Dispatch with everything the user touched since mount; the path a
   * submit button captures is exactly the staged set. */
  submit(componentId: string): ActionEvent | null {
    return this.interact(componentId, { ...this.pending });
  }

  eventLogJson(): string {
    return JSON.stringify(this.events);
  }
}
