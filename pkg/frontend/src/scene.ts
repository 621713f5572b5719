// Editable scene state.
//
// The view model wraps a demonstration document and guarantees that
// whatever the UI does to it, serialize() always yields a document the
// service will accept: object centers stay inside the space, sizes stay
// positive, ids stay unique. Undo and redo restore prior serializations
// byte for byte.

import type { ClassDoc, DemonstrationDoc, ObjectDoc, SpaceDoc } from "./types.js";
import { interiorsOverlap, validateDemonstration } from "./types.js";
import type { SnapConfig } from "./snap.js";
import { DEFAULT_SNAP, snapPosition } from "./snap.js";

export class SceneViewModel {
  private space: SpaceDoc;
  private classes: ClassDoc[];
  private objects: ObjectDoc[];
  private undoStack: string[] = [];
  private redoStack: string[] = [];

  selection: string | null = null;
  snap: SnapConfig = { ...DEFAULT_SNAP };

  constructor(base: DemonstrationDoc) {
    const problems = validateDemonstration(base);
    if (problems.length > 0) {
      throw new Error(`invalid base document: ${problems[0]}`);
    }
    this.space = { ...base.space };
    this.classes = base.classes.map((c) => ({ ...c }));
    this.objects = base.objects.map((o) => ({ ...o }));
  }

  getSpace(): SpaceDoc {
    return { ...this.space };
  }

  getClasses(): ClassDoc[] {
    return this.classes.map((c) => ({ ...c }));
  }

  movableClasses(): string[] {
    return this.classes.filter((c) => !c.fixed).map((c) => c.name);
  }

  getObjects(): ObjectDoc[] {
    return this.objects.map((o) => ({ ...o }));
  }

  getObject(id: string): ObjectDoc | undefined {
    const found = this.objects.find((o) => o.id === id);
    return found ? { ...found } : undefined;
  }

  /** Objects of fixed classes form the scenery the editor cannot move. */
  isFixed(id: string): boolean {
    const o = this.objects.find((obj) => obj.id === id);
    if (!o) return false;
    return this.classes.some((c) => c.name === o.class && c.fixed);
  }

  serialize(): DemonstrationDoc {
    return {
      schema_version: 1,
      space: { ...this.space },
      classes: this.classes.map((c) => ({ ...c })),
      objects: this.objects.map((o) => ({ ...o })),
    };
  }

  serializeText(): string {
    return JSON.stringify(this.serialize(), null, 2);
  }

  private snapshot(): void {
    this.undoStack.push(this.serializeText());
    this.redoStack.length = 0;
  }

  private restore(text: string): void {
    const doc = JSON.parse(text) as DemonstrationDoc;
    this.space = doc.space;
    this.classes = doc.classes;
    this.objects = doc.objects;
    if (this.selection && !this.objects.some((o) => o.id === this.selection)) {
      this.selection = null;
    }
  }

  canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  undo(): void {
    const prior = this.undoStack.pop();
    if (prior === undefined) return;
    this.redoStack.push(this.serializeText());
    this.restore(prior);
  }

  redo(): void {
    const next = this.redoStack.pop();
    if (next === undefined) return;
    this.undoStack.push(this.serializeText());
    this.restore(next);
  }

  private clampX(x: number): number {
    return Math.min(Math.max(x, this.space.x_min), this.space.x_max);
  }

  private clampY(y: number): number {
    return Math.min(Math.max(y, this.space.y_min), this.space.y_max);
  }

  private freshId(cls: string): string {
    const prefix = cls.toLowerCase();
    let n = 0;
    while (this.objects.some((o) => o.id === `${prefix}${n}`)) n += 1;
    return `${prefix}${n}`;
  }

  /**
   * Add an object of a declared class. The center is clamped into the
   * space and the drop is rejected (returns null) when it would overlap
   * another object's interior.
   */
  addObject(cls: string, l: number, w: number, x: number, y: number): string | null {
    if (!this.classes.some((c) => c.name === cls)) {
      throw new Error(`undeclared class ${cls}`);
    }
    if (!(l > 0) || !(w > 0)) throw new Error("size must be positive");
    const placed: ObjectDoc = {
      id: this.freshId(cls),
      class: cls,
      l,
      w,
      x: this.clampX(x),
      y: this.clampY(y),
    };
    if (this.objects.some((o) => interiorsOverlap(o, placed))) return null;
    this.snapshot();
    this.objects.push(placed);
    this.selection = placed.id;
    return placed.id;
  }

  /**
   * Proposed pose for a drag in progress: snapped toward the other
   * objects and the space boundary, then clamped. Does not mutate.
   */
  dragTarget(id: string, x: number, y: number): { x: number; y: number } {
    const moving = this.objects.find((o) => o.id === id);
    if (!moving) throw new Error(`no object ${id}`);
    const partners = this.objects.filter((o) => o.id !== id);
    const snapped = this.snap.enabled
      ? snapPosition(x, y, moving.l, moving.w, partners, this.space, this.snap)
      : { x, y };
    return { x: this.clampX(snapped.x), y: this.clampY(snapped.y) };
  }

  /**
   * Commit a completed drag. Returns false (and leaves the scene
   * unchanged) when the object is fixed scenery or the final pose
   * overlaps another object.
   */
  moveObject(id: string, x: number, y: number): boolean {
    const moving = this.objects.find((o) => o.id === id);
    if (!moving || this.isFixed(id)) return false;
    const target = this.dragTarget(id, x, y);
    const candidate = { ...moving, x: target.x, y: target.y };
    const partners = this.objects.filter((o) => o.id !== id);
    if (partners.some((o) => interiorsOverlap(o, candidate))) return false;
    if (candidate.x === moving.x && candidate.y === moving.y) return true;
    this.snapshot();
    moving.x = candidate.x;
    moving.y = candidate.y;
    return true;
  }

  removeObject(id: string): boolean {
    if (this.isFixed(id)) return false;
    const index = this.objects.findIndex((o) => o.id === id);
    if (index < 0) return false;
    this.snapshot();
    this.objects.splice(index, 1);
    if (this.selection === id) this.selection = null;
    return true;
  }

  /** A scene is worth saving once the author has placed something. */
  hasMovableObjects(): boolean {
    return this.objects.some((o) => !this.isFixed(o.id));
  }
}
