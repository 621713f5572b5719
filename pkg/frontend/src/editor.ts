// Pointer interaction layer: binds one canvas to a SceneViewModel.

import type { ObjectDoc } from "./types.js";
import type { SceneViewModel } from "./scene.js";
import { drawScene, hitTest, toWorld, type ViewTransform } from "./render.js";

interface DragState {
  id: string;
  grabDx: number;
  grabDy: number;
  moved: boolean;
}

export class SceneEditor {
  private transform: ViewTransform | null = null;
  private drag: DragState | null = null;
  private ghost: ObjectDoc | null = null;

  /** Objects outlined in red, driven by the violation view. */
  highlights = new Set<string>();

  constructor(
    private canvas: HTMLCanvasElement,
    public model: SceneViewModel,
    private onChange: () => void = () => {},
  ) {
    canvas.addEventListener("pointerdown", (e) => this.pointerDown(e));
    canvas.addEventListener("pointermove", (e) => this.pointerMove(e));
    canvas.addEventListener("pointerup", (e) => this.pointerUp(e));
    canvas.addEventListener("pointercancel", () => this.cancelDrag());
  }

  draw(): void {
    this.transform = drawScene(this.canvas, this.model.serialize(), {
      selection: this.model.selection,
      highlights: this.highlights,
      ghost: this.ghost,
    });
  }

  private eventWorld(e: PointerEvent): { x: number; y: number } | null {
    if (!this.transform) return null;
    const rect = this.canvas.getBoundingClientRect();
    const px = ((e.clientX - rect.left) / rect.width) * this.canvas.width;
    const py = ((e.clientY - rect.top) / rect.height) * this.canvas.height;
    return toWorld(this.transform, px, py);
  }

  private pointerDown(e: PointerEvent): void {
    const world = this.eventWorld(e);
    if (!world) return;
    const hit = hitTest(this.model.serialize(), world.x, world.y);
    this.model.selection = hit ? hit.id : null;
    if (hit && !this.model.isFixed(hit.id)) {
      this.drag = {
        id: hit.id,
        grabDx: hit.x - world.x,
        grabDy: hit.y - world.y,
        moved: false,
      };
      this.canvas.setPointerCapture(e.pointerId);
    }
    this.draw();
    this.onChange();
  }

  private pointerMove(e: PointerEvent): void {
    if (!this.drag) return;
    const world = this.eventWorld(e);
    if (!world) return;
    const current = this.model.getObject(this.drag.id);
    if (!current) return;
    const target = this.model.dragTarget(
      this.drag.id,
      world.x + this.drag.grabDx,
      world.y + this.drag.grabDy,
    );
    this.ghost = { ...current, x: target.x, y: target.y };
    this.drag.moved = true;
    this.draw();
  }

  private pointerUp(e: PointerEvent): void {
    if (!this.drag) return;
    const world = this.eventWorld(e);
    if (world && this.drag.moved) {
      // invalid drops (overlaps) are rejected inside the model and the
      // object simply stays where it was
      this.model.moveObject(
        this.drag.id,
        world.x + this.drag.grabDx,
        world.y + this.drag.grabDy,
      );
    }
    this.cancelDrag();
    this.onChange();
  }

  private cancelDrag(): void {
    this.drag = null;
    this.ghost = null;
    this.draw();
  }

  /** Spawn a new object near the middle of the space, dodging overlaps. */
  spawn(cls: string, l: number, w: number): string | null {
    const space = this.model.getSpace();
    const cx = (space.x_min + space.x_max) / 2;
    const cy = (space.y_min + space.y_max) / 2;
    for (let ring = 0; ring < 8; ring += 1) {
      for (let k = 0; k < Math.max(1, ring * 4); k += 1) {
        const angle = (2 * Math.PI * k) / Math.max(1, ring * 4);
        const x = cx + ring * 0.75 * Math.cos(angle);
        const y = cy + ring * 0.75 * Math.sin(angle);
        const id = this.model.addObject(cls, l, w, x, y);
        if (id !== null) {
          this.draw();
          this.onChange();
          return id;
        }
      }
    }
    return null;
  }

  deleteSelection(): void {
    if (this.model.selection && this.model.removeObject(this.model.selection)) {
      this.draw();
      this.onChange();
    }
  }
}
