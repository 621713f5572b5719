// Canvas drawing. All geometry is in world units; the transform maps
// world y upward so north is at the top of the canvas.

import type { DemonstrationDoc, ObjectDoc, SpaceDoc } from "./types.js";
import { edgesOf } from "./types.js";

const CLASS_COLORS = ["#4e79a7", "#e15759", "#59a14f", "#f28e2b", "#b07aa1", "#76b7b2"];
const FIXED_COLOR = "#6b6b6b";

export function classColor(doc: DemonstrationDoc, cls: string): string {
  const fixed = doc.classes.find((c) => c.name === cls)?.fixed;
  if (fixed) return FIXED_COLOR;
  const movables = doc.classes.filter((c) => !c.fixed).map((c) => c.name);
  const index = movables.indexOf(cls);
  return CLASS_COLORS[(index + CLASS_COLORS.length) % CLASS_COLORS.length];
}

export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
  space: SpaceDoc;
}

export function fitTransform(space: SpaceDoc, width: number, height: number, margin = 12): ViewTransform {
  const sx = (width - 2 * margin) / (space.x_max - space.x_min);
  const sy = (height - 2 * margin) / (space.y_max - space.y_min);
  const scale = Math.min(sx, sy);
  return { scale, offsetX: margin, offsetY: margin, space };
}

export function toPixel(t: ViewTransform, x: number, y: number): { px: number; py: number } {
  return {
    px: t.offsetX + (x - t.space.x_min) * t.scale,
    py: t.offsetY + (t.space.y_max - y) * t.scale,
  };
}

export function toWorld(t: ViewTransform, px: number, py: number): { x: number; y: number } {
  return {
    x: t.space.x_min + (px - t.offsetX) / t.scale,
    y: t.space.y_max - (py - t.offsetY) / t.scale,
  };
}

export interface DrawOptions {
  selection?: string | null;
  highlights?: Set<string>;
  ghost?: ObjectDoc | null;
}

export function drawScene(
  canvas: HTMLCanvasElement,
  doc: DemonstrationDoc,
  options: DrawOptions = {},
): ViewTransform {
  const ctx = canvas.getContext("2d");
  const t = fitTransform(doc.space, canvas.width, canvas.height);
  if (!ctx) return t;

  ctx.clearRect(0, 0, canvas.width, canvas.height);

  // space boundary
  const origin = toPixel(t, doc.space.x_min, doc.space.y_max);
  const extent = toPixel(t, doc.space.x_max, doc.space.y_min);
  ctx.fillStyle = "#fafaf7";
  ctx.fillRect(origin.px, origin.py, extent.px - origin.px, extent.py - origin.py);
  ctx.strokeStyle = "#444";
  ctx.lineWidth = 1.5;
  ctx.strokeRect(origin.px, origin.py, extent.px - origin.px, extent.py - origin.py);

  const drawObject = (o: ObjectDoc, alpha: number) => {
    const e = edgesOf(o);
    const topLeft = toPixel(t, e.left, e.top);
    const size = { w: o.l * t.scale, h: o.w * t.scale };
    ctx.globalAlpha = alpha;
    ctx.fillStyle = classColor(doc, o.class);
    ctx.fillRect(topLeft.px, topLeft.py, size.w, size.h);
    ctx.globalAlpha = 1;
    if (options.highlights?.has(o.id)) {
      ctx.strokeStyle = "#d62728";
      ctx.lineWidth = 3;
      ctx.strokeRect(topLeft.px - 1.5, topLeft.py - 1.5, size.w + 3, size.h + 3);
    }
    if (options.selection === o.id) {
      ctx.strokeStyle = "#222";
      ctx.lineWidth = 2;
      ctx.setLineDash([4, 3]);
      ctx.strokeRect(topLeft.px - 2, topLeft.py - 2, size.w + 4, size.h + 4);
      ctx.setLineDash([]);
    }
    if (size.w > 18 && size.h > 12) {
      ctx.fillStyle = "#fff";
      ctx.font = "11px system-ui, sans-serif";
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(o.id, topLeft.px + size.w / 2, topLeft.py + size.h / 2);
    }
  };

  for (const o of doc.objects) drawObject(o, 0.92);
  if (options.ghost) drawObject(options.ghost, 0.45);
  return t;
}

/** Object whose rectangle contains the world point, topmost last wins. */
export function hitTest(doc: DemonstrationDoc, x: number, y: number): ObjectDoc | null {
  for (let i = doc.objects.length - 1; i >= 0; i -= 1) {
    const e = edgesOf(doc.objects[i]);
    if (x >= e.left && x <= e.right && y >= e.bottom && y <= e.top) {
      return doc.objects[i];
    }
  }
  return null;
}
