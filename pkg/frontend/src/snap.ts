// Edge snapping for drag interactions.
//
// Exact boundary contact is what makes EC relations register at the
// service's default tolerance, and freehand dropping essentially never
// produces it. While an object is dragged we therefore pull each axis
// independently toward the nearest snap candidate within a small
// threshold: flush contact against a partner edge, alignment with a
// partner edge, flush contact with the space boundary, or a grid line.

import type { ObjectDoc, SpaceDoc } from "./types.js";
import { edgesOf } from "./types.js";

export interface SnapConfig {
  enabled: boolean;
  /** world-unit distance within which a candidate captures the drag */
  threshold: number;
  /** grid pitch in world units; 0 disables grid candidates */
  gridSize: number;
}

export const DEFAULT_SNAP: SnapConfig = { enabled: true, threshold: 0.3, gridSize: 0.5 };

interface Candidate {
  value: number;
  kind: "contact" | "align" | "wall" | "grid";
}

function axisCandidates(
  center: number,
  half: number,
  partnerEdges: [number, number][],
  boundsLo: number,
  boundsHi: number,
  grid: number,
): Candidate[] {
  const out: Candidate[] = [];
  for (const [lo, hi] of partnerEdges) {
    out.push({ value: lo - half, kind: "contact" }); // my high edge on their low edge
    out.push({ value: hi + half, kind: "contact" }); // my low edge on their high edge
    out.push({ value: lo + half, kind: "align" });
    out.push({ value: hi - half, kind: "align" });
  }
  out.push({ value: boundsLo + half, kind: "wall" });
  out.push({ value: boundsHi - half, kind: "wall" });
  if (grid > 0) {
    out.push({ value: Math.round(center / grid) * grid, kind: "grid" });
  }
  return out;
}

function best(center: number, candidates: Candidate[], threshold: number): number {
  // contact beats alignment beats walls beats grid at equal distance
  const rank = { contact: 0, align: 1, wall: 2, grid: 3 };
  let chosen = center;
  let bestDist = threshold;
  let bestRank = 4;
  for (const c of candidates) {
    const dist = Math.abs(c.value - center);
    if (dist < bestDist - 1e-12 || (dist <= bestDist + 1e-12 && rank[c.kind] < bestRank)) {
      chosen = c.value;
      bestDist = dist;
      bestRank = rank[c.kind];
    }
  }
  return chosen;
}

/**
 * Snapped center position for an object of size l x w proposed at
 * (cx, cy). Partners are the other objects in the scene; the moving
 * object itself must not be among them.
 */
export function snapPosition(
  cx: number,
  cy: number,
  l: number,
  w: number,
  partners: ObjectDoc[],
  space: SpaceDoc,
  config: SnapConfig = DEFAULT_SNAP,
): { x: number; y: number } {
  if (!config.enabled) return { x: cx, y: cy };
  const xEdges: [number, number][] = [];
  const yEdges: [number, number][] = [];
  for (const p of partners) {
    const e = edgesOf(p);
    // only snap toward partners that are roughly alongside on the other
    // axis, otherwise far-away objects yank the drag around
    if (Math.abs(p.y - cy) <= (p.w + w) / 2 + config.threshold) xEdges.push([e.left, e.right]);
    if (Math.abs(p.x - cx) <= (p.l + l) / 2 + config.threshold) yEdges.push([e.bottom, e.top]);
  }
  return {
    x: best(cx, axisCandidates(cx, l / 2, xEdges, space.x_min, space.x_max, config.gridSize), config.threshold),
    y: best(cy, axisCandidates(cy, w / 2, yEdges, space.y_min, space.y_max, config.gridSize), config.threshold),
  };
}
