import type { DemonstrationDoc, ObjectDoc } from "../src/types.js";

export const WALLS: ObjectDoc[] = [
  { id: "wall_s", class: "WA", l: 6.0, w: 0.5, x: 8.0, y: 5.25 },
  { id: "wall_n", class: "WA", l: 6.0, w: 0.5, x: 8.0, y: 10.75 },
  { id: "wall_w", class: "WA", l: 0.5, w: 5.0, x: 5.25, y: 8.0 },
  { id: "wall_e", class: "WA", l: 0.5, w: 5.0, x: 10.75, y: 8.0 },
];

export function baseDoc(): DemonstrationDoc {
  return {
    schema_version: 1,
    space: { x_min: 0, x_max: 16, y_min: 0, y_max: 16 },
    classes: [
      { name: "B" },
      { name: "R" },
      { name: "G" },
      { name: "WA", fixed: true },
    ],
    objects: WALLS.map((o) => ({ ...o })),
  };
}
