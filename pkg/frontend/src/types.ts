// Document shapes shared with the HTTP service. These mirror the JSON
// documents the service validates; the editor must only ever export
// values that pass validateDemonstration below.

export interface SpaceDoc {
  x_min: number;
  x_max: number;
  y_min: number;
  y_max: number;
}

export interface ClassDoc {
  name: string;
  fixed?: boolean;
}

export interface ObjectDoc {
  id: string;
  class: string;
  l: number;
  w: number;
  x: number;
  y: number;
}

export interface DemonstrationDoc {
  schema_version: 1;
  space: SpaceDoc;
  classes: ClassDoc[];
  objects: ObjectDoc[];
}

export interface InventoryItemDoc {
  class: string;
  l: number;
  w: number;
  count: number;
}

export interface InventoryDoc {
  schema_version: 1;
  space: SpaceDoc;
  items: InventoryItemDoc[];
  fixed_objects: ObjectDoc[];
}

// ---- service responses ----

export interface ObjectViolation {
  object_id: string;
  failed_atoms: string[];
}

export interface ClauseViolation {
  clause: string;
  objects: ObjectViolation[];
}

export interface CheckResponse {
  satisfied: boolean;
  clauses_total: number;
  violations: ClauseViolation[];
}

export interface ClauseReport {
  clause: string;
  sat_count: number;
  relevant_count: number;
  sat_fraction: number;
  per_demo_probabilities: number[];
  p_phi: number;
  accepted: boolean;
}

export interface InferResponse {
  spec: string;
  clauses: ClauseReport[];
  enumerated: number;
  checked: number;
  template: string | object;
  params: Record<string, unknown>;
}

export interface InfeasibleVerdict {
  proven: boolean;
  reason: string;
  best_satisfied: number;
  clauses_total: number;
}

export type PlaceResponse =
  | { placed: true; demo: DemonstrationDoc }
  | { placed: false; infeasible: InfeasibleVerdict };

// ---- local validation ----

function isFiniteNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

/** Returns a list of problems; empty means the document is exportable. */
export function validateDemonstration(doc: DemonstrationDoc): string[] {
  const problems: string[] = [];
  if (doc.schema_version !== 1) problems.push("schema_version must be 1");
  const { space } = doc;
  if (!isFiniteNumber(space.x_min) || !isFiniteNumber(space.x_max) ||
      !isFiniteNumber(space.y_min) || !isFiniteNumber(space.y_max)) {
    problems.push("space bounds must be finite numbers");
  } else if (space.x_min >= space.x_max || space.y_min >= space.y_max) {
    problems.push("space must have positive extent");
  }
  const names = new Set<string>();
  for (const c of doc.classes) {
    if (!c.name) problems.push("class with empty name");
    if (names.has(c.name)) problems.push(`duplicate class ${c.name}`);
    names.add(c.name);
  }
  const ids = new Set<string>();
  for (const o of doc.objects) {
    if (!o.id) problems.push("object with empty id");
    if (ids.has(o.id)) problems.push(`duplicate object id ${o.id}`);
    ids.add(o.id);
    if (!names.has(o.class)) problems.push(`object ${o.id} has undeclared class ${o.class}`);
    if (!isFiniteNumber(o.l) || o.l <= 0 || !isFiniteNumber(o.w) || o.w <= 0) {
      problems.push(`object ${o.id} has non-positive size`);
    }
    if (!isFiniteNumber(o.x) || !isFiniteNumber(o.y)) {
      problems.push(`object ${o.id} has non-finite position`);
    } else if (o.x < space.x_min || o.x > space.x_max || o.y < space.y_min || o.y > space.y_max) {
      problems.push(`object ${o.id} center outside the space`);
    }
  }
  return problems;
}

export interface Edges {
  left: number;
  right: number;
  bottom: number;
  top: number;
}

export function edgesOf(o: ObjectDoc): Edges {
  return {
    left: o.x - o.l / 2,
    right: o.x + o.l / 2,
    bottom: o.y - o.w / 2,
    top: o.y + o.w / 2,
  };
}

/** Open-interval interior overlap, the collision notion used for drops. */
export function interiorsOverlap(a: ObjectDoc, b: ObjectDoc): boolean {
  const ea = edgesOf(a);
  const eb = edgesOf(b);
  return ea.left < eb.right && eb.left < ea.right &&
         ea.bottom < eb.top && eb.bottom < ea.top;
}
