// Page wiring: three panes (author, rules, synthesize) over one scene
// model and one API client. All heavy computation happens server-side;
// this file only moves documents around.

import { ApiClient, ApiError } from "./api.js";
import { SceneEditor } from "./editor.js";
import { drawScene } from "./render.js";
import { SceneViewModel } from "./scene.js";
import type { DemonstrationDoc, InventoryDoc, ObjectDoc } from "./types.js";
import { validateDemonstration } from "./types.js";
import {
  clearBanner,
  renderClauseList,
  renderError,
  renderInfeasible,
  renderViolations,
} from "./views.js";

// The default authoring scene mirrors the bundled packing domain: three
// movable classes and a four-walled box on a 16 x 16 table.
const WALLS: ObjectDoc[] = [
  { id: "wall_s", class: "WA", l: 6.0, w: 0.5, x: 8.0, y: 5.25 },
  { id: "wall_n", class: "WA", l: 6.0, w: 0.5, x: 8.0, y: 10.75 },
  { id: "wall_w", class: "WA", l: 0.5, w: 5.0, x: 5.25, y: 8.0 },
  { id: "wall_e", class: "WA", l: 0.5, w: 5.0, x: 10.75, y: 8.0 },
];

const BASE_DOC: DemonstrationDoc = {
  schema_version: 1,
  space: { x_min: 0, x_max: 16, y_min: 0, y_max: 16 },
  classes: [
    { name: "B" },
    { name: "R" },
    { name: "G" },
    { name: "WA", fixed: true },
  ],
  objects: WALLS,
};

const OBJECT_SIZE = 1.0;

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

export function boot(): void {
  const api = new ApiClient("");
  let model = new SceneViewModel(BASE_DOC);
  const canvas = el<HTMLCanvasElement>("author-canvas");
  const editor = new SceneEditor(canvas, model, refresh);

  const savedDemos: DemonstrationDoc[] = [];

  // ---- tabs ----
  const panes = ["author", "rules", "synthesize"];
  for (const name of panes) {
    el<HTMLButtonElement>(`tab-${name}`).addEventListener("click", () => {
      for (const other of panes) {
        el(`pane-${other}`).hidden = other !== name;
        el(`tab-${other}`).classList.toggle("active", other === name);
      }
    });
  }

  // ---- author pane ----
  const palette = el<HTMLDivElement>("palette");
  for (const cls of model.movableClasses()) {
    const button = document.createElement("button");
    button.textContent = `add ${cls}`;
    button.addEventListener("click", () => {
      if (editor.spawn(cls, OBJECT_SIZE, OBJECT_SIZE) === null) {
        setStatus("no free spot near the center; move something first");
      }
    });
    palette.appendChild(button);
  }

  const snapToggle = el<HTMLInputElement>("snap-toggle");
  const gridInput = el<HTMLInputElement>("grid-size");
  snapToggle.addEventListener("change", () => {
    model.snap.enabled = snapToggle.checked;
  });
  gridInput.addEventListener("change", () => {
    const pitch = Number(gridInput.value);
    model.snap.gridSize = Number.isFinite(pitch) && pitch >= 0 ? pitch : 0;
  });

  el<HTMLButtonElement>("undo").addEventListener("click", () => {
    model.undo();
    editor.draw();
    refresh();
  });
  el<HTMLButtonElement>("redo").addEventListener("click", () => {
    model.redo();
    editor.draw();
    refresh();
  });
  el<HTMLButtonElement>("delete-object").addEventListener("click", () => {
    editor.deleteSelection();
  });
  el<HTMLButtonElement>("reset-scene").addEventListener("click", () => {
    model = new SceneViewModel(BASE_DOC);
    model.snap.enabled = snapToggle.checked;
    editor.model = model;
    editor.highlights.clear();
    editor.draw();
    refresh();
  });

  const demoList = el<HTMLUListElement>("demo-list");
  function redrawDemoList(): void {
    demoList.textContent = "";
    savedDemos.forEach((demo, index) => {
      const item = document.createElement("li");
      const label = document.createElement("span");
      const movable = demo.objects.filter((o) =>
        demo.classes.some((c) => c.name === o.class && !c.fixed),
      ).length;
      label.textContent = `demo ${index + 1} (${movable} objects)`;
      item.appendChild(label);
      const drop = document.createElement("button");
      drop.textContent = "remove";
      drop.addEventListener("click", () => {
        savedDemos.splice(index, 1);
        redrawDemoList();
        refresh();
      });
      item.appendChild(drop);
      demoList.appendChild(item);
    });
    el("demo-count").textContent = String(savedDemos.length);
    syncCompareOptions();
  }

  el<HTMLButtonElement>("save-demo").addEventListener("click", () => {
    const doc = model.serialize();
    const problems = validateDemonstration(doc);
    if (problems.length > 0) {
      setStatus(`not saved: ${problems[0]}`);
      return;
    }
    savedDemos.push(doc);
    redrawDemoList();
    setStatus(`saved demonstration ${savedDemos.length}`);
    refresh();
  });

  el<HTMLButtonElement>("export-scene").addEventListener("click", () => {
    const text = model.serializeText();
    const blob = new Blob([text], { type: "application/json" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = "scene.json";
    link.click();
    URL.revokeObjectURL(link.href);
  });

  const importInput = el<HTMLInputElement>("import-file");
  importInput.addEventListener("change", async () => {
    for (const file of importInput.files ?? []) {
      try {
        const doc = JSON.parse(await file.text()) as DemonstrationDoc;
        const problems = validateDemonstration(doc);
        if (problems.length > 0) throw new Error(problems[0]);
        savedDemos.push(doc);
      } catch (error) {
        setStatus(`import failed: ${(error as Error).message}`);
      }
    }
    importInput.value = "";
    redrawDemoList();
    refresh();
  });

  // ---- rules pane ----
  const clauseContainer = el<HTMLDivElement>("clause-list");
  const violationContainer = el<HTMLDivElement>("violation-list");
  const rulesBanner = el<HTMLDivElement>("rules-banner");

  el<HTMLButtonElement>("run-infer").addEventListener("click", async () => {
    clearBanner(rulesBanner);
    if (savedDemos.length === 0) {
      renderError(rulesBanner, "save at least one demonstration first");
      return;
    }
    const button = el<HTMLButtonElement>("run-infer");
    button.disabled = true;
    setStatus("inference running…");
    try {
      const response = await api.infer(savedDemos, {
        template: el<HTMLSelectElement>("template-select").value,
        max_len: Number(el<HTMLInputElement>("max-len").value),
        seed: Number(el<HTMLInputElement>("infer-seed").value),
      });
      el("infer-summary").textContent =
        `${response.enumerated} enumerated, ${response.checked} checked, ` +
        `${response.clauses.filter((c) => c.accepted).length} accepted`;
      el<HTMLTextAreaElement>("spec-text").value = response.spec;
      renderClauseList(clauseContainer, response.clauses, onClauseSelected);
      setStatus("inference finished");
    } catch (error) {
      renderError(rulesBanner, (error as Error).message);
      setStatus("inference failed");
    } finally {
      button.disabled = false;
    }
  });

  async function onClauseSelected(clause: string, row: HTMLElement): Promise<void> {
    for (const other of clauseContainer.children) other.classList.remove("selected");
    row.classList.add("selected");
    try {
      const response = await api.check(clause, model.serialize());
      editor.highlights = renderViolations(violationContainer, response.violations);
      editor.draw();
    } catch (error) {
      renderError(rulesBanner, (error as Error).message);
    }
  }

  // ---- synthesize pane ----
  const placeBanner = el<HTMLDivElement>("place-banner");
  const resultCanvas = el<HTMLCanvasElement>("result-canvas");
  const compareCanvas = el<HTMLCanvasElement>("compare-canvas");
  const compareSelect = el<HTMLSelectElement>("compare-select");

  function syncCompareOptions(): void {
    compareSelect.textContent = "";
    savedDemos.forEach((_, index) => {
      const option = document.createElement("option");
      option.value = String(index);
      option.textContent = `demo ${index + 1}`;
      compareSelect.appendChild(option);
    });
    drawCompare();
  }

  function drawCompare(): void {
    const index = Number(compareSelect.value);
    const demo = savedDemos[index];
    if (demo) drawScene(compareCanvas, demo);
  }
  compareSelect.addEventListener("change", drawCompare);

  el<HTMLButtonElement>("run-place").addEventListener("click", async () => {
    clearBanner(placeBanner);
    const spec = el<HTMLTextAreaElement>("spec-text").value;
    if (!spec.trim()) {
      renderError(placeBanner, "no rules to synthesize from; run inference or paste rules");
      return;
    }
    const inventory: InventoryDoc = {
      schema_version: 1,
      space: BASE_DOC.space,
      items: model.movableClasses().map((cls) => ({
        class: cls,
        l: OBJECT_SIZE,
        w: OBJECT_SIZE,
        count: Number(el<HTMLInputElement>(`count-${cls}`).value),
      })).filter((item) => item.count > 0),
      fixed_objects: WALLS,
    };
    const seedValue = el<HTMLInputElement>("place-seed").value;
    try {
      const response = await api.place(
        spec,
        inventory,
        seedValue === "" ? undefined : Number(seedValue),
      );
      if (response.placed) {
        drawScene(resultCanvas, response.demo);
        setStatus("placement found");
      } else {
        const ctx = resultCanvas.getContext("2d");
        ctx?.clearRect(0, 0, resultCanvas.width, resultCanvas.height);
        renderInfeasible(placeBanner, response.infeasible);
        setStatus("placement infeasible");
      }
    } catch (error) {
      const detail = error instanceof ApiError ? error.message : String(error);
      renderError(placeBanner, detail);
      setStatus("placement failed");
    }
  });

  // ---- shared ----
  function setStatus(message: string): void {
    el("status").textContent = message;
  }

  function refresh(): void {
    el<HTMLButtonElement>("undo").disabled = !model.canUndo();
    el<HTMLButtonElement>("redo").disabled = !model.canRedo();
    el<HTMLButtonElement>("save-demo").disabled = !model.hasMovableObjects();
    el<HTMLButtonElement>("run-infer").disabled = savedDemos.length === 0;
  }

  editor.draw();
  refresh();
  redrawDemoList();
  api.health().then(
    (h) => setStatus(`service ready (v${h.version})`),
    () => setStatus("service unreachable; is the backend running?"),
  );
}

boot();
