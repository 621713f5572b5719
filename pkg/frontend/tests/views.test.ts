// @vitest-environment jsdom

import { describe, expect, it, vi } from "vitest";

import type { ClauseReport, ClauseViolation } from "../src/types.js";
import {
  clearBanner,
  formatProbability,
  renderClauseList,
  renderError,
  renderInfeasible,
  renderViolations,
} from "../src/views.js";

function report(clause: string, accepted: boolean, p: number): ClauseReport {
  return {
    clause,
    sat_count: accepted ? 100 : 40,
    relevant_count: 100,
    sat_fraction: accepted ? 1.0 : 0.4,
    per_demo_probabilities: [],
    p_phi: p,
    accepted,
  };
}

describe("formatProbability", () => {
  it("covers the three display regimes", () => {
    expect(formatProbability(0)).toBe("0");
    expect(formatProbability(0.05)).toBe("0.050");
    expect(formatProbability(0.0004)).toBe("4.0e-4");
  });
});

describe("renderClauseList", () => {
  it("sorts accepted clauses first, then by probability", () => {
    const div = document.createElement("div");
    renderClauseList(div, [
      report("DR_E(G, R)", false, 0.2),
      report("DR_N(B, R)", true, 0.003),
      report("EC_W(R, WA)", true, 0.0001),
    ]);
    const rows = [...div.querySelectorAll(".clause")];
    expect(rows.map((r) => (r as HTMLElement).dataset.clause)).toEqual([
      "EC_W(R, WA)",
      "DR_N(B, R)",
      "DR_E(G, R)",
    ]);
    expect(rows[0].classList.contains("accepted")).toBe(true);
    expect(rows[2].classList.contains("rejected")).toBe(true);
  });

  it("writes badge, clause text and audit numbers into each row", () => {
    const div = document.createElement("div");
    renderClauseList(div, [report("DR_N(B, R)", true, 0.003)]);
    const row = div.querySelector(".clause") as HTMLElement;
    expect(row.querySelector(".badge")?.textContent).toBe("accepted");
    expect(row.querySelector("code")?.textContent).toBe("DR_N(B, R)");
    expect(row.querySelector(".audit")?.textContent).toBe("p=0.003 sat=100/100");
  });

  it("invokes the selection callback with the clicked clause", () => {
    const div = document.createElement("div");
    const onSelect = vi.fn();
    renderClauseList(div, [report("DR_N(B, R)", true, 0.003)], onSelect);
    (div.querySelector(".clause") as HTMLElement).click();
    expect(onSelect).toHaveBeenCalledTimes(1);
    expect(onSelect.mock.calls[0][0]).toBe("DR_N(B, R)");
  });

  it("shows a message when nothing survived", () => {
    const div = document.createElement("div");
    renderClauseList(div, []);
    expect(div.querySelector(".empty")?.textContent).toBe("no clauses survived filtering");
  });

  it("replaces previous content on re-render", () => {
    const div = document.createElement("div");
    renderClauseList(div, [report("DR_N(B, R)", true, 0.003)]);
    renderClauseList(div, [report("DR_E(G, B)", true, 0.001)]);
    expect(div.querySelectorAll(".clause").length).toBe(1);
    expect((div.querySelector(".clause") as HTMLElement).dataset.clause).toBe("DR_E(G, B)");
  });
});

describe("renderViolations", () => {
  const violations: ClauseViolation[] = [
    {
      clause: "EC_W(R, WA)",
      objects: [
        { object_id: "r1", failed_atoms: ["EC_W(R, WA)"] },
        { object_id: "r2", failed_atoms: ["EC_W(R, WA)"] },
      ],
    },
  ];

  it("returns the violating ids and lists one line per object", () => {
    const div = document.createElement("div");
    const ids = renderViolations(div, violations);
    expect(ids).toEqual(new Set(["r1", "r2"]));
    const lines = [...div.querySelectorAll(".violation")].map((n) => n.textContent);
    expect(lines).toEqual(["r1 fails EC_W(R, WA)", "r2 fails EC_W(R, WA)"]);
  });

  it("reports a satisfied clause with an empty id set", () => {
    const div = document.createElement("div");
    const ids = renderViolations(div, []);
    expect(ids.size).toBe(0);
    expect(div.querySelector(".empty")?.textContent).toBe("clause holds in the current scene");
  });
});

describe("renderInfeasible", () => {
  it("distinguishes a proof from an exhausted search", () => {
    const div = document.createElement("div");
    renderInfeasible(div, {
      proven: true,
      reason: "DR_E(A, B) contradicts DR_W(A, B)",
      best_satisfied: 0,
      clauses_total: 2,
    });
    expect(div.querySelector("strong")?.textContent).toBe("infeasible (proven)");
    expect(div.querySelector("p")?.textContent).toBe("DR_E(A, B) contradicts DR_W(A, B)");

    renderInfeasible(div, {
      proven: false,
      reason: "placement budget exhausted",
      best_satisfied: 17,
      clauses_total: 24,
    });
    expect(div.querySelector("strong")?.textContent).toBe("no placement found");
    expect(div.querySelector("p")?.textContent).toContain("satisfied 17 of 24 clauses");
  });
});

describe("banners", () => {
  it("renders and clears an error banner", () => {
    const div = document.createElement("div");
    renderError(div, "service unreachable");
    expect(div.querySelector(".banner.error")?.textContent).toBe("service unreachable");
    clearBanner(div);
    expect(div.childNodes.length).toBe(0);
  });
});
