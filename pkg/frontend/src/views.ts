// DOM builders for the inference and synthesis result panes. These are
// kept free of canvas work so they run under a plain DOM in tests.

import type { ClauseReport, ClauseViolation, InfeasibleVerdict } from "./types.js";

export function formatProbability(p: number): string {
  if (p === 0) return "0";
  if (p >= 0.001) return p.toFixed(3);
  return p.toExponential(1);
}

/**
 * Clause list with audit numbers. Accepted clauses come first; clicking
 * a row invokes the callback so the editor can highlight the objects
 * the clause constrains in the scratch scene.
 */
export function renderClauseList(
  container: HTMLElement,
  reports: ClauseReport[],
  onSelect?: (clause: string, row: HTMLElement) => void,
): void {
  container.textContent = "";
  const sorted = [...reports].sort((a, b) =>
    Number(b.accepted) - Number(a.accepted) || a.p_phi - b.p_phi,
  );
  for (const report of sorted) {
    const row = document.createElement("div");
    row.className = report.accepted ? "clause accepted" : "clause rejected";
    row.dataset.clause = report.clause;

    const badge = document.createElement("span");
    badge.className = "badge";
    badge.textContent = report.accepted ? "accepted" : "rejected";
    row.appendChild(badge);

    const text = document.createElement("code");
    text.textContent = report.clause;
    row.appendChild(text);

    const audit = document.createElement("span");
    audit.className = "audit";
    audit.textContent = `p=${formatProbability(report.p_phi)} sat=${report.sat_count}/${report.relevant_count}`;
    row.appendChild(audit);

    if (onSelect) {
      row.addEventListener("click", () => onSelect(report.clause, row));
    }
    container.appendChild(row);
  }
  if (reports.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty";
    empty.textContent = "no clauses survived filtering";
    container.appendChild(empty);
  }
}

/** Per-object failures for the clause the user selected. */
export function renderViolations(container: HTMLElement, violations: ClauseViolation[]): Set<string> {
  container.textContent = "";
  const ids = new Set<string>();
  for (const v of violations) {
    for (const obj of v.objects) {
      ids.add(obj.object_id);
      const line = document.createElement("div");
      line.className = "violation";
      line.textContent = `${obj.object_id} fails ${obj.failed_atoms.join(", ")}`;
      container.appendChild(line);
    }
  }
  if (ids.size === 0) {
    const ok = document.createElement("p");
    ok.className = "empty";
    ok.textContent = "clause holds in the current scene";
    container.appendChild(ok);
  }
  return ids;
}

export function renderInfeasible(container: HTMLElement, verdict: InfeasibleVerdict): void {
  container.textContent = "";
  const banner = document.createElement("div");
  banner.className = "banner infeasible";
  const headline = document.createElement("strong");
  headline.textContent = verdict.proven ? "infeasible (proven)" : "no placement found";
  banner.appendChild(headline);
  const detail = document.createElement("p");
  detail.textContent = verdict.proven
    ? verdict.reason
    : `${verdict.reason}; best attempt satisfied ${verdict.best_satisfied} of ${verdict.clauses_total} clauses`;
  banner.appendChild(detail);
  container.appendChild(banner);
}

export function renderError(container: HTMLElement, message: string): void {
  container.textContent = "";
  const banner = document.createElement("div");
  banner.className = "banner error";
  banner.textContent = message;
  container.appendChild(banner);
}

export function clearBanner(container: HTMLElement): void {
  container.textContent = "";
}
