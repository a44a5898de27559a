/**
 * DOM wiring for the three panels: expert editor, composition, evaluation.
 *
 * The skeleton is built once; updates mutate text and classes in place so
 * focused inputs survive re-renders.  Evaluation inputs fire on every
 * keystroke (live classification); editor fields commit on change.
 */

import { DiagramNodeDoc } from "./api.js";
import { renderGraph } from "./diagram-view.js";
import { PlaygroundStore, UiState } from "./state.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

export function buildSkeleton(root: HTMLElement): void {
  root.innerHTML = `
    <header>
      <h1>Decision-diagram playground</h1>
      <p id="decl-summary" data-testid="decl-summary"></p>
    </header>
    <main>
      <section id="editor-panel">
        <h2>Diagrams</h2>
        <label>Edit diagram
          <select id="editor-select" data-testid="editor-select"></select>
        </label>
        <div id="editor-nodes"></div>
        <button id="editor-save" data-testid="editor-save">Save diagram</button>
        <p id="editor-error" data-testid="editor-error" class="error" hidden></p>
      </section>
      <section id="composition-panel">
        <h2>Composition</h2>
        <label>Expression
          <input id="expr-input" data-testid="expr-input" spellcheck="false">
        </label>
        <button id="compose-btn" data-testid="compose-btn">Compose</button>
        <p id="compose-counts" data-testid="compose-counts"></p>
        <p id="compose-error" data-testid="compose-error" class="error" hidden></p>
        <div id="diagram-holder"></div>
      </section>
      <section id="evaluation-panel">
        <h2>Evaluate</h2>
        <div id="eval-inputs"></div>
        <p id="eval-category-line">
          predicted:
          <strong id="eval-category" data-testid="eval-category"></strong>
          <span id="eval-stale" data-testid="eval-stale" class="stale" hidden>
            (stale - recompose/classify pending)</span>
        </p>
        <div id="eval-bars" data-testid="eval-bars"></div>
        <p id="eval-error" data-testid="eval-error" class="error" hidden></p>
      </section>
    </main>`;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export function wireStaticHandlers(store: PlaygroundStore): void {
  const expr = byId<HTMLInputElement>("expr-input");
  expr.addEventListener("change", () => {
    store.setExpression(expr.value);
    void store.refreshAll();
  });
  byId<HTMLButtonElement>("compose-btn").addEventListener("click", () => {
    store.setExpression(expr.value);
    void store.refreshAll();
  });
  byId<HTMLSelectElement>("editor-select").addEventListener("change", (event) => {
    const name = (event.target as HTMLSelectElement).value;
    if (name) void store.openEditor(name);
  });
  byId<HTMLButtonElement>("editor-save").addEventListener("click", () => {
    void store.saveEditor().then((saved) => {
      if (saved) void store.refreshAll();
    });
  });
}

export function buildEvaluationInputs(store: PlaygroundStore): void {
  const holder = byId<HTMLDivElement>("eval-inputs");
  holder.innerHTML = "";
  for (const feature of store.state.declaration?.features ?? []) {
    const labelEl = el("label", {}, `${feature} `);
    const input = el("input", {
      type: "number",
      step: "0.1",
      "data-feature": feature,
      "data-testid": `input-${feature}`,
    });
    input.addEventListener("input", () => {
      store.setInput(feature, input.value);
    });
    const required = el("span", { class: "required" }, " required");
    required.setAttribute("data-testid", `required-${feature}`);
    labelEl.appendChild(input);
    labelEl.appendChild(required);
    holder.appendChild(labelEl);
  }
}

export function populateDiagramSelect(state: UiState): void {
  const select = byId<HTMLSelectElement>("editor-select");
  const current = select.value;
  select.innerHTML = "";
  select.appendChild(el("option", { value: "" }, "choose..."));
  for (const name of state.diagrams) {
    const option = el("option", { value: name }, name);
    if (name === current) option.selected = true;
    select.appendChild(option);
  }
}

function renderEditorNodes(state: UiState, store: PlaygroundStore): void {
  const holder = byId<HTMLDivElement>("editor-nodes");
  holder.innerHTML = "";
  const doc = state.editor.doc;
  if (!doc) return;
  const declaration = state.declaration;
  const ids = Object.keys(doc.nodes);
  for (const [id, node] of Object.entries(doc.nodes)) {
    const row = el("div", { class: "node-row", "data-testid": `node-${id}` });
    row.appendChild(el("span", { class: "node-id" }, id));
    if (node.kind === "predicate") {
      row.appendChild(predicateForm(id, node, ids, declaration?.features ?? [], store));
    } else {
      row.appendChild(resultForm(id, node, declaration?.categories ?? [], store));
    }
    if (doc.root === id) row.appendChild(el("span", { class: "root-mark" }, "root"));
    holder.appendChild(row);
  }
}

function predicateForm(
  id: string,
  node: Extract<DiagramNodeDoc, { kind: "predicate" }>,
  ids: string[],
  features: string[],
  store: PlaygroundStore,
): HTMLElement {
  const form = el("span", { class: "predicate-form" });
  const featurePick = el("select", { "data-testid": `feature-${id}` });
  for (const feature of features) {
    const option = el("option", { value: feature }, feature);
    if (feature === node.feature) option.selected = true;
    featurePick.appendChild(option);
  }
  featurePick.addEventListener("change", () =>
    store.setPredicate(id, "feature", featurePick.value),
  );
  form.appendChild(featurePick);

  const threshold = el("input", {
    type: "number",
    step: "0.05",
    value: String(node.threshold),
    "data-testid": `threshold-${id}`,
  });
  threshold.addEventListener("change", () =>
    store.setPredicate(id, "threshold", threshold.value),
  );
  form.appendChild(el("span", {}, " <= "));
  form.appendChild(threshold);

  for (const branch of ["true", "false"] as const) {
    const pick = el("select", { "data-testid": `${branch}-${id}` });
    pick.appendChild(el("option", { value: "" }, `(${branch})`));
    for (const target of ids) {
      const option = el("option", { value: target }, target);
      if (node[branch] === target) option.selected = true;
      pick.appendChild(option);
    }
    pick.addEventListener("change", () => store.setPredicate(id, branch, pick.value));
    form.appendChild(el("span", {}, ` ${branch}:`));
    form.appendChild(pick);
  }
  return form;
}

function resultForm(
  id: string,
  node: Extract<DiagramNodeDoc, { kind: "result" }>,
  categories: string[],
  store: PlaygroundStore,
): HTMLElement {
  const form = el("span", { class: "result-form" });
  for (const category of categories) {
    const weight = el("input", {
      type: "number",
      step: "1",
      value: String(node.weights[category] ?? 0),
      "data-testid": `weight-${id}-${category}`,
    });
    weight.addEventListener("change", () =>
      store.setResultWeight(id, category, Number(weight.value)),
    );
    form.appendChild(el("span", {}, ` ${category}:`));
    form.appendChild(weight);
  }
  return form;
}

function setError(id: string, body: { error: string; location?: unknown } | null): void {
  const node = byId<HTMLParagraphElement>(id);
  if (body) {
    node.hidden = false;
    node.textContent =
      body.location !== undefined && body.location !== null
        ? `${body.error} (at ${String(body.location)})`
        : body.error;
  } else {
    node.hidden = true;
    node.textContent = "";
  }
}

const renderedEditorDocs = new WeakMap<PlaygroundStore, unknown>();

export function renderAll(state: UiState, store: PlaygroundStore): void {
  const declaration = state.declaration;
  byId("decl-summary").textContent = declaration
    ? `features: ${declaration.features.join(", ")} | categories: ${declaration.categories.join(", ")}`
    : "no declaration loaded";

  const expr = byId<HTMLInputElement>("expr-input");
  if (document.activeElement !== expr) expr.value = state.expression;

  byId("compose-counts").textContent = state.graph
    ? `${state.graph.node_counts.inner} inner nodes, ` +
      `${state.graph.node_counts.terminal} terminals` +
      (state.graphStale ? " (stale)" : "")
    : "";
  setError("compose-error", state.composeError);
  const holder = byId<HTMLDivElement>("diagram-holder");
  holder.innerHTML = "";
  if (state.graph) holder.appendChild(renderGraph(state.graph.graph));

  // Evaluation panel: the category and weights are shown verbatim from the
  // last successful classify response.
  byId("eval-category").textContent = state.result ? state.result.category : "-";
  byId("eval-stale").hidden = !state.resultStale;
  const bars = byId<HTMLDivElement>("eval-bars");
  bars.innerHTML = "";
  if (state.result && declaration) {
    const weights = state.result.weights;
    const top = Math.max(...Object.values(weights), 1e-9);
    for (const category of declaration.categories) {
      const value = weights[category] ?? 0;
      const row = el("div", { class: "bar-row" });
      row.appendChild(el("span", { class: "bar-label" }, category));
      const bar = el("div", { class: "bar", "data-testid": `bar-${category}` });
      bar.style.width = `${Math.max(1, Math.round((value / top) * 240))}px`;
      if (state.result.category === category) bar.classList.add("bar-top");
      row.appendChild(bar);
      row.appendChild(el("span", { class: "bar-value" }, String(value)));
      bars.appendChild(row);
    }
  }
  setError("eval-error", state.classifyError);
  for (const feature of declaration?.features ?? []) {
    const marker = document.querySelector(
      `[data-testid="required-${feature}"]`,
    ) as HTMLElement | null;
    if (marker) {
      const raw = state.inputs[feature] ?? "";
      marker.hidden = !(raw.trim() === "" || Number.isNaN(Number(raw)));
    }
  }

  populateDiagramSelect(state);
  if (state.editor.doc !== renderedEditorDocs.get(store)) {
    renderedEditorDocs.set(store, state.editor.doc);
    renderEditorNodes(state, store);
  }
  setError("editor-error", state.editor.error);
}
