/**
 * Playground state and the rules around it.
 *
 * Two invariants drive everything here:
 *  - the result panel only ever shows what the last successful
 *    compose + classify round-trip returned, and
 *  - any model or expression edit marks the shown result and graph stale
 *    until a fresh round-trip succeeds.
 *
 * At most one classify request is in flight; newer inputs abort older
 * requests.
 */

import {
  Client,
  ClassifyResponse,
  ComposeResponse,
  DeclarationDoc,
  DiagramDoc,
  DiagramNodeDoc,
  ErrorBody,
  RequestFailed,
} from "./api.js";

export interface EditorState {
  name: string | null;
  doc: DiagramDoc | null;
  error: ErrorBody | null;
  dirty: boolean;
}

export interface UiState {
  declaration: DeclarationDoc | null;
  diagrams: string[];
  expression: string;
  /** Raw text per feature; empty string means "required, not filled in". */
  inputs: Record<string, string>;
  result: ClassifyResponse | null;
  resultStale: boolean;
  graph: ComposeResponse | null;
  graphStale: boolean;
  composeError: ErrorBody | null;
  classifyError: ErrorBody | null;
  editor: EditorState;
}

export type Listener = (state: UiState) => void;

/** Client-side mirror of the server's structural checks, for inline hints. */
export function validateDiagramDoc(doc: DiagramDoc): string | null {
  if (!doc.root || !(doc.root in doc.nodes)) {
    return `unknown node '${doc.root}' (root)`;
  }
  for (const [id, node] of Object.entries(doc.nodes)) {
    if (node.kind === "predicate") {
      if (!node.true || !node.false) {
        return `node '${id}': a predicate needs exactly one true and one false successor`;
      }
      for (const succ of [node.true, node.false]) {
        if (!(succ in doc.nodes)) return `unknown node '${succ}' (successor of '${id}')`;
      }
      if (!Number.isFinite(node.threshold)) {
        return `node '${id}': threshold must be a number`;
      }
    } else {
      for (const [category, weight] of Object.entries(node.weights)) {
        if (!Number.isFinite(weight)) {
          return `node '${id}': weight for '${category}' must be a number`;
        }
      }
    }
  }
  return null;
}

export class PlaygroundStore {
  state: UiState = {
    declaration: null,
    diagrams: [],
    expression: "",
    inputs: {},
    result: null,
    resultStale: false,
    graph: null,
    graphStale: false,
    composeError: null,
    classifyError: null,
    editor: { name: null, doc: null, error: null, dirty: false },
  };

  private listeners: Listener[] = [];
  private classifyAbort: AbortController | null = null;

  constructor(readonly client: Client) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  private patch(partial: Partial<UiState>): void {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  async init(): Promise<void> {
    const declaration = await this.client.declaration();
    const list = await this.client.diagrams();
    const inputs: Record<string, string> = {};
    for (const feature of declaration.features) inputs[feature] = "";
    this.patch({
      declaration,
      diagrams: list.diagrams,
      expression: list.default_expression ?? "",
      inputs,
    });
  }

  /** Features still lacking a numeric value. */
  missingInputs(): string[] {
    return Object.entries(this.state.inputs)
      .filter(([, raw]) => raw.trim() === "" || Number.isNaN(Number(raw)))
      .map(([feature]) => feature);
  }

  private invalidate(): void {
    this.patch({ resultStale: true, graphStale: true });
  }

  setExpression(text: string): void {
    if (text === this.state.expression) return;
    this.state.expression = text;
    this.invalidate();
  }

  setInput(feature: string, raw: string): void {
    this.state.inputs = { ...this.state.inputs, [feature]: raw };
    this.patch({ resultStale: true });
    void this.classifyNow();
  }

  async composeNow(): Promise<void> {
    try {
      const graph = await this.client.compose(this.state.expression);
      this.patch({ graph, graphStale: false, composeError: null });
    } catch (error) {
      if (error instanceof RequestFailed) {
        // Last good graph stays on screen, marked stale.
        this.patch({ composeError: error.body, graphStale: true });
        return;
      }
      throw error;
    }
  }

  /**
   * Live classification: skips silently while inputs are incomplete,
   * aborts any older in-flight request, and keeps the last good result
   * (stale-marked) when the server rejects the request.
   */
  async classifyNow(): Promise<void> {
    if (this.missingInputs().length > 0) return; // no request until complete
    this.classifyAbort?.abort();
    const abort = new AbortController();
    this.classifyAbort = abort;
    const features: Record<string, number> = {};
    for (const [feature, raw] of Object.entries(this.state.inputs)) {
      features[feature] = Number(raw);
    }
    try {
      const result = await this.client.classify(
        this.state.expression,
        features,
        abort.signal,
      );
      if (this.classifyAbort !== abort) return; // a newer request took over
      this.patch({ result, resultStale: false, classifyError: null });
    } catch (error) {
      if (abort.signal.aborted) return;
      if (error instanceof RequestFailed) {
        this.patch({ classifyError: error.body, resultStale: true });
        return;
      }
      throw error;
    }
  }

  async refreshAll(): Promise<void> {
    await this.composeNow();
    await this.classifyNow();
  }

  // -- expert editor -------------------------------------------------------

  async openEditor(name: string): Promise<void> {
    const doc = await this.client.getDiagram(name);
    this.patch({ editor: { name, doc, error: null, dirty: false } });
  }

  /** Apply an in-place change to the draft document. */
  editDraft(mutate: (doc: DiagramDoc) => void): void {
    const doc = this.state.editor.doc;
    if (!doc) return;
    const draft: DiagramDoc = JSON.parse(JSON.stringify(doc)) as DiagramDoc;
    mutate(draft);
    const clientError = validateDiagramDoc(draft);
    this.patch({
      editor: {
        ...this.state.editor,
        doc: draft,
        dirty: true,
        error: clientError ? { error: clientError } : null,
      },
    });
  }

  setResultWeight(nodeId: string, category: string, weight: number): void {
    this.editDraft((doc) => {
      const node = doc.nodes[nodeId];
      if (node && node.kind === "result") node.weights[category] = weight;
    });
  }

  setPredicate(
    nodeId: string,
    field: "feature" | "threshold" | "true" | "false",
    value: string,
  ): void {
    this.editDraft((doc) => {
      const node = doc.nodes[nodeId];
      if (!node || node.kind !== "predicate") return;
      if (field === "threshold") node.threshold = Number(value);
      else node[field] = value;
    });
  }

  addNode(id: string, node: DiagramNodeDoc): void {
    this.editDraft((doc) => {
      doc.nodes[id] = node;
    });
  }

  /**
   * Round-trip the draft through the server.  A rejected save keeps the
   * draft and surfaces the server's message inline; a successful save
   * invalidates every displayed result.
   */
  async saveEditor(): Promise<boolean> {
    const { name, doc } = this.state.editor;
    if (!name || !doc) return false;
    const clientError = validateDiagramDoc(doc);
    if (clientError) {
      this.patch({
        editor: { ...this.state.editor, error: { error: clientError } },
      });
      return false;
    }
    try {
      const saved = await this.client.putDiagram(name, doc);
      this.patch({
        editor: { name, doc: saved, error: null, dirty: false },
      });
      this.invalidate();
      return true;
    } catch (error) {
      if (error instanceof RequestFailed) {
        this.patch({ editor: { ...this.state.editor, error: error.body } });
        return false;
      }
      throw error;
    }
  }
}
