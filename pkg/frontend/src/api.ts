/**
 * Typed client for the playground HTTP API.
 *
 * Every decision shown in the UI comes verbatim from these responses;
 * the client never post-processes categories or weights.
 */

export interface DeclarationDoc {
  features: string[];
  categories: string[];
}

export interface DiagramListDoc {
  diagrams: string[];
  default_expression: string | null;
}

export type DiagramNodeDoc =
  | {
      kind: "predicate";
      feature: string;
      threshold: number;
      true: string;
      false: string;
    }
  | { kind: "result"; weights: Record<string, number> };

export interface DiagramDoc {
  name: string;
  root: string;
  nodes: Record<string, DiagramNodeDoc>;
}

export interface NodeCounts {
  inner: number;
  terminal: number;
}

export interface ComposeResponse {
  graph: string;
  node_counts: NodeCounts;
}

export interface ClassifyResponse {
  category: string;
  weights: Record<string, number>;
}

export interface GraphNodeDoc {
  id: number;
  kind: "predicate" | "terminal";
  var?: number;
  feature?: string;
  threshold?: number;
  true?: number;
  false?: number;
  value?: number[] | number | boolean;
}

export interface GraphDoc {
  kind: string;
  algebra: string;
  features: string[];
  categories: string[] | null;
  variables: { feature: string; threshold: number }[];
  root: number;
  node_counts: NodeCounts;
  nodes: GraphNodeDoc[];
}

export interface ErrorBody {
  error: string;
  location?: string | number;
}

/** Non-2xx response, carrying the server's {error, location?} body. */
export class RequestFailed extends Error {
  constructor(
    readonly status: number,
    readonly body: ErrorBody,
  ) {
    super(body.error);
  }
}

async function parseError(response: Response): Promise<RequestFailed> {
  let body: ErrorBody = { error: `request failed with status ${response.status}` };
  try {
    const parsed = (await response.json()) as ErrorBody;
    if (parsed && typeof parsed.error === "string") body = parsed;
  } catch {
    // keep the fallback body
  }
  return new RequestFailed(response.status, body);
}

export class Client {
  private readonly fetchImpl: typeof fetch;

  constructor(readonly base: string = "", fetchImpl?: typeof fetch) {
    // Wrap the global so the call is never bound to this client instance
    // (browsers reject fetch invoked with a foreign `this`).
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(`${this.base}${path}`, init);
    if (!response.ok) throw await parseError(response);
    return response;
  }

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    return (await (await this.request(path, init)).json()) as T;
  }

  declaration(): Promise<DeclarationDoc> {
    return this.json("/api/declaration");
  }

  diagrams(): Promise<DiagramListDoc> {
    return this.json("/api/diagrams");
  }

  getDiagram(name: string): Promise<DiagramDoc> {
    return this.json(`/api/diagrams/${encodeURIComponent(name)}`);
  }

  putDiagram(name: string, doc: DiagramDoc): Promise<DiagramDoc> {
    return this.json(`/api/diagrams/${encodeURIComponent(name)}`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  compose(expression: string, signal?: AbortSignal): Promise<ComposeResponse> {
    return this.json("/api/compose", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ expression }),
      signal,
    });
  }

  classify(
    expression: string,
    features: Record<string, number>,
    signal?: AbortSignal,
  ): Promise<ClassifyResponse> {
    return this.json("/api/classify", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ expression, features }),
      signal,
    });
  }

  async dot(expression: string): Promise<string> {
    const response = await this.request(
      `/api/dot?expression=${encodeURIComponent(expression)}`,
    );
    return response.text();
  }

  async codegen(expression: string, target: "c" | "js"): Promise<string> {
    const response = await this.request("/api/codegen", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ expression, target }),
    });
    return response.text();
  }
}
