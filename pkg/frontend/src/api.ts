export interface DocumentInfo {
  id: string;
  created_at: string;
  preview: string;
}

export interface StoredDocument {
  id: string;
  source: string;
  text: string;
  created_at: string;
}

export interface SummaryPayload {
  document_id: string;
  method: string;
  k: number;
  selected: number[];
  sentences: string[];
  scores: number[];
  converged: boolean;
}

export interface HighlightPayload {
  text: string;
  highlight_spans: [number, number][];
}

export interface IngestResult {
  document_id: string;
  text: string;
}

export interface SummaryParams {
  k?: number;
  method?: string;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

const defaultFetch: FetchLike = (input, init) => fetch(input, init);

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike = defaultFetch,
    private readonly base: string = "/api/v1",
  ) {}

  async scan(image: Blob | ArrayBuffer): Promise<IngestResult> {
    return this.request(`${this.base}/scan`, {
      method: "POST",
      headers: { "Content-Type": "application/octet-stream" },
      body: image,
    });
  }

  async pasteText(text: string): Promise<IngestResult> {
    return this.request(`${this.base}/documents`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  async listDocuments(): Promise<DocumentInfo[]> {
    return this.request(`${this.base}/documents`);
  }

  async getDocument(id: string): Promise<StoredDocument> {
    return this.request(`${this.base}/documents/${encodeURIComponent(id)}`);
  }

  async getSummary(
    id: string,
    params: SummaryParams = {},
    signal?: AbortSignal,
  ): Promise<SummaryPayload> {
    const url = `${this.base}/documents/${encodeURIComponent(id)}/summary${query(params)}`;
    return this.request(url, { signal });
  }

  async getHighlights(
    id: string,
    params: SummaryParams = {},
    signal?: AbortSignal,
  ): Promise<HighlightPayload> {
    const url = `${this.base}/documents/${encodeURIComponent(id)}/highlights${query(params)}`;
    return this.request(url, { signal });
  }

  private async request<T>(url: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(url, init);
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    return (await response.json()) as T;
  }
}

function query(params: SummaryParams): string {
  const pairs: string[] = [];
  if (params.k !== undefined) pairs.push(`k=${params.k}`);
  if (params.method !== undefined) pairs.push(`method=${encodeURIComponent(params.method)}`);
  return pairs.length > 0 ? `?${pairs.join("&")}` : "";
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string };
    if (body && typeof body.error === "string") return body.error;
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `request failed with status ${response.status}`;
}
