/** Typed client for the annotation service HTTP API. */

export interface CreatedSession {
  session_id: string;
  total: number;
}

export interface NextItem {
  done: boolean;
  item_index?: number;
  source?: string;
  first_pass?: string;
  answered: number;
  total: number;
}

/** Error body shape the service uses for all 4xx responses. */
export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      let code = `HTTP${response.status}`;
      let message = response.statusText;
      try {
        const body = await response.json();
        if (body && typeof body.error === "string") {
          code = body.error;
          message = body.message ?? message;
        }
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(code, message, response.status);
    }
    return response;
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.request("/health");
      const body = await response.json();
      return body.ok === true;
    } catch {
      return false;
    }
  }

  async createSession(editor: string, batchFile: string): Promise<CreatedSession> {
    const response = await this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ editor, batch_file: batchFile }),
    });
    return (await response.json()) as CreatedSession;
  }

  async next(sessionId: string): Promise<NextItem> {
    const response = await this.request(`/sessions/${sessionId}/next`);
    return (await response.json()) as NextItem;
  }

  async submit(
    sessionId: string,
    itemIndex: number,
    correction: string,
    elapsedMs: number,
  ): Promise<void> {
    await this.request(`/sessions/${sessionId}/submit`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        item_index: itemIndex,
        correction,
        elapsed_ms: elapsedMs,
      }),
    });
  }

  async exportSession(sessionId: string, partial = false): Promise<string> {
    const query = partial ? "?partial=true" : "";
    const response = await this.request(`/sessions/${sessionId}/export${query}`);
    return await response.text();
  }
}
