/** Typed client for the advisor service JSON endpoints.
 *
 * The UI computes nothing game-theoretic: every number it displays comes
 * straight from these payloads.
 */

export interface StrategyEntry {
  action: string;
  prob: number;
}

export interface JeopardyRequest {
  p1: number;
  p2: number;
  player: number;
}

export interface JeopardyAdvice {
  strategy: StrategyEntry[];
  branch: string;
  case: string;
}

export interface WeakestLinkRequest {
  w: number;
  p1: number;
  p2: number;
  y1: number;
  y2: number;
}

export interface WeakestLinkAdvice {
  paper_rule: string;
  full_enumeration: string;
  ev_paper: Record<string, number> | null;
  ev_full: Record<string, number>;
  tie_ev: number;
  vote_irrelevant: boolean;
}

export interface KuhnStrategy {
  n: number;
  a_bet_first: number[];
  b_call_vs_bet: number[];
  b_bet_vs_check: number[];
  a_call_after_check_bet: number[];
  nashconv?: number;
}

export interface PdlEvaluation {
  strategy: StrategyEntry[];
  matched_rule: number | string;
}

/** A 4xx reply from the service, carrying the offending field names. */
export class ServiceError extends Error {
  constructor(
    public status: number,
    public fields: string[],
    detail?: string,
  ) {
    super(detail ?? `service rejected request (${status})`);
    this.name = "ServiceError";
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class AdvisorClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  adviseJeopardy(req: JeopardyRequest): Promise<JeopardyAdvice> {
    return this.post("/advise/jeopardy", req);
  }

  adviseWeakestLink(req: WeakestLinkRequest): Promise<WeakestLinkAdvice> {
    return this.post("/advise/weakest-link", req);
  }

  kuhnStrategy(n: number, certify = false): Promise<KuhnStrategy> {
    const query = `n=${encodeURIComponent(n)}&certify=${certify}`;
    return this.request(`/kuhn/strategy?${query}`, { method: "GET" });
  }

  evaluatePdl(pdl: string, params: Record<string, number>): Promise<PdlEvaluation> {
    return this.post("/pdl/evaluate", { pdl, params });
  }

  health(): Promise<{ status: string }> {
    return this.request("/health", { method: "GET" });
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  private async request<T>(path: string, init: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ServiceError(
        response.status,
        Array.isArray(payload.fields) ? payload.fields : [],
        payload.detail ?? payload.error,
      );
    }
    return payload as T;
  }
}
