// Typed client for the prediction service. The workbench displays only what
// these endpoints return; it never derives labels or feature values itself.

export interface AccountPayload {
  follower_count: number;
  post_count: number;
  favorite_count: number;
  listed_count: number;
  registered_at: string;
  snapshot_at?: string;
}

export interface MentionPayload {
  username: string;
  verified: boolean;
  follower_count: number;
}

export interface PredictRequest {
  text: string;
  account: AccountPayload;
  posted_at?: string;
  utc_offset_minutes?: number;
  mentions_meta?: MentionPayload[];
}

export interface PredictResponse {
  label: "positive" | "negative";
  score: number;
  feature_breakdown: Record<string, number>;
  schema_version: string;
  model_id: string;
  rank?: number;
}

export interface ModelInfo {
  id: string;
  schema_version: string;
  families: string[];
  feature_names: string[];
  feature_families: Record<string, string>;
  include_families: string[];
  classifier_kind: string;
  training_metrics: Record<string, number>;
}

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class Client {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: unknown };
        if (body.detail) detail = JSON.stringify(body.detail);
      } catch {
        // non-JSON error body; keep statusText
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  predict(request: PredictRequest): Promise<PredictResponse> {
    return this.request("/v1/predict", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
  }

  compare(requests: PredictRequest[]): Promise<PredictResponse[]> {
    return this.request("/v1/compare", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(requests),
    });
  }

  modelInfo(): Promise<ModelInfo> {
    return this.request("/v1/model");
  }
}
