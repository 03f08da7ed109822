// Saved draft variants, persisted in browser local storage only; the server
// stays stateless. A variant mirrors the service response verbatim.

import type { PredictResponse } from "./api.js";

export interface DraftVariant {
  text: string;
  label: PredictResponse["label"];
  score: number;
  breakdown: Record<string, number>;
  created_at: string;
  note: string;
}

export const MAX_VARIANTS = 20;

type StorageLike = Pick<Storage, "getItem" | "setItem">;

export function variantFromResponse(
  text: string,
  response: PredictResponse,
  note = "",
  now: () => string = () => new Date().toISOString(),
): DraftVariant {
  return {
    text,
    label: response.label,
    score: response.score,
    breakdown: response.feature_breakdown,
    created_at: now(),
    note,
  };
}

export class VariantStore {
  constructor(
    private readonly storage: StorageLike,
    private readonly key = "tweetcraft.variants",
  ) {}

  list(): DraftVariant[] {
    const raw = this.storage.getItem(this.key);
    if (!raw) return [];
    try {
      const parsed = JSON.parse(raw) as unknown;
      return Array.isArray(parsed) ? (parsed as DraftVariant[]) : [];
    } catch {
      return [];
    }
  }

  /** Append a variant; beyond the cap the oldest is dropped and returned. */
  save(variant: DraftVariant): { dropped: DraftVariant | null } {
    const variants = this.list();
    variants.push(variant);
    let dropped: DraftVariant | null = null;
    if (variants.length > MAX_VARIANTS) {
      dropped = variants.shift() ?? null;
    }
    this.storage.setItem(this.key, JSON.stringify(variants));
    return { dropped };
  }

  remove(index: number): void {
    const variants = this.list();
    if (index < 0 || index >= variants.length) return;
    variants.splice(index, 1);
    this.storage.setItem(this.key, JSON.stringify(variants));
  }

  clear(): void {
    this.storage.setItem(this.key, "[]");
  }
}
