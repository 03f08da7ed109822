// Variant comparison: rows ordered strictly by the service's rank field.

import type { PredictResponse } from "./api.js";
import type { DraftVariant } from "./store.js";

export interface CompareRow {
  variantIndex: number;
  rank: number;
  variant: DraftVariant;
  response: PredictResponse;
}

/**
 * Pair saved variants with their compare responses and order by service
 * rank. No client-side scoring: the rank field is the only sort key.
 */
export function buildCompareRows(
  variants: DraftVariant[],
  responses: PredictResponse[],
): CompareRow[] {
  if (variants.length !== responses.length) {
    throw new Error("variant/response count mismatch");
  }
  const rows = variants.map((variant, i) => {
    const response = responses[i]!;
    if (response.rank === undefined) {
      throw new Error("compare response missing rank");
    }
    return { variantIndex: i, rank: response.rank, variant, response };
  });
  rows.sort((a, b) => a.rank - b.rank);
  return rows;
}

export function breakdownByFamily(
  breakdown: Record<string, number>,
  featureFamilies: Record<string, string>,
  familyOrder: string[],
): Array<{ family: string; features: Array<{ name: string; value: number }> }> {
  return familyOrder.map((family) => ({
    family,
    features: Object.entries(breakdown)
      .filter(([name]) => featureFamilies[name] === family)
      .map(([name, value]) => ({ name, value })),
  }));
}
