import { describe, expect, it } from "vitest";

import type { PredictResponse } from "../src/api.js";
import { MAX_VARIANTS, VariantStore, variantFromResponse } from "../src/store.js";

function fakeStorage(): Pick<Storage, "getItem" | "setItem"> {
  const map = new Map<string, string>();
  return {
    getItem: (key) => map.get(key) ?? null,
    setItem: (key, value) => void map.set(key, value),
  };
}

function response(score = 0.5): PredictResponse {
  return {
    label: "positive",
    score,
    feature_breakdown: { length: 12 },
    schema_version: "decoration-v1",
    model_id: "m1",
  };
}

describe("VariantStore", () => {
  it("round-trips saved variants", () => {
    const storage = fakeStorage();
    const store = new VariantStore(storage);
    store.save(variantFromResponse("draft one", response(), "note", () => "t0"));
    const again = new VariantStore(storage); // fresh instance, same storage
    expect(again.list()).toHaveLength(1);
    expect(again.list()[0]).toMatchObject({
      text: "draft one",
      label: "positive",
      score: 0.5,
      note: "note",
      created_at: "t0",
    });
  });

  it("mirrors the service response without recomputation", () => {
    const res = response(0.73);
    const variant = variantFromResponse("x", res, "", () => "t");
    expect(variant.score).toBe(res.score);
    expect(variant.label).toBe(res.label);
    expect(variant.breakdown).toBe(res.feature_breakdown); // same object, untouched
  });

  it("drops the oldest variant past the cap and reports it", () => {
    const store = new VariantStore(fakeStorage());
    for (let i = 0; i < MAX_VARIANTS; i++) {
      const { dropped } = store.save(
        variantFromResponse(`draft ${i}`, response(), "", () => `t${i}`),
      );
      expect(dropped).toBeNull();
    }
    const { dropped } = store.save(
      variantFromResponse("one too many", response(), "", () => "tx"),
    );
    expect(dropped?.text).toBe("draft 0");
    expect(store.list()).toHaveLength(MAX_VARIANTS);
    expect(store.list()[0]?.text).toBe("draft 1");
  });

  it("removes by index and survives corrupt storage", () => {
    const storage = fakeStorage();
    const store = new VariantStore(storage);
    store.save(variantFromResponse("a", response(), "", () => "t"));
    store.save(variantFromResponse("b", response(), "", () => "t"));
    store.remove(0);
    expect(store.list().map((v) => v.text)).toEqual(["b"]);
    storage.setItem("tweetcraft.variants", "{not json");
    expect(store.list()).toEqual([]);
  });
});
