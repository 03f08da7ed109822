// Integration against a live prediction service. Opt-in: set
// TWEETCRAFT_SERVICE_URL (see README) with a planted-signal model served.
import { describe, expect, it } from "vitest";

import { Client } from "../src/api.js";

const SERVICE_URL = process.env.TWEETCRAFT_SERVICE_URL;
const ACCOUNT = {
  follower_count: 10_000,
  post_count: 1_000,
  favorite_count: 300,
  listed_count: 50,
  registered_at: "2022-11-01T00:00:00Z",
};

describe.skipIf(!SERVICE_URL)("live service", () => {
  const client = new Client(SERVICE_URL ?? "");

  it("exposes the 9 feature families", async () => {
    const info = await client.modelInfo();
    expect(info.families).toHaveLength(9);
    expect(Object.keys(info.feature_families)).toHaveLength(info.feature_names.length);
  });

  it("ranks the hook variant above the same text without hooks", async () => {
    const core = "every post using the tag makes you eligible for a custom console controller";
    const plain = {
      text: `${core}.`,
      account: ACCOUNT,
      posted_at: "2024-03-06T15:00:00Z",
      mentions_meta: [],
    };
    const hooked = {
      text: `exclusive swag and a limited chance to win big this weekend. ${core} @brandup!`,
      account: ACCOUNT,
      posted_at: "2024-03-06T15:00:00Z",
      mentions_meta: [{ username: "brandup", verified: true, follower_count: 400_000 }],
    };
    const ranked = await client.compare([plain, hooked]);
    expect(ranked[1]!.rank).toBe(1);
    expect(ranked[0]!.rank).toBe(2);
    expect(ranked[1]!.score).toBeGreaterThan(ranked[0]!.score);
  });

  it("returns identical bytes for identical predict requests", async () => {
    const request = { text: "win a great deal now!", account: ACCOUNT,
                      posted_at: "2024-03-06T15:00:00Z" };
    const first = await client.predict(request);
    const second = await client.predict(request);
    expect(second).toEqual(first);
  });
});
