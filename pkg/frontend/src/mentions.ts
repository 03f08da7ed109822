// Mention metadata entry: one "@username followers [verified]" per line.
// The service gets these verbatim; there are no live lookups anywhere.

import type { MentionPayload } from "./api.js";

const VERIFIED_WORDS = new Set(["verified", "true", "yes", "v"]);

export function parseMentions(text: string): MentionPayload[] {
  const mentions: MentionPayload[] = [];
  for (const line of text.split("\n")) {
    const parts = line.trim().split(/[\s,]+/).filter((p) => p.length > 0);
    if (parts.length === 0) continue;
    const username = parts[0]!.replace(/^@/, "");
    if (!username) continue;
    const followers = parts.length > 1 ? Number.parseInt(parts[1]!, 10) : 0;
    const verified = parts.some((p) => VERIFIED_WORDS.has(p.toLowerCase()));
    mentions.push({
      username,
      verified,
      follower_count: Number.isFinite(followers) && followers > 0 ? followers : 0,
    });
  }
  return mentions;
}
