// Word-level diff between two variant texts via longest common subsequence.

export interface DiffOp {
  kind: "same" | "removed" | "added";
  text: string;
}

function words(text: string): string[] {
  return text.split(/\s+/).filter((w) => w.length > 0);
}

export function wordDiff(a: string, b: string): DiffOp[] {
  const left = words(a);
  const right = words(b);
  const n = left.length;
  const m = right.length;
  // lcs[i][j] = LCS length of left[i:], right[j:]
  const lcs: number[][] = Array.from({ length: n + 1 }, () => new Array<number>(m + 1).fill(0));
  for (let i = n - 1; i >= 0; i--) {
    for (let j = m - 1; j >= 0; j--) {
      lcs[i]![j] =
        left[i] === right[j]
          ? lcs[i + 1]![j + 1]! + 1
          : Math.max(lcs[i + 1]![j]!, lcs[i]![j + 1]!);
    }
  }
  const ops: DiffOp[] = [];
  let i = 0;
  let j = 0;
  while (i < n && j < m) {
    if (left[i] === right[j]) {
      ops.push({ kind: "same", text: left[i]! });
      i++;
      j++;
    } else if (lcs[i + 1]![j]! >= lcs[i]![j + 1]!) {
      ops.push({ kind: "removed", text: left[i]! });
      i++;
    } else {
      ops.push({ kind: "added", text: right[j]! });
      j++;
    }
  }
  for (; i < n; i++) ops.push({ kind: "removed", text: left[i]! });
  for (; j < m; j++) ops.push({ kind: "added", text: right[j]! });
  return ops;
}
