// DOM wiring for the workbench. All prediction numbers on screen come from
// service responses; this file only formats and places them.

import { Client, type ModelInfo, type PredictRequest, type PredictResponse } from "./api.js";
import { breakdownByFamily, buildCompareRows } from "./compare.js";
import { wordDiff } from "./diff.js";
import { EditorController, editorCounts, type EditorState } from "./editor.js";
import { parseMentions } from "./mentions.js";
import { VariantStore, variantFromResponse, type DraftVariant } from "./store.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const params = new URLSearchParams(window.location.search);
const client = new Client(params.get("service") ?? "");
const store = new VariantStore(window.localStorage);

let modelInfo: ModelInfo | null = null;
let lastResponse: PredictResponse | null = null;
let selected: number[] = [];

const editorArea = el<HTMLTextAreaElement>("draft");
const counts = el<HTMLSpanElement>("counts");
const banner = el<HTMLDivElement>("banner");
const gaugeFill = el<HTMLDivElement>("gauge-fill");
const gaugeLabel = el<HTMLSpanElement>("gauge-label");
const breakdownBody = el<HTMLTableSectionElement>("breakdown-body");
const notice = el<HTMLDivElement>("notice");
const variantsBody = el<HTMLTableSectionElement>("variants-body");
const diffView = el<HTMLDivElement>("diff-view");

function accountPayload() {
  const num = (id: string) => Number.parseInt(el<HTMLInputElement>(id).value, 10) || 0;
  return {
    follower_count: num("acct-followers"),
    post_count: num("acct-posts"),
    favorite_count: num("acct-favorites"),
    listed_count: num("acct-listed"),
    registered_at: el<HTMLInputElement>("acct-registered").value + "T00:00:00Z",
  };
}

function requestFor(text: string): PredictRequest {
  const posted = el<HTMLInputElement>("posted-at").value;
  return {
    text,
    account: accountPayload(),
    posted_at: posted ? posted + ":00Z" : undefined,
    utc_offset_minutes: Number.parseInt(el<HTMLInputElement>("utc-offset").value, 10) || 0,
    mentions_meta: parseMentions(el<HTMLTextAreaElement>("mentions").value),
  };
}

function renderBreakdown(response: PredictResponse | null): void {
  breakdownBody.innerHTML = "";
  if (!response || !modelInfo) return;
  const groups = breakdownByFamily(
    response.feature_breakdown, modelInfo.feature_families, modelInfo.families,
  );
  for (const group of groups) {
    for (let i = 0; i < group.features.length; i++) {
      const feature = group.features[i]!;
      const row = document.createElement("tr");
      const familyCell = document.createElement("td");
      familyCell.textContent = i === 0 ? group.family : "";
      familyCell.className = "family";
      const nameCell = document.createElement("td");
      nameCell.textContent = feature.name;
      const valueCell = document.createElement("td");
      valueCell.textContent = feature.value.toFixed(4);
      valueCell.className = "num";
      row.append(familyCell, nameCell, valueCell);
      breakdownBody.append(row);
    }
  }
}

function renderState(state: EditorState): void {
  banner.hidden = state.banner === null;
  banner.textContent = state.banner ?? "";
  const result = state.result;
  lastResponse = result;
  const staleMark = state.status === "stale" ? " (stale)" : "";
  if (result) {
    gaugeFill.style.width = `${Math.round(result.score * 100)}%`;
    gaugeFill.className = `gauge-fill ${result.label}`;
    gaugeLabel.textContent = `${result.label} - score ${result.score.toFixed(3)}${staleMark}`;
  } else {
    gaugeFill.style.width = "0%";
    gaugeLabel.textContent = state.status === "waiting" ? "predicting..." : "type a draft";
  }
  renderBreakdown(result);
}

const controller = new EditorController((text) => client.predict(requestFor(text)), renderState);

editorArea.addEventListener("input", () => {
  const meter = editorCounts(editorArea.value);
  counts.textContent = `${meter.chars} chars - ${meter.words} tokens (approx)`;
  controller.handleInput(editorArea.value);
});

el<HTMLButtonElement>("save-variant").addEventListener("click", () => {
  if (!lastResponse || !editorArea.value.trim()) {
    notice.textContent = "nothing to save yet: wait for a prediction";
    return;
  }
  const note = el<HTMLInputElement>("variant-note").value;
  const { dropped } = store.save(variantFromResponse(editorArea.value, lastResponse, note));
  notice.textContent = dropped
    ? `variant saved; oldest ("${dropped.text.slice(0, 32)}...") dropped to stay within 20`
    : "variant saved";
  void renderVariants();
});

async function renderVariants(): Promise<void> {
  const variants = store.list();
  variantsBody.innerHTML = "";
  diffView.innerHTML = "";
  if (variants.length === 0) return;
  let rows;
  try {
    const responses = await client.compare(variants.map((v) => requestFor(v.text)));
    rows = buildCompareRows(variants, responses);
  } catch (error) {
    notice.textContent = `compare failed: ${error instanceof Error ? error.message : error}`;
    return;
  }
  for (const row of rows) {
    const tr = document.createElement("tr");
    const pick = document.createElement("input");
    pick.type = "checkbox";
    pick.checked = selected.includes(row.variantIndex);
    pick.addEventListener("change", () => {
      selected = pick.checked
        ? [...selected, row.variantIndex].slice(-2)
        : selected.filter((i) => i !== row.variantIndex);
      renderDiff(store.list());
    });
    const pickCell = document.createElement("td");
    pickCell.append(pick);
    const cells = [
      String(row.rank),
      row.response.label,
      row.response.score.toFixed(3),
      row.variant.text,
      row.variant.note,
    ].map((text) => {
      const td = document.createElement("td");
      td.textContent = text;
      return td;
    });
    const removeButton = document.createElement("button");
    removeButton.textContent = "x";
    removeButton.addEventListener("click", () => {
      store.remove(row.variantIndex);
      selected = [];
      void renderVariants();
    });
    const removeCell = document.createElement("td");
    removeCell.append(removeButton);
    tr.append(pickCell, ...cells, removeCell);
    variantsBody.append(tr);
  }
}

function renderDiff(variants: DraftVariant[]): void {
  diffView.innerHTML = "";
  if (selected.length !== 2) return;
  const [a, b] = selected;
  const left = variants[a!];
  const right = variants[b!];
  if (!left || !right) return;
  for (const op of wordDiff(left.text, right.text)) {
    const span = document.createElement("span");
    span.textContent = op.text + " ";
    span.className = `diff-${op.kind}`;
    diffView.append(span);
  }
}

el<HTMLButtonElement>("refresh-variants").addEventListener("click", () => void renderVariants());

async function boot(): Promise<void> {
  try {
    modelInfo = await client.modelInfo();
    el<HTMLSpanElement>("model-line").textContent =
      `model ${modelInfo.id} (${modelInfo.classifier_kind}, schema ${modelInfo.schema_version})`;
  } catch (error) {
    banner.hidden = false;
    banner.textContent =
      `service unavailable: ${error instanceof Error ? error.message : error}`;
  }
  await renderVariants();
}

void boot();
