import init, { preset_text, coverage, coords, search_placements } from "./pkg/addbasis_wasm.js";

const $ = (id) => document.getElementById(id);
const KIND_COLOR = { V: "#3b7dd8", H: "#41a35a", S: "#e09b2d" };

function guarded(outId, fn) {
  return () => {
    const out = $(outId);
    out.classList.remove("err");
    try {
      fn(out);
    } catch (e) {
      out.classList.add("err");
      out.textContent = String(e.message ?? e);
    }
  };
}

function loadPreset() {
  $("placement").value = preset_text($("preset").value);
}

function drawTiles(cov) {
  const canvas = $("tiles");
  const ctx = canvas.getContext("2d");
  const upto = Math.max(cov.m + 10, ...cov.tiles.map((t) => t.loc + 1));
  const cols = Math.min(upto, 100);
  const size = canvas.width / cols;
  canvas.height = Math.ceil(upto / cols) * size + 1;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const byLoc = new Map(cov.tiles.map((t) => [t.loc, t]));
  for (let x = 0; x < upto; x++) {
    const t = byLoc.get(x);
    ctx.fillStyle = !t ? "#eee" : t.ij ? "#3b7dd8" : t.ik ? "#41a35a" : "#e09b2d";
    const cx = (x % cols) * size;
    const cy = Math.floor(x / cols) * size;
    ctx.fillRect(cx + 1, cy + 1, size - 2, size - 2);
    if (x === cov.m) {
      ctx.strokeStyle = "#b00";
      ctx.strokeRect(cx + 1, cy + 1, size - 2, size - 2);
    }
  }
}

function drawPlane(res) {
  const canvas = $("plane");
  const ctx = canvas.getContext("2d");
  const maxX = Math.max(...res.elements.map((e) => e[1])) + 1;
  const scale = Math.max(1, Math.floor(canvas.width / maxX));
  canvas.height = res.t * scale + 2;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  // Square boundaries every t columns.
  ctx.fillStyle = "#f4f4f4";
  for (let s = 0; s * res.t < maxX; s += 2) {
    ctx.fillRect(s * res.t * scale, 0, res.t * scale, canvas.height);
  }
  for (const [, x, y, kind] of res.elements) {
    ctx.fillStyle = KIND_COLOR[kind];
    ctx.fillRect(x * scale, (res.t - 1 - y) * scale + 1, Math.max(scale - 1, 1), Math.max(scale - 1, 1));
  }
}

async function main() {
  await init();
  $("preset").addEventListener("change", loadPreset);
  loadPreset();

  $("run-coverage").addEventListener("click", guarded("coverage-out", (out) => {
    const cov = JSON.parse(coverage($("placement").value));
    out.textContent = `l=${cov.l}  m=${cov.m}  c=${cov.c}  counting bound=${cov.bound}`;
    drawTiles(cov);
  }));

  $("run-coords").addEventListener("click", guarded("coords-out", (out) => {
    const res = JSON.parse(coords($("placement").value, Number($("t").value)));
    out.textContent = `t=${res.t}  k=${res.k}  n=${res.n}  (model predicts n >= ${res.predicted_min_n})`
      + "\nV blue, H green, S orange; x = e div t, y = e mod t";
    drawPlane(res);
  }));

  $("run-search").addEventListener("click", guarded("search-out", (out) => {
    out.textContent = "searching...";
    const [l, maxLoc, beam] = ["l", "maxloc", "beam"].map((id) => Number($(id).value));
    // Let the status paint before the blocking call.
    setTimeout(guarded("search-out", () => {
      const r = JSON.parse(search_placements(l, maxLoc, beam));
      out.textContent = `best_m=${r.best_m}  ratio=${r.ratio}  complete=${r.complete}  nodes=${r.nodes}\n${r.witness}`;
      $("placement").value = r.witness;
    }), 20);
  }));
}

main();
