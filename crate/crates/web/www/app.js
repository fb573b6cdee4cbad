import init, { histograms, angleCurve, orbits } from "./pkg/repstat_web.js";

const $ = (id) => document.getElementById(id);

function guarded(errorId, draw) {
  try {
    $(errorId).textContent = "";
    draw();
  } catch (e) {
    $(errorId).textContent = e.message ?? String(e);
  }
}

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
}

function label(ctx, text, x, y, align = "center") {
  ctx.fillStyle = "#444";
  ctx.font = "12px system-ui";
  ctx.textAlign = align;
  ctx.fillText(text, x, y);
}

function drawHistograms() {
  const data = JSON.parse(histograms(+$("hist-n").value, +$("hist-bins").value));
  const canvas = $("hist");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 40;
  axes(ctx, w, h, pad);
  const bins = data.dim_sq.length;
  const top = Math.max(...data.dim_sq, ...data.class);
  const bw = (w - 1.5 * pad) / bins;
  const scale = (h - 1.5 * pad) / top;
  for (let i = 0; i < bins; i++) {
    const x = pad + i * bw;
    ctx.fillStyle = "rgba(224,123,0,0.6)";
    ctx.fillRect(x + 1, h - pad - data.dim_sq[i] * scale, bw - 2, data.dim_sq[i] * scale);
    ctx.fillStyle = "rgba(42,110,187,0.5)";
    ctx.fillRect(x + 1, h - pad - data.class[i] * scale, bw - 2, data.class[i] * scale);
  }
  const edges = data.edges;
  label(ctx, edges[0].toFixed(1), pad, h - pad + 16);
  label(ctx, edges[edges.length - 1].toFixed(1), w - pad / 2, h - pad + 16);
  label(ctx, String(top), pad - 6, pad / 2 + 10, "right");
  label(ctx, `${data.partitions} partitions`, w / 2, h - 8);
}

function drawAngle() {
  const data = JSON.parse(angleCurve(+$("angle-n").value));
  const canvas = $("angle");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 40;
  axes(ctx, w, h, pad);
  const ys = [...data.log_cos_sq, ...data.predicted];
  const lo = Math.min(...ys);
  const hi = Math.max(...ys, 0);
  const nmax = data.n[data.n.length - 1];
  const px = (n) => pad + ((n - 1) / Math.max(nmax - 1, 1)) * (w - 1.5 * pad);
  const py = (y) => pad / 2 + ((hi - y) / Math.max(hi - lo, 1e-9)) * (h - 1.5 * pad);
  for (const [key, color] of [["predicted", "#888"], ["log_cos_sq", "#e07b00"]]) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    data[key].forEach((y, i) => (i ? ctx.lineTo(px(data.n[i]), py(y)) : ctx.moveTo(px(data.n[i]), py(y))));
    ctx.stroke();
  }
  label(ctx, "1", pad, h - pad + 16);
  label(ctx, String(nmax), w - pad / 2, h - pad + 16);
  label(ctx, hi.toFixed(1), pad - 6, pad / 2 + 4, "right");
  label(ctx, lo.toFixed(1), pad - 6, h - pad, "right");
}

function tally(sizes) {
  const m = new Map();
  for (const s of sizes) m.set(s, (m.get(s) ?? 0) + 1);
  return [...m.entries()].sort((a, b) => Number(a[0]) - Number(b[0]));
}

function drawOrbits() {
  const r = JSON.parse(orbits($("orb-alg").value, +$("orb-p").value));
  const orbitTally = new Map(tally(r.orbit_sizes));
  const classTally = new Map(tally(r.class_sizes));
  const sizes = [...new Set([...orbitTally.keys(), ...classTally.keys()])].sort((a, b) => Number(a) - Number(b));
  const rows = sizes
    .map((s) => `<tr><td>${s}</td><td>${orbitTally.get(s) ?? 0}</td><td>${classTally.get(s) ?? 0}</td></tr>`)
    .join("");
  $("orb").innerHTML = `
    <p>|N| = ${r.group_order}; ${r.orbit_sizes.length} orbits, ${r.class_sizes.length} classes.
    Orbit sizes are even powers of p: <b>${r.even_powers}</b>.
    Σ d² = |N| with the expected number of linear characters: <b>${r.match_kirillov}</b>.
    Orbit sizes equal class sizes as multisets: <b>${r.match_naive}</b>.</p>
    <table><tr><th>size</th><th>orbits</th><th>classes</th></tr>${rows}</table>`;
}

await init();
for (const [ids, errorId, draw] of [
  [["hist-n", "hist-bins"], "hist-error", drawHistograms],
  [["angle-n"], "angle-error", drawAngle],
  [["orb-alg", "orb-p"], "orb-error", drawOrbits],
]) {
  for (const id of ids) $(id).addEventListener("change", () => guarded(errorId, draw));
  guarded(errorId, draw);
}
