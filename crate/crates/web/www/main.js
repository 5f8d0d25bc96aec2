import init, { surface_curve, force_vs_frequency, force_vs_temperature } from "./pkg/excited_vdw_demo.js";

const POINTS = 801;
const canvas = document.getElementById("plot");
const ctx = canvas.getContext("2d");
const inputs = ["gamma", "temperature", "omega"].map((id) => document.getElementById(id));

function mode() {
  return document.querySelector("input[name=mode]:checked").value;
}

function compute() {
  const [gamma, temperature, omega] = inputs.map((el) => Number(el.value));
  switch (mode()) {
    case "surface":
      return { curve: surface_curve(gamma, 0.5, 1.5, POINTS), xlabel: "ωA/ωB", ylabel: "normalized potential" };
    case "frequency":
      return { curve: force_vs_frequency(temperature, gamma, 0.5, 1.5, POINTS), xlabel: "ωA/ωB", ylabel: "normalized force" };
    default:
      return { curve: force_vs_temperature(omega, gamma, 0.001, 1, POINTS), xlabel: "T/ωB", ylabel: "normalized force" };
  }
}

function niceTicks(lo, hi, count) {
  const raw = (hi - lo) / count;
  const mag = 10 ** Math.floor(Math.log10(raw));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= raw);
  const ticks = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) ticks.push(t);
  return ticks;
}

function draw({ curve, xlabel, ylabel }) {
  const x = curve.x, series = [curve.qed, curve.lifshitz];
  const finite = series.flatMap((s) => Array.from(s)).filter(Number.isFinite);
  const sorted = [...finite].sort((a, b) => a - b);
  // Clip the narrow resonance so the off-resonant structure stays visible.
  let ymin = sorted[Math.floor(sorted.length * 0.01)], ymax = sorted[Math.ceil(sorted.length * 0.99) - 1];
  ymin = Math.min(ymin, 0); ymax = Math.max(ymax, 0);
  const pad = 0.05 * (ymax - ymin || 1);
  ymin -= pad; ymax += pad;

  const W = canvas.width, H = canvas.height, m = { l: 70, r: 20, t: 20, b: 50 };
  const px = (v) => m.l + ((v - x[0]) / (x[x.length - 1] - x[0])) * (W - m.l - m.r);
  const py = (v) => H - m.b - ((v - ymin) / (ymax - ymin)) * (H - m.t - m.b);

  ctx.clearRect(0, 0, W, H);
  ctx.font = "14px system-ui, sans-serif";
  ctx.strokeStyle = "#ddd"; ctx.fillStyle = "#444"; ctx.lineWidth = 1; ctx.setLineDash([]);
  for (const t of niceTicks(x[0], x[x.length - 1], 10)) {
    ctx.beginPath(); ctx.moveTo(px(t), m.t); ctx.lineTo(px(t), H - m.b); ctx.stroke();
    ctx.fillText(t.toPrecision(3), px(t) - 12, H - m.b + 18);
  }
  for (const t of niceTicks(ymin, ymax, 8)) {
    ctx.beginPath(); ctx.moveTo(m.l, py(t)); ctx.lineTo(W - m.r, py(t)); ctx.stroke();
    ctx.fillText(Number(t.toPrecision(3)).toString(), 8, py(t) + 4);
  }
  ctx.strokeStyle = "#888";
  ctx.beginPath(); ctx.moveTo(m.l, py(0)); ctx.lineTo(W - m.r, py(0)); ctx.stroke();
  ctx.fillText(xlabel, W / 2, H - 12);
  ctx.save(); ctx.translate(16, H / 2 + 60); ctx.rotate(-Math.PI / 2); ctx.fillText(ylabel, 0, 0); ctx.restore();

  ctx.save();
  ctx.beginPath(); ctx.rect(m.l, m.t, W - m.l - m.r, H - m.t - m.b); ctx.clip();
  ctx.lineWidth = 2;
  series.forEach((ys, k) => {
    ctx.strokeStyle = k === 0 ? "#1f5fa8" : "#c0392b";
    ctx.setLineDash(k === 0 ? [] : [8, 6]);
    ctx.beginPath();
    let pen = false;
    for (let i = 0; i < x.length; i++) {
      if (!Number.isFinite(ys[i])) { pen = false; continue; }
      pen ? ctx.lineTo(px(x[i]), py(ys[i])) : ctx.moveTo(px(x[i]), py(ys[i]));
      pen = true;
    }
    ctx.stroke();
  });
  ctx.restore();
}

function update() {
  for (const el of inputs) el.parentElement.querySelector("output").value = el.value;
  const m = mode();
  document.getElementById("temperature-row").hidden = m !== "frequency";
  document.getElementById("omega-row").hidden = m !== "temperature";
  const error = document.getElementById("error");
  try {
    const result = compute();
    error.textContent = "";
    draw(result);
    result.curve.free();
  } catch (e) {
    error.textContent = e.message ?? String(e);
  }
}

await init();
for (const el of [...inputs, ...document.querySelectorAll("input[name=mode]")]) el.addEventListener("input", update);
update();
