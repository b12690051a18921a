/** Panel-based plot composition on the software canvas. */

import { RGB, viridis } from "./colormap.js";
import { BLACK, Canvas, GREY } from "./raster.js";

export interface Series {
  x: number[];
  y: number[];
  color: RGB;
  kind: "line" | "scatter";
}

export interface HeatmapData {
  /** values[iy][ix], iy = 0 at the bottom of the axes (origin centered). */
  values: number[][];
  label: string;
}

export interface PanelSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  logY?: boolean;
  series?: Series[];
  heatmap?: HeatmapData;
  /** axis bounds for heatmaps (e.g. k ranges); defaults to cell indices */
  xRange?: [number, number];
  yRange?: [number, number];
}

export const PANEL_W = 340;
export const PANEL_H = 280;
const MARGIN = { left: 62, right: 50, top: 26, bottom: 40 };
export const LOG_FLOOR = 1e-16;

function niceTicks(lo: number, hi: number, target = 5): number[] {
  if (!(hi > lo)) {
    const v = lo;
    return [v - 1, v, v + 1];
  }
  const span = hi - lo;
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-12 * span; t += step) {
    ticks.push(Math.abs(t) < 1e-12 * span ? 0 : t);
  }
  return ticks;
}

function fmtTick(v: number): string {
  if (v === 0) {
    return "0";
  }
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    return v.toExponential(0).replace("e+", "e");
  }
  return String(parseFloat(v.toPrecision(3)));
}

interface Box {
  x0: number;
  y0: number;
  w: number;
  h: number;
}

function drawAxes(c: Canvas, box: Box, spec: PanelSpec, xlim: [number, number], ylim: [number, number]): void {
  c.line(box.x0, box.y0, box.x0, box.y0 + box.h, BLACK);
  c.line(box.x0, box.y0 + box.h, box.x0 + box.w, box.y0 + box.h, BLACK);
  c.line(box.x0 + box.w, box.y0, box.x0 + box.w, box.y0 + box.h, GREY);
  c.line(box.x0, box.y0, box.x0 + box.w, box.y0, GREY);

  for (const t of niceTicks(xlim[0], xlim[1])) {
    const px = box.x0 + ((t - xlim[0]) / (xlim[1] - xlim[0])) * box.w;
    c.line(px, box.y0 + box.h, px, box.y0 + box.h + 4, BLACK);
    const label = fmtTick(t);
    c.text(px - c.textWidth(label) / 2, box.y0 + box.h + 7, label, BLACK);
  }
  for (const t of niceTicks(ylim[0], ylim[1])) {
    const py = box.y0 + box.h - ((t - ylim[0]) / (ylim[1] - ylim[0])) * box.h;
    c.line(box.x0 - 4, py, box.x0, py, BLACK);
    const label = spec.logY ? `1e${fmtTick(t)}` : fmtTick(t);
    c.text(box.x0 - 6 - c.textWidth(label), py - 3, label, BLACK);
  }
  c.text(box.x0 + (box.w - c.textWidth(spec.title)) / 2, box.y0 - 14, spec.title, BLACK);
  c.text(box.x0 + (box.w - c.textWidth(spec.xLabel)) / 2, box.y0 + box.h + 22, spec.xLabel, BLACK);
  // y label drawn horizontally above the axis to keep the renderer simple
  c.text(4, box.y0 - 14, spec.yLabel, BLACK);
}

function drawSeriesPanel(c: Canvas, box: Box, spec: PanelSpec): void {
  const series = spec.series ?? [];
  const xs = series.flatMap((s) => s.x).filter(Number.isFinite);
  const ysRaw = series.flatMap((s) => s.y);
  const ys = (spec.logY ? ysRaw.map((v) => Math.log10(Math.max(v, LOG_FLOOR))) : ysRaw).filter(
    Number.isFinite
  );
  if (xs.length === 0 || ys.length === 0) {
    drawAxes(c, box, spec, [0, 1], [0, 1]);
    c.text(box.x0 + box.w / 2 - c.textWidth("no data") / 2, box.y0 + box.h / 2, "no data", GREY);
    return;
  }
  let xlim: [number, number] = [Math.min(...xs), Math.max(...xs)];
  let ylim: [number, number] = [Math.min(...ys), Math.max(...ys)];
  if (xlim[0] === xlim[1]) {
    xlim = [xlim[0] - 0.5, xlim[1] + 0.5];
  }
  if (ylim[0] === ylim[1]) {
    ylim = [ylim[0] - 0.5, ylim[1] + 0.5];
  }
  const padY = 0.05 * (ylim[1] - ylim[0]);
  ylim = [ylim[0] - padY, ylim[1] + padY];
  drawAxes(c, box, spec, xlim, ylim);

  const toPx = (x: number) => box.x0 + ((x - xlim[0]) / (xlim[1] - xlim[0])) * box.w;
  const toPy = (y: number) => box.y0 + box.h - ((y - ylim[0]) / (ylim[1] - ylim[0])) * box.h;
  for (const s of series) {
    let prev: [number, number] | null = null;
    for (let i = 0; i < s.x.length; i++) {
      const yv = spec.logY ? Math.log10(Math.max(s.y[i], LOG_FLOOR)) : s.y[i];
      if (!Number.isFinite(s.x[i]) || !Number.isFinite(yv)) {
        prev = null;
        continue;
      }
      const px = toPx(s.x[i]);
      const py = toPy(yv);
      if (s.kind === "line" && prev) {
        c.line(prev[0], prev[1], px, py, s.color);
      } else {
        c.marker(px, py, s.color, s.kind === "line" ? 0 : 1);
      }
      prev = [px, py];
    }
  }
}

function drawHeatmapPanel(c: Canvas, box: Box, spec: PanelSpec): void {
  const hm = spec.heatmap;
  if (!hm || hm.values.length === 0) {
    drawAxes(c, box, spec, [0, 1], [0, 1]);
    c.text(box.x0 + box.w / 2 - c.textWidth("no data") / 2, box.y0 + box.h / 2, "no data", GREY);
    return;
  }
  const ny = hm.values.length;
  const nx = hm.values[0].length;
  const flat = hm.values.flat().filter(Number.isFinite);
  let lo = Math.min(...flat);
  let hi = Math.max(...flat);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const xlim = spec.xRange ?? ([0, nx] as [number, number]);
  const ylim = spec.yRange ?? ([0, ny] as [number, number]);
  drawAxes(c, box, spec, xlim, ylim);
  for (let iy = 0; iy < ny; iy++) {
    // iy = 0 is the bottom data row; the canvas y axis points down
    const py0 = box.y0 + Math.round(((ny - 1 - iy) / ny) * box.h);
    const py1 = box.y0 + Math.round(((ny - iy) / ny) * box.h);
    for (let ix = 0; ix < nx; ix++) {
      const px0 = box.x0 + Math.round((ix / nx) * box.w);
      const px1 = box.x0 + Math.round(((ix + 1) / nx) * box.w);
      const t = (hm.values[iy][ix] - lo) / (hi - lo);
      const color = viridis(t);
      for (let y = py0; y < py1; y++) {
        for (let x = px0; x < px1; x++) {
          c.set(x, y, color);
        }
      }
    }
  }
  // colorbar
  const cbX = box.x0 + box.w + 12;
  for (let y = 0; y < box.h; y++) {
    const t = 1 - y / box.h;
    const color = viridis(t);
    for (let x = 0; x < 10; x++) {
      c.set(cbX + x, box.y0 + y, color);
    }
  }
  c.text(cbX, box.y0 - 10, fmtTick(hi), BLACK);
  c.text(cbX, box.y0 + box.h + 3, fmtTick(lo), BLACK);
}

/** Compose a grid of panels into one image. */
export function renderPanels(panels: PanelSpec[], columns: number): Canvas {
  const cols = Math.max(1, Math.min(columns, panels.length));
  const rowsN = Math.ceil(panels.length / cols);
  const canvas = new Canvas(cols * PANEL_W, rowsN * PANEL_H);
  panels.forEach((spec, i) => {
    const gx = i % cols;
    const gy = Math.floor(i / cols);
    const box: Box = {
      x0: gx * PANEL_W + MARGIN.left,
      y0: gy * PANEL_H + MARGIN.top,
      w: PANEL_W - MARGIN.left - MARGIN.right,
      h: PANEL_H - MARGIN.top - MARGIN.bottom,
    };
    if (spec.heatmap !== undefined) {
      drawHeatmapPanel(canvas, box, spec);
    } else {
      drawSeriesPanel(canvas, box, spec);
    }
  });
  return canvas;
}
