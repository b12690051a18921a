/**
 * Figure recipes: which CSV tables each figure consumes and how the panels
 * are assembled.  Recipes only reshape and draw; they never recompute any
 * physics.
 */

import { join } from "node:path";
import { CsvError, DataTable, checkSchema, column, readCsv } from "./csv.js";
import { seriesColor } from "./colormap.js";
import { PanelSpec, Series } from "./plot.js";

export interface RecipeOutput {
  panels: PanelSpec[];
  layoutColumns: number;
  warnings: string[];
  rowCounts: Record<string, number>;
}

export interface Recipe {
  id: string;
  description: string;
  build: (inDir: string) => RecipeOutput;
}

// ---------------------------------------------------------------------------
// expected CSV schemas (mirrors the generator's documented column layouts)
// ---------------------------------------------------------------------------

export const JSCAN_COLUMNS = [
  "J", "lambda_charge_1", "lambda_charge_2", "lambda_spin_up", "lambda_spin_dn", "fidelity",
];
export const SITE_MAP_COLUMNS = [
  "i2_x", "i2_y", "site_index",
  "lambda_charge_1", "lambda_charge_2", "lambda_spin_up", "lambda_spin_dn", "fidelity",
];
export const BCS_MAP_COLUMNS = [
  "k_x", "k_y", "k_index", "lambda_charge_1", "lambda_charge_2", "lambda_spin", "fidelity_k",
];

export function xxSpectrumColumns(L: number, nMax = 5): string[] {
  const dim = 2 ** L;
  const cols = ["h1", "h2", "L"];
  for (let i = 1; i <= dim; i++) cols.push(`lambda_${i}`);
  for (let i = 1; i <= dim; i++) cols.push(`log_lambda_${i}`);
  for (let n = 1; n <= nMax; n++) cols.push(`M_${n}`);
  for (let n = 1; n <= nMax; n++) cols.push(`S_${n}`);
  return cols;
}

export function xxSusceptibilityColumns(L: number, nMax = 5): string[] {
  return ["h", "L", "delta_h", ...xxSpectrumColumns(L, nMax).slice(3), "chi_F", "chi_F_abs"];
}

// ---------------------------------------------------------------------------
// loading helpers
// ---------------------------------------------------------------------------

interface Loaded {
  table: DataTable;
  name: string;
}

function loadTable(inDir: string, name: string, expected: string[], state: RecipeOutput): Loaded {
  const table = readCsv(join(inDir, name));
  checkSchema(table, expected, name);
  state.rowCounts[name] = table.rows.length;
  if (table.rows.length === 0) {
    state.warnings.push(`${name}: header-only input, rendering empty axes`);
  }
  return { table, name };
}

function lambdaSeries(table: DataTable, xCol: string, yCols: string[]): Series[] {
  const xs = column(table, xCol);
  return yCols.map((name, i) => ({
    x: xs,
    y: column(table, name),
    color: seriesColor(i),
    kind: "scatter" as const,
  }));
}

function curveSeries(table: DataTable, xCol: string, yCols: string[], colorOffset = 0): Series[] {
  const xs = column(table, xCol);
  return yCols.map((name, i) => ({
    x: xs,
    y: column(table, name),
    color: seriesColor(i + colorOffset),
    kind: "line" as const,
  }));
}

/** Lattice map -> values[iy][ix] using the stored coordinates. */
function latticeGrid(table: DataTable, valueCol: string): number[][] {
  const xs = column(table, "i2_x");
  const ys = column(table, "i2_y");
  const vs = column(table, valueCol);
  const nx = Math.max(...xs) + 1;
  const ny = Math.max(...ys) + 1;
  if (table.rows.length !== nx * ny) {
    throw new CsvError(`site map has ${table.rows.length} rows, expected ${nx}x${ny}`);
  }
  const grid: number[][] = Array.from({ length: ny }, () => new Array(nx).fill(NaN));
  for (let i = 0; i < vs.length; i++) {
    grid[ys[i]][xs[i]] = vs[i];
  }
  return grid;
}

/** Brillouin-zone map -> values[iy][ix]; rows must form an n x n grid. */
function zoneGrid(table: DataTable, valueCol: string): number[][] {
  const n = Math.round(Math.sqrt(table.rows.length));
  if (n * n !== table.rows.length) {
    throw new CsvError(`momentum map has ${table.rows.length} rows, not a square grid`);
  }
  const vs = column(table, valueCol);
  const grid: number[][] = [];
  for (let iy = 0; iy < n; iy++) {
    grid.push(vs.slice(iy * n, (iy + 1) * n));
  }
  return grid;
}

const K_RANGE: [number, number] = [-Math.PI, Math.PI];

const IMPURITY_CURVES = ["lambda_charge_1", "lambda_charge_2", "lambda_spin_up", "lambda_spin_dn"];
const BCS_CURVES = ["lambda_charge_1", "lambda_charge_2", "lambda_spin"];

// ---------------------------------------------------------------------------
// the twelve recipes
// ---------------------------------------------------------------------------

function fig1(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  for (const [name, title] of [
    ["impurity_jscan_impurity.csv", "impurity site"],
    ["impurity_jscan_bulk.csv", "bulk site"],
  ] as const) {
    const { table } = loadTable(inDir, name, JSCAN_COLUMNS, out);
    out.panels.push({
      title,
      xLabel: "J",
      yLabel: "lambda (log)",
      logY: true,
      series: lambdaSeries(table, "J", IMPURITY_CURVES),
    });
  }
  return out;
}

function fig2(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  for (const [name, title] of [
    ["impurity_map_J1.5_impurity.csv", "anchor impurity, J=1.5"],
    ["impurity_map_J2.5_impurity.csv", "anchor impurity, J=2.5"],
    ["impurity_map_J1.5_bulk.csv", "anchor bulk, J=1.5"],
    ["impurity_map_J2.5_bulk.csv", "anchor bulk, J=2.5"],
  ] as const) {
    const { table } = loadTable(inDir, name, SITE_MAP_COLUMNS, out);
    out.panels.push({
      title,
      xLabel: "site index (row by row)",
      yLabel: "lambda (log)",
      logY: true,
      series: lambdaSeries(table, "site_index", IMPURITY_CURVES),
    });
  }
  return out;
}

function fig3(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 4, warnings: [], rowCounts: {} };
  for (const j of ["1.5", "2.5"]) {
    const { table } = loadTable(inDir, `impurity_map_J${j}_impurity.csv`, SITE_MAP_COLUMNS, out);
    for (const col of IMPURITY_CURVES) {
      out.panels.push({
        title: `J=${j} ${col.replace("lambda_", "")}`,
        xLabel: "x",
        yLabel: "y",
        heatmap: { values: table.rows.length ? latticeGrid(table, col) : [], label: col },
      });
    }
  }
  return out;
}

function fig4(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 3, warnings: [], rowCounts: {} };
  const logCols = (L: number) => xxSpectrumColumns(L).filter((c) => c.startsWith("log_lambda_"));
  const specs = [
    ["xx_entanglement_spectrum_L6.csv", "entanglement spectrum", "h1"],
    ["xx_fidelity_spectrum_delta_L6.csv", "fidelity spectrum, dh=0.01", "h1"],
    ["xx_fidelity_spectrum_pairs_L6.csv", "fidelity spectrum, h1=0.5", "h2"],
  ] as const;
  for (const [name, title, xCol] of specs) {
    const { table } = loadTable(inDir, name, xxSpectrumColumns(6), out);
    out.panels.push({
      title,
      xLabel: xCol,
      yLabel: "-ln lambda",
      series: logCols(6).map((c, i) => ({
        x: column(table, xCol),
        y: column(table, c),
        color: seriesColor(i % 10),
        kind: "scatter" as const,
      })),
    });
  }
  return out;
}

function fig5(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  const moments = ["M_1", "M_2", "M_3", "M_4", "M_5"];
  const panels = [
    ["xx_entanglement_spectrum_ent", "h1", "entanglement moments"],
    ["xx_fidelity_spectrum_delta", "h1", "fidelity moments, dh=0.01"],
    ["xx_fidelity_spectrum_h05", "h2", "fidelity moments, h1=0.5"],
    ["xx_fidelity_spectrum_h098", "h2", "fidelity moments, h1=0.98"],
  ] as const;
  for (const [stem, xCol, title] of panels) {
    const series: Series[] = [];
    for (const [iL, L] of [1, 2, 4, 6].entries()) {
      const { table } = loadTable(inDir, `${stem}_L${L}.csv`, xxSpectrumColumns(L), out);
      for (const [iM, m] of moments.entries()) {
        series.push({
          x: column(table, xCol),
          y: column(table, m),
          color: seriesColor(iM + 5 * (iL % 2)),
          kind: "line",
        });
      }
    }
    out.panels.push({ title, xLabel: xCol, yLabel: "M_n", series });
  }
  return out;
}

function fig6(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  const entropies = ["S_1", "S_2", "S_3", "S_4", "S_5"];
  const panels = [
    ["xx_entanglement_spectrum_ent_L1.csv", 1, "h1", "entanglement entropies, L=1"],
    ["xx_entanglement_spectrum_ent_L6.csv", 6, "h1", "entanglement entropies, L=6"],
    ["xx_fidelity_spectrum_h098_L1.csv", 1, "h2", "fidelity entropies, L=1, h1=0.98"],
    ["xx_fidelity_spectrum_h098_L6.csv", 6, "h2", "fidelity entropies, L=6, h1=0.98"],
  ] as const;
  for (const [name, L, xCol, title] of panels) {
    const { table } = loadTable(inDir, name, xxSpectrumColumns(L), out);
    out.panels.push({
      title,
      xLabel: xCol,
      yLabel: "S_n",
      series: curveSeries(table, xCol, entropies),
    });
  }
  return out;
}

function fig7(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 1, warnings: [], rowCounts: {} };
  const series: Series[] = [];
  for (const [i, L] of [1, 2, 3, 4, 5, 6].entries()) {
    const { table } = loadTable(inDir, `xx_susceptibility_L${L}.csv`, xxSusceptibilityColumns(L), out);
    series.push({
      x: column(table, "h"),
      y: column(table, "chi_F_abs"),
      color: seriesColor(i),
      kind: "line",
    });
  }
  out.panels.push({
    title: "block fidelity susceptibility, L=1..6",
    xLabel: "h",
    yLabel: "|chi_F|",
    series,
  });
  return out;
}

function bcsSpectrumFigure(files: ReadonlyArray<readonly [string, string]>) {
  return (inDir: string): RecipeOutput => {
    const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
    for (const [name, title] of files) {
      const { table } = loadTable(inDir, name, BCS_MAP_COLUMNS, out);
      out.panels.push({
        title,
        xLabel: "k index (row by row)",
        yLabel: "lambda (log)",
        logY: true,
        series: lambdaSeries(table, "k_index", BCS_CURVES),
      });
    }
    return out;
  };
}

const fig8 = bcsSpectrumFigure([
  ["bcs_brillouin_map_normal.csv", "normal phase"],
  ["bcs_brillouin_map_sc.csv", "superconducting phase"],
]);

const fig9 = bcsSpectrumFigure([
  ["bcs_brillouin_map_sameT.csv", "normal vs sc, equal T"],
  ["bcs_brillouin_map_diffT.csv", "normal vs sc, different T"],
]);

function fig10(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 3, warnings: [], rowCounts: {} };
  for (const [name, phase] of [
    ["bcs_brillouin_map_normal.csv", "normal"],
    ["bcs_brillouin_map_sc.csv", "sc"],
  ] as const) {
    const { table } = loadTable(inDir, name, BCS_MAP_COLUMNS, out);
    for (const col of BCS_CURVES) {
      out.panels.push({
        title: `${phase}: ${col.replace("lambda_", "")}`,
        xLabel: "k_x",
        yLabel: "k_y",
        heatmap: { values: table.rows.length ? zoneGrid(table, col) : [], label: col },
        xRange: K_RANGE,
        yRange: K_RANGE,
      });
    }
  }
  return out;
}

function fig11(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  const { table } = loadTable(inDir, "bcs_brillouin_map.csv", BCS_MAP_COLUMNS, out);
  for (const col of [...BCS_CURVES, "fidelity_k"]) {
    out.panels.push({
      title: col,
      xLabel: "k_x",
      yLabel: "k_y",
      heatmap: { values: table.rows.length ? zoneGrid(table, col) : [], label: col },
      xRange: K_RANGE,
      yRange: K_RANGE,
    });
  }
  return out;
}

function fig12(inDir: string): RecipeOutput {
  const out: RecipeOutput = { panels: [], layoutColumns: 2, warnings: [], rowCounts: {} };
  for (const [name, title] of [
    ["bcs_brillouin_map_gapped.csv", "fidelity, different T, same gap"],
    ["bcs_brillouin_map_normal.csv", "fidelity, different T, no gap"],
  ] as const) {
    const { table } = loadTable(inDir, name, BCS_MAP_COLUMNS, out);
    out.panels.push({
      title,
      xLabel: "k_x",
      yLabel: "k_y",
      heatmap: { values: table.rows.length ? zoneGrid(table, "fidelity_k") : [], label: "fidelity_k" },
      xRange: K_RANGE,
      yRange: K_RANGE,
    });
  }
  return out;
}

export const RECIPES: Record<string, Recipe> = {
  fig1: { id: "fig1", description: "fidelity spectrum vs J at two sites", build: fig1 },
  fig2: { id: "fig2", description: "fidelity spectrum vs site for two anchors and couplings", build: fig2 },
  fig3: { id: "fig3", description: "eigenvalue maps over the lattice", build: fig3 },
  fig4: { id: "fig4", description: "XX log-spectra vs field", build: fig4 },
  fig5: { id: "fig5", description: "first five moments vs field", build: fig5 },
  fig6: { id: "fig6", description: "von Neumann and Renyi entropies vs field", build: fig6 },
  fig7: { id: "fig7", description: "block fidelity susceptibility vs field", build: fig7 },
  fig8: { id: "fig8", description: "per-momentum entanglement spectrum", build: fig8 },
  fig9: { id: "fig9", description: "per-momentum fidelity spectrum, normal vs sc", build: fig9 },
  fig10: { id: "fig10", description: "eigenvalue heatmaps over the Brillouin zone", build: fig10 },
  fig11: { id: "fig11", description: "normal vs sc eigenvalue and fidelity heatmaps", build: fig11 },
  fig12: { id: "fig12", description: "total fidelity heatmaps for two temperatures", build: fig12 },
};
