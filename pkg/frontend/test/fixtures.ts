/**
 * Synthetic CSV fixtures matching the generator's documented schemas.
 * Values are smooth deterministic functions; only shape and column layout
 * matter to the renderer.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import {
  BCS_MAP_COLUMNS,
  JSCAN_COLUMNS,
  SITE_MAP_COLUMNS,
  xxSpectrumColumns,
  xxSusceptibilityColumns,
} from "../src/recipes.js";

function writeCsv(dir: string, name: string, columns: string[], rows: number[][]): void {
  const lines = [columns.join(",")];
  for (const row of rows) {
    lines.push(row.map((v) => String(v)).join(","));
  }
  writeFileSync(join(dir, name), lines.join("\n") + "\n", "utf-8");
}

function jscanRows(n: number): number[][] {
  const rows: number[][] = [];
  for (let i = 0; i < n; i++) {
    const j = 0.5 + 0.05 * i;
    const up = 0.5 + 0.3 * Math.tanh(j - 2);
    const dn = 0.05 / (1 + j);
    const c1 = 0.8 - up - dn / 2;
    const c2 = 1 - up - dn - c1;
    rows.push([j, c1, c2, up, dn, c1 + c2 + up + dn]);
  }
  return rows;
}

function siteMapRows(nx: number, ny: number): number[][] {
  const rows: number[][] = [];
  for (let iy = 0; iy < ny; iy++) {
    for (let ix = 0; ix < nx; ix++) {
      const r2 = (ix - (nx - 1) / 2) ** 2 + (iy - (ny - 1) / 2) ** 2;
      const peak = Math.exp(-r2 / 4);
      rows.push([ix, iy, iy * nx + ix, 0.5 - 0.2 * peak, 0.1, 0.3 + 0.2 * peak, 0.1, 1.0]);
    }
  }
  return rows;
}

function bcsMapRows(n: number): number[][] {
  const rows: number[][] = [];
  for (let iy = 0; iy < n; iy++) {
    for (let ix = 0; ix < n; ix++) {
      const kx = -Math.PI + (2 * Math.PI * ix) / n;
      const ky = -Math.PI + (2 * Math.PI * iy) / n;
      const eps = -2 * (Math.cos(kx) + Math.cos(ky)) + 1;
      const c1 = 1 / (1 + Math.exp(-4 * eps));
      const spin = 0.2 * Math.exp(-eps * eps);
      const c2 = Math.max(1 - c1 - 2 * spin, 1e-12);
      rows.push([kx, ky, iy * n + ix, c1, c2, spin, c1 + c2 + 2 * spin]);
    }
  }
  return rows;
}

function xxSpectrumRows(L: number, xs: number[], pair: (h: number) => [number, number]): number[][] {
  const dim = 2 ** L;
  return xs.map((h) => {
    const [h1, h2] = pair(h);
    const lams: number[] = [];
    let norm = 0;
    for (let i = 0; i < dim; i++) {
      const v = Math.exp(-i * (0.5 + h));
      lams.push(v);
      norm += v;
    }
    const lam = lams.map((v) => v / norm);
    const logs = lam.map((v) => -Math.log(v));
    const moments = [1, 2, 3, 4, 5].map((n) => lam.reduce((acc, v) => acc + v ** n, 0));
    const s1 = -lam.reduce((acc, v) => acc + v * Math.log(v), 0);
    const entropies = [s1, ...[2, 3, 4, 5].map((n) => Math.log(moments[n - 1]) / (1 - n))];
    return [h1, h2, L, ...lam, ...logs, ...moments, ...entropies];
  });
}

function xxSusceptibilityRows(L: number, xs: number[]): number[][] {
  return xxSpectrumRows(L, xs, (h) => [h, h]).map((row) => {
    const h = row[0];
    const chi = -1 / (1.0001 - h);
    return [h, L, 0.01, ...row.slice(3), chi, Math.abs(chi)];
  });
}

const H_GRID = Array.from({ length: 20 }, (_, i) => 0.05 + 0.045 * i);

/** Write a complete fixture set for every figure into one directory. */
export function writeAllFixtures(dir: string, mapN = 64): void {
  mkdirSync(dir, { recursive: true });
  writeCsv(dir, "impurity_jscan_impurity.csv", JSCAN_COLUMNS, jscanRows(40));
  writeCsv(dir, "impurity_jscan_bulk.csv", JSCAN_COLUMNS, jscanRows(40));
  for (const j of ["1.5", "2.5"]) {
    writeCsv(dir, `impurity_map_J${j}_impurity.csv`, SITE_MAP_COLUMNS, siteMapRows(15, 15));
    writeCsv(dir, `impurity_map_J${j}_bulk.csv`, SITE_MAP_COLUMNS, siteMapRows(15, 15));
  }
  writeCsv(dir, "xx_entanglement_spectrum_L6.csv", xxSpectrumColumns(6),
    xxSpectrumRows(6, [0.6, 0.7, 0.8, 0.9, 0.95, 0.99], (h) => [h, h]));
  writeCsv(dir, "xx_fidelity_spectrum_delta_L6.csv", xxSpectrumColumns(6),
    xxSpectrumRows(6, [0.7, 0.8, 0.9, 0.95, 0.99], (h) => [h, h - 0.01]));
  writeCsv(dir, "xx_fidelity_spectrum_pairs_L6.csv", xxSpectrumColumns(6),
    xxSpectrumRows(6, [0.5, 0.6, 0.7, 0.8, 0.9], (h) => [0.5, h]));
  for (const L of [1, 2, 4, 6]) {
    writeCsv(dir, `xx_entanglement_spectrum_ent_L${L}.csv`, xxSpectrumColumns(L),
      xxSpectrumRows(L, H_GRID, (h) => [h, h]));
    writeCsv(dir, `xx_fidelity_spectrum_delta_L${L}.csv`, xxSpectrumColumns(L),
      xxSpectrumRows(L, H_GRID, (h) => [h, h - 0.01]));
    writeCsv(dir, `xx_fidelity_spectrum_h05_L${L}.csv`, xxSpectrumColumns(L),
      xxSpectrumRows(L, H_GRID, (h) => [0.5, h]));
    writeCsv(dir, `xx_fidelity_spectrum_h098_L${L}.csv`, xxSpectrumColumns(L),
      xxSpectrumRows(L, H_GRID, (h) => [0.98, h]));
  }
  for (const L of [1, 2, 3, 4, 5, 6]) {
    writeCsv(dir, `xx_susceptibility_L${L}.csv`, xxSusceptibilityColumns(L), xxSusceptibilityRows(L, H_GRID));
  }
  for (const tag of ["normal", "sc", "sameT", "diffT", "gapped"]) {
    writeCsv(dir, `bcs_brillouin_map_${tag}.csv`, BCS_MAP_COLUMNS, bcsMapRows(mapN));
  }
  writeCsv(dir, "bcs_brillouin_map.csv", BCS_MAP_COLUMNS, bcsMapRows(mapN));
}

export { writeCsv };
