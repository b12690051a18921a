/** Strict reader for the fidspec CSV tables (numeric body, exact header). */

import { readFileSync } from "node:fs";

export interface DataTable {
  columns: string[];
  rows: number[][];
}

export class CsvError extends Error {}

export function parseCsv(text: string, source = "<csv>"): DataTable {
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError(`${source}: empty file`);
  }
  const columns = lines[0].split(",");
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== columns.length) {
      throw new CsvError(
        `${source}: row ${i} has ${fields.length} fields, header has ${columns.length}`
      );
    }
    const row = fields.map((f) => Number(f));
    const bad = row.findIndex((v) => Number.isNaN(v));
    if (bad >= 0) {
      throw new CsvError(`${source}: row ${i}, column '${columns[bad]}' is not numeric: ${fields[bad]}`);
    }
    rows.push(row);
  }
  return { columns, rows };
}

export function readCsv(path: string): DataTable {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch {
    throw new CsvError(`missing input file: ${path}`);
  }
  return parseCsv(text, path);
}

/** Column values by exact header name. */
export function column(table: DataTable, name: string): number[] {
  const j = table.columns.indexOf(name);
  if (j < 0) {
    throw new CsvError(`missing column '${name}'`);
  }
  return table.rows.map((r) => r[j]);
}

/**
 * Enforce that the table has exactly the expected header.  Missing and
 * unexpected columns are both errors, named explicitly.
 */
export function checkSchema(table: DataTable, expected: string[], source: string): void {
  for (const name of expected) {
    if (!table.columns.includes(name)) {
      throw new CsvError(`${source}: missing column '${name}'`);
    }
  }
  for (const name of table.columns) {
    if (!expected.includes(name)) {
      throw new CsvError(`${source}: unexpected column '${name}'`);
    }
  }
}
