#!/usr/bin/env node
/**
 * fidspec-plot --figure <fig1..fig12> --in <data dir> --out <image dir>
 *
 * Renders one figure analog from the generator's CSV tables.  Exit codes:
 * 0 success (including header-only inputs, which produce empty axes and a
 * warning), 2 usage / unknown figure, 3 missing or malformed input.
 */

import { resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { CsvError } from "./csv.js";
import { RECIPES } from "./recipes.js";
import { UnknownFigureError, renderFigure } from "./render.js";

function usage(): string {
  const ids = Object.keys(RECIPES).join("|");
  return `usage: fidspec-plot --figure <${ids}> --in <dir> --out <dir>`;
}

export function main(argv: string[]): number {
  const args = new Map<string, string>();
  for (let i = 0; i < argv.length; i += 2) {
    const key = argv[i];
    const value = argv[i + 1];
    if (!key.startsWith("--") || value === undefined) {
      console.error(usage());
      return 2;
    }
    args.set(key.slice(2), value);
  }
  const figure = args.get("figure");
  const inDir = args.get("in");
  const outDir = args.get("out");
  if (!figure || !inDir || !outDir) {
    console.error(usage());
    return 2;
  }
  try {
    const result = renderFigure(figure, inDir, outDir);
    for (const warning of result.warnings) {
      console.error(`warning: ${warning}`);
    }
    console.log(`${result.path} (${result.width}x${result.height})`);
    return 0;
  } catch (err) {
    if (err instanceof UnknownFigureError) {
      console.error(String(err.message));
      return 2;
    }
    if (err instanceof CsvError) {
      console.error(`input error: ${err.message}`);
      return 3;
    }
    throw err;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined && fileURLToPath(import.meta.url) === resolve(process.argv[1]);
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
