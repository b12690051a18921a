/** Glue: run a recipe, rasterize its panels and write the PNG. */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { encodePng } from "./png.js";
import { renderPanels } from "./plot.js";
import { RECIPES, RecipeOutput } from "./recipes.js";

export interface RenderResult {
  figureId: string;
  path: string;
  width: number;
  height: number;
  warnings: string[];
  rowCounts: Record<string, number>;
}

export class UnknownFigureError extends Error {}

export function renderFigure(figureId: string, inDir: string, outDir: string): RenderResult {
  const recipe = RECIPES[figureId];
  if (!recipe) {
    throw new UnknownFigureError(
      `unknown figure '${figureId}' (expected one of ${Object.keys(RECIPES).join(", ")})`
    );
  }
  const built: RecipeOutput = recipe.build(inDir);
  const canvas = renderPanels(built.panels, built.layoutColumns);
  mkdirSync(outDir, { recursive: true });
  const path = join(outDir, `${figureId}.png`);
  writeFileSync(path, encodePng(canvas.width, canvas.height, canvas.pixels));
  return {
    figureId,
    path,
    width: canvas.width,
    height: canvas.height,
    warnings: built.warnings,
    rowCounts: built.rowCounts,
  };
}
