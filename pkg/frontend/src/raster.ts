/** Software RGB canvas: pixels, lines, rectangles, markers and bitmap text. */

import { RGB } from "./colormap.js";
import { GLYPH_H, GLYPH_W, glyph } from "./font.js";

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number, background: RGB = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 3);
    for (let i = 0; i < width * height; i++) {
      this.pixels[3 * i] = background[0];
      this.pixels[3 * i + 1] = background[1];
      this.pixels[3 * i + 2] = background[2];
    }
  }

  set(x: number, y: number, color: RGB): void {
    x = Math.round(x);
    y = Math.round(y);
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const i = 3 * (y * this.width + x);
    this.pixels[i] = color[0];
    this.pixels[i + 1] = color[1];
    this.pixels[i + 2] = color[2];
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: RGB): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) {
        this.set(x, y, color);
      }
    }
  }

  /** Bresenham segment. */
  line(x0: number, y0: number, x1: number, y1: number, color: RGB): void {
    let ix0 = Math.round(x0);
    let iy0 = Math.round(y0);
    const ix1 = Math.round(x1);
    const iy1 = Math.round(y1);
    const dx = Math.abs(ix1 - ix0);
    const dy = -Math.abs(iy1 - iy0);
    const sx = ix0 < ix1 ? 1 : -1;
    const sy = iy0 < iy1 ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(ix0, iy0, color);
      if (ix0 === ix1 && iy0 === iy1) {
        break;
      }
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        ix0 += sx;
      }
      if (e2 <= dx) {
        err += dx;
        iy0 += sy;
      }
    }
  }

  marker(x: number, y: number, color: RGB, size = 1): void {
    this.fillRect(Math.round(x) - size, Math.round(y) - size, 2 * size + 1, 2 * size + 1, color);
  }

  /** Draw text with its top-left corner at (x, y). */
  text(x: number, y: number, s: string, color: RGB, scale = 1): void {
    let cx = x;
    for (const ch of s) {
      const g = glyph(ch);
      for (let gy = 0; gy < GLYPH_H; gy++) {
        for (let gx = 0; gx < GLYPH_W; gx++) {
          if (g[gy][gx] === "#") {
            this.fillRect(cx + gx * scale, y + gy * scale, scale, scale, color);
          }
        }
      }
      cx += (GLYPH_W + 1) * scale;
    }
  }

  textWidth(s: string, scale = 1): number {
    return s.length * (GLYPH_W + 1) * scale - scale;
  }
}

export const BLACK: RGB = [0, 0, 0];
export const GREY: RGB = [170, 170, 170];
export const WHITE: RGB = [255, 255, 255];
