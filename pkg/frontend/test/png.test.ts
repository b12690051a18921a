import { inflateSync } from "node:zlib";
import { describe, expect, it } from "vitest";
import { PNG_SIGNATURE, encodePng, pngSize } from "../src/png.js";
import { Canvas } from "../src/raster.js";
import { viridis } from "../src/colormap.js";

describe("encodePng", () => {
  it("writes signature and dimensions", () => {
    const data = encodePng(3, 2, new Uint8Array(3 * 2 * 3));
    expect(data.subarray(0, 8).equals(PNG_SIGNATURE)).toBe(true);
    expect(pngSize(data)).toEqual({ width: 3, height: 2 });
  });

  it("round-trips pixel data through the IDAT stream", () => {
    const rgb = new Uint8Array([255, 0, 0, 0, 255, 0, 0, 0, 255, 9, 9, 9]);
    const data = encodePng(2, 2, rgb);
    const idatLen = data.readUInt32BE(8 + 25); // after signature + IHDR chunk
    const idat = data.subarray(8 + 25 + 8, 8 + 25 + 8 + idatLen);
    const raw = inflateSync(idat);
    expect(raw.length).toBe(2 * (1 + 2 * 3));
    expect([...raw.subarray(1, 7)]).toEqual([255, 0, 0, 0, 255, 0]);
  });

  it("rejects wrong buffer sizes", () => {
    expect(() => encodePng(2, 2, new Uint8Array(5))).toThrow(/expected/);
  });
});

describe("canvas drawing", () => {
  it("draws lines within bounds", () => {
    const c = new Canvas(10, 10);
    c.line(0, 0, 9, 9, [1, 2, 3]);
    expect(c.pixels[0]).toBe(1);
    expect(c.pixels[3 * (9 * 10 + 9)]).toBe(1);
    c.line(-5, -5, 20, 5, [7, 7, 7]); // clipped silently
  });

  it("renders text pixels", () => {
    const c = new Canvas(20, 10);
    c.text(0, 0, "1", [0, 0, 0]);
    const dark = [...c.pixels].filter((v, i) => i % 3 === 0 && v === 0).length;
    expect(dark).toBeGreaterThan(3);
  });
});

describe("viridis", () => {
  it("maps endpoints and clamps", () => {
    expect(viridis(0)).toEqual([68, 1, 84]);
    expect(viridis(1)).toEqual([253, 231, 37]);
    expect(viridis(-5)).toEqual(viridis(0));
    expect(viridis(NaN)).toEqual([128, 128, 128]);
  });

  it("is monotone in green along the map", () => {
    let prev = -1;
    for (let t = 0; t <= 1.001; t += 0.05) {
      const g = viridis(t)[1];
      expect(g).toBeGreaterThanOrEqual(prev);
      prev = g;
    }
  });
});
