#!/usr/bin/env python3
"""Regenerates the bundled metric sidecars under data/fonts/.

Each bundled face is derived from a freely licensed static font shipped with
matplotlib (DejaVu, BaKoMa Computer Modern). Weight corners use the real
regular/bold masters where one exists and a horizontal emboldening factor
otherwise; stretch corners are horizontal scalings of those masters.
"""
import json
import os
import sys

from fontTools.ttLib import TTFont
import matplotlib

SRC = os.path.join(os.path.dirname(matplotlib.__file__), "mpl-data", "fonts", "ttf")
OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "fonts")

CHARS = [chr(c) for c in range(0x20, 0x7F)] + [chr(c) for c in range(0xC0, 0x100)] + list("’“”–—…Œœ")

# id, category, weightAxis, stretchAxis, (light master, factor), (bold master, factor), stretch scales
FACES = [
    ("Bundled Sans", "sans-serif", [400, 400, 700], [75, 100, 125],
     ("DejaVuSans.ttf", 1.0), ("DejaVuSans-Bold.ttf", 1.0), (0.75, 1.25)),
    ("Bundled Serif", "serif", [400, 400, 700], [75, 100, 125],
     ("DejaVuSerif.ttf", 1.0), ("DejaVuSerif-Bold.ttf", 1.0), (0.75, 1.25)),
    ("Bundled Mono", "mono-space", [400, 400, 700], [75, 100, 100],
     ("DejaVuSansMono.ttf", 1.0), ("DejaVuSansMono-Bold.ttf", 1.0), (0.75, 1.0)),
    ("Bundled Display", "display", [700, 700, 900], [50, 75, 100],
     ("DejaVuSans-Bold.ttf", 1.0), ("DejaVuSans-Bold.ttf", 1.12), (0.5, 1.0)),
    ("Bundled Modern", "serif", [400, 400, 700], [80, 100, 120],
     ("cmr10.ttf", 1.0), ("cmb10.ttf", 1.0), (0.8, 1.2)),
    ("Bundled Modern Sans", "sans-serif", [300, 400, 700], [75, 100, 112.5],
     ("cmss10.ttf", 0.96), ("cmss10.ttf", 1.08), (0.75, 1.125)),
    ("Bundled Typewriter", "mono-space", [400, 400, 600], [85, 100, 100],
     ("cmtt10.ttf", 1.0), ("cmtt10.ttf", 1.06), (0.85, 1.0)),
    ("Bundled Script", "script", [400, 400, 700], [90, 100, 110],
     ("DejaVuSerif-Italic.ttf", 1.0), ("DejaVuSerif-BoldItalic.ttf", 1.0), (0.9, 1.1)),
]


def advances(path, upm_out):
    font = TTFont(os.path.join(SRC, path))
    cmap = font.getBestCmap()
    hmtx = font["hmtx"]
    scale = upm_out / font["head"].unitsPerEm
    table = {"default": hmtx[font.getGlyphOrder()[0]][0] * scale}
    for ch in CHARS:
        glyph = cmap.get(ord(ch))
        if glyph is not None:
            table[ch] = hmtx[glyph][0] * scale
    return table


def scaled(table, factor):
    return {k: int(round(v * factor)) for k, v in table.items()}


def main():
    os.makedirs(OUT, exist_ok=True)
    for face_id, category, waxis, saxis, light, bold, (smin, smax) in FACES:
        upm = 1000
        base = {"wMin": advances(light[0], upm), "wMax": advances(bold[0], upm)}
        factor = {"wMin": light[1], "wMax": bold[1]}
        corners = {}
        for w in ("wMin", "wMax"):
            for s, sf in (("sMin", smin), ("sMax", smax)):
                corners[f"corner:{w},{s}"] = scaled(base[w], factor[w] * sf)
        doc = {
            "id": face_id,
            "category": category,
            "unitsPerEm": upm,
            "weightAxis": waxis,
            "stretchAxis": saxis,
            "advances": corners,
        }
        name = face_id.lower().replace(" ", "_") + ".json"
        with open(os.path.join(OUT, name), "w", encoding="utf-8") as fh:
            json.dump(doc, fh, ensure_ascii=False, indent=1, sort_keys=False)
            fh.write("\n")
        print(name, file=sys.stderr)


if __name__ == "__main__":
    main()
