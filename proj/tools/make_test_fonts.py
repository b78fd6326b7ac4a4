"""Builds the tiny binary font fixtures used by the unit tests.

TestVar.ttf   variable, wght 100..900 (default 400), wdth 75..125 (default 100), HVAR
TestStatic.ttf static, weight class 700, width class 5 (100%)
"""
import os
import sys
import tempfile

from fontTools.designspaceLib import AxisDescriptor, DesignSpaceDocument, SourceDescriptor
from fontTools.fontBuilder import FontBuilder
from fontTools.pens.ttGlyphPen import TTGlyphPen
from fontTools import varLib
from fontTools.ttLib.tables.O_S_2f_2 import Panose

GLYPHS = [".notdef", "space", "A", "B"]
CMAP = {0x20: "space", 0x41: "A", 0x42: "B"}


def box_glyph(width):
    pen = TTGlyphPen(None)
    if width > 0:
        pen.moveTo((50, 0))
        pen.lineTo((50, 700))
        pen.lineTo((width - 50, 700))
        pen.lineTo((width - 50, 0))
        pen.closePath()
    return pen.glyph()


def master(family, style, advances, weight_class=400, width_class=5, panose_serif=11):
    fb = FontBuilder(1000, isTTF=True)
    fb.setupGlyphOrder(GLYPHS)
    fb.setupCharacterMap(CMAP)
    fb.setupGlyf({g: box_glyph(advances[g]) for g in GLYPHS})
    fb.setupHorizontalMetrics({g: (advances[g], 50) for g in GLYPHS})
    fb.setupHorizontalHeader(ascent=800, descent=-200)
    fb.setupNameTable({"familyName": family, "styleName": style})
    panose = Panose()
    for field in ("bFamilyType", "bSerifStyle", "bWeight", "bProportion", "bContrast", "bStrokeVariation",
                  "bArmStyle", "bLetterForm", "bMidline", "bXHeight"):
        setattr(panose, field, 0)
    panose.bFamilyType = 2
    panose.bSerifStyle = panose_serif
    fb.setupOS2(usWeightClass=weight_class, usWidthClass=width_class, panose=panose)
    fb.setupPost()
    return fb.font


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    corners = {
        (400, 100): {".notdef": 500, "space": 250, "A": 600, "B": 580},
        (100, 75): {".notdef": 400, "space": 200, "A": 450, "B": 430},
        (900, 75): {".notdef": 500, "space": 220, "A": 600, "B": 590},
        (100, 125): {".notdef": 550, "space": 260, "A": 700, "B": 660},
        (900, 125): {".notdef": 700, "space": 300, "A": 900, "B": 880},
    }
    with tempfile.TemporaryDirectory() as tmp:
        doc = DesignSpaceDocument()
        for tag, name, lo, default, hi in (("wght", "Weight", 100, 400, 900), ("wdth", "Width", 75, 100, 125)):
            axis = AxisDescriptor()
            axis.tag, axis.name, axis.minimum, axis.default, axis.maximum = tag, name, lo, default, hi
            doc.addAxis(axis)
        for (w, s), adv in corners.items():
            path = os.path.join(tmp, f"m_{w}_{s}.ttf")
            master("Test Var", f"w{w}s{s}", adv).save(path)
            src = SourceDescriptor()
            src.path = path
            src.location = {"Weight": w, "Width": s}
            doc.addSource(src)
        vf, _, _ = varLib.build(doc, exclude=["MVAR", "STAT"])
        vf.save(os.path.join(out_dir, "TestVar.ttf"))

    static = master("Test Static", "Bold", {".notdef": 500, "space": 250, "A": 640, "B": 620},
                    weight_class=700, width_class=5, panose_serif=2)
    static.save(os.path.join(out_dir, "TestStatic.ttf"))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/fonts")
