"""Write an SVG of every region of convergence to a directory.

Run: python3 demos/roc_gallery.py [OUTDIR]
"""

import pathlib
import sys

from appellf2 import list_representations
from appellf2.cli import roc_raster, write_svg

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "roc_gallery")
out.mkdir(parents=True, exist_ok=True)
for rep in list_representations():
    raster = roc_raster(rep.id, 150, -6.0, 6.0)
    (out / f"{rep.id}.svg").write_text(write_svg(raster, -6.0, 6.0), encoding="utf-8")
    print(f"{rep.id:<4} #{rep.package_number:<3} inside fraction {(raster == 1).mean():.3f}")
print(f"wrote {out}/")
