"""Render the bracket at a few bend angles and save the sprites as PNGs.

    python3 demos/render_bracket.py [out_dir]
"""

import sys
from pathlib import Path

from PIL import Image

from hybridsdg.pipeline import render_part

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(parents=True, exist_ok=True)

for angle in (0.0, 10.0, 20.0, 30.0):
    for rough in (0.2, 0.6):
        sprite = render_part((angle, rough, 10.0))
        path = out / f"bracket_{angle:+05.1f}deg_r{rough}.png"
        Image.fromarray(sprite.rgba).save(path)
        print(f"{path}  {sprite.shape[1]}x{sprite.shape[0]} px, {int(sprite.mask.sum())} covered")
