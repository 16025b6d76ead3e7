"""Composite one plan per background onto a 640x640 canvas with its YOLO box drawn in.

    python3 demos/composite_scene.py [out_dir]
"""

import sys
from pathlib import Path

from PIL import Image, ImageDraw

from hybridsdg.annotate import Annotation, bbox_from_mask, to_yolo_line
from hybridsdg.doe import DOESpec, enumerate_composite_plans
from hybridsdg.pipeline import build_backgrounds, part_key, render_part, synthesize

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(parents=True, exist_ok=True)

spec = DOESpec()
plans = enumerate_composite_plans(spec)
backgrounds = build_backgrounds(spec.background_ids, spec.exposure_levels, spec.master_seed)

# first image of each (background, label) pair
picks = {}
for p in plans:
    picks.setdefault((p.background_id, p.part.label), p)

for (bg_id, label), plan in sorted(picks.items()):
    syn = synthesize(plan, render_part(part_key(plan)), backgrounds[(plan.background_id, plan.exposure_level)])
    box = bbox_from_mask(syn.mask)
    img = Image.fromarray(syn.image)
    x0, y0, x1, y1 = box.as_tuple()
    ImageDraw.Draw(img).rectangle([x0, y0, x1 - 1, y1 - 1], outline=(255, 0, 0))
    path = out / f"composite_bg{bg_id}_{label}.png"
    img.save(path)
    print(path, to_yolo_line(Annotation(box, label), 640, 640), syn.augment.to_dict())
