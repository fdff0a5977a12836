#!/usr/bin/env python3
"""Cross-check the Ext dataset's τ-free part against the minimal-resolution
computation of the classical Ext chart (counts per (s,f) and h0/h1/h2
product structure)."""

from __future__ import annotations

import json
import sys
from collections import defaultdict
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from c2stems.chartfile import load_chart
from c2stems.basis import Dataset

CLASSICAL = Path(sys.argv[1] if len(sys.argv) > 1 else "/tmp/ext_classical.json")


def main():
    cl = json.loads(CLASSICAL.read_text())
    max_stem, max_f = cl["max_stem"], cl["max_f"]
    cl_chart = defaultdict(list)
    for g in cl["gens"]:
        cl_chart[(g["s"], g["f"])].append((g["f"], g["i"]))
    cl_prod = defaultdict(set)
    for p in cl["products"]:
        cl_prod[(p["h"], tuple(p["from"]))].add(tuple(p["to"]))

    ds = Dataset(load_chart(ROOT / "src/c2stems/datasets/ext_c.txt"))
    free = [g for g in ds.chart.generators if g.tau_torsion is None]
    my_chart = defaultdict(list)
    for g in free:
        my_chart[(g.degree.s, g.degree.f)].append(g.id)

    bad = 0
    for s in range(0, max_stem + 1):
        for f in range(0, max_f + 1):
            a = len(cl_chart.get((s, f), []))
            b = len(my_chart.get((s, f), []))
            if a != b and s <= 28 and f <= 16:
                print(f"count mismatch at (s={s}, f={f}): classical {a}, dataset {b}")
                if b:
                    print("   dataset has:", my_chart[(s, f)])
                bad += 1

    # product spot-check: for 1-dimensional positions, h_j products must
    # agree as position maps
    hsyms = {0: "h_0", 1: "h_1", 2: "h_2"}
    for g in free:
        s, f = g.degree.s, g.degree.f
        if s > max_stem - 1 or f > max_f - 1:
            continue
        if len(my_chart[(s, f)]) != 1:
            continue
        pos = cl_chart.get((s, f))
        if not pos or len(pos) != 1:
            continue
        for j, sym in hsyms.items():
            opg = ds.by_body.get(sym)
            prod = ds.product_gen(opg.id, g.id)
            sj = s + (0 if j == 0 else (1 if j == 1 else 3))
            fj = f + 1
            if sj > max_stem or fj > max_f:
                continue
            cl_targets = cl_prod.get((j, pos[0]), set())
            cl_hit = bool(cl_targets)
            # classically, products landing on τ-torsion generators vanish
            my_hit = prod is not None and ds.torsion(prod[0]) is None
            if cl_hit != my_hit:
                mine = "0" if prod is None else f"{prod[0]} (tau^{prod[1]})"
                print(
                    f"product mismatch: {sym} * {g.id} at ({s},{f}): "
                    f"classical {'nonzero' if cl_hit else 'zero'}, dataset {mine}"
                )
                bad += 1
    print("issues:", bad)
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
