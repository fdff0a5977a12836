#!/usr/bin/env python3
"""Debug helper: run a Bockstein window and report the first conflict with
full closure provenance chains."""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from c2stems.chartfile import load_chart
from c2stems.basis import Dataset
from c2stems.bockstein import BocksteinRun, audit_structure, audit_colocalization
from c2stems.degrees import DegreeBox, TriDegree
from c2stems.seeds import gamma_seed_differentials, tau_seed_differentials
from c2stems.pages import Conflict

DATA = ROOT / "src" / "c2stems" / "datasets"


def make_run(box, cones="+-", rmax=16):
    ds = Dataset(load_chart(DATA / "ext_c.txt"))
    tbl = ds.table
    run = BocksteinRun(ds, box, cones=cones, rmax=rmax)
    run.add_ledger(load_chart(DATA / "bockstein_neg.txt", tbl))
    run.add_ledger(load_chart(DATA / "bockstein_pos.txt", tbl))
    run.add_ledger(load_chart(DATA / "e1_hidden.txt", tbl))
    return ds, run


def show_conflict(ds, run, deg, page):
    sw = DegreeBox(run.full_box.smin, run.full_box.smax, run.full_box.fmin,
                   run.full_box.fmax, run.full_box.cmin - 16, run.full_box.cmax + 1)
    run.add_seeds(gamma_seed_differentials(sw))
    run.add_seeds(tau_seed_differentials(sw))
    run.use_seeds = False
    closed = run.close_entries()
    for e in closed.get(page, []):
        if e.source and e.source[0].degree(ds) == deg:
            tgt = [str(c.label(ds)) for c in e.target] or ["ZERO"]
            print("  src", [str(c.label(ds)) for c in e.source], "->", tgt)
            print("     cite:", e.cite, "| note:", e.note[:140])


def main():
    import re

    box = DegreeBox(0, int(sys.argv[1]) if len(sys.argv) > 1 else 15, 0, 20, -2, 8)
    ds, run = make_run(box)
    try:
        res = run.run()
    except Conflict as exc:
        print("CONFLICT:", exc)
        m = re.search(r"at \((-?\d+), (-?\d+), (-?\d+)\) page (\d+)", str(exc))
        if m:
            deg = TriDegree(int(m.group(1)), int(m.group(2)), int(m.group(3)))
            _, run2 = make_run(box)
            show_conflict(ds, run2, deg, int(m.group(4)))
        return 1
    print("structure violations:", len(audit_structure(res)))
    coloc = audit_colocalization(res)
    print("colocalization violations:", len(coloc))
    for v in coloc[:10]:
        print("  ", v)
    dims = res.dims()
    for c in range(box.cmax, box.cmin - 1, -1):
        print(f"c={c:3}:", [sum(v for (d, v) in dims.items() if d.s == s and d.c == c)
                            for s in range(box.smax + 1)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
