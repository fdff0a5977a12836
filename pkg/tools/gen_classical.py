#!/usr/bin/env python3
"""Generate the classical chart dataset (stable stems through 26).

Positions and h0/h1/h2 products come from the minimal resolution output
(tools/classical_ext_resolution.json); names are curated; the Adams
differential ledger is applied positionally to produce the E-infinity
chart with its h0/h1 lines, the 2-power orders, and the classically
hidden 2- and η-extensions used by the cofiber-of-ρ audits.
"""

from __future__ import annotations

import json
import sys
from collections import defaultdict
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

OUT = ROOT / "src" / "c2stems" / "datasets"
MAX_STEM = 26

# curated names per (s, f); lists ordered by resolution generator index
NAMES = {
    (0, 0): ["1"],
    (1, 1): ["h_1"], (2, 2): ["h_1^2"], (3, 1): ["h_2"], (3, 2): ["h_0 h_2"],
    (3, 3): ["h_1^3"], (6, 2): ["h_2^2"],
    (7, 1): ["h_3"], (7, 2): ["h_0 h_3"], (7, 3): ["h_0^2 h_3"], (7, 4): ["h_0^3 h_3"],
    (8, 2): ["h_1 h_3"], (8, 3): ["c_0"],
    (9, 3): ["h_1^2 h_3"], (9, 4): ["c_0 h_1"], (9, 5): ["P h_1"],
    (10, 6): ["P h_1^2"],
    (11, 5): ["P h_2"], (11, 6): ["P h_0 h_2"], (11, 7): ["P h_1^3"],
    (14, 2): ["h_3^2"], (14, 3): ["h_0 h_3^2"], (14, 4): ["d_0"],
    (14, 5): ["d_0 h_0"], (14, 6): ["d_0 h_0^2"],
    (15, 1): ["h_4"], (15, 2): ["h_0 h_4"], (15, 3): ["h_0^2 h_4"],
    (15, 4): ["h_0^3 h_4"], (15, 5): ["h_0^4 h_4", "d_0 h_1"],
    (15, 6): ["h_0^5 h_4"], (15, 7): ["h_0^6 h_4"], (15, 8): ["h_0^7 h_4"],
    (16, 2): ["h_1 h_4"], (16, 6): ["d_0 h_1^2"], (16, 7): ["P c_0"],
    (17, 3): ["h_1^2 h_4"], (17, 4): ["e_0"], (17, 5): ["e_0 h_0"],
    (17, 6): ["e_0 h_0^2"], (17, 7): ["d_0 h_1^3"], (17, 8): ["P c_0 h_1"],
    (17, 9): ["P^2 h_1"],
    (18, 2): ["h_2 h_4"], (18, 3): ["h_0 h_2 h_4"], (18, 4): ["f_0", "h_1^3 h_4"],
    (18, 5): ["e_0 h_1"], (18, 10): ["P^2 h_1^2"],
    (19, 3): ["c_1"], (19, 9): ["P^2 h_2"], (19, 10): ["P^2 h_0 h_2"],
    (19, 11): ["P^2 h_1^3"],
    (20, 4): ["g"], (20, 5): ["h_0 g"], (20, 6): ["h_0^2 g"],
    (21, 3): ["h_2^2 h_4"], (21, 5): ["h_1 g"],
    (22, 4): ["h_2 c_1"], (22, 8): ["P d_0"], (22, 9): ["P d_0 h_0"],
    (22, 10): ["P d_0 h_0^2"],
    (23, 4): ["h_4 c_0"], (23, 5): ["h_2 g"], (23, 6): ["h_0 h_2 g"],
    (23, 7): ["i"], (23, 8): ["h_0 i"], (23, 9): ["h_0^2 i", "P d_0 h_1"],
    (23, 10): ["h_0^3 i"], (23, 11): ["h_0^4 i"], (23, 12): ["h_0^5 i"],
    (24, 5): ["c_0 h_1 h_4"], (24, 10): ["P d_0 h_1^2"], (24, 11): ["P^2 c_0"],
    (25, 8): ["P e_0"], (25, 9): ["P e_0 h_0"], (25, 10): ["P e_0 h_0^2"],
    (25, 11): ["P d_0 h_1^3"], (25, 12): ["P^2 c_0 h_1"], (25, 13): ["P^3 h_1"],
    (26, 6): ["h_2^2 g"], (26, 7): ["j"], (26, 8): ["h_0 j"],
    (26, 9): ["P e_0 h_1"], (26, 14): ["P^3 h_1^2"],
}

# Adams differentials as (page, source name, target name); h0/h1 closures
# are generated from the product graph
DIFFS = [
    (2, "h_4", "h_0 h_3^2"),
    (2, "e_0", "d_0 h_1^2"),
    (2, "f_0", "e_0 h_0^2"),
    (2, "i", "P d_0 h_0"),
    (2, "j", "P e_0 h_0"),
    (2, "P e_0", "P d_0 h_1^2"),
    (3, "h_0 h_4", "d_0 h_0"),
    (3, "h_0^2 h_4", "d_0 h_0^2"),
]

# classically hidden extensions among E-infinity names (2-adic structure)
HIDDEN_2 = [
    ("h_0 h_2 g", "P d_0 h_1"),
]
HIDDEN_ETA = [
    ("h_1 g", "P d_0"),
    ("h_0^2 h_2 h_4?", None),  # placeholder pruned below
]


def main():
    data = json.loads((ROOT / "tools" / "classical_ext_resolution.json").read_text())
    pos_by_sf = defaultdict(list)
    for g in data["gens"]:
        pos_by_sf[(g["s"], g["f"])].append((g["f"], g["i"]))
    prod = defaultdict(set)
    for p in data["products"]:
        prod[(p["h"], tuple(p["from"]))].add(tuple(p["to"]))

    sf_of_pos = {}
    for g in data["gens"]:
        sf_of_pos[(g["f"], g["i"])] = (g["s"], g["f"])

    def product_target(j, src_pos):
        outs = prod.get((j, src_pos), set())
        return next(iter(outs)) if len(outs) == 1 else None

    name_of_pos = {}
    pos_of_name = {}
    for (s, f), positions in sorted(pos_by_sf.items()):
        if s > MAX_STEM + 2 or f > data["max_f"]:
            continue
        names = NAMES.get((s, f))
        if names is None:
            if s <= MAX_STEM and (s, f) != (0, 0):
                if s == 0:
                    names = [f"h_0^{f}" if f > 1 else "h_0"]
                else:
                    raise SystemExit(f"missing name for classical class at ({s},{f})")
            else:
                continue
        if len(names) != len(positions):
            raise SystemExit(f"name count mismatch at ({s},{f})")
        positions = list(positions)
        if len(positions) > 1:
            # disambiguate 2-dimensional spots via incoming products
            incoming = {
                (15, 5): [("h_0^4 h_4", 0, "h_0^3 h_4"), ("d_0 h_1", 1, "d_0")],
                (18, 4): [("h_1^3 h_4", 1, "h_1^2 h_4")],
                (23, 9): [("h_0^2 i", 0, "h_0 i"), ("P d_0 h_1", 1, "P d_0")],
            }.get((s, f), [])
            assigned = {}
            for nm, j, src_name in incoming:
                sp = pos_of_name.get(src_name)
                if sp is None:
                    continue
                tgt = product_target(j, sp[2])
                if tgt is not None and tgt in positions:
                    assigned[nm] = tgt
            remaining_names = [n for n in names if n not in assigned]
            remaining_pos = [p for p in positions if p not in assigned.values()]
            for nm, pp in list(assigned.items()) + list(
                zip(remaining_names, remaining_pos)
            ):
                name_of_pos[pp] = (s, f, nm)
                pos_of_name[nm] = (s, f, pp)
            continue
        for nm, pp in zip(names, positions):
            name_of_pos[pp] = (s, f, nm)
            pos_of_name[nm] = (s, f, pp)

    # expand differentials through h0/h1/h2 multiplication on the E2 graph,
    # then apply page by page: a differential with an already-dead source or
    # target is vacuous
    candidates = []
    work = []
    seen_items = set()
    for page, src, tgt in DIFFS:
        work.append((page, pos_of_name[src][2], pos_of_name[tgt][2]))
    idx = 0
    while idx < len(work):
        item = work[idx]
        idx += 1
        if item in seen_items:
            continue
        seen_items.add(item)
        candidates.append(item)
        page, sp, tp = item
        for j in (0, 1, 2):
            souts = prod.get((j, sp), set())
            touts = prod.get((j, tp), set())
            if len(souts) == 1 and len(touts) == 1:
                work.append((page, next(iter(souts)), next(iter(touts))))

    dead = set()
    for page in (2, 3, 4):
        for p, sp, tp in candidates:
            if p != page:
                continue
            if sp in dead or tp in dead:
                continue
            if sp in name_of_pos and tp in name_of_pos:
                dead.add(sp)
                dead.add(tp)
    diffs = {}

    lines_out = []
    orders = defaultdict(int)
    gen_rows = []
    einf_names = set()
    for pp, (s, f, nm) in sorted(name_of_pos.items(), key=lambda kv: (kv[1][0], kv[1][1])):
        if s > MAX_STEM:
            continue
        if pp in dead:
            continue
        if s == 0 and f > 16:
            continue
        gen_rows.append(f'gen "{nm}" {s} {f} 0 "{nm}"')
        einf_names.add(nm)
        if s >= 1:
            orders[s] += 1
    for pp, (s, f, nm) in name_of_pos.items():
        if s > MAX_STEM or pp in dead:
            continue
        for j, op in ((0, "h0"), (1, "h1"), (2, "h2")):
            for tp in prod.get((j, pp), set()):
                info = name_of_pos.get(tp)
                if info and tp not in dead and info[0] <= MAX_STEM:
                    lines_out.append(f'line {op} "{nm}" "{info[2]}"')

    out = ["# Classical Adams E-infinity chart and 2-complete stem orders.",
           "# Generated by tools/gen_classical.py from the minimal resolution.",
           "kind classical-stems",
           f"window s 0 {MAX_STEM} f 0 16 c 0 0"]
    # symbols for multi-factor names
    syms = {
        "h_0": (0, 1, 0), "h_1": (1, 1, 0), "h_2": (3, 1, 0), "h_3": (7, 1, 0),
        "h_4": (15, 1, 0), "c_0": (8, 3, 0), "c_1": (19, 3, 0), "P": (8, 4, 0),
        "d_0": (14, 4, 0), "e_0": (17, 4, 0), "f_0": (18, 4, 0), "g": (20, 4, 0),
        "i": (23, 7, 0), "j": (26, 7, 0),
    }
    for nm, (s, f, c) in syms.items():
        out.append(f"symbol {nm} {s} {f} {c}")
    out.extend(sorted(gen_rows, key=lambda r: r))
    out.extend(sorted(set(lines_out)))
    for s in range(1, MAX_STEM + 1):
        out.append(f"order {s} {1 << orders[s]}")
    for src, tgt in HIDDEN_2:
        if tgt and src in einf_names and tgt in einf_names:
            out.append(f'hext h "{src}" "{tgt}" cite="classical 2-extension"')
    for src, tgt in HIDDEN_ETA:
        if tgt and src in einf_names and tgt in einf_names:
            out.append(f'hext eta "{src}" "{tgt}" cite="classical eta-extension"')
    (OUT / "classical_stems.txt").write_text("\n".join(out) + "\n", encoding="utf-8")
    print("orders:", [1 << orders[s] for s in range(1, MAX_STEM + 1)])


if __name__ == "__main__":
    main()
