#!/usr/bin/env python3
"""Generate the embedded chart datasets from compact tables.

The C-motivic Ext dataset is organized as towers (h1-multiplication
families with a τ-torsion transition exponent) plus sporadic generators.
Ledger files transcribe the published differential and extension tables.

Run from the repo root:  python3 tools/gen_datasets.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from c2stems.degrees import TriDegree  # noqa: E402
from c2stems.labels import (  # noqa: E402
    GeneratorSymbol,
    SymbolTable,
    parse_label,
)

OUT = ROOT / "src" / "c2stems" / "datasets"

SYMBOLS = {
    "h_0": (0, 1, 0),
    "h_1": (1, 1, 0),
    "h_2": (3, 1, 1),
    "h_3": (7, 1, 3),
    "h_4": (15, 1, 7),
    "h_5": (31, 1, 15),
    "c_0": (8, 3, 3),
    "c_1": (19, 3, 8),
    "P": (8, 4, 4),
    "d_0": (14, 4, 6),
    "e_0": (17, 4, 7),
    "f_0": (18, 4, 8),
    "tg": (20, 4, 9),
    "h1g": (21, 5, 8),
    "h2g": (23, 5, 9),
    "i": (23, 7, 11),
    "j": (26, 7, 12),
    "k": (29, 7, 13),
    "R": (30, 6, 14),
}

TABLE = SymbolTable(GeneratorSymbol(n, TriDegree(*d)) for n, d in SYMBOLS.items())

SMAX = 34
FMAX = 24


def canon_and_degree(body: str):
    lbl = parse_label(body, TABLE)
    return lbl.format(), lbl.degree(TABLE)


# (body template with {k}, k_min, k_max, free_through)
# free_through: members with k <= free_through are τ-free; -1 = all torsion;
# 99 = all free.
TOWERS = [
    ("h_0^{k}", 1, 23, 99),
    ("h_1^{k}", 1, 22, 3),
    ("h_1^{k} c_0", 0, 16, 1),
    ("P h_1^{k}", 1, 14, 3),
    ("P^2 h_1^{k}", 1, 10, 3),
    ("P^3 h_1^{k}", 1, 6, 3),
    ("P^4 h_1^{k}", 1, 1, 3),
    ("h_1^{k} d_0", 0, 12, 3),
    ("h_1^{k} e_0", 0, 13, 1),
    ("P h_1^{k} c_0", 0, 12, 1),
    ("P^2 h_1^{k} c_0", 0, 6, 1),
    ("P h_1^{k} d_0", 0, 6, 3),
    ("P h_1^{k} e_0", 0, 5, 1),
    ("P^2 h_1^{k} e_0", 0, 1, 1),
    ("P^2 h_1^{k} d_0", 0, 3, 3),
    ("h_1^{k} c_0 d_0", 0, 7, -1),
    ("h_1^{k} c_0 e_0", 0, 5, -1),
    ("h_1^{k} d_0^2", 0, 4, 2),
    ("h_0^{k} h_4", 0, 7, 99),
    ("h_0^{k} h_5", 0, 15, 99),
    ("h_0^{k} i", 0, 5, 99),
]

SPORADIC_FREE = [
    "h_2", "h_0 h_2", "h_2^2",
    "h_3", "h_0 h_3", "h_0^2 h_3", "h_0^3 h_3",
    "h_1 h_3", "h_1^2 h_3",
    "P h_2", "h_0 P h_2",
    "h_3^2", "h_0 h_3^2", "h_0 d_0", "h_0^2 d_0",
    "h_1 h_4", "h_1^2 h_4",
    "h_0 e_0", "h_0^2 e_0",
    "h_2 h_4", "h_0 h_2 h_4", "f_0",
    "c_1", "P^2 h_2", "h_0 P^2 h_2",
    "tg", "h_2 e_0", "h_0 h_2 e_0",
    "h1g", "h_2^2 h_4", "h_1^3 h_4",
    "h_2 c_1", "h_0 P d_0", "P h_0^2 d_0",
    "h_4 c_0", "h2g", "h_0 h2g",
    "h_1 h_4 c_0", "h_2 h2g",
    "P^3 h_2", "h_0 P^3 h_2",
    "h_0 d_0^2", "h_0^2 d_0^2",
    "j", "h_0 j", "k", "h_0 k", "R", "d_0 e_0",
    "P^2 h_0 d_0", "P^2 h_0^2 d_0",
    "P c_0 d_0", "P h_0 e_0", "P h_0^2 e_0", "P^2 h_0 e_0", "P^2 h_0^2 e_0",
]

SPORADIC_TORSION = [
    "h_1^3 h_3",
    "h_1^2 h_4 c_0",
    "h_1 h_3^2",
]

# product relations keyed by the combined monomial: value is τ^shift · gen
RELATIONS = [
    ("h_0^2 h_2", "h_1^3", 1),
    ("P h_0^2 h_2", "P h_1^3", 1),
    ("P^2 h_0^2 h_2", "P^2 h_1^3", 1),
    ("P^3 h_0^2 h_2", "P^3 h_1^3", 1),
    ("h_2^3", "h_1^2 h_3", 0),
    ("d_0 h_2", "e_0 h_0", 0),
    ("h_1 tg", "h1g", 1),
    ("h_2 tg", "h2g", 1),
    ("h_0 tg", "e_0 h_2", 1),
    ("h_2 i", "h_0 j", 0),
    ("e_0 h_2^2", "h_0 h2g", 0),
    ("h_0^2 j", "P e_0 h_1", 1),
    ("P e_0 h_2", "d_0^2 h_0", 0),
    ("P h_2^2", "d_0 h_0^2", 0),
    ("P^2 h_2^2", "P h_0^2 d_0", 0),
    ("P^3 h_2^2", "P^2 h_0^2 d_0", 0),
    ("e_0 h_0^3", "d_0 h_1^3", 1),
    ("P e_0 h_0^3", "P d_0 h_1^3", 1),
    ("P^2 e_0 h_0^3", "P^2 d_0 h_1^3", 1),
    ("h_3^3", "h_2^2 h_4", 0),
    ("h_0^2 h_2 h_4", "h_1^3 h_4", 1),
    ("c_0^2", "d_0 h_1^2", 0),
    ("P c_0^2", "P d_0 h_1^2", 0),
]


def build_ext_dataset() -> str:
    rows = {}
    torsion = {}

    def add(body: str, tors: bool):
        cbody, deg = canon_and_degree(body)
        if deg.s > SMAX or deg.f > FMAX:
            return
        if cbody in rows:
            raise SystemExit(f"duplicate generator {cbody}")
        rows[cbody] = deg
        torsion[cbody] = tors

    def instantiate(tpl: str, kk: int) -> str:
        parts = []
        for tok in tpl.split():
            if tok.endswith("^{k}"):
                sym = tok[: -len("^{k}")]
                if kk == 0:
                    continue
                parts.append(sym if kk == 1 else f"{sym}^{kk}")
            else:
                parts.append(tok)
        return " ".join(parts) if parts else "1"

    add("1", False)
    for tpl, kmin, kmax, free_thru in TOWERS:
        for kk in range(kmin, kmax + 1):
            body = instantiate(tpl, kk)
            add(body, not (free_thru == 99 or kk <= free_thru))
    for body in SPORADIC_FREE:
        add(body, False)
    for body in SPORADIC_TORSION:
        add(body, True)

    lines_out = []
    ids = set(rows)
    for mono, dst, sh in RELATIONS:
        cmono, _ = canon_and_degree(mono)
        cdst, _ = canon_and_degree(dst)
        if cdst not in ids:
            raise SystemExit(f"relation targets missing generator: {mono} -> {dst}")
        opt = f" tau={sh}" if sh else ""
        lines_out.append(f'rel "{cmono}" "{cdst}"{opt}')

    out = ["# C-motivic Ext dataset: F2[tau]-module generators with",
           "# h0/h1/h2 product structure.  Generated by tools/gen_datasets.py.",
           "kind ext-dataset",
           f"window s 0 {SMAX} f 0 {FMAX} c 0 20"]
    for name, (s, f, c) in SYMBOLS.items():
        out.append(f"symbol {name} {s} {f} {c}")
    for body in sorted(rows, key=lambda b: (rows[b].s, rows[b].f, rows[b].c, b)):
        s, f, c = rows[body]
        tau = "tau=1" if torsion[body] else "tau=free"
        out.append(f'gen "{body}" {s} {f} {c} "{body}" {tau}')
    out.extend(lines_out)
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------ ledgers

BOCKSTEIN_NEG = [
    # (page, source, target, cite) -- negative cone ledger rows
    (3, "Q/r^3 h_1^4", "g/(t^3) h_0^3 h_3", "Table 2"),
    (4, "Q/r^4 h_1^5", "g/(t^4) P h_1", "Table 2"),
    (7, "Q/r^7 h_1^8", "g/(t^7) h_0^7 h_4", "Table 2"),
    (8, "Q/r^8 h_1^9", "g/(t^8) P^2 h_1", "Table 2"),
    (11, "Q/r^11 h_1^12", "g/(t^11) h_0^5 i", "Table 2"),
    (12, "Q/r^12 h_1^13", "g/(t^12) P^3 h_1", "Table 2"),
    (15, "Q/r^15 h_1^16", "g/(t^15) h_0^15 h_5", "Table 2"),
    (16, "Q/r^16 h_1^17", "g/(t^16) P^4 h_1", "Table 2"),
    (1, "Q/r h_1^2 c_0", "g/(t^2) P h_2", "Table 2"),
    (3, "Q/r^3 h_1^3 c_0", "g/(t^3) h_0^2 d_0", "Table 2"),
    (4, "Q/r^4 h_1^4 c_0", "g/(t^4) P c_0", "Table 2"),
    (3, "Q/r^3 P h_1^4", "Q h_1^6 c_0 + g/(t^3) h_0^7 h_4", "Table 2"),
    (4, "Q/r^4 h_1^4 d_0", "g/(t^4) P d_0", "Table 2"),
    (1, "Q/r P h_1^2 c_0", "g/(t^2) P^2 h_2", "Table 2"),
    (3, "Q/r^3 P h_1^3 c_0", "Q h_1^7 d_0 + g/(t^3) P h_0^2 d_0", "Table 2"),
    (1, "Q/r h_1^2 e_0", "g/(t) h_0 h_2 e_0", "Table 2"),
    (3, "Q/r^3 h_1^3 e_0", "g/(t^4) i", "Table 2"),
    (4, "Q/r^4 h_1^4 e_0", "g/(t^4) P e_0", "Table 2"),
    (5, "Q/r^5 h_1^6 e_0", "g/(t^5) h_0^2 d_0^2", "Table 2"),
    (6, "Q/r^6 h_1^7 e_0", "g/(t^6) P c_0 d_0", "Table 2"),
    (8, "Q/r^8 h_1^8 e_0", "g/(t^8) P^2 e_0", "Table 2"),
    (3, "Q/r^3 P^2 h_1^4", "g/(t^3) h_0^5 i", "Table 2"),
    (4, "Q/r^4 P^2 h_1^5", "g/(t^4) P^3 h_1", "Table 2"),
    (1, "Q/r c_0 d_0", "g/(t^2) i", "Table 2"),
    (2, "Q/r^2 h_1 c_0 d_0", "g/(t^2) P e_0", "Table 2"),
    (3, "Q/r^3 h_1^3 c_0 d_0", "g/(t^3) h_0^2 d_0^2", "Table 2"),
    (1, "Q/r c_0 e_0", "g/(t^2) j", "Table 2"),
    (2, "Q/r^2 h_1 c_0 e_0", "g/(t^2) d_0^2", "Table 2"),
]

E1_HIDDEN = [
    # Table 1: hidden products in the E1-page of the negative cone
    ("h0", "Q h_1^2 c_0", "g/(t) P h_2"),
    ("h2", "Q h_1^2 c_0", "g/(t) h_0 d_0"),
    ("h0", "Q P h_1^2 c_0", "g/(t) P^2 h_2"),
    ("h2", "Q P h_1^2 c_0", "g/(t) h_0 P d_0"),
    ("h0", "Q c_0 d_0", "g/(t) i"),
    ("h2", "Q c_0 d_0", "g/(t) j"),
    ("h0", "Q c_0 e_0", "g/(t) j"),
    ("h2", "Q c_0 e_0", "g/(t) k"),
    ("h0", "Q P^2 h_1^2 c_0", "g/(t) P^3 h_2"),
    ("h2", "Q P^2 h_1^2 c_0", "g/(t) P^2 h_0 d_0"),
]

BOCKSTEIN_POS = [
    # exotic R-motivic rows: (page, source, target, scope, cite)
    (4, "t h_0^3 h_3", "r^4 h_1^2 c_0", "single", "R-ledger"),
    (5, "t^9 h_0^3 h_3", "r^5 t^6 P h_2", "tauper:16", "R-ledger"),
    (3, "P h_1", "r^3 h_1^3 c_0", "single", "R-ledger"),
    (6, "t^8 P h_1", "r^6 t^5 h_0^2 d_0", "tauper:16", "R-ledger"),
    (3, "P h_1^2", "r^3 h_1^4 c_0", "single", "R-ledger"),
    (7, "t^8 P h_1^2", "r^7 t^4 P c_0", "tauper:16", "R-ledger"),
    (3, "P c_0", "r^3 h_1^4 d_0", "single", "R-ledger"),
    (7, "t^8 P c_0", "r^7 t^4 P d_0", "tauper:16", "R-ledger"),
    (11, "t^4 P h_1^2", "r^11 h_1^3 e_0", "single", "R-ledger"),
    (11, "t^4 P h_1", "r^11 h_1^2 e_0", "single", "R-ledger"),
    (8, "t h_0^7 h_4", "r^8 h_1^5 e_0", "single", "R-ledger"),
    (3, "t^3 h_2^2", "r^3 t c_0", "tauper:4", "R-ledger"),
    (3, "t^3 h_0^2 d_0", "r^3 t P c_0", "tauper:4", "R-ledger"),
    (3, "t^3 P h_0^2 d_0", "r^3 t P^2 c_0", "tauper:4", "R-ledger"),
    (3, "t^3 h_0^3 h_3", "r^3 t P h_1", "tauper:4", "R-ledger"),
    (3, "t^3 h_0^7 h_4", "r^3 t P^2 h_1", "tauper:4", "R-ledger"),
    (3, "t^3 h_0^5 i", "r^3 t P^3 h_1", "tauper:4", "R-ledger"),
    (6, "t^6 h_3^2", "r^6 t^3 c_1", "tauper:8", "R-ledger"),
    (3, "t^3 h_1 h_4 c_0", "r^3 t^2 h_2 h2g", "tauper:4", "R-ledger"),
    (9, "t^7 h_1^2 h_3", "r^9 t^2 e_0", "tauper:16", "R-ledger"),
    (5, "t^5 h_0^7 h_4", "r^5 t^2 P^2 h_2", "tauper:8", "R-ledger"),
    (4, "t h_0^5 i", "r^4 P^2 h_1^2 c_0", "single", "R-ledger"),
    (6, "t^2 i", "r^6 d_0^2", "tauper:8", "R-ledger"),
    (4, "i", "r^4 h_1 c_0 e_0", "single", "R-ledger"),
    (4, "t P^2 h_0^2 d_0", "r^4 P^2 h_1^3 d_0", "single", "R-ledger"),
    (5, "t^4 P^2 d_0", "r^5 t^2 P^2 h_1 e_0", "single", "R-ledger"),
    (3, "P h_1^3 c_0", "r^3 h_1^7 d_0", "single", "R-ledger"),
    (7, "P^2 h_1", "r^7 h_1^6 e_0", "single", "R-ledger"),
    (7, "P^2 h_1^4", "r^7 h_1^9 e_0", "single", "R-ledger"),
    (3, "P^3 h_1", "r^3 P^2 h_1^3 c_0", "single", "R-ledger"),
    # tg is tau times a formal class, so it supports the tau-type d1
    (1, "tg", "r e_0 h_2", "tauper:2", "R-ledger"),
]


def ledger_file(kind: str, rows, header: str) -> str:
    out = [f"# {header}", f"kind {kind}"]
    for row in rows:
        if kind in ("bockstein-ledger", "adams-ledger"):
            if len(row) == 4:
                page, src, tgt, cite = row
                scope = "single"
            else:
                page, src, tgt, scope, cite = row
            opt = f" scope={scope}" if scope != "single" else ""
            out.append(f'diff {page} "{src}" "{tgt}"{opt} cite="{cite}"')
        elif kind == "hidden-extensions":
            op, src, tgt = row[:3]
            cite = row[3] if len(row) > 3 else "Table 1"
            out.append(f'hext {op} "{src}" "{tgt}" cite="{cite}"')
    return "\n".join(out) + "\n"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "ext_c.txt").write_text(build_ext_dataset(), encoding="utf-8")
    (OUT / "bockstein_neg.txt").write_text(
        ledger_file("bockstein-ledger", BOCKSTEIN_NEG,
                    "Negative-cone Bockstein differential ledger"),
        encoding="utf-8",
    )
    (OUT / "bockstein_pos.txt").write_text(
        ledger_file("bockstein-ledger", BOCKSTEIN_POS,
                    "R-motivic Bockstein differential ledger (beyond tau towers)"),
        encoding="utf-8",
    )
    (OUT / "e1_hidden.txt").write_text(
        ledger_file("hidden-extensions", E1_HIDDEN,
                    "Hidden products in the negative-cone E1-page"),
        encoding="utf-8",
    )
    print("datasets written to", OUT)


if __name__ == "__main__":
    main()


ADAMS_D2 = [
    (2, "g/(t^7) h_4", "g/(t^7) h_0 h_3^2", "Table 12"),
    (2, "g/(t^11) i", "g/(t^11) P d_0 h_0", "Table 12"),
    (2, "g/(r^6 t^9) h_0 h2g", "g/(t^13) d_0^2", "Table 12"),
    (2, "g/(r^4 t^5) h_0 h_3^2", "g/(t^7) e_0 h_0", "Table 12"),
    (2, "g/(t^11) j", "g/(t^11) P e_0 h_0", "Table 12"),
    (2, "g/(r^4 t^9) h_2 h2g", "g/(r t^12) d_0^2", "Table 12"),
    (2, "g/(t^5) h_4", "g/(t^5) h_0 h_3^2", "Table 12"),
    (2, "g/(r^8 t) h_1^2 h_3", "g/(r t^5) d_0 h_1", "Table 12"),
    (2, "g/(r^7 t^4) d_0 h_1^2", "g/(t^9) P d_0", "Table 12"),
    (2, "g/(r^8 t^4) d_0 h_1^3", "g/(r t^9) P d_0 h_1", "Table 12"),
    (2, "g/(t^11) k", "g/(t^11) d_0^2 h_0", "Table 12"),
    (2, "g/(r^4 t^3) h_0 h_3^2", "g/(r^2 t^4) d_0 h_1 + g/(t^5) e_0 h_0", "Table 12"),
    (2, "g/(r^4 t^4) e_0", "g/(r^4 t^4) d_0 h_1^2", "Table 12"),
    (2, "g/(r^5 t^4) e_0 h_1", "g/(r^5 t^4) d_0 h_1^3", "Table 12"),
    (2, "g/(r^6 t^5) e_0 h_0 h_2", "g/(t^9) P e_0 + g/(r^3 t^8) P d_0", "Table 12"),
    (2, "g/(r^5 t^8) i", "g/(r^4 t^8) P d_0 h_1", "Table 12"),
    (2, "g/(t^3) h_4", "g/(t^3) h_0 h_3^2", "Table 12"),
    (2, "g/(r^3 t^4) f_0", "g/(t^5) e_0 h_0 h_2", "Table 12"),
    (2, "g/(t^7) i", "g/(t^7) P d_0 h_0", "Table 12"),
    (2, "g/(t^9) k", "g/(t^9) d_0^2 h_0", "Table 12"),
    (2, "Q/r^2 P h_1^4", "c_0 h_1^6", "Table 12"),
    (2, "g/(t^3) f_0", "g/(t^3) e_0 h_0^2", "Table 12"),
    (2, "g/(r^6 t^3) e_0 h_0 h_2", "g/(t^7) P e_0", "Table 12"),
    (2, "g/(t) h_4", "g/(t) h_0 h_3^2", "Table 12"),
    (2, "g/(t) e_0", "g/(t) d_0 h_1^2", "Table 12"),
    (2, "g/(t^5) i", "g/(t^5) P d_0 h_0", "Table 12"),
    (2, "g/(t^5) P e_0", "g/(t^5) P d_0 h_1^2", "Table 12"),
    (2, "g/(r^5 t^2) h1g", "g/(r^2 t^6) i", "Table 12"),
    (2, "g/(r^6 t^3) h_0 h2g", "g/(r^3 t^6) P e_0 + g/(t^7) d_0^2", "Table 12"),
    (2, "g/(t) f_0", "g/(t) e_0 h_0^2", "Table 12"),
    (2, "g/(t^5) j", "g/(t^5) P e_0 h_0", "Table 12"),
    (2, "Q P h_1^2 c_0", "r^2 d_0 h_1^6", "Table 12"),
    (2, "Q h_1^2 e_0", "Q h_1^4 d_0", "Table 12"),
    (2, "Q/r^2 P h_1^3 c_0", "d_0 h_1^7", "Table 12"),
    (2, "Q/r^2 h_1^3 e_0", "g/(t^3) P d_0 + Q/r^2 h_1^5 d_0", "Table 12"),
    (2, "Q/r^3 h_1^4 e_0", "Q/r^3 h_1^6 d_0", "Table 12"),
    (2, "Q/r^4 h_1^6 e_0", "g/(r^3 t^4) P^2 c_0", "Table 12"),
    (2, "g/(r^6 t) h_0 h2g", "g/(t^5) d_0^2", "Table 12"),
    (2, "Q/r^5 h_1^7 e_0", "g/(r^4 t^4) P^2 c_0 h_1", "Table 12"),
    (2, "Q/r^2 P^2 h_1^4", "r^4 e_0 h_1^9", "Table 12"),
    (2, "Q/r^3 P^2 h_1^5", "r^3 e_0 h_1^10", "Table 12"),
    (2, "g/(t^3) j", "g/(t^3) P e_0 h_0", "Table 12"),
    (2, "g/(r^4 t) h_2 h2g", "g/(r t^4) d_0^2", "Table 12"),
    (2, "Q/r^5 P^2 h_1^8", "r e_0 h_1^13 + Q/r P c_0 h_1^11", "Table 12"),
]

ADAMS_D3 = [
    (3, "g/(t^7) h_0 h_4", "g/(t^7) d_0 h_0", "Table 13"),
    (3, "g/(t^5) h_0 h_4", "g/(t^5) d_0 h_0", "Table 13"),
    (3, "g/(t^3) h_0 h_4", "g/(t^3) d_0 h_0", "Table 13"),
    (3, "g/(r^5 t^2) e_0 h_1", "g/(t^6) P d_0", "Table 13"),
    (3, "g/(r^5 t^3) e_0 h_0 h_2", "g/(r t^6) P d_0 h_1", "Table 13"),
    (3, "g/(t) h_0 h_4", "g/(t) d_0 h_0", "Table 13"),
    (3, "g/(r^2 t^2) h1g", "g/(t^5) P d_0", "Table 13"),
    (3, "g/(r^2 t^3) h_0 h2g", "g/(r t^5) P d_0 h_1", "Table 13"),
    (3, "g/(t^7) R", "g/(t^6) d_0^2 h_1", "Table 13"),
    (3, "h_0 h_4", "d_0 h_0 + r d_0 h_1", "Table 13"),
    (3, "g/(t^5) h_0 k", "g/(r^4 t^4) P^2 c_0", "Table 13"),
]

ADAMS_D4 = [
    (4, "g/(t^11) R", "g/(r^5 t^8) P d_0 h_1^2", "d4 ledger"),
    (4, "g/(t^10) R", "g/(r t^9) d_0^2 h_0^2", "d4 ledger"),
]

ADAMS_RMOT = [
    (2, "h_4", "h_0 h_3^2 + r h_1 h_3^2", "R-Adams"),
    (2, "e_0", "d_0 h_1^2", "R-Adams"),
    (2, "f_0", "e_0 h_0^2", "R-Adams"),
    (2, "i", "P d_0 h_0", "R-Adams"),
    (2, "j", "P e_0 h_0", "R-Adams"),
    (2, "k", "d_0^2 h_0 + r d_0^2 h_1", "R-Adams"),
    (2, "P e_0", "P d_0 h_1^2", "R-Adams"),
    (2, "d_0 e_0", "d_0^2 h_1^2", "R-Adams"),
    (3, "h_0 h_4", "d_0 h_0", "R-Adams"),
    (3, "h_0^2 h_4", "d_0 h_0^2", "R-Adams"),
    (3, "R", "t d_0^2 h_1", "R-Adams"),
]

ADAMS_PINS = [
    ("g/(r^2 t^9) h_1 h_4 c_0", "Table 11"),
    ("g/(r^6 t) h_1^2 h_3", "Table 11"),
    ("g/(r^5 t^2) h_3^2", "Table 11"),
    ("g/(r^4 t^3) h_0^7 h_4", "Table 11"),
    ("g/(r^4 t^7) h_0^5 i", "Table 11"),
    ("g/(r^2 t) h_0^2 d_0", "Table 11"),
    ("g/(r^2 t^5) P h_0^2 d_0", "Table 11"),
    ("g/(r^2 t) P h_0^2 d_0", "Table 11"),
    ("g/(r^2 t) h_1 h_4 c_0", "Table 11"),
    ("g/(r^3 t^4) h_4", "Table 11"),
    ("g/(r^2 t^5) h_2^2 h_4", "Table 11"),
    ("g/(r^6 t) h_0 h_3^2", "Table 11"),
    ("g/(r^5 t^6) i", "Table 11"),
    ("g/(r^2 t) h_2^2 h_4", "Table 11"),
    ("Q h_1^2 c_0", "permanent cycle lemma"),
    ("g/(r t^6) h_4", "permanent cycle lemma"),
    ("g/(r t^2) h_4", "permanent cycle lemma"),
    ("g/(r^2 t^4) f_0", "permanent cycle lemma"),
    ("Q/r e_0 h_1^8", "permanent cycle lemma"),
]

HIDDEN_RHO = [
    ("rho", "g/(t^7) e_0", "g/(r t^6) d_0 h_1"),
    ("rho", "g/(t^11) P e_0", "g/(r t^10) P d_0 h_1"),
    ("rho", "g/(t^12) j", "g/(t^11) P e_0"),
    ("rho", "g/(t^6) h_4", "g/(t^5) h_3^2"),
    ("rho", "g/(r t^5) h_0 h_3^2", "g/(t^5) d_0"),
    ("rho", "g/(t^12) k", "g/(t^11) d_0^2"),
    ("rho", "g/(t^13) R", "g/(t^12) k"),
    ("rho", "g/(t^11) h_0 k", "g/(r^5 t^8) P d_0 h_1"),
    ("rho", "g/(t^12) R", "g/(t^11) h_0 k"),
    ("rho", "g/(t^4) h_4", "g/(t^3) h_3^2"),
    ("rho", "g/(r t^3) h_0 h_3^2", "g/(t^3) d_0"),
    ("rho", "g/(t^8) i", "g/(t^7) P d_0"),
    ("rho", "g/(t^10) k", "g/(t^9) d_0^2"),
    ("rho", "Q h_1^2 c_0", "c_0 h_1^2"),
    ("rho", "Q c_0 h_1^3", "c_0 h_1^3"),
    ("rho", "Q c_0 h_1^4", "c_0 h_1^4"),
    ("rho", "Q c_0 h_1^5", "c_0 h_1^5"),
    ("rho", "g/(t^3) h_0^2 h_4", "Q/r^3 h_1^2 c_0"),
    ("rho", "g/(t^3) e_0", "g/(r t^2) d_0 h_1"),
    ("rho", "g/(t^4) f_0", "g/(t^3) e_0 h_0"),
    ("rho", "g/(t^7) h_0 i", "g/(r^5 t^4) P^2 h_1"),
    ("rho", "g/(t^2) h_4", "g/(t) h_3^2"),
    ("rho", "g/(r t) h_0 h_3^2", "g/(t) d_0"),
    ("rho", "g/(t^2) e_0", "g/(r t) d_0 h_1"),
    ("rho", "g/(t^2) e_0 h_1", "g/(r t) d_0 h_1^2"),
    ("rho", "g/(t^2) f_0", "g/(t) e_0 h_0"),
    ("rho", "h_0^3 h_4", "r^4 e_0 h_1"),
    ("rho", "e_0 h_0", "t d_0 h_1^2"),
    ("rho", "Q e_0 h_1^5 + g/(t^3) h_0 i", "Q/r^2 P c_0 h_1^3 + e_0 h_1^5"),
    ("rho", "Q e_0 h_1^6", "Q/r^2 P c_0 h_1^4 + e_0 h_1^6"),
    ("rho", "g/(t^3) P e_0", "g/(r t^2) P d_0 h_1"),
    ("rho", "Q e_0 h_1^7", "Q/r^2 P c_0 h_1^5 + e_0 h_1^7"),
    ("rho", "g/(t^4) j", "g/(t^3) P e_0"),
    ("rho", "Q e_0 h_1^8", "Q/r^2 P c_0 h_1^6 + e_0 h_1^8"),
    ("rho", "Q e_0 h_1^9", "Q/r^2 P c_0 h_1^7 + e_0 h_1^9"),
    ("rho", "Q e_0 h_1^10", "Q/r^2 P c_0 h_1^8 + e_0 h_1^10"),
    ("rho", "Q e_0 h_1^11", "Q/r^2 P c_0 h_1^9 + e_0 h_1^11"),
    ("rho", "Q e_0 h_1^12", "Q/r^2 P c_0 h_1^10 + e_0 h_1^12"),
]

HIDDEN_H = [
    ("h", "g/(r^2 t^9) h_2 h2g", "g/(t^11) d_0^2"),
    ("h", "g/(r t^7) tg", "g/(r^5 t^4) d_0 h_1^2"),
    ("h", "g/(t^7) h2g", "g/(r^6 t^4) d_0 h_1^3"),
    ("h", "g/(r^2 t^5) e_0 h_0 h_2", "g/(t^7) P d_0"),
    ("h", "g/(t) P h_0 h_2", "r^2 c_0 h_1^5"),
    ("h", "g/(t^5) h2g", "g/(r t^6) P d_0"),
    ("h", "g/(r^2 t^5) h_1 h_4 c_0", "g/(r^3 t^6) i"),
    ("h", "g/(t) e_0 h_2", "Q/r h_1^4 d_0"),
    ("h", "r^6 e_0", "t^2 P h_0 h_2"),
    ("h", "g/(t) P^2 h_0 h_2", "r^6 e_0 h_1^8"),
    ("h", "g/(t^3) h_0^4 i", "r^3 e_0 h_1^9"),
    ("h", "Q/r e_0 h_1^8", "g/(t^5) P^3 h_2"),
    ("h", "g/(t^5) P^3 h_0 h_2", "Q P c_0 h_1^10 + r^2 e_0 h_1^12"),
]

HIDDEN_ETA = [
    ("eta", "g/(t^8) h1g", "g/(t^10) P d_0"),
    ("eta", "g/(r t^9) h_0 h2g", "g/(t^11) P e_0"),
    ("eta", "g/(r t^9) h_2 h2g", "g/(t^11) d_0^2"),
    ("eta", "g/(t^5) h_0^3 h_4", "g/(t^5) P c_0"),
    ("eta", "g/(r t^7) tg", "g/(r^6 t^4) d_0 h_1^2"),
    ("eta", "g/(t^9) h_0^2 i", "g/(t^9) P^2 c_0"),
    ("eta", "g/(t^6) tg", "g/(r t^5) e_0 h_0 h_2"),
    ("eta", "g/(r t^5) e_0 h_0 h_2", "g/(t^7) P d_0"),
    ("eta", "g/(r t^7) h_2 h2g", "g/(t^9) d_0^2"),
    ("eta", "g/(t^3) h_0^2 h_4", "Q/r^3 c_0 h_1^4"),
    ("eta", "g/(t^7) h_0 i", "g/(r^6 t^4) P^2 h_1^2"),
    ("eta", "g/(r t) h_0 h_3^2", "g/(r t) d_0 h_1"),
    ("eta", "g/(t) h_0^3 h_4", "g/(t) P c_0"),
    ("eta", "g/(t^5) h_0^2 i", "g/(t^5) P^2 c_0"),
    ("eta", "h_0^3 h_4", "r^3 e_0 h_1^2"),
    ("eta", "g/(t) h_1 tg", "g/(t^2) P d_0"),
    ("eta", "g/(r t) h_0 h2g", "g/(t^3) P e_0"),
]


def write_adams_files():
    (OUT / "adams_d2.txt").write_text(
        ledger_file("adams-ledger", ADAMS_D2, "Adams d2 ledger"), encoding="utf-8")
    (OUT / "adams_d3.txt").write_text(
        ledger_file("adams-ledger", ADAMS_D3, "Adams d3 ledger"), encoding="utf-8")
    (OUT / "adams_d4.txt").write_text(
        ledger_file("adams-ledger", ADAMS_D4, "Adams d4 ledger"), encoding="utf-8")
    (OUT / "adams_rmotivic.txt").write_text(
        ledger_file("adams-ledger", ADAMS_RMOT,
                    "R-motivic Adams differentials (classical lifts)"),
        encoding="utf-8")
    pins = ["# Permanent-cycle pins", "kind adams-ledger"]
    for label, cite in ADAMS_PINS:
        pins.append(f'pin permanent "{label}" cite="{cite}"')
    (OUT / "adams_pins.txt").write_text("\n".join(pins) + "\n", encoding="utf-8")
    for name, rows in (("hidden_rho", HIDDEN_RHO), ("hidden_h", HIDDEN_H),
                       ("hidden_eta", HIDDEN_ETA)):
        out = [f"# Hidden {name.split('_')[1]}-extensions at the Adams E-infinity page",
               "kind einf-hext"]
        for op, src, tgt in rows:
            out.append(f'hext {op} "{src}" "{tgt}" cite="hidden extension tables"')
        (OUT / f"{name}.txt").write_text("\n".join(out) + "\n", encoding="utf-8")


write_adams_files()
