#!/usr/bin/env python3
"""Minimal free resolution of F2 over the mod-2 Steenrod algebra.

Data-preparation tool: computes Ext_A(F2, F2) generators (stem, filtration)
together with h0/h1/h2 product structure, through a configurable range.
Output is used to transcribe the classical chart datasets; it is not part
of the installed package.

Usage: python3 tools/minres.py --max-stem 27 --max-f 14 > classical_ext.json
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from itertools import count

# ---------------------------------------------------------------- Milnor basis

PART_DEGS = [(1 << i) - 1 for i in range(1, 8)]  # degrees of xi_i


@lru_cache(maxsize=None)
def milnor_basis(t: int) -> tuple[tuple[int, ...], ...]:
    """All Sq(r1, r2, ...) of degree t = sum r_i (2^i - 1), trailing zeros cut."""
    out = []

    def rec(i, rem, acc):
        if i >= len(PART_DEGS):
            if rem == 0:
                out.append(tuple(acc))
            return
        d = PART_DEGS[i]
        if rem == 0:
            out.append(tuple(acc))
            return
        for r in range(rem // d, -1, -1):
            rec(i + 1, rem - r * d, acc + [r])

    rec(0, t, [])
    cleaned = set()
    for r in out:
        lst = list(r)
        while lst and lst[-1] == 0:
            lst.pop()
        cleaned.add(tuple(lst))
    return tuple(sorted(cleaned))


def milnor_degree(r: tuple[int, ...]) -> int:
    return sum(ri * PART_DEGS[i] for i, ri in enumerate(r))


def _odd_multinomial(parts: list[int]) -> bool:
    """Multinomial coefficient (sum!)/(prod parts!) is odd iff no binary carries."""
    acc = 0
    for p in parts:
        if acc & p:
            return False
        acc |= p
    return True


@lru_cache(maxsize=None)
def milnor_product(r: tuple[int, ...], s: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Product Sq(r)·Sq(s) in the Milnor basis (mod 2, as a sorted tuple)."""
    if not r:
        return (s,)
    if not s:
        return (r,)
    lr, ls = len(r), len(s)
    result: set[tuple[int, ...]] = set()
    acc: dict[tuple[int, ...], int] = {}

    # X[i][j]: i = 1..lr rows, j = 0..ls cols; x[0][j] derived from s
    def rec(i, rows):
        if i > lr:
            # column sums: sum_i x_{ij} for i>=1 must be <= s_j; x0j = s_j - that
            x0 = []
            ok = True
            for j in range(1, ls + 1):
                col = sum(rows[ii - 1][j] for ii in range(1, lr + 1))
                if col > s[j - 1]:
                    ok = False
                    break
                x0.append(s[j - 1] - col)
            if not ok:
                return
            # assemble T and coefficient
            maxn = lr + ls
            tvals = [0] * (maxn + 1)
            diag_parts: dict[int, list[int]] = {}
            for n in range(1, maxn + 1):
                parts = []
                for ii in range(0, lr + 1):
                    j = n - ii
                    if j < 0 or j > ls:
                        continue
                    if ii == 0:
                        if j >= 1:
                            parts.append(x0[j - 1])
                    else:
                        parts.append(rows[ii - 1][j])
                diag_parts[n] = parts
                tvals[n] = sum(parts)
            if all(_odd_multinomial(p) for p in diag_parts.values()):
                tv = tvals[1:]
                while tv and tv[-1] == 0:
                    tv.pop()
                key = tuple(tv)
                acc[key] = acc.get(key, 0) ^ 1
            return
        # choose x_{i1}, ..., x_{ils} with sum_j 2^j x_{ij} = r_i;
        # x_{i0} absorbs the remainder (2^0 steps)
        ri = r[i - 1]
        row = [0] * (ls + 1)

        def choose2(j, rem):
            if j == 0:
                row[0] = rem
                rows.append(tuple(row))
                rec(i + 1, rows)
                rows.pop()
                row[0] = 0
                return
            step = 1 << j
            for v in range(rem // step, -1, -1):
                row[j] = v
                choose2(j - 1, rem - v * step)
            row[j] = 0

        choose2(ls, ri)

    rec(1, [])
    return tuple(sorted(k for k, v in acc.items() if v))


# ------------------------------------------------------------------ resolution


class Resolution:
    def __init__(self, max_f: int, max_t: int):
        self.max_f = max_f
        self.max_t = max_t
        # gens[f] = list of internal degrees
        self.gens: list[list[int]] = [[0]]
        # dvals[f][i] = element of F_{f-1} as dict {(gen_idx, milnor): 1}
        self.dvals: list[list[dict]] = [[{}]]
        self.kernel_bases: list[dict[int, list[dict]]] = [dict()]

    def basis(self, f: int, t: int) -> list[tuple[int, tuple[int, ...]]]:
        out = []
        for i, tg in enumerate(self.gens[f]):
            if tg <= t:
                for m in milnor_basis(t - tg):
                    out.append((i, m))
        return out

    def apply_d(self, f: int, elem: dict) -> dict:
        """Differential F_f -> F_{f-1} applied to an element dict."""
        out: dict = {}
        for (i, m), _ in elem.items():
            for (j, m2), _ in self.dvals[f][i].items():
                for prod in milnor_product(m, m2):
                    key = (j, prod)
                    if key in out:
                        del out[key]
                    else:
                        out[key] = 1
        return out

    def act(self, m: tuple[int, ...], elem: dict) -> dict:
        out: dict = {}
        for (i, m2), _ in elem.items():
            for prod in milnor_product(m, m2):
                key = (i, prod)
                if key in out:
                    del out[key]
                else:
                    out[key] = 1
        return out

    def extend(self, f: int, progress=lambda *a: None):
        """Compute generators of F_f given F_{f-1} (f >= 1)."""
        gens: list[int] = []
        dv: list[dict] = []
        kbases: dict[int, list[dict]] = {}
        tmin = f  # minimal possible internal degree at filtration f
        for t in range(tmin, self.max_t + 1):
            dom = self.basis(f - 1, t)
            dom_index = {b: k for k, b in enumerate(dom)}
            if f == 1:
                # kernel of augmentation F_0 -> F2: everything in positive degree
                kvecs = [
                    {b: 1} for b in dom if b[1] != ()
                ]
            else:
                cod = self.basis(f - 2, t)
                cod_index = {b: k for k, b in enumerate(cod)}
                rows = []
                for b in dom:
                    img = self.apply_d(f - 1, {b: 1})
                    bits = 0
                    for key in img:
                        bits |= 1 << cod_index[key]
                    rows.append(bits)
                kvecs_bits = nullspace(rows, len(dom))
                kvecs = []
                for kb in kvecs_bits:
                    kvecs.append({dom[i]: 1 for i in range(len(dom)) if (kb >> i) & 1})
            # span of A+ . (new gens found so far at lower degrees)
            red = BitReducer()
            for tg, dval in zip(gens, dv):
                dt = t - tg
                if dt <= 0:
                    continue
                for m in milnor_basis(dt):
                    if m == ():
                        continue
                    img = self.act(m, dval)
                    bits = 0
                    ok = True
                    for key in img:
                        if key not in dom_index:
                            ok = False
                            break
                        bits |= 1 << dom_index[key]
                    if ok and bits:
                        red.add(bits)
            newly = []
            kstore = []
            for kv in kvecs:
                bits = 0
                for key in kv:
                    bits |= 1 << dom_index[key]
                kstore.append(kv)
                if not red.contains(bits):
                    red.add(bits)
                    gens.append(t)
                    dv.append(kv)
                    newly.append(kv)
            kbases[t] = kstore
            if newly:
                progress(f, t, len(newly))
        self.gens.append(gens)
        self.dvals.append(dv)
        self.kernel_bases.append(kbases)


class BitReducer:
    def __init__(self):
        self.rows: list[int] = []

    def reduce(self, bits: int) -> int:
        for b in self.rows:
            top = b.bit_length() - 1
            if (bits >> top) & 1:
                bits ^= b
        return bits

    def contains(self, bits: int) -> bool:
        return self.reduce(bits) == 0

    def add(self, bits: int) -> bool:
        red = self.reduce(bits)
        if red == 0:
            return False
        self.rows.append(red)
        self.rows.sort(key=lambda x: -x.bit_length())
        return True


def nullspace(rows: list[int], n: int) -> list[int]:
    """Kernel {x : xor of rows[i] over bits(x) == 0} for row-combinations."""
    work = [(rows[i], 1 << i) for i in range(n)]
    rank = 0
    ncols = max((r.bit_length() for r in rows), default=0)
    for col in range(ncols):
        piv = None
        for r in range(rank, n):
            if (work[r][0] >> col) & 1:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for r in range(n):
            if r != rank and ((work[r][0] >> col) & 1):
                work[r] = (work[r][0] ^ work[rank][0], work[r][1] ^ work[rank][1])
        rank += 1
    return [comb for bits, comb in work[rank:]]


def hj_products(res: Resolution, f: int) -> list[tuple[int, int, int]]:
    """(j, src_idx_in_f, dst_idx_in_f+1) for h_j * gen(f,src) = gen(f+1,dst) + ..."""
    out = []
    for k, dval in enumerate(res.dvals[f + 1]):
        for (i, m), _ in dval.items():
            for j in range(4):
                if m == ((1 << j),):
                    out.append((j, i, k))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-stem", type=int, default=27)
    ap.add_argument("--max-f", type=int, default=14)
    args = ap.parse_args()

    max_f = args.max_f
    res = Resolution(max_f, args.max_stem + max_f)

    def progress(f, t, n):
        print(f"  f={f} t={t} stem={t-f}: +{n}", file=sys.stderr)

    for f in range(1, max_f + 1):
        res.max_t = args.max_stem + f  # only need stems <= max_stem
        res.extend(f, progress)

    gens = []
    for f in range(0, max_f + 1):
        for i, t in enumerate(res.gens[f]):
            gens.append({"f": f, "i": i, "s": t - f, "t": t})
    prods = []
    for f in range(0, max_f):
        for (j, i, k) in hj_products(res, f):
            prods.append({"h": j, "from": [f, i], "to": [f + 1, k]})
    json.dump({"max_stem": args.max_stem, "max_f": max_f,
               "gens": gens, "products": prods}, sys.stdout, indent=0)
    print(file=sys.stdout)


if __name__ == "__main__":
    main()
