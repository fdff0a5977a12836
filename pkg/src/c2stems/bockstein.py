"""The ρ-Bockstein engine: E1 pages, ledger closure, page turning, audits.

The run materializes both cones of the E1-page over a padded window,
expands the differential ledgers under ρ-linearity, multiplication by
surviving generators, and declared τ-(co)periodic scopes, then turns
pages until the ledger is exhausted.  Infinitely divisible families are
tracked symbolically as cotowers with explicit in-window fates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .basis import (
    BasisClass,
    Dataset,
    GammaClass,
    PosClass,
    QClass,
    class_from_label,
    multiply,
    multiply_by_pos,
    rho_multiple,
    shift_rho,
    shift_tau,
)
from .chartfile import ChartFile, HiddenExtension, LedgerEntry
from .degrees import BOCKSTEIN_SHIFT, DegreeBox, TriDegree
from .f2 import F2Matrix, F2Vector, Reducer, preimage
from .labels import format_label
from .pages import Conflict, DeadSource, PageState, PinnedClassDied, ResolvedEntry
from .seeds import SeedDifferential, gamma_seed_differentials, tau_seed_differentials


def _note(text: str) -> str:
    return text if len(text) <= 72 else text[:69] + "..."


@dataclass(frozen=True)
class BaseEntry:
    """A label-level differential before expansion."""

    page: int
    source: tuple[BasisClass, ...]
    target: tuple[BasisClass, ...]
    scope: str = "single"
    cite: str = ""
    base: bool = True
    note: str = ""
    weak: bool = False  # product passed through a Q-class: defined only up
    #                     to γ-indeterminacy, loses conflicts instead of
    #                     raising


@dataclass
class CotowerFamily:
    base_label: str
    direction: str  # "rho-divisible"
    fate: str  # survives-in-window | truncated | unknown-beyond-window
    resolved_until: int
    detail: str = ""
    members_alive: int = 0


@dataclass
class RunResult:
    dataset: Dataset
    box: DegreeBox
    pages: list[PageState]
    closed: dict[int, list[ResolvedEntry]]
    cotowers: list[CotowerFamily]

    @property
    def einf(self) -> PageState:
        return self.pages[-1]

    def dims(self, box: Optional[DegreeBox] = None) -> dict[TriDegree, int]:
        box = box or self.box
        out = {}
        for deg in box.degrees():
            d = self.einf.dim(deg)
            if d:
                out[deg] = d
        return out


def _q_indeterminacy(page: PageState, deg: TriDegree) -> list[int]:
    st = page.state(deg)
    if st is None:
        return []
    return [1 << i for i, c in enumerate(st.basis) if isinstance(c, GammaClass)]


class BocksteinRun:
    def __init__(
        self,
        dataset: Dataset,
        box: DegreeBox,
        cones: str = "+-",
        rmax: int = 16,
        use_seeds: bool = True,
    ):
        self.dataset = dataset
        self.box = box
        self.cones = cones
        self.rmax = rmax
        self.use_seeds = use_seeds
        ds_window = dataset.window
        pad_s = min(rmax + 1, max(0, ds_window.smax - box.smax)) if ds_window else rmax + 1
        pad_f = rmax + 1
        self.full_box = DegreeBox(
            box.smin,
            box.smax + pad_s,
            box.fmin,
            min(box.fmax + pad_f, (ds_window.fmax if ds_window else box.fmax + pad_f)),
            box.cmin - 1,
            box.cmax + 1,
        )
        self.base_entries: list[BaseEntry] = []
        self.pins: list[tuple[BasisClass, ...] | tuple] = []
        self.pin_cites: list[str] = []
        self.q_overrides: dict[tuple[str, str], tuple[BasisClass, ...]] = {}
        self.gen_death_page: dict[str, int] = {}
        self.gen_diff: dict[str, tuple[int, tuple[BasisClass, ...]]] = {}

    # ------------------------------------------------------------ construction

    def build_e1(self) -> PageState:
        ds = self.dataset
        bases: dict[TriDegree, list[BasisClass]] = {}

        def put(cls: BasisClass):
            deg = cls.degree(ds)
            if deg in self.full_box:
                bases.setdefault(deg, []).append(cls)

        fb = self.full_box
        for g in ds.chart.generators:
            s, f, c = g.degree
            if f < fb.fmin or f > fb.fmax + 1:
                continue
            if "+" in self.cones:
                k = g.tau_torsion
                for a in range(0, max(0, s - fb.smin) + 1):
                    bmax = fb.cmax - c
                    brange = range(max(0, fb.cmin - c), bmax + 1)
                    for b in brange:
                        if k is not None and b >= k:
                            break
                        put(PosClass(g.id, a, b))
            if "-" in self.cones:
                if g.tau_torsion is None:
                    for a in range(0, max(-1, fb.smax - s) + 1):
                        for b in range(max(1, c - 1 - fb.cmax), c - 1 - fb.cmin + 1):
                            put(GammaClass(g.id, a, b))
                else:
                    if g.tau_torsion != 1:
                        raise NotImplementedError("torsion exponent >= 2")
                    if fb.cmin <= c <= fb.cmax:
                        for a in range(0, max(-1, fb.smax - 1 - s) + 1):
                            put(QClass(g.id, a))
        return PageState(ds, self.box, self.full_box, bases)

    # ------------------------------------------------------------------ inputs

    def add_ledger(self, chart: ChartFile):
        ds = self.dataset
        for e in chart.entries:
            src = _resolve_classes(e.source, ds)
            tgt = _resolve_classes(e.target, ds)
            if src is None:
                raise DeadSource(
                    f"ledger source denotes zero: {e.cite}"
                )
            self.base_entries.append(
                BaseEntry(e.page, src, tgt or (), e.scope, e.cite, base=True)
            )
        for p in chart.pins:
            cls = class_from_label(p.label, ds)
            if cls is None:
                raise DeadSource(f"pinned label denotes zero: {p.cite}")
            self.pins.append((cls,))
            self.pin_cites.append(p.cite)
        for h in chart.hexts:
            self._register_hidden_e1(h)

    def _register_hidden_e1(self, h: HiddenExtension):
        """Table-style E1 extensions: products of h0/h2 with Q classes that
        land in the γ part.  Stored as product overrides."""
        ds = self.dataset
        if h.op not in ("h0", "h1", "h2"):
            return
        sym = {"h0": "h_0", "h1": "h_1", "h2": "h_2"}[h.op]
        op_gen = ds.by_body[sym].id
        src = _resolve_classes(h.source, ds)
        tgt = _resolve_classes(h.target, ds)
        if not src or len(src) != 1 or not isinstance(src[0], QClass):
            return
        q = src[0]
        if q.a != 0:
            return
        if ds.product_gen(op_gen, q.gen) is not None:
            raise Conflict(
                f"hidden E1 extension {h.cite} overlaps a nonzero plain product"
            )
        self.q_overrides[(op_gen, q.gen)] = tuple(tgt or ())

    def add_seeds(self, seeds: Iterable[SeedDifferential]):
        ds = self.dataset
        for s in seeds:
            src = class_from_label(s.source, ds)
            tgt = class_from_label(s.target, ds)
            if src is None:
                continue
            self.base_entries.append(
                BaseEntry(
                    s.page,
                    (src,),
                    (tgt,) if tgt is not None else (),
                    "single",
                    s.provenance,
                    base=False,
                )
            )

    # ----------------------------------------------------------------- closure

    def _mul_by_entry_target(
        self,
        vop: tuple[BasisClass, ...],
        classes: tuple[BasisClass, ...],
    ) -> Optional[tuple[BasisClass, ...]]:
        """Evaluate d(op)·u where d(op) is a sum of positive-cone classes."""
        out: dict[BasisClass, int] = {}
        for t in vop:
            if not isinstance(t, PosClass):
                return None
            for c in classes:
                p = multiply_by_pos(c, t, self.dataset)
                if p is not None:
                    out[p] = out.get(p, 0) ^ 1
        return tuple(sorted((c for c, v in out.items() if v), key=repr))

    def _mul_classes(
        self, op_gen: str, classes: tuple[BasisClass, ...]
    ) -> tuple[Optional[tuple[BasisClass, ...]], bool]:
        out: dict[BasisClass, int] = {}
        weak = False

        def add(c: BasisClass):
            out[c] = out.get(c, 0) ^ 1

        for c in classes:
            if isinstance(c, QClass) and (op_gen, c.gen) in self.q_overrides:
                for t in self.q_overrides[(op_gen, c.gen)]:
                    shifted = shift_rho(t, c.a)
                    if shifted is not None:
                        add(shifted)
                continue
            p = multiply(op_gen, c, self.dataset)
            if p is not None:
                if isinstance(c, QClass):
                    weak = True
                add(p)
        result = tuple(sorted((c for c, v in out.items() if v), key=repr))
        return (result or None), weak

    def _degree_of(self, classes: tuple[BasisClass, ...]) -> TriDegree:
        return classes[0].degree(self.dataset)

    def _in_reach(self, classes: tuple[BasisClass, ...]) -> bool:
        if not classes:
            return False
        return self._degree_of(classes) in self.full_box

    def close_entries(self) -> dict[int, list[BaseEntry]]:
        """Expand base entries under scopes, ρ-linearity and multiplication.

        Iterates to a fixpoint over generator death pages: a generator that
        turns out to support a (possibly derived) differential stops acting
        as a Leibniz multiplier from that page on, which can in turn remove
        derived entries.
        """
        for e in self.base_entries:
            if len(e.source) == 1:
                c = e.source[0]
                if isinstance(c, PosClass) and c.a == 0 and c.b == 0:
                    cur = self.gen_death_page.get(c.gen)
                    if cur is None or e.page < cur:
                        self.gen_death_page[c.gen] = e.page
                        self.gen_diff[c.gen] = (e.page, e.target)
        for _ in range(5):
            out = self._close_once()
            changed = False
            for r, entries in out.items():
                for e in entries:
                    if not e.target or len(e.source) != 1:
                        continue
                    c = e.source[0]
                    if isinstance(c, PosClass) and c.a == 0 and c.b == 0:
                        cur = self.gen_death_page.get(c.gen)
                        if cur is None or r < cur:
                            self.gen_death_page[c.gen] = r
                            self.gen_diff[c.gen] = (r, e.target)
                            changed = True
            if not changed:
                return out
        return out

    def _close_once(self) -> dict[int, list[BaseEntry]]:
        ds = self.dataset

        multipliers = self.dataset.multipliers()
        max_gen_c = max(g.degree.c for g in self.dataset.chart.generators)
        reach_box = DegreeBox(
            self.full_box.smin,
            self.full_box.smax,
            self.full_box.fmin,
            self.full_box.fmax,
            self.full_box.cmin - max_gen_c - 1,
            self.full_box.cmax,
        )
        seen: set = set()
        out: dict[int, list[BaseEntry]] = {}
        work: list[BaseEntry] = []

        def in_box(box: DegreeBox, e: BaseEntry) -> bool:
            if self._degree_of(e.source) in box:
                return True
            return bool(e.target) and self._degree_of(e.target) in box

        def push(e: BaseEntry):
            key = (e.page, e.source, e.target)
            if key in seen:
                return
            seen.add(key)
            if in_box(self.full_box, e):
                out.setdefault(e.page, []).append(e)
            if in_box(reach_box, e):
                work.append(e)

        # 1. scope expansion of the raw entries; positive-cone rows also
        # transfer into γ-families (Leibniz with a γ/(ρ^r τ^B) coefficient
        # whose τ-valuation exceeds the page)
        def transfer(e: BaseEntry):
            if "-" not in self.cones:
                return
            if not all(isinstance(c, PosClass) for c in e.source):
                return
            if e.target and not all(isinstance(c, PosClass) for c in e.target):
                return
            n0 = 1
            while n0 <= e.page:
                n0 <<= 1
            src_c = self._degree_of(e.source).c
            b_hi = src_c + 1 - self.full_box.cmin
            B = n0
            while B <= b_hi:
                gsrc = _gamma_transfer(e.source, e.page, B, ds, strict=True)
                gtgt = (
                    _gamma_transfer(e.target, e.page, B, ds, strict=False)
                    if e.target
                    else ()
                )
                if gsrc is not None:
                    push(BaseEntry(e.page, gsrc, gtgt or (), "single", e.cite, False,
                                   note=_note(f"transfer B={B} of [{e.note}]")))
                B += n0

        for e in self.base_entries:
            variants = [e]
            period = None
            if e.scope.startswith(("coper:", "tauper:")):
                period = int(e.scope.split(":")[1])
                if e.page >= period:
                    raise Conflict(
                        f"(co)periodic scope needs r < period in {e.cite}"
                    )
            if period:
                k = 1
                while True:
                    shift = period * k
                    src = _shift_all(e.source, shift, ds)
                    if src is None:
                        break
                    tgt = _shift_all(e.target, shift, ds) if e.target else ()
                    if tgt is None:
                        tgt = ()
                    cand = BaseEntry(e.page, src, tgt, "single", e.cite, e.base)
                    src_deg = self._degree_of(cand.source)
                    if src_deg.c > self.full_box.cmax and not (
                        self._in_reach(cand.source)
                        or (cand.target and self._in_reach(cand.target))
                    ):
                        break
                    variants.append(cand)
                    k += 1
            for v in variants:
                transfer(v)
                push(BaseEntry(v.page, v.source, v.target, "single", v.cite, v.base,
                               note=v.note or "base"))

        # 2. worklist: γ-coefficient transfer, ρ-linearity, generator
        # multiplication
        idx = 0
        while idx < len(work):
            e = work[idx]
            idx += 1
            # ρ-shift once (division on the negative cone, multiple on E+).
            # A zero target does not divide: d(u) = 0 says nothing about
            # d(u/ρ), so only entries with targets shift.
            if e.target:
                src1 = tuple(shift_rho(c, 1) for c in e.source)
                shifted = [shift_rho(c, 1) for c in e.target]
                if all(c is not None for c in src1) and all(
                    c is not None for c in shifted
                ):
                    has_q = any(isinstance(c, QClass) for c in e.source)
                    push(
                        BaseEntry(
                            e.page,
                            src1,  # type: ignore[arg-type]
                            tuple(shifted),  # type: ignore[arg-type]
                            "single",
                            e.cite,
                            False,
                            note=_note(f"rho of [{e.note}]"),
                            weak=e.weak or has_q,
                        )
                    )
            # ρ-multiples on the negative cone (a - 1 direction)
            if all(not isinstance(c, PosClass) for c in e.source):
                msrc = [rho_multiple(c, self.dataset) for c in e.source]
                if all(c is not None for c in msrc) and e.target:
                    mtgt = [rho_multiple(c, self.dataset) for c in e.target]
                    if all(c is not None for c in mtgt):
                        push(
                            BaseEntry(
                                e.page,
                                tuple(msrc),  # type: ignore[arg-type]
                                tuple(mtgt),  # type: ignore[arg-type]
                                "single",
                                e.cite,
                                False,
                                note=_note(f"rho-mult of [{e.note}]"),
                                weak=e.weak,
                            )
                        )
            # generator multiplication (Leibniz with page-r cycles)
            src_deg = self._degree_of(e.source)
            for op in multipliers:
                death = self.gen_death_page.get(op, 99)
                if death < e.page:
                    continue
                opdeg = self.dataset.gens[op].degree
                if (
                    src_deg.s + opdeg.s > reach_box.smax
                    or src_deg.f + opdeg.f > reach_box.fmax
                    or src_deg.c + opdeg.c > reach_box.cmax + 1
                ):
                    continue
                src2, w1 = self._mul_classes(op, e.source)
                if src2 is None:
                    continue
                tgt2, w2 = self._mul_classes(op, e.target) if e.target else (None, False)
                extra_weak = False
                if death == e.page:
                    # d(op·u) = op·d(u) + d(op)·u: add the second term
                    correction = self._mul_by_entry_target(
                        self.gen_diff[op][1], e.source
                    )
                    if correction is None:
                        continue  # cannot evaluate the Leibniz correction
                    acc: dict[BasisClass, int] = {}
                    for cl in (tgt2 or ()) + correction:
                        acc[cl] = acc.get(cl, 0) ^ 1
                    tgt2 = tuple(sorted((c for c, v in acc.items() if v), key=repr))
                    extra_weak = any(isinstance(c, QClass) for c in e.source)
                push(BaseEntry(e.page, src2, tgt2 or (), "single", e.cite, False,
                               note=_note(f"{op} * [{e.note}]"),
                               weak=e.weak or w1 or w2 or extra_weak))
        return out

    # --------------------------------------------------------------------- run

    def run(self) -> RunResult:
        page = self.build_e1()
        if self.use_seeds:
            seed_window = DegreeBox(
                self.full_box.smin,
                self.full_box.smax,
                self.full_box.fmin,
                self.full_box.fmax,
                self.full_box.cmin - 16,
                self.full_box.cmax + 1,
            )
            if "-" in self.cones:
                self.add_seeds(gamma_seed_differentials(seed_window))
            if "+" in self.cones:
                self.add_seeds(tau_seed_differentials(seed_window))
        closed = self.close_entries()
        pages = [page]
        resolved_all: dict[int, list[ResolvedEntry]] = {}
        support_log: list[tuple[BasisClass, int]] = []
        for r in range(1, self.rmax + 1):
            entries = closed.get(r, [])
            resolved: list[ResolvedEntry] = []
            for e in entries:
                re = self._resolve_entry(page, e, r)
                if re is not None:
                    resolved.append(re)
                    for c in e.source:
                        support_log.append((c, r))
            resolved_all[r] = resolved
            nxt = page.turn(resolved, BOCKSTEIN_SHIFT)
            self._check_pins(nxt)
            pages.append(nxt)
            page = nxt
        cotowers = self._cotower_report(page, resolved_all, closed)
        return RunResult(self.dataset, self.box, pages, resolved_all, cotowers)

    def _resolve_entry(
        self, page: PageState, e: BaseEntry, r: int
    ) -> Optional[ResolvedEntry]:
        ds = self.dataset
        sdeg = self._degree_of(e.source)
        st = page.state(sdeg)
        if st is None:
            return None
        svec = page.vector(e.source, sdeg)
        if svec is None:
            return None
        tvec = None
        tdeg = sdeg + BOCKSTEIN_SHIFT
        if e.target:
            tvec = page.vector(e.target, tdeg)
            if tvec is None:
                # target outside the box: treat source as resolved-unknown
                return None
        if not st.is_alive(svec.bits):
            if e.base and any(isinstance(c, QClass) for c in e.source):
                adjusted = self._adjust_q_source(page, sdeg, svec)
                if adjusted is None:
                    raise DeadSource(
                        f"no surviving representative for d_{r} source "
                        f"{_fmt(e.source, ds)} ({e.cite})"
                    )
                svec = adjusted
            elif e.base:
                raise DeadSource(
                    f"d_{r} source {_fmt(e.source, ds)} died earlier ({e.cite})"
                )
            else:
                return None
        return ResolvedEntry(
            r, sdeg, svec, tvec, e.cite, e.base, e.source, e.target or (), e.weak
        )

    def _adjust_q_source(
        self, page: PageState, deg: TriDegree, svec: F2Vector
    ) -> Optional[F2Vector]:
        st = page.state(deg)
        for extra in _q_indeterminacy(page, deg):
            cand = svec.bits ^ extra
            if st.is_alive(cand):
                return F2Vector(cand, svec.length)
        return None

    def _check_pins(self, page: PageState):
        for classes, cite in zip(self.pins, self.pin_cites):
            deg = classes[0].degree(self.dataset)
            st = page.state(deg)
            if st is None:
                continue
            vec = page.vector(classes, deg)
            if vec is None or not st.is_alive(vec.bits):
                raise PinnedClassDied(
                    f"pinned class {_fmt(classes, self.dataset)} died ({cite})"
                )

    # ---------------------------------------------------------------- cotowers

    def _cotower_report(
        self,
        einf: PageState,
        resolved: dict[int, list[ResolvedEntry]],
        closed: dict[int, list[BaseEntry]],
    ) -> list[CotowerFamily]:
        ds = self.dataset
        if "-" not in self.cones:
            return []
        # applied supports per family (smallest exponent that fired)
        support: dict[tuple, tuple[int, int]] = {}
        for r, entries in resolved.items():
            for e in entries:
                if e.target is None:
                    continue
                for c in e.source_classes:
                    key = _family_key(c)
                    if key is None:
                        continue
                    cur = support.get(key)
                    if cur is None or c.a < cur[0]:
                        support[key] = (c.a, r)
        # families touched as sources by any emitted entry, applied or not
        # (zero-target emissions count: the obligation was considered and
        # evaluated, e.g. cancelled by the full Leibniz rule)
        touched: set[tuple] = set()
        for r, entries in closed.items():
            for e in entries:
                for c in e.source:
                    key = _family_key(c)
                    if key is not None:
                        touched.add(key)

        families: dict[tuple, list[BasisClass]] = {}
        for deg, st in einf.degrees.items():
            if not (self.box.cmin <= deg.c <= self.box.cmax):
                continue  # families in the coweight pad are margin noise
            for c in st.basis:
                key = _family_key(c)
                if key is not None:
                    families.setdefault(key, []).append(c)

        out = []
        for key, members in sorted(families.items(), key=lambda kv: str(kv[0])):
            members.sort(key=lambda c: c.a)
            alive = [c for c in members if self._alive(einf, c)]
            base = members[0]
            label = base.label(ds).format()
            if key in support:
                e, r = support[key]
                out.append(
                    CotowerFamily(
                        label, "rho-divisible", "truncated", e,
                        detail=f"supports d_{r} from exponent {e}",
                        members_alive=len(alive),
                    )
                )
                continue
            if not alive:
                out.append(
                    CotowerFamily(
                        label, "rho-divisible", "truncated", 0,
                        detail="all members absorbed as targets",
                        members_alive=0,
                    )
                )
                continue
            until = alive[-1].a
            seed_page = 1 << ((key[2] & -key[2]).bit_length() - 1) if key[0] == "gamma" else 0
            obligated_member_alive = any(c.a >= seed_page for c in alive)
            if (
                key not in touched
                and obligated_member_alive
                and self._seed_obligation(key)
            ):
                out.append(
                    CotowerFamily(
                        label, "rho-divisible", "survives-in-window", until,
                        detail="formula-forced seed differential missing",
                        members_alive=len(alive),
                    )
                )
                continue
            out.append(
                CotowerFamily(
                    label, "rho-divisible", "unknown-beyond-window", until,
                    detail="", members_alive=len(alive),
                )
            )
        return out

    def _seed_obligation(self, key: tuple) -> bool:
        """Does the τ-power structure force a seed differential with a
        nonzero Leibniz product on this family?"""
        if key[0] != "gamma":
            return False
        _, gen, b = key
        n = (b & -b).bit_length() - 1  # 2-adic valuation of b
        if n > 5:
            return False
        sym = f"h_{n}"
        hgen = self.dataset.by_body.get(sym)
        if hgen is None:
            return False
        prod = self.dataset.product_gen(hgen.id, gen)
        if prod is None:
            return False
        # τ-torsion targets vanish under the γ-coefficient
        return self.dataset.torsion(prod[0]) is None

    def _alive(self, page: PageState, c: BasisClass) -> bool:
        deg = c.degree(self.dataset)
        st = page.state(deg)
        if st is None:
            return False
        i = st.index.get(c)
        if i is None:
            return False
        return st.is_alive(1 << i)


# --------------------------------------------------------------------- audits


def audit_structure(run: RunResult) -> list[str]:
    """Check the ρ-module structure of every negative-cone page."""
    violations: list[str] = []
    ds = run.dataset
    for page in run.pages:
        for deg in run.box.degrees():
            st = page.state(deg)
            if st is None:
                continue
            for i, c in enumerate(st.basis):
                if isinstance(c, PosClass):
                    continue
                bits = 1 << i
                if not st.is_alive(bits):
                    continue
                # (1)/(3): alive classes below filtration -1 must have a
                # nonzero ρ-multiple
                if c.a >= 1:
                    m = rho_multiple(c, ds)
                    mdeg = c.degree(ds) + TriDegree(-1, 0, 0)
                    mst = page.state(mdeg)
                    if mst is not None and m in mst.index:
                        if not mst.is_alive(1 << mst.index[m]):
                            violations.append(
                                f"page {page.r}: {c.label(ds).format()} is "
                                f"ρ-torsion below filtration -1"
                            )
                # (2): filtration <= -r implies ρ-divisible
                if c.a + 1 >= page.r:
                    d = shift_rho(c, 1)
                    ddeg = c.degree(ds) + TriDegree(1, 0, 0)
                    dst = page.state(ddeg)
                    if dst is not None:
                        j = dst.index.get(d)
                        if j is None or not dst.is_alive(1 << j):
                            violations.append(
                                f"page {page.r}: {c.label(ds).format()} has no "
                                f"ρ-preimage despite filtration {-c.a - 1}"
                            )
    return violations


def audit_colocalization(run: RunResult) -> list[str]:
    out = []
    for fam in run.cotowers:
        if fam.fate == "survives-in-window":
            out.append(
                f"family {fam.base_label} survives in window with live "
                f"partners unresolved (resolved_until={fam.resolved_until})"
            )
    return out


# ----------------------------------------------------------------- helpers


def _resolve_classes(
    labels: Iterable, ds: Dataset
) -> Optional[tuple[BasisClass, ...]]:
    out = []
    for lbl in labels:
        c = class_from_label(lbl, ds)
        if c is not None:
            out.append(c)
    if not out:
        return None
    return tuple(sorted(out, key=repr))


def _shift_all(
    classes: tuple[BasisClass, ...], shift: int, ds: Dataset
) -> Optional[tuple[BasisClass, ...]]:
    out = []
    for c in classes:
        s = shift_tau(c, shift, ds)
        if s is None:
            return None
        out.append(s)
    return tuple(out)


def _gamma_transfer(
    classes: tuple[BasisClass, ...], r: int, B: int, ds: Dataset, strict: bool
) -> Optional[tuple[BasisClass, ...]]:
    """Multiply positive-cone classes by the coefficient γ/(ρ^r τ^B).

    τ-torsion generators are annihilated by the γ-coefficient: for sources
    (strict) that voids the transfer; for targets the summand just drops.
    """
    out = []
    for c in classes:
        if not isinstance(c, PosClass):
            return None
        if ds.torsion(c.gen) is not None:
            if strict:
                return None
            continue
        a = r - c.a
        b = B - c.b
        if a < 0 or b < 1:
            if strict:
                return None
            continue
        out.append(GammaClass(c.gen, a, b))
    return tuple(out)


def _family_key(c: BasisClass):
    if isinstance(c, GammaClass):
        return ("gamma", c.gen, c.b)
    if isinstance(c, QClass):
        return ("Q", c.gen)
    return None


def _fmt(classes: Iterable[BasisClass], ds: Dataset) -> str:
    return " + ".join(c.label(ds).format() for c in classes)


