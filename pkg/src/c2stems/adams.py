"""The C2-equivariant Adams engine.

The Adams E2-page is the Bockstein E-infinity page (same underlying
subquotient data); hidden h0/h1 extensions from the Bockstein run are
installed as extra structure lines for charts and audits.  Adams
differential ledgers close under ρ-, τ-, h0- and h1-linearity (all four
operators are permanent cycles) and pages turn with the Adams degree
shift (-1, +r, -1).
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
    rho_multiple,
    shift_rho,
    shift_tau,
)
from .chartfile import ChartFile, HiddenExtension
from .degrees import DegreeBox, TriDegree, adams_shift
from .f2 import F2Vector
from .labels import ClassLabel, format_label
from .pages import Conflict, DeadSource, PageState, PinnedClassDied, ResolvedEntry
from .bockstein import BaseEntry, RunResult, _resolve_classes


class DeadEndpoint(Exception):
    pass


class WindowInsufficient(Exception):
    pass


@dataclass
class HiddenLine:
    op: str
    source: tuple[BasisClass, ...]
    target: tuple[BasisClass, ...]
    cite: str


@dataclass
class AdamsE2:
    """Adams E2 = Bockstein E-infinity plus hidden extension lines."""

    dataset: Dataset
    page: PageState
    hidden: list[HiddenLine] = field(default_factory=list)


def assemble_e2(
    bockstein: RunResult, hidden_charts: Iterable[ChartFile]
) -> AdamsE2:
    ds = bockstein.dataset
    page = bockstein.einf
    e2 = AdamsE2(ds, page)
    for chart in hidden_charts:
        for h in chart.hexts:
            src = _resolve_classes(h.source, ds)
            tgt = _resolve_classes(h.target, ds)
            if src is None or tgt is None:
                raise DeadEndpoint(f"hidden extension names a zero class: {h.cite}")
            for classes, side in ((src, "source"), (tgt, "target")):
                deg = classes[0].degree(ds)
                st = page.state(deg)
                if st is None:
                    continue  # outside the computed window: tolerated
                vec = page.vector(classes, deg)
                if vec is None or not st.is_alive(vec.bits):
                    raise DeadEndpoint(
                        f"hidden extension {side} died in the Bockstein run: "
                        f"{h.cite} ({' + '.join(str(c.label(ds)) for c in classes)})"
                    )
            e2.hidden.append(HiddenLine(h.op, src, tgt, h.cite))
    return e2


class AdamsRun:
    def __init__(self, e2: AdamsE2, rmax: int = 4,
                 box: Optional[DegreeBox] = None):
        self.e2 = e2
        self.dataset = e2.dataset
        self.rmax = rmax
        base_box = box or e2.page.box
        full = e2.page.full_box
        self.closure_box = DegreeBox(
            max(base_box.smin, full.smin),
            min(base_box.smax + rmax + 1, full.smax),
            max(base_box.fmin, full.fmin),
            min(base_box.fmax + rmax + 1, full.fmax),
            max(base_box.cmin - 1, full.cmin),
            min(base_box.cmax + 1, full.cmax),
        )
        self.base_entries: list[BaseEntry] = []
        self.pins: list[tuple[BasisClass, ...]] = []
        self.pin_cites: list[str] = []

    def add_ledger(self, chart: ChartFile):
        ds = self.dataset
        for e in chart.entries:
            src = _resolve_classes(e.source, ds)
            tgt = _resolve_classes(e.target, ds)
            if src is None:
                raise DeadSource(f"ledger source denotes zero: {e.cite}")
            self.base_entries.append(
                BaseEntry(e.page, src, tgt or (), e.scope, e.cite, base=True)
            )
        for p in chart.pins:
            cls = class_from_label(p.label, ds)
            if cls is None:
                raise DeadSource(f"pinned label denotes zero: {p.cite}")
            self.pins.append((cls,))
            self.pin_cites.append(p.cite)

    # ------------------------------------------------------------- closure

    def close_entries(self) -> dict[int, list[BaseEntry]]:
        ds = self.dataset
        box = self.closure_box
        ops = [ds.by_body[s].id for s in ("h_0", "h_1") if s in ds.by_body]
        seen: set = set()
        out: dict[int, list[BaseEntry]] = {}
        work: list[BaseEntry] = []

        def degree_of(classes):
            return classes[0].degree(ds)

        def push(e: BaseEntry):
            key = (e.page, e.source, e.target)
            if key in seen:
                return
            seen.add(key)
            sdeg = degree_of(e.source)
            keep = sdeg in box or (e.target and degree_of(e.target) in box)
            if keep:
                out.setdefault(e.page, []).append(e)
                work.append(e)

        for e in self.base_entries:
            push(e)
        idx = 0
        while idx < len(work):
            e = work[idx]
            idx += 1
            # ρ-linearity (divisions on the negative cone, multiples on E+)
            if e.target:
                src1 = tuple(shift_rho(c, 1) for c in e.source)
                tgt1 = [shift_rho(c, 1) for c in e.target]
                if all(c is not None for c in src1) and all(
                    c is not None for c in tgt1
                ):
                    has_q = any(isinstance(c, QClass) for c in e.source)
                    push(
                        BaseEntry(e.page, src1, tuple(tgt1), "single", e.cite,  # type: ignore[arg-type]
                                  False, weak=e.weak or has_q)
                    )
                # ρ-multiples (negative cone only; E+ multiples via shift_rho
                # are the same operation there)
                msrc = [rho_multiple(c, ds) for c in e.source]
                mtgt = [rho_multiple(c, ds) for c in e.target]
                if all(c is not None for c in msrc) and all(
                    c is not None for c in mtgt
                ):
                    push(
                        BaseEntry(e.page, tuple(msrc), tuple(mtgt), "single",  # type: ignore[arg-type]
                                  e.cite, False, weak=e.weak)
                    )
                # τ-linearity: multiplication by τ on both sides (for
                # γ-classes this raises the tower, b -> b-1)
                tsrc = [_tau_mult(c, ds) for c in e.source]
                ttgt = [_tau_mult(c, ds) for c in e.target]
                if all(c is not None for c in tsrc):
                    kept = tuple(c for c in ttgt if c is not None)
                    push(
                        BaseEntry(e.page, tuple(tsrc), kept, "single",  # type: ignore[arg-type]
                                  e.cite, False, weak=e.weak)
                    )
            # h0/h1 multiplication
            for op in ops:
                src2, w1 = _mul(op, e.source, ds)
                if src2 is None:
                    continue
                tgt2, w2 = _mul(op, e.target, ds) if e.target else (None, False)
                push(BaseEntry(e.page, src2, tgt2 or (), "single", e.cite, False,
                               weak=e.weak or w1 or w2))
        return out

    # ----------------------------------------------------------------- run

    def run(self) -> "AdamsResult":
        page = self.e2.page
        # restart the page counter at 2 without recomputing subquotients
        page = _repage(page, 2)
        closed = self.close_entries()
        pages = [page]
        resolved_all: dict[int, list[ResolvedEntry]] = {}
        for r in range(2, self.rmax + 1):
            entries = closed.get(r, [])
            resolved = []
            for e in entries:
                re = self._resolve_entry(page, e, r)
                if re is not None:
                    resolved.append(re)
            resolved_all[r] = resolved
            nxt = page.turn(resolved, adams_shift(r))
            nxt.r = r + 1
            self._check_pins(nxt)
            pages.append(nxt)
            page = nxt
        return AdamsResult(self.dataset, self.e2, pages, resolved_all)

    def _resolve_entry(self, page: PageState, e: BaseEntry, r: int):
        ds = self.dataset
        sdeg = e.source[0].degree(ds)
        st = page.state(sdeg)
        if st is None:
            return None
        svec = page.vector(e.source, sdeg)
        if svec is None:
            return None
        tvec = None
        if e.target:
            tvec = page.vector(e.target, sdeg + adams_shift(r))
            if tvec is None:
                return None
        if not st.is_alive(svec.bits):
            if e.base:
                adjusted = self._adjust_q_source(page, sdeg, svec, e)
                if adjusted is None:
                    raise DeadSource(
                        f"Adams d_{r} source died: {e.cite} "
                        f"({' + '.join(str(c.label(ds)) for c in e.source)})"
                    )
                svec = adjusted
            else:
                return None
        return ResolvedEntry(r, sdeg, svec, tvec, e.cite, e.base,
                             e.source, e.target or (), e.weak)

    def _adjust_q_source(self, page, deg, svec, e):
        if not any(isinstance(c, QClass) for c in e.source):
            return None
        st = page.state(deg)
        for i, c in enumerate(st.basis):
            if isinstance(c, GammaClass):
                cand = svec.bits ^ (1 << i)
                if st.is_alive(cand):
                    return F2Vector(cand, svec.length)
        return None

    def _check_pins(self, page: PageState):
        ds = self.dataset
        for classes, cite in zip(self.pins, self.pin_cites):
            deg = classes[0].degree(ds)
            st = page.state(deg)
            if st is None:
                continue
            vec = page.vector(classes, deg)
            if vec is None or not st.is_alive(vec.bits):
                raise PinnedClassDied(
                    f"pinned class {' + '.join(str(c.label(ds)) for c in classes)} "
                    f"died ({cite})"
                )


def _tau_mult(c: BasisClass, ds: Dataset) -> Optional[BasisClass]:
    if isinstance(c, PosClass):
        k = ds.torsion(c.gen)
        if k is not None and c.b + 1 >= k:
            return None
        return PosClass(c.gen, c.a, c.b + 1)
    if isinstance(c, GammaClass):
        return GammaClass(c.gen, c.a, c.b - 1) if c.b > 1 else None
    return None


def _mul(op, classes, ds):
    out: dict[BasisClass, int] = {}
    weak = False
    for c in classes:
        p = multiply(op, c, ds)
        if p is not None:
            if isinstance(c, QClass):
                weak = True
            out[p] = out.get(p, 0) ^ 1
    res = tuple(sorted((c for c, v in out.items() if v), key=repr))
    return (res or None), weak


def _repage(page: PageState, r: int) -> PageState:
    page.r = r
    return page


@dataclass
class AdamsResult:
    dataset: Dataset
    e2: AdamsE2
    pages: list[PageState]
    closed: dict[int, list[ResolvedEntry]]

    @property
    def einf(self) -> PageState:
        return self.pages[-1]

    def dims(self, box: Optional[DegreeBox] = None) -> dict[TriDegree, int]:
        box = box or self.einf.box
        out = {}
        for deg in box.degrees():
            d = self.einf.dim(deg)
            if d:
                out[deg] = d
        return out
