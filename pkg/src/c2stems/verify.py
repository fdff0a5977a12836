"""Periodicity arithmetic, region classification, and the cofiber-of-ρ
order audits tying the equivariant computation to the classical stems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .basis import BasisClass, Dataset, GammaClass, PosClass, QClass, rho_multiple
from .chartfile import ChartFile
from .degrees import DegreeBox, TriDegree
from .f2 import F2Matrix, F2Vector, Reducer, preimage
from .pages import PageState
from .bockstein import _resolve_classes


class NegativeStem(Exception):
    pass


class WindowInsufficient(Exception):
    pass


def p_s(s: int) -> int:
    """Landweber periodicity 2-power for stem s."""
    if s < 0:
        raise NegativeStem(f"p_s undefined for s={s}")
    phi = sum(1 for j in range(1, s + 2) if j % 8 in (0, 1, 2, 4))
    return 1 << phi


def region_of(s: int, c: int) -> str:
    """Region tag of a (stem, coweight) pair per the chart conventions."""
    if s < 0:
        raise ValueError("regions are defined for s >= 0")
    if 2 * c >= s - 4:
        if s == 0 and c >= 1:
            return "R-motivic-rho-periodic"
        return "R-motivic"
    if -1 <= c and 2 * c <= s - 5:
        return "interesting"
    if c <= -2:
        return "tau-periodic"
    return "R-motivic"


# ------------------------------------------------------------- column algebra


@dataclass
class Column:
    """All E-infinity classes of one (stem, coweight), ordered by filtration."""

    s: int
    c: int
    reps: list[tuple[TriDegree, F2Vector]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.reps)


def column_of(page: PageState, s: int, c: int, fmax: Optional[int] = None) -> Column:
    col = Column(s, c)
    fhi = fmax if fmax is not None else page.full_box.fmax
    for f in range(page.full_box.fmin, fhi + 1):
        deg = TriDegree(s, f, c)
        for rep in page.representatives(deg):
            col.reps.append((deg, rep))
    return col


@dataclass
class KerCokerRho:
    """Per-(s,c) bases of ker(ρ) and coker(ρ) with their filtrations."""

    box: DegreeBox
    ker: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    coker: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    crossings: list[str] = field(default_factory=list)

    def ker_dim(self, s: int, c: int) -> int:
        return len(self.ker.get((s, c), []))

    def coker_dim(self, s: int, c: int) -> int:
        return len(self.coker.get((s, c), []))


def _rho_vector(
    page: PageState, deg: TriDegree, vec: F2Vector
) -> Optional[F2Vector]:
    """E1-level ρ-image of a vector at deg, as a vector at deg+(-1,0,0)."""
    ds = page.dataset
    st = page.state(deg)
    tdeg = deg + TriDegree(-1, 0, 0)
    tst = page.state(tdeg)
    if st is None or tst is None:
        return None
    bits = 0
    for i in vec.support():
        m = rho_multiple(st.basis[i], ds)
        if m is None:
            continue
        j = tst.index.get(m)
        if j is None:
            return None
        bits ^= 1 << j
    return F2Vector(bits, len(tst.basis))


def ker_coker_rho(
    page: PageState,
    hidden_rho: ChartFile,
    box: DegreeBox,
    fmax: Optional[int] = None,
) -> KerCokerRho:
    """Kernel and cokernel of ρ on the E-infinity page, hidden edges included.

    The window must extend one stem beyond the requested box (margin for the
    incoming ρ-map); a WindowInsufficient error flags a too-small page.
    """
    ds = page.dataset
    if box.smax + 1 > page.full_box.smax:
        raise WindowInsufficient("need one stem of margin for the ρ-map")
    hidden: list[tuple[tuple[BasisClass, ...], tuple[BasisClass, ...]]] = []
    for h in hidden_rho.hexts:
        if h.op != "rho":
            continue
        src = _resolve_classes(h.source, ds)
        tgt = _resolve_classes(h.target, ds)
        if src and tgt:
            hidden.append((src, tgt))

    out = KerCokerRho(box)
    for s in range(box.smin, box.smax + 1):
        for c in range(box.cmin, box.cmax + 1):
            col_in = column_of(page, s + 1, c, fmax)
            col_out = column_of(page, s, c, fmax)
            # output coordinates: reduce against boundaries + rep echelon
            out_index: list[tuple[TriDegree, F2Vector]] = col_out.reps
            rows = []
            for deg, rep in col_in.reps:
                img = _rho_vector(page, deg, rep)
                coords = 0
                if img is not None and img.bits:
                    coords = _express(page, deg + TriDegree(-1, 0, 0), img, out_index)
                # hidden correction when the visible image dies
                if coords == 0:
                    for hsrc, htgt in hidden:
                        hdeg = hsrc[0].degree(ds)
                        if hdeg != deg:
                            continue
                        svec = page.vector(hsrc, hdeg)
                        if svec is None or svec.bits != rep.bits:
                            continue
                        tdeg = htgt[0].degree(ds)
                        tvec = page.vector(htgt, tdeg)
                        if tvec is not None:
                            coords = _express(page, tdeg, tvec, out_index)
                rows.append(coords)
            mat = F2Matrix.from_rows(rows, len(out_index))
            red = Reducer(len(out_index))
            for r in mat.rows:
                red.add(r.bits)
            rank = red.rank
            ker_fs = []
            from .f2 import kernel_of_map

            for kv in kernel_of_map(mat):
                top = max(kv.support())
                ker_fs.append(col_in.reps[top][0].f)
            coker_fs = []
            chosen = Reducer(len(out_index))
            for r in mat.rows:
                chosen.add(r.bits)
            for i, (deg, rep) in enumerate(out_index):
                if chosen.add(1 << i):
                    coker_fs.append(deg.f)
            out.ker[(s + 1, c)] = sorted(ker_fs)
            out.coker[(s, c)] = sorted(coker_fs)
    return out


def _express(
    page: PageState, deg: TriDegree, vec: F2Vector,
    out_index: list[tuple[TriDegree, F2Vector]],
) -> int:
    """Express a vector at deg as a combination of column representatives
    (mod boundaries); returns coordinate bits over out_index."""
    st = page.state(deg)
    if st is None:
        return 0
    reduced = st.boundaries.reduce(vec.bits)
    if reduced == 0:
        return 0
    idxs = [i for i, (d, _) in enumerate(out_index) if d == deg]
    rows = [st.boundaries.reduce(out_index[i][1].bits) for i in idxs]
    mat = F2Matrix.from_rows(rows, len(st.basis))
    sol = preimage(mat, F2Vector(reduced, len(st.basis)))
    if sol is None:
        return 0
    coords = 0
    for pos, i in enumerate(idxs):
        if (sol.bits >> pos) & 1:
            coords |= 1 << i
    return coords


def verify_cofiber_orders(
    kcr: KerCokerRho,
    classical: ChartFile,
    smax: int = 20,
    cmin: int = 0,
    cmax: int = 7,
    whitelist: tuple = ((15, 5),),
) -> list[str]:
    """Check |coker ρ|_{s,c} · |ker ρ|_{s,c-1} = |π^cl_s| per degree."""
    orders = {o.s: o.order for o in classical.orders}
    problems = []
    for s in range(1, smax + 1):
        want = orders.get(s)
        if want is None:
            continue
        for c in range(cmin, cmax + 1):
            have = 1 << (kcr.coker_dim(s, c) + kcr.ker_dim(s, c - 1))
            if have != want:
                problems.append(
                    f"(s={s}, c={c}): |coker|*|ker| = {have}, classical {want}"
                )
    return problems


def verify_landweber(page: PageState, s: int, c: int) -> Optional[str]:
    """Compare the (s,c) and (s,c-p_s) columns for c <= -2."""
    if c > -2:
        raise ValueError("the negative-coweight periodicity needs c <= -2")
    period = p_s(s)
    a = column_of(page, s, c)
    b = column_of(page, s, c - period)
    if c - period < page.full_box.cmin:
        raise WindowInsufficient(f"column (s={s}, c={c - period}) not computed")
    if a.dim != b.dim:
        return (
            f"π_({s},{c}) has {a.dim} classes but π_({s},{c - period}) has {b.dim}"
        )
    return None
