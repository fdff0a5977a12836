"""Per-degree page states shared by the Bockstein and Adams engines.

A page is a subquotient of the E1 basis at every tri-degree: the current
cycle subspace modulo accumulated boundaries.  Differentials arrive as
resolved (source vector, target vector) pairs per degree; turning a page
records images as new boundaries and intersects cycles with the kernel of
the induced map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .basis import BasisClass, Dataset
from .degrees import DegreeBox, TriDegree
from .f2 import F2Matrix, F2Vector, Reducer, kernel_of_map


class LedgerError(Exception):
    pass


class DeadSource(LedgerError):
    pass


class Conflict(LedgerError):
    pass


class PinnedClassDied(LedgerError):
    pass


@dataclass
class ResolvedEntry:
    page: int
    degree: TriDegree
    source: F2Vector
    target: Optional[F2Vector]  # None encodes an asserted-zero target
    cite: str = ""
    base: bool = False  # True for ledger rows, False for closure products
    source_classes: tuple[BasisClass, ...] = ()
    target_classes: tuple[BasisClass, ...] = ()
    weak: bool = False  # defined up to Q-class indeterminacy


@dataclass
class DegreeState:
    basis: list[BasisClass]
    index: dict[BasisClass, int]
    cycles: Optional[list[int]] = None  # reduced basis of the cycle space
    boundaries: Reducer = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.boundaries is None:
            self.boundaries = Reducer(len(self.basis))
        if self.cycles is None:
            self.cycles = [1 << i for i in range(len(self.basis))]

    @property
    def dim(self) -> int:
        return self._cycle_rank() - self.boundaries.rank

    def _cycle_rank(self) -> int:
        red = Reducer(len(self.basis))
        for b in self.cycles:
            red.add(b)
        return red.rank

    def cycle_reducer(self) -> Reducer:
        red = Reducer(len(self.basis))
        for b in self.cycles:
            red.add(b)
        return red

    def is_alive(self, bits: int) -> bool:
        """Nonzero on the current page: a cycle not reduced to a boundary."""
        if bits == 0:
            return False
        red = self.cycle_reducer()
        if not red.contains(bits):
            return False
        return not self.boundaries.contains(bits)

    def in_cycles(self, bits: int) -> bool:
        return self.cycle_reducer().contains(bits)


class PageState:
    """One spectral sequence page over a padded degree box."""

    def __init__(
        self,
        dataset: Dataset,
        box: DegreeBox,
        full_box: DegreeBox,
        bases: dict[TriDegree, list[BasisClass]],
        r: int = 1,
    ):
        self.dataset = dataset
        self.box = box
        self.full_box = full_box
        self.r = r
        self.degrees: dict[TriDegree, DegreeState] = {}
        for deg, classes in bases.items():
            classes = sorted(classes, key=lambda c: c.label(dataset).format())
            self.degrees[deg] = DegreeState(
                basis=classes, index={c: i for i, c in enumerate(classes)}
            )

    def state(self, deg: TriDegree) -> Optional[DegreeState]:
        return self.degrees.get(deg)

    def vector(self, classes: Iterable[BasisClass], deg: TriDegree) -> Optional[F2Vector]:
        """Vector of a class sum at a degree; None when any class is missing
        from the box (out-of-window data)."""
        st = self.degrees.get(deg)
        if st is None:
            return None
        bits = 0
        for c in classes:
            i = st.index.get(c)
            if i is None:
                return None
            bits ^= 1 << i
        return F2Vector(bits, len(st.basis))

    def dim(self, deg: TriDegree) -> int:
        st = self.degrees.get(deg)
        return st.dim if st else 0

    def representatives(self, deg: TriDegree) -> list[F2Vector]:
        """Greedy page representatives preferring lexicographically small
        single basis classes."""
        st = self.degrees.get(deg)
        if st is None:
            return []
        cyc = st.cycle_reducer()
        chosen = Reducer(len(st.basis))
        for b in st.boundaries.rows:
            chosen.add(b)
        reps = []
        order = sorted(
            range(len(st.basis)), key=lambda i: st.basis[i].label(self.dataset).format()
        )
        for i in order:
            bits = 1 << i
            if cyc.contains(bits) and not chosen.contains(bits):
                chosen.add(bits)
                reps.append(F2Vector(bits, len(st.basis)))
        for b in cyc.rows:
            if not chosen.contains(b):
                chosen.add(b)
                reps.append(F2Vector(b, len(st.basis)))
        return reps

    def turn(
        self,
        entries: list[ResolvedEntry],
        shift: TriDegree,
        check_dd: bool = True,
    ) -> "PageState":
        """Apply the page-r differentials and return the next page."""
        # assemble per-degree linear data with conflict detection
        per_degree: dict[TriDegree, list[tuple[int, int, bool]]] = {}
        for e in entries:
            st = self.degrees.get(e.degree)
            if st is None:
                continue
            tdeg = e.degree + shift
            tst = self.degrees.get(tdeg)
            sbits = st.boundaries.reduce(e.source.bits)
            if sbits == 0:
                continue  # source already zero on this page: vacuous
            if not st.in_cycles(sbits):
                continue  # source supported an earlier differential
            if e.target is None:
                tbits = 0
            else:
                if tst is None:
                    continue
                tbits = tst.boundaries.reduce(e.target.bits)
                if tbits and not tst.in_cycles(tbits):
                    if e.weak:
                        continue  # indeterminate product, quietly dropped
                    raise Conflict(
                        f"target of d_{e.page} at {tuple(e.degree)} is not a cycle"
                    )
            per_degree.setdefault(e.degree, []).append((sbits, tbits, e.weak))

        # Build reduced source echelons.  Strong entries go in first and
        # conflicts among them raise; weak (Q-indeterminate) entries are
        # admitted afterwards and silently lose any conflict, including the
        # page-level consistency requirement that their target must not
        # support a differential on the same page.
        rows_by_deg: dict[TriDegree, list[tuple[int, int]]] = {}

        def add_pair(deg, sbits, tbits, weak) -> bool:
            rows = rows_by_deg.setdefault(deg, [])
            tst = self.degrees.get(deg + shift)
            cur_s, cur_t = sbits, tbits
            for rs, rt in rows:
                top = rs.bit_length() - 1
                if (cur_s >> top) & 1:
                    cur_s ^= rs
                    cur_t ^= rt
            if cur_s == 0:
                resid = tst.boundaries.reduce(cur_t) if tst else cur_t
                if resid == 0:
                    return True
                if weak:
                    return False
                raise Conflict(
                    f"inconsistent differentials at {tuple(deg)} page {self.r}"
                )
            rows.append((cur_s, cur_t))
            rows.sort(key=lambda p: -p[0].bit_length())
            return True

        def map_image(deg, bits) -> int:
            img = 0
            for rs, rt in rows_by_deg.get(deg, []):
                top = rs.bit_length() - 1
                if (bits >> top) & 1:
                    bits ^= rs
                    img ^= rt
            return img

        for deg, pairs in per_degree.items():
            for sbits, tbits, weak in pairs:
                if not weak:
                    add_pair(deg, sbits, tbits, False)
        for deg, pairs in per_degree.items():
            tdeg = deg + shift
            for sbits, tbits, weak in pairs:
                if not weak:
                    continue
                # composition guard: the claimed target must be a page cycle
                if tbits:
                    img2 = map_image(tdeg, tbits)
                    tst2 = self.degrees.get(tdeg + shift)
                    if img2 and (tst2 is None or tst2.boundaries.reduce(img2)):
                        continue
                add_pair(deg, sbits, tbits, True)
        maps = rows_by_deg

        def image_of(deg: TriDegree, bits: int) -> Optional[int]:
            """Page-map image of a cycle vector (None if not in source span
            closure -- treated as zero map on the complement)."""
            rows = maps.get(deg, [])
            cur, img = bits, 0
            for rs, rt in rows:
                top = rs.bit_length() - 1
                if (cur >> top) & 1:
                    cur ^= rs
                    img ^= rt
            # anything not expressible via entry sources maps to zero
            return img

        nxt = PageState.__new__(PageState)
        nxt.dataset = self.dataset
        nxt.box = self.box
        nxt.full_box = self.full_box
        nxt.r = self.r + 1
        nxt.degrees = {}
        new_boundaries: dict[TriDegree, list[int]] = {}
        new_cycles: dict[TriDegree, list[int]] = {}

        for deg, st in self.degrees.items():
            tdeg = deg + shift
            tst = self.degrees.get(tdeg)
            cyc_basis = [b for b in st.cycle_reducer().rows]
            images = []
            for b in cyc_basis:
                img = image_of(deg, b)
                images.append(img if tst is not None else 0)
            # record images as boundaries at the target degree
            if tst is not None:
                new_boundaries.setdefault(tdeg, []).extend(i for i in images if i)
            # kernel of the induced map (mod target boundaries)
            if any(images):
                tred = Reducer(len(tst.basis))
                for b in tst.boundaries.rows:
                    tred.add(b)
                width = len(cyc_basis)
                mat_rows = []
                for img in images:
                    mat_rows.append(tred.reduce(img))
                mat = F2Matrix.from_rows(mat_rows, len(tst.basis))
                ker = kernel_of_map(mat)
                kept = []
                for kv in ker:
                    bits = 0
                    for i in range(width):
                        if (kv.bits >> i) & 1:
                            bits ^= cyc_basis[i]
                    kept.append(bits)
                new_cycles[deg] = kept
            else:
                new_cycles[deg] = list(cyc_basis)

        if check_dd:
            for deg, rows in maps.items():
                tdeg = deg + shift
                for _, tbits in rows:
                    if tbits == 0:
                        continue
                    img2 = image_of(tdeg, tbits)
                    if img2:
                        tst2 = self.degrees.get(tdeg + shift)
                        if tst2 is None or tst2.boundaries.reduce(img2) != 0:
                            from .f2 import CompositionNonzero

                            raise CompositionNonzero(
                                f"d∘d != 0 out of degree {tuple(deg)} on page {self.r}"
                            )

        for deg, st in self.degrees.items():
            nst = DegreeState(basis=st.basis, index=st.index,
                              cycles=new_cycles.get(deg, list(st.cycles)))
            for b in st.boundaries.rows:
                nst.boundaries.add(b)
            for b in new_boundaries.get(deg, []):
                nst.boundaries.add(b)
            nxt.degrees[deg] = nst
        return nxt
