"""Automatic seed differentials for the ρ-Bockstein spectral sequence.

Both cones carry infinite families of differentials forced by the right
unit of the dual Steenrod algebroid.  On the negative cone:

    d_1(γ/ρτ^{2k+1})                = γ/τ^{2k+2} h_0
    d_{2^n}(γ/ρ^{2^n} τ^{2^{n+1}k + 2^n}) = γ/τ^{2^{n+1}k + 2^n + 2^{n-1}} h_n

and on the positive cone the mirror families

    d_1(τ^{2k+1})                = ρ τ^{2k} h_0
    d_{2^n}(τ^{2^{n+1}k + 2^n}) = ρ^{2^n} τ^{2^{n+1}k + 2^n - 2^{n-1}} h_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import DegreeBox, TriDegree
from .labels import ClassLabel, Gamma, Monomial, Pos


@dataclass(frozen=True)
class SeedDifferential:
    page: int
    source: ClassLabel
    target: ClassLabel
    provenance: str

    def family_period(self) -> int:
        """The τ-power periodicity of the family this seed belongs to."""
        return 2 * self.page


def _h(n: int) -> Monomial:
    return Monomial.of((f"h_{n}", 1))


def gamma_seed_differentials(window: DegreeBox) -> list[SeedDifferential]:
    """All negative-cone seed differentials meeting the window.

    Emits every instance whose source or target lies in the window.  The
    h_n body requires n <= 5 which covers every finite window up to stem 63.
    """
    out: list[SeedDifferential] = []
    n = 0
    while (1 << n) <= window.smax + 1 and n <= 5:
        r = 1 << n
        period = 2 * r
        k = 0
        while True:
            b_src = period * k + r
            src = ClassLabel(Gamma(r, b_src))
            tgt_b = b_src + (r // 2 if n else 1)
            tgt = ClassLabel(Gamma(0, tgt_b), _h(n))
            sdeg = TriDegree(r, 0, -1 - b_src)
            tdeg = TriDegree(r - 1, 1, -1 - tgt_b)
            if sdeg.c < window.cmin and tdeg.c < window.cmin:
                break
            if sdeg in window or tdeg in window:
                prov = "Prop 4.2" if k == 0 else "Rmk 4.3"
                out.append(SeedDifferential(r, src, tgt, prov))
            k += 1
        n += 1
    return out


def tau_seed_differentials(window: DegreeBox) -> list[SeedDifferential]:
    """All positive-cone seed differentials with τ-exponent within reach.

    Pure τ-power sources sit in stem 0; the page-turning engine expands
    them over the whole dataset by multiplication, so every family member
    with source exponent b <= cmax + 1 is emitted without further window
    filtering.
    """
    out: list[SeedDifferential] = []
    bmax = window.cmax + 1
    n = 0
    while (1 << n) <= bmax and n <= 5:
        r = 1 << n
        period = 2 * r
        k = 0
        while period * k + r <= bmax:
            b_src = period * k + r
            src = ClassLabel(Pos(0, b_src))
            tgt_b = b_src - (r // 2 if n else 1)
            tgt = ClassLabel(Pos(r, tgt_b), _h(n))
            out.append(SeedDifferential(r, src, tgt, "R-motivic tau towers"))
            k += 1
        n += 1
    return out
