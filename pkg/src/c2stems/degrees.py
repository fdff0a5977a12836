"""Tri-degree arithmetic and degree windows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class TriDegree(NamedTuple):
    """(stem, Adams filtration, coweight)."""

    s: int
    f: int
    c: int

    def __add__(self, other):  # type: ignore[override]
        return TriDegree(self.s + other.s, self.f + other.f, self.c + other.c)

    def __sub__(self, other):
        return TriDegree(self.s - other.s, self.f - other.f, self.c - other.c)

    def scale(self, n: int) -> "TriDegree":
        return TriDegree(self.s * n, self.f * n, self.c * n)


#: degree shift of a Bockstein differential of any page
BOCKSTEIN_SHIFT = TriDegree(-1, 1, -1)

RHO = TriDegree(-1, 0, 0)
TAU = TriDegree(0, 0, 1)


def adams_shift(r: int) -> TriDegree:
    """Degree shift of an Adams d_r."""
    return TriDegree(-1, r, -1)


@dataclass(frozen=True)
class DegreeBox:
    """A finite box of tri-degrees: inclusive bounds in s, f, c."""

    smin: int
    smax: int
    fmin: int
    fmax: int
    cmin: int
    cmax: int

    def __post_init__(self):
        if self.smin > self.smax or self.fmin > self.fmax or self.cmin > self.cmax:
            raise ValueError("empty degree box bounds")

    def __contains__(self, d: TriDegree) -> bool:
        return (
            self.smin <= d.s <= self.smax
            and self.fmin <= d.f <= self.fmax
            and self.cmin <= d.c <= self.cmax
        )

    def pad(self, ds: int, df: int, dc: int) -> "DegreeBox":
        return DegreeBox(
            self.smin, self.smax + ds, self.fmin, self.fmax + df,
            self.cmin - dc, self.cmax + dc,
        )

    def degrees(self):
        for s in range(self.smin, self.smax + 1):
            for f in range(self.fmin, self.fmax + 1):
                for c in range(self.cmin, self.cmax + 1):
                    yield TriDegree(s, f, c)

    @staticmethod
    def parse(tokens: list[str]) -> "DegreeBox":
        """Parse ``s a b f a b c a b`` style bounds."""
        vals = {}
        i = 0
        while i < len(tokens):
            key = tokens[i]
            vals[key] = (int(tokens[i + 1]), int(tokens[i + 2]))
            i += 3
        return DegreeBox(
            vals["s"][0], vals["s"][1],
            vals["f"][0], vals["f"][1],
            vals["c"][0], vals["c"][1],
        )

    def format(self) -> str:
        return (
            f"s {self.smin} {self.smax} f {self.fmin} {self.fmax} "
            f"c {self.cmin} {self.cmax}"
        )
