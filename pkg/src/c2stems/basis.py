"""Basis classes of the spectral sequence pages, built over an Ext dataset.

Three families of basis classes:

* ``PosClass(gen, a, b)``:  ρ^a τ^b x  (positive cone, all dataset gens;
  b is capped below the τ-torsion exponent for torsion generators),
* ``GammaClass(gen, a, b)``:  γ/(ρ^a τ^b) x  for τ-free generators x,
* ``QClass(gen, a)``:  Q/ρ^a y  for τ-torsion generators y.

The dataset wraps an ``ext-dataset`` chart file and provides the product
structure: explicit ``line`` records first, then monomial-name lookup
(the product of the operator symbol with the generator's label body), and
zero otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .chartfile import ChartFile, GeneratorRecord
from .degrees import TriDegree
from .labels import ClassLabel, Gamma, Monomial, Pos, QCone, format_label

class Dataset:
    def __init__(self, chart: ChartFile):
        if chart.kind != "ext-dataset":
            raise ValueError("Dataset requires an ext-dataset chart")
        self.chart = chart
        self.table = chart.symbol_table()
        self.gens: dict[str, GeneratorRecord] = chart.gen_by_id()
        self.by_body: dict[str, GeneratorRecord] = {}
        for g in chart.generators:
            if not isinstance(g.label.cone, Pos) or g.label.cone.a or g.label.cone.b:
                raise ValueError(f"dataset generator {g.id} must carry a plain label")
            self.by_body[g.label.body.format() or "1"] = g
        self.relations: dict[str, Optional[tuple[str, int]]] = {}
        self._rel_lhs: dict[str, dict[str, int]] = {}
        from .labels import parse_label as _parse

        for rel in chart.rels:
            if rel.target == "ZERO":
                self.relations[rel.monomial] = None
            else:
                self.relations[rel.monomial] = (rel.target, rel.tau_shift)
            self._rel_lhs[rel.monomial] = dict(
                _parse(rel.monomial, self.table).body.factors
            )
        self._reduce_cache: dict[str, Optional[tuple[str, int]]] = {}
        self.window = chart.window

    def torsion(self, gen_id: str) -> Optional[int]:
        return self.gens[gen_id].tau_torsion

    def reduce_monomial(self, mono: Monomial) -> Optional[tuple[str, int]]:
        """Express a combined monomial as τ^shift times a generator, or None
        for zero.

        Generators match directly; otherwise declared relations rewrite any
        divisor submonomial.  Distinct rewriting paths must agree (a
        disagreement means inconsistent relation data and raises).
        """
        key = mono.format() or "1"
        if key in self._reduce_cache:
            return self._reduce_cache[key]
        result = self._reduce_uncached(mono, key)
        self._reduce_cache[key] = result
        return result

    def _reduce_uncached(self, mono: Monomial, key: str) -> Optional[tuple[str, int]]:
        hit = self.by_body.get(key)
        if hit is not None:
            return (hit.id, 0)
        results = set()
        mfact = dict(mono.factors)
        for lhs_key, rhs in self.relations.items():
            lhs = self._rel_lhs[lhs_key]
            if not _divides(lhs, mfact):
                continue
            if rhs is None:
                results.add(None)
                continue
            tgt_gen, shift = rhs
            rest = _quotient(mfact, lhs)
            combined = self.gens[tgt_gen].label.body * Monomial(
                tuple(sorted(rest.items()))
            )
            sub = self.reduce_monomial(combined)
            if sub is None:
                results.add(None)
            else:
                results.add((sub[0], sub[1] + shift))
        results.discard(None)
        if len(results) > 1:
            raise ValueError(
                f"relation rewriting is not confluent at {key!r}: {results}"
            )
        if results:
            return next(iter(results))
        return None

    def product_gen(self, op_gen: str, gen_id: str) -> Optional[tuple[str, int]]:
        """Product of two generators: (target gen id, tau shift) or None."""
        combined = self.gens[op_gen].label.body * self.gens[gen_id].label.body
        return self.reduce_monomial(combined)

    def product(self, sym: str, gen_id: str) -> Optional[tuple[str, int]]:
        """op symbol times a generator: (target gen id, tau shift) or None."""
        prod_body = self.gens[gen_id].label.body * Monomial.of((sym, 1))
        return self.reduce_monomial(prod_body)

    def multipliers(self) -> list[str]:
        """Generator ids usable as Leibniz multipliers (the unit excluded)."""
        return [g.id for g in self.chart.generators if g.label.body.factors]


@dataclass(frozen=True)
class PosClass:
    gen: str
    a: int
    b: int

    def degree(self, ds: Dataset) -> TriDegree:
        return ds.gens[self.gen].degree + TriDegree(-self.a, 0, self.b)

    def label(self, ds: Dataset) -> ClassLabel:
        return ClassLabel(Pos(self.a, self.b), ds.gens[self.gen].label.body)

    def rho_filtration(self) -> int:
        return self.a

    def origin(self) -> str:
        return "R"


@dataclass(frozen=True)
class GammaClass:
    gen: str
    a: int
    b: int

    def degree(self, ds: Dataset) -> TriDegree:
        return ds.gens[self.gen].degree + TriDegree(self.a, 0, -1 - self.b)

    def label(self, ds: Dataset) -> ClassLabel:
        return ClassLabel(Gamma(self.a, self.b), ds.gens[self.gen].label.body)

    def rho_filtration(self) -> int:
        return -self.a - 1

    def origin(self) -> str:
        return "gamma"


@dataclass(frozen=True)
class QClass:
    gen: str
    a: int

    def degree(self, ds: Dataset) -> TriDegree:
        return ds.gens[self.gen].degree + TriDegree(1 + self.a, -1, 0)

    def label(self, ds: Dataset) -> ClassLabel:
        return ClassLabel(QCone(self.a), ds.gens[self.gen].label.body)

    def rho_filtration(self) -> int:
        return -self.a - 1

    def origin(self) -> str:
        return "Q"


def _divides(lhs: dict[str, int], mono: dict[str, int]) -> bool:
    return all(mono.get(n, 0) >= e for n, e in lhs.items())


def _quotient(mono: dict[str, int], lhs: dict[str, int]) -> dict[str, int]:
    out = dict(mono)
    for n, e in lhs.items():
        out[n] -= e
        if not out[n]:
            del out[n]
    return out


BasisClass = Union[PosClass, GammaClass, QClass]


def class_from_label(label: ClassLabel, ds: Dataset) -> Optional[BasisClass]:
    """Resolve a label to a basis class; None when the label denotes zero."""
    body = label.body.format()
    cone = label.cone
    if isinstance(cone, Pos):
        gen = ds.by_body.get(body if body else "1")
        if gen is None:
            raise KeyError(f"label body {body!r} is not a dataset generator")
        k = gen.tau_torsion
        if k is not None and cone.b >= k:
            return None
        return PosClass(gen.id, cone.a, cone.b)
    if isinstance(cone, Gamma):
        gen = ds.by_body.get(body if body else "1")
        if gen is None:
            raise KeyError(f"label body {body!r} is not a dataset generator")
        if gen.tau_torsion is not None:
            return None  # γ-coefficients annihilate τ-torsion
        return GammaClass(gen.id, cone.a, cone.b)
    gen = ds.by_body.get(body if body else "1")
    if gen is None:
        raise KeyError(f"label body {body!r} is not a dataset generator")
    if gen.tau_torsion is None:
        raise ValueError(
            f"Q label over τ-free generator {body!r}: {format_label(label)}"
        )
    if gen.tau_torsion != 1:
        raise NotImplementedError("τ-torsion exponents >= 2 are not in range")
    return QClass(gen.id, cone.a)


def multiply(op_gen: str, cls: BasisClass, ds: Dataset) -> Optional[BasisClass]:
    """Product of a generator with a basis class (None = zero)."""
    prod = ds.product_gen(op_gen, cls.gen)
    if prod is None:
        return None
    tgt, shift = prod
    if isinstance(cls, PosClass):
        b = cls.b + shift
        k = ds.torsion(tgt)
        if k is not None and b >= k:
            return None
        return PosClass(tgt, cls.a, b)
    if isinstance(cls, GammaClass):
        if ds.torsion(tgt) is not None:
            return None
        b = cls.b - shift
        if b < 1:
            return None
        return GammaClass(tgt, cls.a, b)
    if ds.torsion(tgt) is None:
        return None  # Q over τ-free target drops out of the Q part
    if shift != 0:
        return None  # τ-multiple of a torsion class vanishes (exponent 1)
    return QClass(tgt, cls.a)


def multiply_by_pos(cls: BasisClass, pos: PosClass, ds: Dataset) -> Optional[BasisClass]:
    """Product of a basis class with ρ^a τ^b y (a full positive-cone class)."""
    prod = ds.product_gen(pos.gen, cls.gen)
    if prod is None:
        return None
    tgt, shift = prod
    if isinstance(cls, PosClass):
        b = cls.b + pos.b + shift
        k = ds.torsion(tgt)
        if k is not None and b >= k:
            return None
        return PosClass(tgt, cls.a + pos.a, b)
    if isinstance(cls, GammaClass):
        if ds.torsion(tgt) is not None:
            return None
        a = cls.a - pos.a
        b = cls.b - pos.b - shift
        if a < 0 or b < 1:
            return None
        return GammaClass(tgt, a, b)
    if ds.torsion(tgt) is None or shift != 0 or pos.b != 0:
        return None
    a = cls.a - pos.a
    if a < 0:
        return None
    return QClass(tgt, a)


def shift_rho(cls: BasisClass, j: int) -> Optional[BasisClass]:
    """Divide (negative cone) or multiply (positive cone) by ρ^j, j >= 0.

    For the negative cone this moves DOWN the cotower (a -> a + j), which
    always exists; for the positive cone it multiplies (a -> a + j).
    """
    if isinstance(cls, PosClass):
        return PosClass(cls.gen, cls.a + j, cls.b)
    if isinstance(cls, GammaClass):
        return GammaClass(cls.gen, cls.a + j, cls.b)
    return QClass(cls.gen, cls.a + j)


def rho_multiple(cls: BasisClass, ds: Dataset) -> Optional[BasisClass]:
    """ρ · class (single multiplication)."""
    if isinstance(cls, PosClass):
        return PosClass(cls.gen, cls.a + 1, cls.b)
    if isinstance(cls, GammaClass):
        return GammaClass(cls.gen, cls.a - 1, cls.b) if cls.a >= 1 else None
    return QClass(cls.gen, cls.a - 1) if cls.a >= 1 else None


def shift_tau(cls: BasisClass, j: int, ds: Dataset) -> Optional[BasisClass]:
    """Multiply by τ^j (positive cone) / divide by τ^j (negative cone)."""
    if isinstance(cls, PosClass):
        b = cls.b + j
        k = ds.torsion(cls.gen)
        if k is not None and b >= k:
            return None
        return PosClass(cls.gen, cls.a, b)
    if isinstance(cls, GammaClass):
        return GammaClass(cls.gen, cls.a, cls.b + j)
    return None  # Q classes are not τ-divisible
