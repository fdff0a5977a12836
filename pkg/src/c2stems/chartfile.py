"""Line-oriented chart files: datasets, ledgers, fixtures, and validation.

One record per line, ``#`` comments, UTF-8.  Labels and other strings with
spaces are double-quoted.  Record shapes:

    kind <ext-dataset|bockstein-ledger|adams-ledger|hidden-extensions|
          einf-hext|einf-fixture|classical-stems|underlying-map>
    window s <a> <b> f <a> <b> c <a> <b>
    gen <id> <s> <f> <c> "<label>" [tau=free|tau=<k>] [origin=R|gamma|Q]
        [status=known|unknown]
    line <rho|tau|h0|h1|h2|mul:<symbol>> "<src-id>" "<dst-id>" [tau=<j>]
        [hidden] [status=unknown] [cite="<ref>"]
    diff <r> "<src-expr>" "<dst-expr|ZERO>" [scope=coper:<N>|tauper:<N>|cotower]
        cite="<ref>"
    hext <rho|h|eta|h0|h1|h2> "<src-expr>" "<dst-expr>" cite="<ref>"
    pin permanent "<label>" cite="<ref>"
    order <s> <2-power>
    umap <c> <s> <f> "<classical-label>" <blue|orange|blue?|orange?>
        "<linked-label>" [cite="<ref>"]

Loading validates all labels against the active symbol table and enforces
the degree laws; any violation aborts the load with a line-numbered report.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .degrees import BOCKSTEIN_SHIFT, DegreeBox, TriDegree, adams_shift
from .labels import (
    ClassLabel,
    GeneratorSymbol,
    ParseError,
    SymbolTable,
    UnknownSymbol,
    format_label,
    parse_label,
    parse_label_expr,
)

KINDS = (
    "ext-dataset",
    "bockstein-ledger",
    "adams-ledger",
    "hidden-extensions",
    "einf-hext",
    "einf-fixture",
    "classical-stems",
    "underlying-map",
)

OPERATOR_DEGREES = {
    "rho": TriDegree(-1, 0, 0),
    "tau": TriDegree(0, 0, 1),
    "h0": TriDegree(0, 1, 0),
    "h1": TriDegree(1, 1, 0),
    "h2": TriDegree(3, 1, 1),
}

# visible Adams-filtration shift of homotopy-level extension operators
HEXT_VISIBLE_SHIFT = {
    "rho": TriDegree(-1, 0, 0),
    "h": TriDegree(0, 1, 0),
    "eta": TriDegree(1, 1, 0),
    "h0": TriDegree(0, 1, 0),
    "h1": TriDegree(1, 1, 0),
    "h2": TriDegree(3, 1, 1),
}


class ChartError(Exception):
    """Load-time failure; message carries a line-numbered report."""


class DegreeLawViolation(ChartError):
    pass


@dataclass(frozen=True)
class GeneratorRecord:
    id: str
    degree: TriDegree
    label: ClassLabel
    tau_torsion: Optional[int] = None  # None = free
    origin: str = "R"
    status: str = "known"


@dataclass(frozen=True)
class StructureLine:
    op: str
    src: str
    dst: str
    tau_shift: int = 0
    hidden: bool = False
    status: str = "known"
    cite: str = ""


@dataclass(frozen=True)
class LedgerEntry:
    page: int
    source: tuple[ClassLabel, ...]
    target: tuple[ClassLabel, ...]
    scope: str = "single"  # single | coper:<N> | tauper:<N> | cotower
    cite: str = ""

    def scope_period(self) -> Optional[int]:
        if self.scope.startswith(("coper:", "tauper:")):
            return int(self.scope.split(":")[1])
        return None


@dataclass(frozen=True)
class HiddenExtension:
    op: str
    source: tuple[ClassLabel, ...]
    target: tuple[ClassLabel, ...]
    cite: str = ""


@dataclass(frozen=True)
class PinEntry:
    label: ClassLabel
    cite: str = ""


@dataclass(frozen=True)
class OrderRecord:
    s: int
    order: int


@dataclass(frozen=True)
class RelRecord:
    """Product relation: a combined monomial equals τ^shift times a generator
    (or zero when the target is ZERO)."""

    monomial: str
    target: str
    tau_shift: int = 0


@dataclass(frozen=True)
class UmapRecord:
    c: int
    s: int
    f: int
    classical: str
    color: str  # blue | orange | blue? | orange?
    linked: ClassLabel
    cite: str = ""

    @property
    def ambiguous(self) -> bool:
        return self.color.endswith("?")


@dataclass
class ChartFile:
    kind: str
    window: Optional[DegreeBox] = None
    symbols: list[GeneratorSymbol] = field(default_factory=list)
    generators: list[GeneratorRecord] = field(default_factory=list)
    lines: list[StructureLine] = field(default_factory=list)
    rels: list[RelRecord] = field(default_factory=list)
    entries: list[LedgerEntry] = field(default_factory=list)
    hexts: list[HiddenExtension] = field(default_factory=list)
    pins: list[PinEntry] = field(default_factory=list)
    orders: list[OrderRecord] = field(default_factory=list)
    umaps: list[UmapRecord] = field(default_factory=list)
    path: str = ""

    def symbol_table(self) -> SymbolTable:
        """Symbol table from declared symbols plus single-symbol generators."""
        table = SymbolTable()
        for sym in self.symbols:
            if sym.name not in table:
                table.add(sym)
        for g in self.generators:
            body = g.label.body
            if (
                len(body.factors) == 1
                and body.factors[0][1] == 1
                and g.label.cone.__class__.__name__ == "Pos"
                and g.label.cone.a == 0
                and g.label.cone.b == 0
            ):
                name = body.factors[0][0]
                if name not in table:
                    table.add(GeneratorSymbol(name, g.degree, g.tau_torsion))
        return table

    def gen_by_id(self) -> dict[str, GeneratorRecord]:
        return {g.id: g for g in self.generators}


def _parse_opts(tokens: list[str]) -> dict[str, str]:
    opts: dict[str, str] = {}
    for tok in tokens:
        if "=" in tok:
            key, val = tok.split("=", 1)
            opts[key] = val
        else:
            opts[tok] = "true"
    return opts


def parse_chart_text(
    text: str,
    table: Optional[SymbolTable] = None,
    path: str = "<memory>",
) -> ChartFile:
    """Parse and validate a chart file.

    For ext-dataset kind the symbol table is accumulated from the file's
    own generators (so later records can reference earlier symbols).  All
    other kinds require a table built from a loaded dataset.
    """
    chart = ChartFile(kind="", path=path)
    errors: list[str] = []
    own_table = SymbolTable() if table is None else table

    def err(lineno: int, msg: str):
        errors.append(f"{path}:{lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tokens = shlex.split(line, comments=True)
        except ValueError as exc:
            err(lineno, f"tokenization failed: {exc}")
            continue
        head, rest = tokens[0], tokens[1:]
        try:
            if head == "kind":
                if rest[0] not in KINDS:
                    raise ChartError(f"unknown kind {rest[0]!r}")
                chart.kind = rest[0]
            elif head == "symbol":
                if table is not None:
                    raise ChartError("symbol records only allowed in datasets")
                name = rest[0]
                deg = TriDegree(int(rest[1]), int(rest[2]), int(rest[3]))
                if name not in own_table:
                    own_table.add(GeneratorSymbol(name, deg))
                chart.symbols.append(GeneratorSymbol(name, deg))
            elif head == "window":
                chart.window = DegreeBox.parse(rest)
            elif head == "gen":
                _load_gen(chart, rest, own_table, table is None)
            elif head == "line":
                _load_line(chart, rest)
            elif head == "rel":
                opts = _parse_opts(rest[2:])
                mono = parse_label(rest[0], own_table)
                chart.rels.append(
                    RelRecord(mono.body.format(), rest[1], int(opts.get("tau", "0")))
                )
            elif head == "diff":
                _load_diff(chart, rest, own_table)
            elif head == "hext":
                _load_hext(chart, rest, own_table)
            elif head == "pin":
                if rest[0] != "permanent":
                    raise ChartError("only 'pin permanent' is supported")
                opts = _parse_opts(rest[2:])
                cite = opts.get("cite", "")
                if not cite:
                    raise ChartError("pins require a citation")
                chart.pins.append(PinEntry(parse_label(rest[1], own_table), cite))
            elif head == "order":
                s, order = int(rest[0]), int(rest[1])
                if order & (order - 1):
                    raise ChartError(f"order {order} is not a 2-power")
                chart.orders.append(OrderRecord(s, order))
            elif head == "umap":
                _load_umap(chart, rest, own_table)
            else:
                raise ChartError(f"unknown record type {head!r}")
        except (ChartError, ParseError, UnknownSymbol, ValueError, IndexError) as exc:
            err(lineno, str(exc))

    errors.extend(f"{path}: {e}" for e in _post_validate(chart, own_table))
    if errors:
        raise ChartError("chart load failed:\n" + "\n".join(errors))
    return chart


def _load_gen(chart: ChartFile, rest: list[str], table: SymbolTable, own: bool):
    gid = rest[0]
    degree = TriDegree(int(rest[1]), int(rest[2]), int(rest[3]))
    label_text = rest[4]
    opts = _parse_opts(rest[5:])
    tau = opts.get("tau", "free")
    tau_torsion = None if tau == "free" else int(tau)
    if tau_torsion is not None and tau_torsion < 1:
        raise ChartError("torsion exponent must be >= 1")
    origin = opts.get("origin", "R")
    status = opts.get("status", "known")
    if status not in ("known", "unknown"):
        raise ChartError(f"bad status {status!r}")
    # single fresh symbols register themselves before the label parses
    if own and chart.kind in ("ext-dataset", "classical-stems"):
        if " " not in label_text and "/" not in label_text and "^" not in label_text:
            if label_text not in ("1",) and label_text not in table:
                table.add(GeneratorSymbol(label_text, degree, tau_torsion))
    label = parse_label(label_text, table)
    found = label.degree(table)
    if found != degree:
        raise DegreeLawViolation(
            f"gen {gid}: declared degree {tuple(degree)} but label "
            f"{label_text!r} has degree {tuple(found)}"
        )
    chart.generators.append(
        GeneratorRecord(gid, degree, label, tau_torsion, origin, status)
    )


def _load_line(chart: ChartFile, rest: list[str]):
    op = rest[0]
    if op not in OPERATOR_DEGREES and not op.startswith("mul:"):
        raise ChartError(f"unknown line operator {op!r}")
    src, dst = rest[1], rest[2]
    opts = _parse_opts(rest[3:])
    chart.lines.append(
        StructureLine(
            op,
            src,
            dst,
            tau_shift=int(opts.get("tau", "0")),
            hidden="hidden" in opts,
            status=opts.get("status", "known"),
            cite=opts.get("cite", ""),
        )
    )


def _load_diff(chart: ChartFile, rest: list[str], table: SymbolTable):
    page = int(rest[0])
    if page < 1:
        raise ChartError("differential page must be >= 1")
    source = tuple(parse_label_expr(rest[1], table))
    target = tuple(parse_label_expr(rest[2], table))
    if not source:
        raise ChartError("differential source may not be ZERO")
    opts = _parse_opts(rest[3:])
    scope = opts.get("scope", "single")
    if scope not in ("single", "cotower") and not scope.startswith(("coper:", "tauper:")):
        raise ChartError(f"bad scope {scope!r}")
    cite = opts.get("cite", "")
    if not cite:
        raise ChartError("ledger differentials require a citation")
    entry = LedgerEntry(page, source, target, scope, cite)
    period = entry.scope_period()
    if period is not None and period & (period - 1):
        raise ChartError("coperiodic period must be a 2-power")
    if scope.startswith("coper:") and period is not None and page >= period:
        raise ChartError(
            f"coperiodic scope requires r < 2^n (got r={page}, period={period})"
        )
    chart.entries.append(entry)


def _load_hext(chart: ChartFile, rest: list[str], table: SymbolTable):
    op = rest[0]
    if op not in HEXT_VISIBLE_SHIFT:
        raise ChartError(f"unknown extension operator {op!r}")
    source = tuple(parse_label_expr(rest[1], table))
    target = tuple(parse_label_expr(rest[2], table))
    if not source or not target:
        raise ChartError("hidden extensions need nonzero source and target")
    opts = _parse_opts(rest[3:])
    cite = opts.get("cite", "")
    if not cite:
        raise ChartError("hidden extensions require a citation")
    chart.hexts.append(HiddenExtension(op, source, target, cite))


def _load_umap(chart: ChartFile, rest: list[str], table: SymbolTable):
    c, s, f = int(rest[0]), int(rest[1]), int(rest[2])
    classical = rest[3]
    color = rest[4]
    if color not in ("blue", "orange", "blue?", "orange?"):
        raise ChartError(f"bad umap color {color!r}")
    linked = parse_label(rest[5], table)
    opts = _parse_opts(rest[6:])
    chart.umaps.append(UmapRecord(c, s, f, classical, color, linked, opts.get("cite", "")))


def _expr_degree(labels: tuple[ClassLabel, ...], table: SymbolTable) -> TriDegree:
    degs = {lbl.degree(table) for lbl in labels}
    if len(degs) != 1:
        raise DegreeLawViolation(
            "summands of an expression must share one degree: "
            + " + ".join(format_label(l) for l in labels)
        )
    return next(iter(degs))


def _post_validate(chart: ChartFile, table: SymbolTable) -> list[str]:
    errors: list[str] = []
    ids: dict[str, GeneratorRecord] = {}
    for g in chart.generators:
        if g.id in ids:
            errors.append(f"duplicate generator id {g.id!r}")
        ids[g.id] = g
    for rel in chart.rels:
        if rel.target == "ZERO":
            continue
        if rel.target not in ids:
            errors.append(f"rel {rel.monomial!r} targets unknown id {rel.target!r}")
            continue
        try:
            mdeg = parse_label(rel.monomial, table).degree(table)
        except (ParseError, UnknownSymbol) as exc:
            errors.append(str(exc))
            continue
        want = ids[rel.target].degree + TriDegree(0, 0, rel.tau_shift)
        if mdeg != want:
            errors.append(
                f"rel {rel.monomial!r}: degree {tuple(mdeg)} != target+shift "
                f"{tuple(want)}"
            )
    for ln in chart.lines:
        if ln.src not in ids or ln.dst not in ids:
            errors.append(f"line {ln.op} references unknown ids {ln.src!r}->{ln.dst!r}")
            continue
        if ln.op.startswith("mul:"):
            sym = ln.op[4:]
            try:
                opdeg = table[sym].degree
            except UnknownSymbol:
                errors.append(f"line operator {ln.op} names unknown symbol")
                continue
        else:
            opdeg = OPERATOR_DEGREES[ln.op]
        want = ids[ln.src].degree + opdeg
        found = ids[ln.dst].degree + TriDegree(0, 0, ln.tau_shift)
        if chart.kind == "classical-stems":
            want = TriDegree(want.s, want.f, 0)
            found = TriDegree(found.s, found.f, 0)
        if want != found:
            errors.append(
                f"line {ln.op} {ln.src}->{ln.dst}: degree law violated "
                f"(src+op={tuple(want)}, dst+tau^{ln.tau_shift}={tuple(found)})"
            )
        if ln.hidden and not ln.cite:
            errors.append(f"hidden line {ln.op} {ln.src}->{ln.dst} lacks a citation")
    for e in chart.entries:
        try:
            sdeg = _expr_degree(e.source, table)
            tdeg = _expr_degree(e.target, table) if e.target else None
        except (DegreeLawViolation, UnknownSymbol) as exc:
            errors.append(str(exc))
            continue
        if tdeg is None:
            continue
        shift = (
            adams_shift(e.page) if chart.kind == "adams-ledger" else BOCKSTEIN_SHIFT
        )
        if tdeg != sdeg + shift:
            errors.append(
                f"diff d_{e.page} {format_label(e.source[0])} -> "
                f"{format_label(e.target[0])}: expected degree {tuple(sdeg + shift)}, "
                f"found {tuple(tdeg)}"
            )
    for h in chart.hexts:
        try:
            sdeg = _expr_degree(h.source, table)
            tdeg = _expr_degree(h.target, table)
        except (DegreeLawViolation, UnknownSymbol) as exc:
            errors.append(str(exc))
            continue
        visible = HEXT_VISIBLE_SHIFT[h.op]
        delta = tdeg - sdeg
        if chart.kind == "classical-stems":
            delta = TriDegree(delta.s, delta.f, visible.c)
        if (delta.s, delta.c) != (visible.s, visible.c):
            errors.append(
                f"hext {h.op} {format_label(h.source[0])}: stem/coweight shift "
                f"{(delta.s, delta.c)} != {(visible.s, visible.c)}"
            )
        elif chart.kind in ("einf-hext", "classical-stems"):
            if delta.f <= visible.f:
                errors.append(
                    f"hext {h.op} {format_label(h.source[0])}: hidden extension must "
                    f"increase filtration beyond {visible.f} (got {delta.f})"
                )
        elif delta.f != visible.f:
            errors.append(
                f"hext {h.op} {format_label(h.source[0])}: Bockstein-hidden "
                f"extension must have exact filtration shift {visible.f} (got {delta.f})"
            )
    return errors


def load_chart(path: str | Path, table: Optional[SymbolTable] = None) -> ChartFile:
    p = Path(path)
    return parse_chart_text(p.read_text(encoding="utf-8"), table, str(p))


def validate_chart(chart: ChartFile, table: Optional[SymbolTable] = None) -> list[str]:
    """Report-only re-validation; idempotent."""
    tbl = table if table is not None else chart.symbol_table()
    return _post_validate(chart, tbl)


def window_slice(chart: ChartFile, box: DegreeBox) -> ChartFile:
    """Records whose degree lies in box, plus lines with both endpoints kept."""
    kept = [g for g in chart.generators if g.degree in box]
    ids = {g.id for g in kept}
    out = ChartFile(kind=chart.kind, window=box, path=chart.path)
    out.generators = kept
    out.lines = [l for l in chart.lines if l.src in ids and l.dst in ids]
    out.entries = list(chart.entries)
    out.hexts = list(chart.hexts)
    out.pins = list(chart.pins)
    out.orders = list(chart.orders)
    out.umaps = [u for u in chart.umaps if TriDegree(u.s, u.f, u.c) in box]
    return out
