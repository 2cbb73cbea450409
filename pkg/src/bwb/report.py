"""Reference-table verification.

Every numeric value stored in the catalog's reference tables is recomputed
from scratch by the engine and reported as a :class:`ReportCell`.  Cells are
keyed by (table, row, column); the verdict is ``match``/``mismatch`` for
exact values, ``indeterminate`` when the engine only produces an interval,
and ``fixture-absent`` for quantities the suite computes but the catalog does
not store.  Mismatches listed in the catalog's documented-discrepancy block
are still reported as mismatches, but flagged, and do not fail the run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .bott import forms_cohomology
from .catalog import Catalog, HomogSpace, default_catalog, space_facts
from .chase import Iv
from .hodge import (
    SectionSpec,
    ci_moduli,
    closed_form_hcc1,
    deformation_moduli,
    dual_correspondence,
    lemma_nonvan_check,
    lemma_van_scan,
    linear_section,
    section_hodge,
    section_spec,
)
from .jacring import steenbrink_hodge

__all__ = ["ReportCell", "run_verify", "render_cells", "REPORT_SCHEMA_VERSION"]

REPORT_SCHEMA_VERSION = 1

_GROUP_NAMES = {"A": "PSL{m}", "B": "Spin{o}", "C": "PSp{s}", "D": "Spin{e}",
                "E": "E{n}", "G": "G{n}"}


@dataclass(frozen=True)
class ReportCell:
    table: str
    row: str
    column: str
    fixture: object
    computed: object
    status: str
    note: str = ""

    def as_json(self) -> dict:
        return {
            "table": self.table, "row": self.row, "column": self.column,
            "fixture": self.fixture, "computed": self.computed,
            "status": self.status, "note": self.note,
        }

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.table, self.row, self.column)


def _cell(table, row, column, fixture, computed, note="") -> ReportCell:
    if isinstance(computed, Iv):
        if computed.exact:
            computed = computed.lo
        else:
            status = ("indeterminate"
                      if fixture is None or computed.lo <= fixture <= computed.hi
                      else "mismatch")
            return ReportCell(table, row, column, fixture,
                              f"[{computed.lo},{computed.hi}]", status, note)
    if fixture is None:
        return ReportCell(table, row, column, None, computed, "fixture-absent", note)
    status = "match" if fixture == computed else "mismatch"
    return ReportCell(table, row, column, fixture, computed, status, note)


def _group_name(space: HomogSpace) -> str:
    """Automorphism-group label, e.g. PSL10 for A9, Spin12 for D6."""
    parts = []
    for f in space.factors:
        s, n = f.rs.series, f.rs.rank
        parts.append(_GROUP_NAMES[s].format(m=n + 1, o=2 * n + 1, s=2 * n,
                                            e=2 * n, n=n))
    return "x".join(parts)


def _weights_label(weights) -> str:
    """Compressed multiset notation: (1,1,1,1,1,1,2) -> '1^6,2'."""
    runs = []
    for w in weights:
        if runs and runs[-1][0] == w:
            runs[-1][1] += 1
        else:
            runs.append([w, 1])
    return ",".join(f"{w}^{k}" if k > 1 else f"{w}" for w, k in runs)


# ---------------------------------------------------------------- cell crops

def _facts_cells(cat: Catalog, table: str, cuts) -> list[ReportCell]:
    """dim/index(/coindex) columns plus the moduli column of a section table."""
    cells = []
    tab = cat.tables[table]
    for name in tab["rows"]:
        sp = cat.space(name)
        fix = cat.fixture(name, table)
        facts = space_facts(sp)
        for col in ("dim", "index", "coindex"):
            if col in tab["columns"]:
                cells.append(_cell(table, name, col, fix.get(col), facts[col]))
        if "moduli" in tab["columns"]:
            rep = deformation_moduli(section_spec(sp, cuts))
            cells.append(_cell(table, name, "moduli", fix.get("moduli"),
                               rep.value, note=f"route={rep.route}"))
    return cells


def _linear33_cells(cat: Catalog) -> list[ReportCell]:
    return _facts_cells(cat, "linear33", (1,))


def _mukai34_cells(cat: Catalog) -> list[ReportCell]:
    return _facts_cells(cat, "mukai34", (2,))


def _series41_cells(cat: Catalog) -> list[ReportCell]:
    cells = _facts_cells(cat, "series41", ())  # no moduli column here
    for name in cat.tables["series41"]["rows"]:
        sp = cat.space(name)
        fix = cat.fixture(name, "series41")
        rep = dual_correspondence(sp)
        cells.append(_cell("series41", name, "dual_degree",
                           fix.get("dual_degree"), space_facts(sp)["coindex"] - 1,
                           note=rep.description))
    return cells


def _moduli43_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for name in cat.tables["moduli43"]["rows"]:
        sp = cat.space(name)
        fix = cat.fixture(name, "moduli43")
        facts = space_facts(sp)
        cells.append(_cell("moduli43", name, "s", fix.get("s"), facts["s"]))
        cells.append(_cell("moduli43", name, "N", fix.get("N"), facts["N"]))
        cells.append(_cell("moduli43", name, "aut", fix.get("aut"), _group_name(sp)))
        cells.append(_cell("moduli43", name, "delta", fix.get("delta"), facts["delta"]))
        spec = linear_section(sp, facts["s"])
        for route in ("grassmannian", "cohomological"):
            rep = deformation_moduli(spec, route=route)
            col = "moduli" if route == "grassmannian" else "moduli_cohomological"
            cells.append(_cell("moduli43", name, col,
                               fix.get("moduli"), rep.value, note=f"route={route}"))
    return cells


def _dual44_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for name in cat.tables["dual44"]["rows"]:
        sp = cat.space(name)
        fix = cat.fixture(name, "dual44")
        mfix = cat.fixture(name, "moduli43")
        rep = dual_correspondence(sp)
        cells.append(_cell("dual44", name, "assoc", fix.get("assoc"), rep.description))
        cells.append(_cell("dual44", name, "dual_moduli", mfix.get("moduli"),
                           rep.dual_moduli.value, note=f"route={rep.dual_moduli.route}"))
        cells.append(_cell("dual44", name, "moduli_agree", True, rep.agree))
        cells.append(_cell("dual44", name, "j_dim",
                           None if mfix.get("moduli") is None else mfix["moduli"] + 1,
                           rep.j_dim))
    return cells


def _weighted31_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for row in cat.tables["weighted31"]["rows"]:
        name = row["name"]
        reading = row.get("reading")
        if reading is None:
            w, d = tuple(row["weights"]), row["degrees"][0]
            sb = steenbrink_hodge(w, d)
            computed_weights = _weights_label(sb.weights)
            computed_degrees = _weights_label((sb.degree,))
            computed_dim, computed_moduli = sb.dim, sb.moduli
        else:
            amb, degs = reading["ci_ambient"], tuple(reading["ci_degrees"])
            computed_weights = f"({_weights_label(degs)}) complete intersection in P^{amb}"
            computed_degrees = _weights_label(degs)
            computed_dim = amb - len(degs)
            computed_moduli = ci_moduli(amb, degs).value
        cells.append(_cell("weighted31", name, "dim", row["dim"], computed_dim))
        cells.append(_cell("weighted31", name, "weights",
                           _weights_label(row["weights"]), computed_weights))
        cells.append(_cell("weighted31", name, "degrees",
                           _weights_label(row["degrees"]), computed_degrees))
        cells.append(_cell("weighted31", name, "moduli", row["moduli"], computed_moduli))
    return cells


def _quadric34_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for name in cat.tables["quadric34"]["rows"]:
        sp = cat.space(name)
        fix = cat.fixture(name, "quadric34")
        row = section_hodge(section_spec(sp, (2,)))
        n = row.n
        for p in range(n, n - 5, -1):
            col = f"h{p}{n - p}"
            cells.append(_cell("quadric34", name, col, fix.get(col),
                               row.entry(p, n - p)))
    return cells


def _lemma_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for name in cat.tables["series41"]["rows"]:
        sp = cat.space(name)
        facts = space_facts(sp)
        r, c = facts["index"], facts["coindex"]
        q, dim = lemma_nonvan_check(sp)
        cells.append(_cell("lemma_nonvan", name, "degree", r + 2, q))
        cells.append(_cell("lemma_nonvan", name, "dim", 1, dim))
        hits = lemma_van_scan(sp)
        cells.append(_cell("lemma_van", name, "cells", 1, len(hits)))
        where = ",".join(f"(p={p},k={k})" for p, k, _q, _d in hits) or "none"
        cells.append(_cell("lemma_van", name, "at", f"(p={c - 2},k={r - c + 1})", where))
    return cells


def _theta_cells(cat: Catalog) -> list[ReportCell]:
    row = section_hodge(linear_section(cat.space("LG(3,6)"), 1))
    n = row.n
    cells = [_cell("theta35", "Theta", f"h{p}{p}", 1, row.entry(p, p))
             for p in range(1, n + 1)]
    off = sum(row.entry(p, n - p).hi for p in range(n + 1) if 2 * p != n)
    cells.append(_cell("theta35", "Theta", "middle_offdiag", 0, off))
    return cells


def _middle41_cells(cat: Catalog) -> list[ReportCell]:
    cells = []
    for name in cat.tables["series41"]["rows"]:
        sp = cat.space(name)
        facts = space_facts(sp)
        mfix = cat.fixture(name, "moduli43").get("moduli")
        row = section_hodge(linear_section(sp, facts["s"]))
        m = (row.n - 1) // 2
        cells.append(_cell("middle41", name, "h_extreme", 1, row.entry(m + 2, m - 1)))
        cells.append(_cell("middle41", name, "h_middle", mfix, row.entry(m + 1, m)))
        cells.append(_cell("middle41", name, "closed_form", mfix,
                           closed_form_hcc1(sp, facts["s"])))
    return cells


_CROPS = (
    _linear33_cells, _mukai34_cells, _series41_cells, _moduli43_cells,
    _dual44_cells, _weighted31_cells, _quadric34_cells, _lemma_cells,
    _theta_cells, _middle41_cells,
)


# ------------------------------------------------------------------- driver

@dataclass(frozen=True)
class VerifyReport:
    cells: tuple[ReportCell, ...]
    undocumented: tuple[ReportCell, ...]
    documented: tuple[ReportCell, ...]

    @property
    def exit_code(self) -> int:
        return 1 if self.undocumented else 0


def run_verify(cat: Catalog | None = None, tables: tuple[str, ...] = (),
               jobs: int = 1) -> VerifyReport:
    """Recompute every reference cell; canonical (table,row,column) order."""
    cat = cat or default_catalog()
    crops = [c for c in _CROPS
             if not tables or c.__name__[1:].removesuffix("_cells") in tables]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(lambda f: f(cat), crops))
    else:
        batches = [f(cat) for f in crops]
    cells = sorted((c for batch in batches for c in batch), key=lambda c: c.key)
    flagged, undocumented = [], []
    out = []
    for c in cells:
        if c.status == "mismatch":
            if cat.is_documented_discrepancy(c.table, c.row, c.column):
                note = (c.note + "; " if c.note else "") + "documented discrepancy"
                c = ReportCell(c.table, c.row, c.column, c.fixture, c.computed,
                               c.status, note)
                flagged.append(c)
            else:
                undocumented.append(c)
        out.append(c)
    return VerifyReport(tuple(out), tuple(undocumented), tuple(flagged))


def render_cells(cells, fmt: str = "text") -> str:
    """Render a cell stream as text, markdown, json lines, or csv."""
    if fmt == "json":
        import json
        return "\n".join(
            json.dumps({"schema_version": REPORT_SCHEMA_VERSION, **c.as_json()},
                       sort_keys=True)
            for c in cells)
    if fmt == "csv":
        import csv
        import io
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["table", "row", "column", "fixture", "computed", "status", "note"])
        for c in cells:
            w.writerow([c.table, c.row, c.column, c.fixture, c.computed,
                        c.status, c.note])
        return buf.getvalue().rstrip("\n")
    rows = [(c.table, c.row, c.column, str(c.fixture), str(c.computed),
             c.status, c.note) for c in cells]
    head = ("table", "row", "column", "fixture", "computed", "status", "note")
    if fmt == "markdown":
        lines = ["| " + " | ".join(head) + " |",
                 "|" + "|".join("---" for _ in head) + "|"]
        lines += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(lines)
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)
