"""Command-line frontend.

Subcommands
-----------
``bott``     cohomology of one twisted form or Schur-labelled bundle, with an
             optional reflection-walk trace in the weighted-diagram style.
``hodge``    middle Hodge row of a (multi-)section of a catalog space.
``moduli``   deformation counts, optionally through every available route.
``jacring``  weighted-hypersurface Hodge numbers from Jacobian-ring Hilbert
             series, plus the Calabi-Yau-shape scan.
``verify``   recompute every stored reference cell and diff (exit 0 iff the
             mismatches are all documented discrepancies).

Identical invocations produce byte-identical output unless ``--timestamp``
is given.  The environment variable ``BWB_CATALOG`` overrides the catalog
file path.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from .bott import bott, grassmann_bundle, kostant_forms, spinor_bundle
from .catalog import load_catalog, space_facts
from .hodge import (
    closed_form_hcc1,
    deformation_moduli,
    linear_section,
    moduli_routes,
    section_hodge,
    section_spec,
)
from .jacring import jacobian_hilbert, steenbrink_hodge, weighted_cy_scan
from .report import REPORT_SCHEMA_VERSION, render_cells, run_verify
from .rootsys import simple_reflection, to_dominant, weyl_dim

_LETTERS = {10: "A", 11: "B"}


def _tok(v: int) -> str:
    return ("-" if v < 0 else "") + _LETTERS.get(abs(v), str(abs(v)))


def _e6_state_lines(coords) -> list[str]:
    """Two-row weighted-diagram rendering: nodes 1,3,4,5,6 over node 2."""
    toks = [_tok(coords[i]) for i in (0, 2, 3, 4, 5)]
    pad = len(toks[0]) + len(toks[1])
    return ["".join(toks), " " * pad + _tok(coords[1])]


def _trace_lines(space, bundle) -> list[str]:
    lines = []
    for fac, w in zip(space.factors, bundle.weights):
        rs = fac.rs
        cur = tuple(a + 1 for a in w)  # lambda + rho
        walk = to_dominant(rs, cur)
        fancy = rs.series == "E" and rs.rank == 6
        if fancy:
            lines.append("E6 weighted diagram: top row nodes 1,3,4,5,6, "
                         "below them node 2; A = ten, B = eleven")
            lines.append("")
            lines.extend(_e6_state_lines(cur))
        else:
            lines.append(f"start {cur}")
        for i in walk.pivots:
            cur = simple_reflection(rs, i, cur)
            if fancy:
                lines.append(f"  | s{i + 1}")
                lines.extend(_e6_state_lines(cur))
            else:
                lines.append(f"  s{i + 1} -> {cur}")
        lines.append("")
        if walk.singular:
            lines.append(f"stopped on a wall after {walk.length} reflections: acyclic")
        else:
            dim = weyl_dim(rs, tuple(c - 1 for c in walk.dominant))
            group = "C" if dim == 1 else f"C^{dim}"
            lines.append(f"dominant after {walk.length} reflections: "
                         f"H^{walk.length} = {group}")
    return lines


def _parse_schur(space, spec: str, twist: int):
    blocks = {}
    for part in spec.split(";"):
        name, _, body = part.partition(":")
        parts = tuple(int(x) for x in body.split(",")) if "," in body \
            else tuple(int(ch) for ch in body)
        blocks[name.strip()] = parts
    series = {f.rs.series for f in space.factors}
    if series == {"A"}:
        return grassmann_bundle(space, blocks.get("Q*", ()), blocks.get("E", ()),
                                twist)
    if series == {"D"}:
        return spinor_bundle(space, blocks.get("E", ()), twist)
    raise SystemExit(f"--schur labels are not defined for {space.name}")


def _csv_ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _format(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    if getattr(args, "markdown", False):
        return "markdown"
    return "text"


def _stamp(args, fmt: str) -> list[str]:
    if not getattr(args, "timestamp", False):
        return []
    now = datetime.now(timezone.utc).isoformat()
    if fmt == "json":
        return [json.dumps({"timestamp": now})]
    return [f"# generated {now}"]


# ------------------------------------------------------------- subcommands

def _cmd_bott(args) -> int:
    cat = load_catalog()
    space = cat.space(args.space)
    out = _stamp(args, _format(args))
    if args.schur is not None:
        bundles = [_parse_schur(space, args.schur, args.twist)]
    elif args.form is not None:
        shift = tuple(args.twist * a for a in space.ample)
        bundles = [b.twisted(shift) for b in kostant_forms(space, args.form)]
    else:
        raise SystemExit("bott needs --form or --schur")
    total: dict[int, int] = {}
    for b in bundles:
        if args.trace:
            out.extend(_trace_lines(space, b))
            out.append("")
        for q, d in bott(b).dims().items():
            total[q] = total.get(q, 0) + d
    fmt = _format(args)
    if fmt == "json":
        out.append(json.dumps({"schema_version": REPORT_SCHEMA_VERSION,
                               "space": space.name,
                               "cohomology": {str(q): d for q, d in
                                              sorted(total.items())}},
                              sort_keys=True))
    elif fmt == "csv":
        out.append("q,dim")
        out.extend(f"{q},{d}" for q, d in sorted(total.items()))
    elif fmt == "markdown":
        out.append("| q | dim |")
        out.append("|---|---|")
        out.extend(f"| {q} | {d} |" for q, d in sorted(total.items()))
    elif not total:
        out.append("acyclic")
    elif len(total) == 1:
        ((q, d),) = total.items()
        out.append(f"H^{q}, dim {d}")
    else:
        out.extend(f"H^{q}: dim {d}" for q, d in sorted(total.items()))
    print("\n".join(out))
    return 0


def _spec_from_args(cat, args):
    space = cat.space(args.space)
    if args.linear is not None:
        return linear_section(space, args.linear)
    if args.cut is not None:
        return section_spec(space, _csv_ints(args.cut))
    raise SystemExit("need --cut or --linear")


def _cmd_hodge(args) -> int:
    cat = load_catalog()
    spec = _spec_from_args(cat, args)
    row = section_hodge(spec)
    fmt = _format(args)
    out = _stamp(args, fmt)
    n = row.n
    half = [row.entry(p, n - p) for p in range(n, (n - 1) // 2, -1)]
    cells = " ".join(str(iv.lo) if iv.exact else f"[{iv.lo},{iv.hi}]"
                     for iv in half)
    if fmt == "json":
        out.append(json.dumps({"schema_version": REPORT_SCHEMA_VERSION,
                               **row.as_json()}, sort_keys=True))
    elif fmt == "csv":
        out.append("p,q,h")
        out.extend(f"{p},{n - p},{iv}" for p, iv in
                   zip(range(n, (n - 1) // 2, -1), half))
    elif fmt == "markdown":
        out.append("| p | q | h |")
        out.append("|---|---|---|")
        out.extend(f"| {p} | {n - p} | {iv} |" for p, iv in
                   zip(range(n, (n - 1) // 2, -1), half))
    else:
        out.append(f"{spec.describe()}: dim {n}")
        out.append(f"middle row h^{{{n},0}} .. h^{{{(n + 1) // 2},"
                   f"{n - (n + 1) // 2}}}: {cells}")
    print("\n".join(out))
    return 0


def _cmd_moduli(args) -> int:
    cat = load_catalog()
    spec = _spec_from_args(cat, args)
    fmt = _format(args)
    out = _stamp(args, fmt)
    if args.all_routes:
        reports = list(moduli_routes(spec))
        values = [r.value for r in reports]
        labels = [r.route for r in reports]
        if args.linear is not None:
            try:
                values.append(closed_form_hcc1(spec.ambient, args.linear))
                labels.append("closed-form")
            except ValueError:
                pass
        try:
            row = section_hodge(spec)
            m = (row.n - 1) // 2
            iv = row.entry(m + 1, m)
            if iv.exact:
                values.append(iv.lo)
                labels.append("hodge-middle")
        except ValueError:
            pass
        if fmt == "json":
            out.append(json.dumps({"schema_version": REPORT_SCHEMA_VERSION,
                                   "routes": dict(zip(labels, values))},
                                  sort_keys=True))
        elif fmt in ("csv", "markdown"):
            out.extend(_route_rows(fmt, zip(labels, values)))
        else:
            out.append(" = ".join(str(v) for v in values)
                       + "  (" + ", ".join(labels) + ")")
    else:
        rep = deformation_moduli(spec, route=args.route)
        if fmt == "json":
            out.append(json.dumps({"schema_version": REPORT_SCHEMA_VERSION,
                                   **rep.as_json()}, sort_keys=True))
        elif fmt in ("csv", "markdown"):
            out.extend(_route_rows(fmt, [(rep.route, rep.value)]))
        else:
            out.append(f"{rep.value}  ({rep.route})")
    print("\n".join(out))
    return 0


def _route_rows(fmt: str, pairs) -> list[str]:
    if fmt == "csv":
        return ["route,value"] + [f"{route},{value}" for route, value in pairs]
    return (["| route | value |", "|---|---|"]
            + [f"| {route} | {value} |" for route, value in pairs])


def _cmd_jacring(args) -> int:
    fmt = _format(args)
    out = _stamp(args, fmt)
    if args.scan:
        rows = weighted_cy_scan(*args.scan)
    elif args.weights is None:
        raise SystemExit("jacring needs --weights or --scan")
    else:
        try:
            rows = [steenbrink_hodge(_csv_ints(args.weights), args.degree)]
            if args.at is not None:
                print("\n".join(out + [str(jacobian_hilbert(
                    _csv_ints(args.weights), args.degree, args.at))]))
                return 0
        except ValueError as exc:
            raise SystemExit(str(exc)) from None
    if fmt == "csv":
        out.append("weights,degree,dim,middle,moduli")
    elif fmt == "markdown":
        out.append("| weights | degree | dim | middle | moduli |")
        out.append("|---|---|---|---|---|")
    for row in rows:
        ws = ",".join(str(w) for w in row.weights)
        mid = " ".join(str(h) for h in row.entries)
        if fmt == "json":
            out.append(json.dumps({"schema_version": REPORT_SCHEMA_VERSION,
                                   **row.as_json()}, sort_keys=True))
        elif fmt == "csv":
            out.append(f'"{ws}",{row.degree},{row.dim},{mid},{row.moduli}')
        elif fmt == "markdown":
            out.append(f"| {ws} | {row.degree} | {row.dim} | {mid} "
                       f"| {row.moduli} |")
        else:
            out.append(f"weights ({ws}) degree {row.degree} dim {row.dim}: "
                       f"{mid}  (moduli {row.moduli})")
    print("\n".join(out))
    return 0


def _cmd_verify(args) -> int:
    cat = load_catalog()
    rep = run_verify(cat, tables=tuple(args.table or ()), jobs=args.jobs)
    fmt = _format(args)
    out = _stamp(args, fmt)
    out.append(render_cells(rep.cells, fmt))
    if fmt in ("text", "markdown"):
        counts = {}
        for c in rep.cells:
            counts[c.status] = counts.get(c.status, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        out.append("")
        out.append(f"{len(rep.cells)} cells: {summary}; "
                   f"{len(rep.documented)} documented discrepancies, "
                   f"{len(rep.undocumented)} undocumented")
    print("\n".join(out))
    return rep.exit_code


def main(argv=None) -> int:
    top = argparse.ArgumentParser(
        prog="bwb",
        description="exact cohomology of homogeneous bundles and Hodge-number "
                    "chases on their sections")
    sub = top.add_subparsers(dest="command", required=True)

    def fmt_flags(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--csv", action="store_true", help="CSV output")
        p.add_argument("--markdown", action="store_true", help="markdown output")
        p.add_argument("--timestamp", action="store_true",
                       help="prepend a generation timestamp")

    p = sub.add_parser("bott", help="cohomology of one bundle")
    p.add_argument("--space", required=True)
    p.add_argument("--form", type=int, help="exterior power p of the cotangent bundle")
    p.add_argument("--twist", type=int, default=0,
                   help="line-bundle twist k in O(k) (negative = downward)")
    p.add_argument("--schur", help='Schur label, e.g. "Q*:1111;E:4"')
    p.add_argument("--trace", action="store_true",
                   help="print the reflection walk")
    fmt_flags(p)
    p.set_defaults(func=_cmd_bott)

    for name, fn in (("hodge", _cmd_hodge), ("moduli", _cmd_moduli)):
        p = sub.add_parser(name)
        p.add_argument("--space", required=True)
        p.add_argument("--cut", help="comma-separated cut degrees, e.g. 2 or 1,1")
        p.add_argument("--linear", type=int, help="number of hyperplane cuts")
        if name == "moduli":
            p.add_argument("--all-routes", action="store_true", dest="all_routes")
            p.add_argument("--route", choices=("grassmannian", "cohomological"))
        fmt_flags(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("jacring", help="weighted-hypersurface Hodge numbers")
    p.add_argument("--weights", help="comma-separated weights, e.g. 1,1,1,1,1,1,2")
    p.add_argument("--degree", type=int)
    p.add_argument("--at", type=int, help="print one Hilbert coefficient")
    p.add_argument("--scan", type=int, nargs=3,
                   metavar=("MAXDIM", "MAXWEIGHT", "MAXDEGREE"),
                   help="scan for Calabi-Yau-shaped rows")
    fmt_flags(p)
    p.set_defaults(func=_cmd_jacring)

    p = sub.add_parser("verify", help="recompute all reference cells and diff")
    p.add_argument("--table", action="append", metavar="ID",
                   help="restrict to one reference table (repeatable)")
    p.add_argument("--jobs", type=int, default=1)
    fmt_flags(p)
    p.set_defaults(func=_cmd_verify)

    args = top.parse_args(argv)
    try:
        return args.func(args)
    except KeyError as exc:
        raise SystemExit(exc.args[0] if exc.args else str(exc)) from None
    except ValueError as exc:
        raise SystemExit(str(exc)) from None


if __name__ == "__main__":
    sys.exit(main())
