"""Command line interface: ``triangle-cone <command> [options]``.

Exit codes: 0 success, 1 verification mismatch (or unequal cones for
``compare``), 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io, notation
from .analysis import FAMILIES, analyze
from .cone import cones_equal
from .inequality import canonical_key, format_inequality, schubert_subsystem
from .polyalg import quotient_basis
from .rootsys import build_root_system
from .schubert import multiplication_table, schubert_polynomial
from .weyl import maximal_parabolic, theta_dual, weyl_group

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
TABLE_KINDS = ("weyl", "singular-weights", "schubert-poly", "products", "inequalities")


class UsageError(Exception):
    pass


def _family(args, positional: str | None = None, default: str | None = None) -> str:
    fam = args.family or positional or default
    if fam is None:
        raise UsageError("a family (A3, B3 or C3) is required")
    fam = fam.upper()
    if fam not in FAMILIES:
        raise UsageError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
    return fam


def _parabolic(args, positional: str | None) -> int:
    k = args.parabolic if args.parabolic is not None else positional
    if k is None:
        raise UsageError("a parabolic index (1, 2 or 3) is required")
    try:
        k = int(k)
    except ValueError:
        raise UsageError(f"parabolic index must be 1, 2 or 3, not {k!r}") from None
    if k not in (1, 2, 3):
        raise UsageError(f"parabolic index must be 1, 2 or 3, not {k}")
    return k


# ------------------------------------------------------------------ commands


def cmd_generate(args, out) -> int:
    fam = _family(args, args.targets[0] if args.targets else None)
    an = analyze(fam)
    dest = Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)
    system = an.system
    stem = fam.lower()
    facets = sorted(an.facets.inequalities)
    files = {
        f"{stem}_system.ieq": io.dumps_ieq(
            system.dimension,
            [q.coeffs for q in system.inequalities],
            system.equalities,
            comments=[f"{fam} triangle inequalities before reduction, {len(system.inequalities)} rows"],
            labels=[q.label for q in system.inequalities],
        ),
        f"{stem}_facets.ieq": io.dumps_ieq(
            system.dimension,
            facets,
            an.facets.equalities,
            comments=[f"facets of the triangle inequality cone, {len(facets)} rows, lexicographic order"],
        ),
        f"{stem}_rays.poi": io.dumps_poi(
            an.rays, comments=[f"extreme rays of the triangle inequality cone, {len(an.rays.rays)} rays"]
        ),
        f"{stem}.json": io.dumps_json(io.analysis_json(an)),
    }
    for name, text in files.items():
        io.write_text(dest / name, text)
        print(f"wrote {dest / name}", file=out)
    print(
        f"{fam}: {len(system.inequalities)} inequalities, {len(facets)} facets, {len(an.rays.rays)} rays",
        file=out,
    )
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from . import verify  # the only consumer of the reference data

    target = args.family or (args.targets[0] if args.targets else "all")
    family = None if target.lower() == "all" else _family(args, target)
    checks = verify.run(family=family)
    for c in checks:
        print(c.line(), file=out)
    failed = [c for c in checks if not c.passed]
    if family is None:
        print(verify.summary_line(), file=out)
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed", file=out)
    return EXIT_MISMATCH if failed else EXIT_OK


def _table_weyl(rs, k) -> list[str]:
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    labels = notation.class_labels(rs, W, P)
    rows = [f"{'w':<10}{'l(w)':>5}  {'class':<7}{'dual':<7}theta(w)"]
    for w in P.coset_reps:
        d = theta_dual(W, P, w)
        rows.append(f"{w.name:<10}{w.length:>5}  {labels[w]:<7}{labels[d]:<7}{d.name}")
    return rows


def _table_weights(rs, k) -> list[str]:
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    labels = notation.class_labels(rs, W, P)
    rows = [f"{'w':<10}{'l(w)':>5}  {'lambda_w':<14}{'class':<7}dual"]
    for w in P.coset_reps:
        lam = "(" + ",".join(str(c) for c in W.act(w, rs.weight_representatives[k - 1])) + ")"
        rows.append(f"{w.name:<10}{w.length:>5}  {lam:<14}{labels[w]:<7}{labels[theta_dual(W, P, w)]}")
    return rows


def _table_polys(rs, k) -> list[str]:
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    labels = notation.class_labels(rs, W, P)
    Q = quotient_basis(rs)
    rows = [f"{'w':<10}{'class':<7}p_w mod I"]
    for w in P.coset_reps:
        rows.append(f"{w.name:<10}{labels[w]:<7}{Q.reduce(schubert_polynomial(rs, W, w)).format()}")
    return rows


def _table_products(rs, k) -> list[str]:
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    labels = notation.class_labels(rs, W, P)
    pre = notation.class_prefix(rs, k)
    table = multiplication_table(rs, W, P)
    reps = sorted((w for w in P.coset_reps if w.length > 0), key=lambda w: notation.label_order(labels[w]))
    cells = {}
    for (u, v), cls in table.items():
        text = cls.format(labels, pre) if not cls.is_zero() else "0"
        cells[(u, v)] = cells[(v, u)] = text
    width = max(len(c) for c in cells.values()) + 2
    head = " " * 7 + "".join(f"{pre}{labels[v]}".ljust(width) for v in reps)
    rows = [head]
    for a, u in enumerate(reps):
        line = f"{pre}{labels[u]}".ljust(7)
        for b, v in enumerate(reps):
            line += (cells[(u, v)] if b >= a else "").ljust(width)
        rows.append(line.rstrip())
    return rows


def _table_inequalities(rs, k) -> list[str]:
    an = analyze(rs.name)
    W = weyl_group(rs)
    P = maximal_parabolic(W, k)
    by_key = {an.key(i): i for i in range(len(an.system.inequalities))}
    rows = []
    for q in schubert_subsystem(rs, W, P):
        if q.permutation != (0, 1, 2):
            continue
        i = by_key.get(canonical_key(rs, q.coeffs))
        mark = ""
        if i in an.trivially_redundant:
            mark = "(*)"
        elif i in an.further_redundant:
            mark = "(**)"
        rows.append(f"{mark:<5}{q.format(rs):<60}{q.partition}")
    return rows


_TABLES = {
    "weyl": _table_weyl,
    "singular-weights": _table_weights,
    "schubert-poly": _table_polys,
    "products": _table_products,
    "inequalities": _table_inequalities,
}


def cmd_table(args, out) -> int:
    pos = list(args.targets)
    fam = _family(args, pos.pop(0) if pos and pos[0].upper() in FAMILIES else None)
    k = _parabolic(args, pos.pop(0) if pos and pos[0].isdigit() else None)
    kind = pos.pop(0) if pos else args.kind
    if kind not in _TABLES:
        raise UsageError(f"table kind must be one of {', '.join(TABLE_KINDS)}")
    if pos:
        raise UsageError(f"unexpected arguments: {' '.join(pos)}")
    print(f"{fam} G/P{k} {kind}", file=out)
    for line in _TABLES[kind](build_root_system(fam), k):
        print(line, file=out)
    return EXIT_OK


def _emit_rows(args, out, fam, rows, equalities, labels, what):
    an = analyze(fam)
    if args.format == "ieq":
        out.write(io.dumps_ieq(an.system.dimension, rows, equalities, [f"{fam} {what}"], labels))
    elif args.format == "json":
        obj = {
            "family": fam,
            "dimension": an.system.dimension,
            "equalities": [[io.rational_pair(c) for c in e] for e in equalities],
            what: [{"label": lab, "coeffs": [io.rational_pair(c) for c in r]} for lab, r in zip(labels, rows)],
        }
        out.write(io.dumps_json(obj))
    else:
        for lab, r in zip(labels, rows):
            print(f"{format_inequality(an.root_system, r):<60}{lab}", file=out)
        print(f"{len(rows)} {what}", file=out)


def cmd_facets(args, out) -> int:
    fam = _family(args, args.targets[0] if args.targets else None)
    an = analyze(fam)
    qs = [an.system.inequalities[i] for i in an.reduction.kept]
    _emit_rows(args, out, fam, [q.coeffs for q in qs], an.system.equalities, [q.label for q in qs], "facets")
    return EXIT_OK


def cmd_rays(args, out) -> int:
    fam = _family(args, args.targets[0] if args.targets else None)
    an = analyze(fam)
    if args.format == "ieq":
        out.write(io.dumps_poi(an.rays, [f"{fam} extreme rays"]))
    elif args.format == "json":
        out.write(io.dumps_json({"family": fam, "dimension": an.rays.dimension,
                                 "rays": [list(r) for r in an.rays.rays]}))
    else:
        for r in an.rays.rays:
            print(" ".join(str(c) for c in r), file=out)
        print(f"{len(an.rays.rays)} rays", file=out)
    return EXIT_OK


def cmd_compare(args, out) -> int:
    pos = [t.upper() for t in args.targets]
    if args.family:
        pos.insert(0, args.family.upper())
    if not pos:
        pos = ["B3", "C3"]
    if len(pos) != 2:
        raise UsageError("compare takes two families, e.g. 'compare B3 C3'")
    for f in pos:
        if f not in FAMILIES:
            raise UsageError(f"unknown family {f!r}")
    h1, h2 = analyze(pos[0]).hrep, analyze(pos[1]).hrep
    if h1.dimension != h2.dimension:
        raise UsageError(f"{pos[0]} and {pos[1]} live in different dimensions")
    same = cones_equal(h1, h2)
    print(f"{pos[0]} {'==' if same else '!='} {pos[1]}", file=out)
    return EXIT_OK if same else EXIT_MISMATCH


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "table": cmd_table,
    "rays": cmd_rays,
    "facets": cmd_facets,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="triangle-cone",
        description="Triangle inequality cones for the rank-3 root systems A3, B3, C3.",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("targets", nargs="*", help="family, parabolic index, table kind, or 'all'")
    p.add_argument("--family", choices=FAMILIES, type=str.upper)
    p.add_argument("--parabolic", type=int, choices=(1, 2, 3))
    p.add_argument("--kind", choices=TABLE_KINDS, help="table kind (or give it positionally)")
    p.add_argument("--format", choices=("text", "json", "ieq"), default="text")
    p.add_argument("--out", default=".", help="output directory for 'generate'")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"triangle-cone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"triangle-cone: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
