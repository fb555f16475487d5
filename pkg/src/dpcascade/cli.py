"""Command-line entry point.

Exit codes: 0 success, 1 computational failure (or a failing check), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import acceptance, catalog, hilbert, jsonio, mutation, quasismooth, rootsys
from .errors import DpCascadeError
from .scaffolding import laurent_invert, validate_scaffolding

# Which module a subcommand exercises, for error messages.
MODULE_OF = {
    "catalog": "catalog",
    "hilbert": "hilbert",
    "roots": "rootsys",
    "quasismooth": "quasismooth",
    "laurent-invert": "scaffolding",
    "mutate": "mutation_mirror",
    "pi1": "mutation_mirror",
    "quiver": "mutation_mirror",
    "check-all": "acceptance",
}


class Output:
    def __init__(self, as_json: bool) -> None:
        self.as_json = as_json

    def emit(self, text: str | Callable[[], str], data: object) -> None:
        if self.as_json:
            print(jsonio.dumps(data))
        else:
            print(text() if callable(text) else text)


def _ints(s: str) -> list[int]:
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _load_polygon(path: str):
    P, was_hull = jsonio.read_polygon(path)
    if not was_hull:
        print(f"note: input vertices were not a convex hull; using {P.as_lists()}", file=sys.stderr)
    return P


def _columns(rows: Sequence[Sequence[int]]) -> str:
    w = max((len(str(x)) for r in rows for x in r), default=1)
    return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in rows)


def cmd_catalog(a, out: Output) -> int:
    if a.tables or a.update_golden:
        rep = catalog.regenerate_tables(a.table or None, update=a.update_golden)
        out.emit(rep.summary, {
            r.table.name: {"rows": len(r.table.rows), "failing": len(r.table.failing_rows()), "golden_match": r.golden_match}
            for r in rep.results
        })
        return 0 if rep.ok else 1
    if a.family:
        rec = catalog.family_record(a.family)
        out.emit(lambda: catalog.family_row(a.family).text(), jsonio.record_to_json(rec))
        return 0 if catalog.validate_record(rec).ok else 1
    if a.k is not None:
        t = catalog.cascade_table(a.k)
        out.emit(t.text, {"header": list(t.header), "rows": [list(r) for r in t.rows]})
        return 0 if not t.failing_rows() else 1
    ids = catalog.catalog_ids()
    out.emit("\n".join(ids), ids)
    return 0


def cmd_hilbert(a, out: Output) -> int:
    if a.check_models:
        rows = []
        for m in range(1, 7):
            for mi in hilbert.table_models(m):
                rows.append((m, mi, hilbert.check_model(mi)))
        out.emit(
            lambda: "\n".join(f"m={m} {mi.label} P{mi.weights} degrees {mi.degrees}: {'PASS' if ok else 'FAIL'}"
                              for m, mi, ok in rows),
            [{"m": m, "model": mi.label, "weights": list(mi.weights), "degrees": list(mi.degrees), "pass": ok}
             for m, mi, ok in rows],
        )
        return 0 if all(ok for *_, ok in rows) else 1
    if a.k is None:
        raise _Usage("hilbert needs --k (or --check-models)")
    if a.l is None:
        num, den = hilbert.anticanonical_hilbert_P11k(a.k).numerator, (1, 1, a.k)
    else:
        num, den = hilbert.cascade_numerator(a.k, a.l), (1, 1, a.k)
    dense = num.dense()
    out.emit(
        lambda: f"numerator: {' '.join(map(str, dense))}\ndenominator: {' '.join(f'(1-t^{d})' for d in den)}",
        {"k": a.k, "l": a.l, "numerator": dense, "denominator_factors": list(den)},
    )
    return 0


def cmd_roots(a, out: Output) -> int:
    s = rootsys.summarize(a.k, a.l)
    roots = sorted(rootsys.enumerate_roots(rootsys.PolarizedLattice(a.k, a.l))) if a.table else None

    def text() -> str:
        line = f"count={s.count} type={s.cartan_type} index={s.index.index}"
        if roots is not None:
            line += "\n" + "\n".join(" ".join(map(str, r)) for r in roots)
        return line

    data = {"k": a.k, "l": a.l, "count": s.count, "type": str(s.cartan_type), "index": s.index.index,
            "index_via_cartan": s.index.via_cartan, "index_via_smith": s.index.via_smith}
    if roots is not None:
        data["roots"] = [list(r) for r in roots]
    out.emit(text, data)
    return 0


def cmd_quasismooth(a, out: Output) -> int:
    degrees = a.degrees or a.degree
    if not degrees:
        raise _Usage("quasismooth needs --degree or --degrees")
    rep = quasismooth.quasismooth(a.weights, degrees)

    def text() -> str:
        if rep:
            return "quasismooth"
        return f"NOT quasismooth: violating subset {list(rep.violating_subset or ())} ({rep.detail})"

    out.emit(text, {"weights": a.weights, "degrees": degrees, "quasismooth": bool(rep),
                    "violating_subset": list(rep.violating_subset) if rep.violating_subset is not None else None,
                    "detail": rep.detail})
    return 0


def cmd_laurent(a, out: Output) -> int:
    P = _load_polygon(a.polygon)
    S = jsonio.read_scaffolding(a.scaffolding)
    rep = validate_scaffolding(P, S)
    if not rep:
        print("invalid scaffolding: " + "; ".join(rep.problems), file=sys.stderr)
        return 1
    g = laurent_invert(P, S)

    def text() -> str:
        lines = ["weight matrix:", _columns(g.weight_matrix), f"stability: {' '.join(map(str, g.stability))}"]
        if g.equation_degrees:
            lines.append("equation degrees:")
            lines.append(_columns(g.equation_degrees))
        return "\n".join(lines)

    out.emit(text, jsonio.git_to_json(g))
    return 0


def cmd_mutate(a, out: Output) -> int:
    P = _load_polygon(a.polygon)
    if a.w is not None or a.factor is not None:
        if a.w is None or a.factor is None:
            raise _Usage("a single move needs both --w and --factor")
        Q = mutation.mutate(P, mutation.MutationMove(tuple(a.w), tuple(a.factor)))
        out.emit(lambda: str(Q.as_lists()), jsonio.polygon_to_json(Q))
        return 0
    if a.list:
        nbrs = sorted(mutation.mutation_neighbors(P), key=lambda R: R.vertices)
        out.emit(lambda: "\n".join(str(R.as_lists()) for R in nbrs), [jsonio.polygon_to_json(R) for R in nbrs])
        return 0
    moves = mutation.mutation_moves(P)
    out.emit(lambda: "\n".join(f"w={m.w} factor={m.factor}" for m in moves),
             [{"w": list(m.w), "factor": list(m.factor)} for m in moves])
    return 0


def cmd_pi1(a, out: Output) -> int:
    P = _load_polygon(a.polygon)
    r = mutation.fundamental_group_invariant(P, a.bound)
    out.emit(
        lambda: f"{r.group}\ninvariant factors: {' '.join(map(str, r.group.invariant_factors)) or '-'}"
                f"\nstabilized: {r.stabilized} (explored {r.explored} polygons)",
        {"invariant_factors": list(r.group.invariant_factors), "free_rank": r.group.free_rank,
         "stabilized": r.stabilized, "explored": r.explored, "exhausted": r.exhausted},
    )
    return 0


def cmd_quiver(a, out: Output) -> int:
    P = _load_polygon(a.polygon)
    q = mutation.reduced_quiver(P) if a.reduced else mutation.quiver(P)

    def text() -> str:
        lines = [f"nodes: {len(q)}"] + [f"  {i}: normal {n.normal} height {n.height}" for i, n in enumerate(q.nodes)]
        if len(q):
            lines += ["arrows:", _columns(q.arrows)]
        return "\n".join(lines)

    out.emit(text, {"nodes": [{"normal": list(n.normal), "height": n.height, "edge": n.edge_index} for n in q.nodes],
                    "arrows": [list(r) for r in q.arrows]})
    return 0


def cmd_check_all(a, out: Output) -> int:
    results = acceptance.run_all()
    tables = None if a.skip_tables else catalog.regenerate_tables()

    def text() -> str:
        lines = []
        for r in results:
            lines.append(r.line())
            lines += [f"    {d}" for d in r.details]
        if tables is not None:
            lines.append("tables:")
            lines += [f"    {s}" for s in tables.summary().splitlines()]
        return "\n".join(lines)

    data = {"criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "details": list(r.details)}
                         for r in results]}
    if tables is not None:
        data["tables_ok"] = tables.ok
    out.emit(text, data)
    ok = all(r.passed for r in results) and (tables is None or tables.ok)
    return 0 if ok else 1


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p = argparse.ArgumentParser(prog="dpcascade", description="Del Pezzo cascades with one 1/k(1,1) point.")
    p.add_argument("--json", action="store_true", default=False, help="emit JSON")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("catalog", parents=[common], help="catalog records and tables")
    s.add_argument("--k", type=int)
    s.add_argument("--family", help="family id such as X:5:7, B:5 or pair:3:5")
    s.add_argument("--tables", action="store_true", help="rebuild every table and compare with the golden files")
    s.add_argument("--table", action="append", help="restrict --tables to this table (repeatable)")
    s.add_argument("--update-golden", action="store_true", help="rewrite the golden files")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert series numerators")
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--check-models", action="store_true")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("roots", parents=[common], help="root system of the Picard lattice")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--table", action="store_true", help="also list every root")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("quasismooth", parents=[common], help="quasismoothness of a weighted hypersurface or codim-2 CI")
    s.add_argument("--weights", type=_ints, required=True)
    s.add_argument("--degree", type=_ints)
    s.add_argument("--degrees", type=_ints)
    s.set_defaults(func=cmd_quasismooth)

    s = sub.add_parser("laurent-invert", parents=[common], help="weight data from a scaffolding")
    s.add_argument("--polygon", required=True)
    s.add_argument("--scaffolding", required=True)
    s.set_defaults(func=cmd_laurent)

    s = sub.add_parser("mutate", parents=[common], help="polygon mutations")
    s.add_argument("--polygon", required=True)
    s.add_argument("--list", action="store_true", help="list neighbours up to normal form")
    s.add_argument("--w", type=_ints)
    s.add_argument("--factor", type=_ints)
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("pi1", parents=[common], help="M modulo the weight-vector lattice")
    s.add_argument("--polygon", required=True)
    s.add_argument("--bound", type=int, default=500)
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("quiver", parents=[common], help="quiver of a polygon")
    s.add_argument("--polygon", required=True)
    s.add_argument("--reduced", action="store_true")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("check-all", parents=[common], help="run every acceptance criterion")
    s.add_argument("--skip-tables", action="store_true")
    s.set_defaults(func=cmd_check_all)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Output(args.json)
    try:
        return args.func(args, out)
    except _Usage as e:
        parser.print_usage(sys.stderr)
        print(f"dpcascade: error: {e}", file=sys.stderr)
        return 2
    except (DpCascadeError, ValueError) as e:
        print(f"dpcascade [{MODULE_OF[args.command]}] {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"dpcascade: cannot read input: {e}", file=sys.stderr)
        return 1
