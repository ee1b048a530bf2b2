"""Command line interface: ``covres betti | scarf | verify``.

Exit codes: 0 success, 1 usage or input error, 2 resource limit,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from . import betti as B
from . import scarf as S
from .complex import clique_complex
from .errors import CovresError, InvalidArgument, ResourceLimit
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_chordal,
    parse_edge_list,
    path_graph,
)
from .homology import FieldSpec, homology_shift_check
from .ideal import cover_ideal, edge_ideal
from .parallel import default_workers
from .report import Report

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3

DEFAULT_CAPS = {"hochster": B.HOCHSTER_CAP, "scarf": S.SCARF_CAP, "leaf_orders": S.LEAF_ORDER_CAP}


class UsageError(CovresError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    graph_source: dict | None
    fields: list[FieldSpec]
    threads: int
    caps: dict[str, int]
    fmt: str
    options: dict = field(default_factory=dict)

    def echo(self) -> dict:
        # threads are left out so output is identical for every worker count
        return {
            "command": self.command,
            "graph": self.graph_source,
            "field": [str(f) for f in self.fields],
            "caps": dict(sorted(self.caps.items())),
            "format": self.fmt,
            "options": dict(sorted(self.options.items())),
        }


# --- argument parsing ----------------------------------------------------------------------

def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (exactly one of --family / --input)")
    src.add_argument("--family", choices=["path", "cycle", "complete-bipartite", "complete"])
    src.add_argument("--n", type=int, help="vertex count for path/cycle/complete")
    src.add_argument("--a", type=int, help="first part size for complete-bipartite")
    src.add_argument("--b", type=int, help="second part size for complete-bipartite")
    src.add_argument("--input", help="edge-list file ('n <count>' then 'u v' lines)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default="rational",
                   help="'rational' (default), a prime p, or 'all' for QQ, GF(2), GF(3)")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--format", dest="fmt", choices=["text", "json", "tsv"], default="text")
    p.add_argument("--max-hochster", type=int, default=None, help="largest n for the 2^n sweep")
    p.add_argument("--max-scarf", type=int, default=None, help="largest generator count for Scarf")
    p.add_argument("--max-leaf-orders", type=int, default=None, help="largest facet count for enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="covres", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"covres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("betti", help="graded Betti table of I(G) or J(G)")
    _add_graph_args(p)
    _add_common(p)
    p.add_argument("--ideal", choices=["edge", "cover"], default="cover")
    p.add_argument("--corner", nargs=2, type=int, metavar=("I", "J"),
                   help="print only beta_{I,J} (J is the internal degree)")
    p.add_argument("--method", choices=["auto", "hochster", "links"], default="auto")
    p.add_argument("--dump", action="store_true", help="include the clique complex of G^c as JSON")

    p = sub.add_parser("scarf", help="leaf orders, sensitivity and Scarf complex of J(G)")
    _add_graph_args(p)
    _add_common(p)
    p.add_argument("--require-cm", action="store_true", help="fail unless G^c is chordal")
    p.add_argument("--all-orders", action="store_true", help="list every leaf order")
    p.add_argument("--dump", action="store_true", help="include the clique complex of G^c as JSON")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["path", "cycle", "scarf", "lemmas", "gorenstein", "shift"])
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--family", choices=["path", "cycle"], default=None, help="family for 'shift'")
    _add_common(p)
    return parser


def _fields(text: str) -> list[FieldSpec]:
    if text.strip().lower() == "all":
        return [FieldSpec(0), FieldSpec(2), FieldSpec(3)]
    return [FieldSpec.parse(text)]


def _caps(args) -> dict[str, int]:
    caps = dict(DEFAULT_CAPS)
    for key, val in (("hochster", args.max_hochster), ("scarf", args.max_scarf),
                     ("leaf_orders", args.max_leaf_orders)):
        if val is not None:
            if val < 1:
                raise UsageError(f"--max-{key.replace('_', '-')} must be positive")
            if val != caps[key]:
                print(f"warning: overriding {key} cap {caps[key]} -> {val}; runtimes may explode",
                      file=sys.stderr)
            caps[key] = val
    return caps


def _graph_from_args(args) -> tuple[Graph, dict]:
    if (args.family is None) == (args.input is None):
        raise UsageError("give exactly one graph source: --family or --input")
    if args.input is not None:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
        g = parse_edge_list(text)
        return g, {"input": args.input, "n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    fam = args.family
    if fam == "complete-bipartite":
        if args.a is None or args.b is None:
            raise UsageError("complete-bipartite needs --a and --b")
        return complete_bipartite(args.a, args.b), {"family": fam, "a": args.a, "b": args.b}
    if args.n is None:
        raise UsageError(f"{fam} needs --n")
    make = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}[fam]
    return make(args.n), {"family": fam, "n": args.n}


# --- output ------------------------------------------------------------------------------------

def _emit(cfg: RunConfig, payload: dict, text: str, tsv: str | None = None) -> None:
    if cfg.fmt == "json":
        doc = {"tool": "covres", "version": __version__, "config": cfg.echo(), "result": payload}
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    elif cfg.fmt == "tsv" and tsv is not None:
        sys.stdout.write(tsv)
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# --- commands ----------------------------------------------------------------------------------

def _table_for(g: Graph, ideal_kind: str, fld: FieldSpec, cfg: RunConfig, method: str):
    ideal = cover_ideal(g) if ideal_kind == "cover" else edge_ideal(g)
    if method == "links" and ideal_kind == "edge":
        raise UsageError("the link formula applies to cover ideals only")
    if method == "links" or (method == "auto" and ideal_kind == "cover" and g.n > cfg.caps["hochster"]):
        return ideal, B.betti_table_links(g, fld, workers=cfg.threads)
    return ideal, B.betti_hochster(ideal, fld, cap=cfg.caps["hochster"], workers=cfg.threads)


def cmd_betti(args, cfg: RunConfig) -> int:
    g, _ = _graph_from_args(args)
    name = "J" if args.ideal == "cover" else "I"
    results = []
    for fld in cfg.fields:
        if args.corner:
            i, j = args.corner
            if args.ideal == "cover" and args.method != "hochster" and i >= 1:
                value = B.betti_corner_links(g, i, j - i, fld, workers=cfg.threads)
            else:
                ideal = cover_ideal(g) if args.ideal == "cover" else edge_ideal(g)
                t = B.betti_hochster(ideal, fld, degrees=[j], cap=cfg.caps["hochster"],
                                     workers=cfg.threads)
                value = t[i, j]
            results.append({"field": str(fld), "i": i, "j": j, "value": value})
        else:
            ideal, t = _table_for(g, args.ideal, fld, cfg, args.method)
            pd, reg = B.pd_reg(t)
            results.append({"field": str(fld), "table": t, "pd": pd, "reg": reg})

    mismatch = len(results) > 1 and any(
        _strip(r) != _strip(results[0]) for r in results[1:])
    payload: dict = {"ideal": name, "graph_n": g.n}
    if args.dump:
        payload["complex"] = clique_complex(complement(g)).to_dict()
    if args.corner:
        payload["corner"] = [{k: r[k] for k in ("field", "i", "j", "value")} for r in results]
        text = "\n".join(f"beta_{{{r['i']},{r['j']}}}({name}) over {r['field']}: {r['value']}"
                         for r in results) if len(results) > 1 else str(results[0]["value"])
        tsv = "field\ti\tj\tv\n" + "".join(
            f"{r['field']}\t{r['i']}\t{r['j']}\t{r['value']}\n" for r in results)
    else:
        payload["tables"] = [{"field": r["field"], "pd": r["pd"], "reg": r["reg"],
                              **r["table"].to_dict()} for r in results]
        blocks = []
        for r in results:
            blocks.append(f"Betti table of {name}(G) over {r['field']}\n{r['table'].to_text()}\n"
                          f"pd {r['pd']}\nreg {r['reg']}")
        text = "\n\n".join(blocks)
        tsv = "".join(
            (f"# field {r['field']}\n" if len(results) > 1 else "") + r["table"].to_tsv()
            + f"# pd\t{r['pd']}\n# reg\t{r['reg']}\n" for r in results)
    if args.dump and cfg.fmt == "text":
        text += "\ncomplex " + json.dumps(payload["complex"])
    payload["field_agreement"] = not mismatch
    if mismatch:
        text += "\nFIELD MISMATCH: Betti numbers differ between fields"
        print("field mismatch between " + ", ".join(r["field"] for r in results), file=sys.stderr)
    _emit(cfg, payload, text, tsv)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _strip(r: dict):
    if "table" in r:
        return r["table"].entries
    return r["value"]


def cmd_scarf(args, cfg: RunConfig) -> int:
    g, _ = _graph_from_args(args)
    chordal = is_chordal(complement(g))
    if args.require_cm and not chordal:
        print("error: complement of G is not chordal, so J(G) is not Cohen-Macaulay",
              file=sys.stderr)
        return EXIT_INPUT
    j = cover_ideal(g)
    fld = cfg.fields[0]
    delta = clique_complex(complement(g))
    payload: dict = {"graph_n": g.n, "complement_chordal": chordal,
                     "generators": [list(x) for x in j.gens],
                     "monomials": j.monomials()}
    lines = [f"J(G) = ({', '.join(j.monomials())})", f"generators: {len(j)}",
             f"complement chordal: {'yes' if chordal else 'no'}"]
    if args.dump:
        payload["complex"] = delta.to_dict()
        lines.append("complex " + json.dumps(delta.to_dict()))

    lo = S.leaf_order(delta)
    if lo is None:
        payload["leaf_order"] = None
        lines.append("leaf order: none (not a quasi-forest)")
    else:
        sens = S.is_sensitive(lo)
        payload["leaf_order"] = lo.to_dict()
        payload["sensitive"] = sens.sensitive
        payload["sensitivity"] = {"unique_branches": sens.unique_branches,
                                  "incomparable": sens.incomparable,
                                  "ambiguous_positions": [p + 1 for p in sens.ambiguous_positions],
                                  "comparable_pairs": [[a + 1, b + 1] for a, b in sens.comparable_pairs]}
        lines.append("leaf order: " + ", ".join(_fmt_set(f) for f in lo.facets))
        for i in range(1, len(lo)):
            bs = ", ".join(_fmt_set(lo.facets[b]) for b in sorted(lo.branches[i]))
            lines.append(f"  F{i + 1} = {_fmt_set(lo.facets[i])}: branches {bs}")
        if len(lo) >= 2:
            ms = S.intersection_multiset_masks(lo.masks)
            payload["A"] = ms.literal()
            payload["A_star"] = ms.unique_literal()
            lines.append(f"A  = {ms.literal()}")
            lines.append(f"A* = {ms.unique_literal()}")
        lines.append(f"sensitive: {'yes' if sens.sensitive else 'no'}"
                     + ("" if sens.unique_branches else " (non-unique branch)")
                     + ("" if sens.incomparable else " (comparable branch intersections)"))
        if args.all_orders:
            orders = S.all_leaf_orders(delta, cap=cfg.caps["leaf_orders"])
            payload["all_leaf_orders"] = [
                {"facets": [list(f) for f in o.facets], "sensitive": bool(S.is_sensitive(o))}
                for o in orders]
            lines.append(f"leaf orders: {len(orders)}")
            for o in orders:
                lines.append("  " + ", ".join(_fmt_set(f) for f in o.facets)
                             + f"  sensitive={'yes' if S.is_sensitive(o) else 'no'}")

    sc = S.scarf_complex(j, cap=cfg.caps["scarf"])
    table = B.betti_hochster(j, fld, cap=cfg.caps["hochster"], workers=cfg.threads) \
        if g.n <= cfg.caps["hochster"] else B.betti_table_links(g, fld, workers=cfg.threads)
    verdict = S.has_scarf_resolution(j, table, sc)
    payload["scarf_fvector"] = list(sc.fvector)
    payload["betti_totals"] = table.totals()
    payload["scarf_resolution"] = verdict
    lines.append(f"Scarf f-vector: {list(sc.fvector)}")
    lines.append(f"total Betti numbers: {table.totals()}")
    lines.append(f"Scarf resolution: {'yes' if verdict else 'no'}")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def _fmt_set(f) -> str:
    return "{" + ",".join(map(str, f)) + "}"


def cmd_verify(args, cfg: RunConfig) -> int:
    suite = args.suite
    reports: list[Report] = []
    for fld in cfg.fields:
        if suite in ("path", "cycle"):
            reports.append(B.verify_theorem(suite, args.kmax or 4, fld,
                                            hochster_cap=cfg.caps["hochster"], workers=cfg.threads))
        elif suite == "scarf":
            reports.append(S.verify_scarf_theorem(args.nmax or 6, fld, workers=cfg.threads))
        elif suite == "gorenstein":
            reports.append(S.verify_gorenstein(args.nmax or 6, fld, workers=cfg.threads))
        elif suite == "lemmas":
            rep = Report(f"lemma counts k<={args.kmax or 6}")
            for k in range(2, (args.kmax or 6) + 1):
                rep.extend(B.verify_lemma_counts(k, cap=max(6, args.kmax or 6)))
            reports.append(rep)
        elif suite == "shift":
            fams = [args.family] if args.family else ["path", "cycle"]
            rep = Report(f"homology shift over {fld}")
            for fam in fams:
                lo = 5 if fam == "path" else 6
                for n in range(lo, (args.nmax or 15) + 1):
                    rep.add(f"{fam} n={n} shift", True, homology_shift_check(fam, n, fld))
            reports.append(rep)
        if suite in ("lemmas",):
            break  # field independent
    ok = all(r.passed for r in reports)
    payload = {"suite": suite, "passed": ok, "reports": [r.to_dict() for r in reports]}
    text = "\n".join(r.text() for r in reports) + f"\n{'PASS' if ok else 'FAIL'}"
    tsv = "name\texpected\tactual\tpassed\n" + "".join(
        f"{c.name}\t{c.expected}\t{c.actual}\t{c.passed}\n" for r in reports for c in r.checks)
    _emit(cfg, payload, text, tsv)
    if not ok:
        for r in reports:
            for c in r.failures:
                print("MISMATCH " + c.line(), file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"betti": cmd_betti, "scarf": cmd_scarf, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        threads = args.threads if args.threads is not None else default_workers()
        if threads < 1:
            raise UsageError("--threads must be >= 1")
        source = None
        if args.command != "verify":
            _, source = _graph_from_args(args)
        options = {k: v for k, v in vars(args).items()
                   if k not in ("command", "threads", "fmt", "field", "family", "n", "a", "b",
                                "input", "max_hochster", "max_scarf", "max_leaf_orders")}
        if args.command == "verify" and args.family:
            options["family"] = args.family
        cfg = RunConfig(args.command, source, _fields(args.field), threads, _caps(args),
                        args.fmt, options)
        return COMMANDS[args.command](args, cfg)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidArgument, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # malformed numbers in edge-list files
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
