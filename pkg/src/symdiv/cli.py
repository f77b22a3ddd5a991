"""Command-line interface: ``symdiv VERB ...``.

Exit codes: 0 success, 1 usage error, 2 check failure, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import chromatic as chrom
from . import demazure as dz
from . import expansions as ex
from .divmaps import adams, col_adjoint, coldiv, row_adjoint, rowdiv, verschiebung
from .partitions import as_composition, as_partition
from .qsym import QSymFunc, coldiv_m, rowdiv_f, rowdiv_m, to_basis
from .symfunc import SymFunc, convert
from .verify import CHECKS, RunConfig, run_checks

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_RESOURCE = 0, 1, 2, 3

MAPS = {
    "row": rowdiv,
    "col": coldiv,
    "adjrow": row_adjoint,
    "adjcol": col_adjoint,
    "versch": verschiebung,
    "adams": adams,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _partition(text: str) -> tuple[int, ...]:
    try:
        return as_partition(_ints(text))
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


# ---------------------------------------------------------------- documents

def _fmt_parts(parts) -> str:
    return ",".join(str(x) for x in parts)


def _terms_rows(terms) -> list[dict]:
    return [{"index": _fmt_parts(lam), "coeff": str(c)} for lam, c in terms]


def _symfunc_doc(f: SymFunc) -> list[dict]:
    return [{"basis": f.basis, **row} for row in _terms_rows(sorted(f.terms.items(), reverse=True))]


def render(doc: dict, fmt: str) -> str:
    """Render a document ``{"command": .., "rows": [..], ..}``; every format
    carries the same data."""
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    rows = doc.get("rows", [])
    meta = {k: v for k, v in doc.items() if k != "rows"}
    cols: list[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    table = [[_cell(row.get(c, "")) for c in cols] for row in rows]
    lines = [f"# {k}: {_cell(meta[k])}" for k in sorted(meta)]
    if fmt == "tsv":
        if cols:
            lines.append("\t".join(cols))
        lines += ["\t".join(r) for r in table]
        return "\n".join(lines)
    widths = [max([len(c)] + [len(r[i]) for r in table]) for i, c in enumerate(cols)]
    if cols:
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in table]
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


# ---------------------------------------------------------------- verbs

def cmd_expand(args, cfg: RunConfig) -> tuple[dict, int]:
    parts = args.lam if args.lam is not None else args.mu
    if parts is None:
        raise UsageError("expand needs --lam or --mu")
    f = SymFunc.single(args.basis, parts)
    _guard_degree(cfg, sum(parts))
    g = MAPS[args.map](f, args.k)
    g = convert(g, args.out or args.basis)
    doc = {"command": "expand", "input": f"{args.basis}[{_fmt_parts(parts)}]", "map": args.map,
           "k": args.k, "rows": _symfunc_doc(g)}
    return doc, EXIT_OK


def cmd_divide(args, cfg: RunConfig) -> tuple[dict, int]:
    q = QSymFunc.single(args.basis, as_composition(args.alpha))
    if args.map == "row":
        r = rowdiv_f(q, args.k) if args.basis == "F" else rowdiv_m(q, args.k)
    else:
        r = coldiv_m(q, args.k)
    r = to_basis(r, args.out or args.basis)
    rows = [{"basis": r.basis, **row} for row in _terms_rows(sorted(r.terms.items(), reverse=True))]
    return {"command": "divide", "input": f"{args.basis}[{_fmt_parts(args.alpha)}]",
            "map": args.map, "k": args.k, "rows": rows}, EXIT_OK


def cmd_euler(args, cfg: RunConfig) -> tuple[dict, int]:
    _guard_degree(cfg, sum(args.mu))
    models = "abc" if args.model == "all" else args.model
    rows = [{"model": m, "value": ex.euler_number(args.mu, args.k, m)} for m in models]
    agree = len({r["value"] for r in rows}) == 1
    return {"command": "euler", "mu": _fmt_parts(args.mu), "k": args.k, "agree": agree,
            "rows": rows}, EXIT_OK if agree else EXIT_FAIL


def cmd_gamma(args, cfg: RunConfig) -> tuple[dict, int]:
    g = ex.gamma_coeffs(args.n, args.k)
    rows = [{"d": d, "gamma": v} for d, v in enumerate(g)]
    return {"command": "gamma", "n": args.n, "k": args.k, "rows": rows}, EXIT_OK


def cmd_scan(args, cfg: RunConfig) -> tuple[dict, int]:
    if args.what == "e-positivity":
        nmax = args.nmax or cfg.nmax
        _guard_degree(cfg, args.k * nmax)
        report = ex.e_positivity_scan(nmax, args.k, workers=cfg.workers)
    else:
        bound = args.bound or cfg.bound
        if bound > 7:
            raise chrom.ResourceLimitError(f"bound {bound} is above the supported 7")
        report = dz.atom_positivity_scan(bound, args.k)
    rows = report.pop("violations")
    for v in rows:
        print(json.dumps(v, sort_keys=True), file=sys.stderr, flush=True)
    doc = {"command": "scan", "scan": args.what, **report, "violation_count": len(rows), "rows": rows}
    return doc, EXIT_OK if not rows else EXIT_FAIL


def cmd_verify(args, cfg: RunConfig) -> tuple[dict, int]:
    tags = args.tags or ["all"]
    if "all" in tags:
        tags = list(CHECKS)
    unknown = [t for t in tags if t not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    rows, limited = [], False
    for tag in tags:
        try:
            (r,) = run_checks([tag], cfg)
        except chrom.ResourceLimitError as err:
            # keep going: the report stays partial but complete for other tags
            limited = True
            rows.append({"check": tag, "status": "resource-limit", "details": {"message": str(err)}})
            continue
        row = {"check": r.tag, "status": "pass" if r.passed else "fail", "details": r.details}
        if args.timings:
            row["seconds"] = round(r.seconds, 3)
        rows.append(row)
    ok = all(r["status"] == "pass" for r in rows)
    code = EXIT_OK if ok else EXIT_RESOURCE if limited else EXIT_FAIL
    return {"command": "verify", "passed": ok, "rows": rows}, code


def cmd_chromatic(args, cfg: RunConfig) -> tuple[dict, int]:
    with open(args.graph) as fh:
        g = chrom.parse_graph(fh.read())
    a, b = chrom.phi_k_chromatic(g, args.k)
    x = chrom.chromatic_sym(g)
    image = chrom.rowdiv_chromatic(g, args.k)
    agree = a == b and image == rowdiv(x, args.k)
    doc = {"command": "chromatic", "graph": g.to_json(), "k": args.k, "phi_stable": a,
           "phi_orientations": b, "agree": agree,
           "rows": _symfunc_doc(image)}
    return doc, EXIT_OK if agree else EXIT_FAIL


def cmd_demazure(args, cfg: RunConfig) -> tuple[dict, int]:
    alpha = args.alpha
    if args.op == "key":
        f = dz.key_polynomial(alpha)
    elif args.op == "atom":
        f = dz.atom_polynomial(alpha)
    else:
        f = dz.rowdiv_poly(dz.key_polynomial(alpha), args.k)
    if args.expand == "monomial":
        items = sorted(f.terms.items(), reverse=True)
    elif args.expand == "key":
        items = list(dz.key_basis_expand(f).items())
    else:
        items = list(dz.atom_basis_expand(f).items())
    rows = [{"basis": args.expand, **row} for row in _terms_rows(items)]
    return {"command": "demazure", "op": args.op, "alpha": _fmt_parts(alpha), "k": args.k,
            "rows": rows}, EXIT_OK


def _guard_degree(cfg: RunConfig, degree: int):
    if degree > 4 * cfg.max_degree:
        raise chrom.ResourceLimitError(f"degree {degree} exceeds 4 x max_degree = {4 * cfg.max_degree}")


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv", "pretty"], default=argparse.SUPPRESS,
                        help="output format")
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON file with RunConfig fields")
    common.add_argument("--workers", type=_positive, default=argparse.SUPPRESS, help="parallel worker count")
    p = _Parser(prog="symdiv", description="Partition division maps on symmetric functions.",
                parents=[common])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    e = sub.add_parser("expand", help="image of a basis element under a map")
    e.add_argument("basis", choices=list("mehps"))
    e.add_argument("--lam", type=_partition)
    e.add_argument("--mu", type=_partition)
    e.add_argument("--k", type=_positive, default=2)
    e.add_argument("--map", choices=list(MAPS), default="row")
    e.add_argument("--out", choices=list("mehps"))
    e.set_defaults(func=cmd_expand)

    d = sub.add_parser("divide", help="division maps on quasisymmetric functions")
    d.add_argument("basis", choices=["F", "M"])
    d.add_argument("--alpha", type=_ints, required=True)
    d.add_argument("--k", type=_positive, default=2)
    d.add_argument("--map", choices=["row", "col"], default="row")
    d.add_argument("--out", choices=["F", "M"])
    d.set_defaults(func=cmd_divide)

    u = sub.add_parser("euler", help="Euler numbers E_{k,mu} by three models")
    u.add_argument("--mu", type=_ints, required=True)
    u.add_argument("--k", type=_positive, default=2)
    u.add_argument("--model", choices=["a", "b", "c", "all"], default="all")
    u.set_defaults(func=cmd_euler)

    g = sub.add_parser("gamma", help="gamma coefficients")
    g.add_argument("--n", type=_positive, required=True)
    g.add_argument("--k", type=_positive, default=2)
    g.set_defaults(func=cmd_gamma)

    s = sub.add_parser("scan", help="conjecture scans")
    s.add_argument("what", choices=["e-positivity", "atom-positivity"])
    s.add_argument("--k", type=_positive, default=2)
    s.add_argument("--nmax", type=_positive)
    s.add_argument("--bound", type=_positive)
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("tags", nargs="*", help=f"'all' or any of: {', '.join(CHECKS)}")
    v.add_argument("--nmax", type=_positive)
    v.add_argument("--k", type=_ints)
    v.add_argument("--bound", type=_positive)
    v.add_argument("--timings", action="store_true", help="include per-check wall time")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("chromatic", help="Phi_k and rowdiv of a chromatic symmetric function")
    c.add_argument("--graph", required=True, help="JSON or edge-list file")
    c.add_argument("--k", type=_positive, default=1)
    c.set_defaults(func=cmd_chromatic)

    z = sub.add_parser("demazure", help="key and atom polynomials")
    z.add_argument("--op", choices=["key", "atom", "rowdiv"], default="key")
    z.add_argument("--alpha", type=_ints, required=True)
    z.add_argument("--k", type=_positive, default=2)
    z.add_argument("--expand", choices=["monomial", "key", "atom"], default="monomial")
    z.set_defaults(func=cmd_demazure)
    return p


def load_config(args) -> RunConfig:
    data: dict = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            data = json.load(fh)
        unknown = set(data) - set(RunConfig.__dataclass_fields__)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
    if getattr(args, "format", None):
        data["fmt"] = args.format
    if getattr(args, "workers", None):
        data["workers"] = args.workers
    if os.environ.get("SYMDIV_THREADS"):
        data["workers"] = int(os.environ["SYMDIV_THREADS"])
    for name in ("nmax", "bound"):
        if getattr(args, name, None):
            data[name] = getattr(args, name)
    if args.verb == "verify" and args.k:
        data["k_values"] = args.k
    return RunConfig(**data)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(args)
        doc, code = args.func(args, cfg)
    except UsageError as err:
        print(f"symdiv: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, argparse.ArgumentTypeError, OSError, json.JSONDecodeError) as err:
        print(f"symdiv: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except chrom.ResourceLimitError as err:
        print(json.dumps({"error": "resource limit", "message": str(err)}))
        return EXIT_RESOURCE
    print(render(doc, cfg.fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
