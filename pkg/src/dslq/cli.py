"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (for example a disconnected
graph given to a spectral command), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from fractions import Fraction

from . import extremal, io as gio
from .errors import DslqError
from .graph import Graph
from .matching import (
    find_factor_backtracking,
    fractional_matching_number_fast,
    has_k2ck_factor,
    max_deficiency_brute,
    FACTOR_CAP,
)
from .quotient import Partition, quotient_largest_eigenvalue, quotient_matrix
from .spectra import distance_matrix, dsl_matrix, eta, full_spectrum, transmissions


class _Out:
    """Collects records and renders them as text, CSV or JSON lines."""

    def __init__(self, fmt: str, precision: int):
        self.fmt = fmt
        self.precision = precision

    def num(self, x):
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, float):
            return f"{x:.{self.precision}f}"
        return x

    def _json_value(self, x):
        if isinstance(x, Fraction):
            return str(x)
        if isinstance(x, float):
            return round(x, self.precision)
        if isinstance(x, dict):
            return {str(k): self._json_value(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [self._json_value(v) for v in x]
        return x

    def render(self, records: list[dict], text: list[str]) -> str:
        if self.fmt == "text":
            return "\n".join(text) + "\n"
        if self.fmt == "json":
            return "".join(json.dumps(self._json_value(r), sort_keys=False) + "\n" for r in records)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if records:
            writer.writerow(list(records[0]))
            for r in records:
                writer.writerow(["" if v is None else self.num(v) for v in r.values()])
        return buf.getvalue()


def _graph(args) -> Graph:
    if args.g6 is not None:
        return gio.parse_graph(args.g6, "graph6")
    return gio.parse_graph(args.edgelist, "edgelist")


def _fmt_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in vs) + "}"


def cmd_eta(args, out):
    value = eta(_graph(args))
    return [{"eta": value}], [f"eta = {out.num(value)}"]


def cmd_spectrum(args, out):
    vals = [float(v) for v in full_spectrum(dsl_matrix(_graph(args))).eigenvalues]
    records = [{"index": i, "eigenvalue": v} for i, v in enumerate(vals)]
    if out.fmt == "json":
        records = [{"eigenvalues": vals}]
    return records, [f"eigenvalues = {', '.join(out.num(v) for v in vals)}"]


def cmd_distance(args, out):
    g = _graph(args)
    d = distance_matrix(g)
    tr = transmissions(g)
    records = [{"vertex": i, "transmission": int(tr[i]), "distances": " ".join(map(str, d[i]))}
               for i in range(g.n)]
    if out.fmt == "json":
        records = [{"distance": d.tolist(), "transmissions": tr.tolist()}]
    text = [" ".join(f"{x:>3}" for x in row) for row in d]
    text.append("transmissions = " + " ".join(str(int(t)) for t in tr))
    return records, text


def cmd_muf(args, out):
    g = _graph(args)
    if args.method == "brute":
        wit = max_deficiency_brute(g, args.cap)
        value = Fraction(g.n - wit.deficiency, 2)
        rec = {"mu_f": value, "method": "brute", "max_deficiency": wit.deficiency,
               "witness": list(wit.s)}
        text = [f"mu_f = {value}", f"max_deficiency = {wit.deficiency}",
                f"witness S = {_fmt_set(wit.s)}"]
    else:
        value = fractional_matching_number_fast(g)
        rec = {"mu_f": value, "method": "fast"}
        text = [f"mu_f = {value}"]
    if out.fmt == "csv":
        rec = {k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in rec.items()}
    return [rec], text


def cmd_factor(args, out):
    g = _graph(args)
    has, wit = has_k2ck_factor(g, args.cap)
    rec = {"has_factor": has, "witness": list(wit.s) if wit else None,
           "witness_deficiency": wit.deficiency if wit else None, "factor": None}
    text = [f"has_factor = {'yes' if has else 'no'}"]
    if wit:
        text.append(f"witness S = {_fmt_set(wit.s)} (i(G-S) - |S| = {wit.deficiency})")
    if has and g.n <= FACTOR_CAP:
        edges = find_factor_backtracking(g)
        rec["factor"] = [list(e) for e in edges]
        text.append("factor = " + " ".join(f"{u}-{v}" for u, v in edges))
    if out.fmt == "csv":
        rec["witness"] = " ".join(map(str, rec["witness"])) if rec["witness"] else None
        rec["factor"] = " ".join(f"{u}-{v}" for u, v in rec["factor"]) if rec["factor"] else None
    return [rec], text


def _quotient_output(q, out, extra: dict):
    rows = [[x for x in row] for row in q.entries]
    root = quotient_largest_eigenvalue(q)
    rec = dict(extra)
    rec.update({"quotient": [[str(x) for x in r] for r in rows], "equitable": q.equitable,
                "largest_eigenvalue": root})
    text = [f"{k} = {out.num(v)}" for k, v in extra.items()]
    text += ["quotient ="] + ["  " + " ".join(f"{str(x):>8}" for x in r) for r in rows]
    text += [f"equitable = {'yes' if q.equitable else 'no'}",
             f"largest_eigenvalue = {out.num(root)}"]
    if out.fmt == "csv":
        rec["quotient"] = ";".join(" ".join(r) for r in rec["quotient"])
    return [rec], text


def cmd_quotient(args, out):
    g = _graph(args)
    q = quotient_matrix(dsl_matrix(g), Partition.parse(args.partition))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return _quotient_output(q, out, {"eta": eta(g)})


def _family_like(g: Graph, q, out, label: dict):
    extra = dict(label)
    extra.update({"graph6": gio.to_graph6(g), "n": g.n, "m": g.num_edges, "eta": eta(g)})
    return _quotient_output(q, out, extra)


def cmd_family(args, out):
    g = extremal.build_family(args.n, args.s, args.k)
    q = extremal.family_quotient(args.n, args.s, args.k)
    return _family_like(g, q, out, {"s": args.s, "k": args.k})


def cmd_ghat(args, out):
    g = extremal.build_ghat(args.n)
    q = extremal.quotient_Mhat(args.n, extremal.ghat_surplus(args.n))
    return _family_like(g, q, out, {})


def cmd_table1(args, out):
    rows = extremal.reproduce_table1(args.n_min, args.n_max)
    records = []
    for row in rows:
        for e in row.entries:
            records.append({"n": e.n, "s": e.s, "eta_direct": e.eta_direct,
                            "eta_quotient": e.eta_quotient, "paper_value": e.paper_value,
                            "abs_diff": e.abs_diff})
    text = []
    for row in rows:
        vals = " ".join(f"{e.eta_direct:.2f}" for e in row.family)
        text.append(f"n={row.n:>2}  ghat={row.ghat.eta_direct:.2f}  G_s: {vals}")
    worst = max(r["abs_diff"] for r in records)
    text.append(f"max |recomputed - printed| = {worst:.{out.precision}f}")
    return records, text


def _report_output(rep, out):
    rec = {"theorem": rep.theorem, **rep.params, "passed": rep.passed,
           "verdicts": rep.verdicts, "values": rep.values,
           "mismatches": [{k: (str(v) if isinstance(v, Fraction) else v) for k, v in m.items()}
                          for m in rep.mismatches],
           "notes": rep.notes}
    text = [f"{rep.theorem} " + " ".join(f"{k}={v}" for k, v in rep.params.items())]
    for k, v in rep.verdicts.items():
        text.append(f"verdict {k} = {'skipped' if v is None else ('pass' if v else 'FAIL')}")
    for k, v in rep.values.items():
        if isinstance(v, dict):
            v = ", ".join(f"{kk}:{out.num(vv)}" for kk, vv in v.items())
        text.append(f"{k} = {out.num(v)}")
    for m in rep.mismatches:
        text.append(f"printed-formula mismatch {m['formula']} n={m['n']} s={m['s']} k={m['k']} "
                    f"x^{m['power']}: printed {m['printed']} vs quotient {m['derived']}")
    text += [f"note: {x}" for x in rep.notes]
    if out.fmt == "csv":
        rec = {"theorem": rep.theorem, **rep.params, "passed": rep.passed,
               **{f"verdict_{k}": v for k, v in rep.verdicts.items()},
               "mismatches": len(rep.mismatches)}
    return [rec], text


def cmd_verify1(args, out):
    return _report_output(extremal.verify_theorem1(args.n, args.k), out)


def cmd_verify2(args, out):
    return _report_output(extremal.verify_theorem2(args.n), out)


def _precision(text: str) -> int:
    p = int(text)
    if not 0 <= p <= 12:
        raise argparse.ArgumentTypeError("precision must be between 0 and 12")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--precision", type=_precision, default=4)

    graph_in = argparse.ArgumentParser(add_help=False)
    src = graph_in.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph6 string or file")
    src.add_argument("--edgelist", help="edge-list file, or inline text with '/' line breaks")

    parser = argparse.ArgumentParser(prog="dslq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, graph=False):
        parents = [common, graph_in] if graph else [common]
        p = sub.add_parser(name, parents=parents, help=helptext)
        p.set_defaults(func=func)
        return p

    add("eta", cmd_eta, "distance signless Laplacian spectral radius", graph=True)
    add("spectrum", cmd_spectrum, "all eigenvalues of Q(G)", graph=True)
    add("distance", cmd_distance, "distance matrix and transmissions", graph=True)
    p = add("muf", cmd_muf, "fractional matching number", graph=True)
    p.add_argument("--method", choices=("brute", "fast"), default="fast")
    p.add_argument("--cap", type=int, default=24, help="largest n for brute force")
    p = add("factor", cmd_factor, "{K2, C_k}-factor existence", graph=True)
    p.add_argument("--cap", type=int, default=24, help="largest n for witness search")
    p = add("quotient", cmd_quotient, "quotient matrix of Q(G)", graph=True)
    p.add_argument("--partition", required=True, help="blocks split by '|', vertices by ','")
    p = add("family", cmd_family, "extremal family member G_s")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p = add("ghat", cmd_ghat, "the graph G-hat")
    p.add_argument("--n", type=int, required=True)
    p = add("table1", cmd_table1, "recompute the spectral radius table")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=36)
    p = add("verify-theorem1", cmd_verify1, "fractional matching threshold checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("verify-theorem2", cmd_verify2, "factor threshold checks")
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.format, args.precision)
    try:
        records, text = args.func(args, out)
    except DslqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out.render(records, text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
