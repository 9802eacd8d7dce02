"""Command-line front end.

Commands: enumerate, distance, diameter, table, witness, verify-path,
verify, scan.  Sets are written `1,3,6,8` (ascending, no spaces).  Exit
codes: 0 success, 1 usage error, 2 invariant violation / invalid
certificate, 3 regime or parameter error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from .blocks import decompose, decomposition_to_json, disjoint_middle_vertex
from .certificates import (
    PathCertificate,
    certificate_to_json,
    check_certificate_data,
    verify_certificate,
)
from .closedform import diameter_formula, witness_dist3, witness_lower4
from .cyclic import CycleParams, StableSet, enumerate_stable_sets, parse_set_text, stable_set
from .errors import CertificateError, InvariantError, ParameterError, SchrijverError
from .graph import SchrijverGraph
from .lift import bound_path_with_trace
from .paths import path_dist3, path_via_reduction
from .suites import SUITES, scan_rows, table_rows

TABLE_SCHEMA = "# schrijver table v1: n,k,r,formula_lo,formula_hi,bfs,agree"
SCAN_SCHEMA = (
    "# schrijver scan v1 (empirical evidence only, not a proof): "
    "k,r,n,diameter,next_diameter,gap"
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _add_common(p: argparse.ArgumentParser, *, sets: bool = False) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    if sets:
        p.add_argument("--a", required=True, help="first vertex, e.g. 1,3,6,8")
        p.add_argument("--b", required=True, help="second vertex")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schrijver", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all vertices of SG(n,k)")
    _add_common(p)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out")

    p = sub.add_parser("distance", help="BFS distance between two vertices")
    _add_common(p, sets=True)
    p.add_argument("--explain", action="store_true")
    p.add_argument("--trace", action="store_true", help="include the lift trace when used")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out")

    p = sub.add_parser("diameter", help="diameter of SG(n,k)")
    _add_common(p)
    p.add_argument("--method", choices=("auto", "formula", "bfs"), default="auto")
    p.add_argument("--no-orbit-reduction", action="store_true")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out")

    p = sub.add_parser("table", help="formula vs BFS diameters, CSV")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("witness", help="paper witness pairs")
    _add_common(p)
    p.add_argument("--kind", choices=("lower4", "dist3"), required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--out")

    p = sub.add_parser("verify-path", help="re-check a serialized certificate")
    p.add_argument("--file", required=True, help="JSON file, or - for stdin")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run an invariant sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser("scan", help="conjecture evidence: diameters by r")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    return parser


def _vertex(text: str, params: CycleParams) -> StableSet:
    return stable_set(parse_set_text(text, params), params)


def cmd_enumerate(args) -> str:
    params = CycleParams(args.n, args.k)
    vertices = enumerate_stable_sets(params)
    if args.format == "json":
        return json.dumps([str(v) for v in vertices]) + "\n"
    return "".join(f"{v}\n" for v in vertices)


def _certificate_for(g: SchrijverGraph, a: StableSet, b: StableSet, dist: int, want_trace: bool):
    """Constructive certificate matched to the regime, plus an optional lift trace."""
    n, k = g.params.n, g.params.k
    trace = None
    if dist == 0:
        return None, None
    if dist == 1:
        return PathCertificate((a, b), 1), None
    if dist == 2:
        d = decompose(a, b)
        return PathCertificate((a, disjoint_middle_vertex(d), b), 2), None
    if 3 * k - 2 <= n <= 4 * k - 3:
        return path_dist3(a, b), None
    if 1 <= 3 * k - 2 - n <= k - 4:
        cert, trace = bound_path_with_trace(a, b)
        return cert, trace if want_trace else None
    return path_via_reduction(a, b), None


def cmd_distance(args) -> str:
    params = CycleParams(args.n, args.k)
    a = _vertex(args.a, params)
    b = _vertex(args.b, params)
    g = SchrijverGraph(params)
    record = g.bfs_distance(a, b)
    if record.distance is None:
        raise InvariantError(f"{a} and {b} are in different components")
    if not args.explain and not args.trace and args.format == "plain":
        return f"{record.distance}\n"

    cert, trace = _certificate_for(g, a, b, record.distance, args.trace)
    payload: dict = {
        "n": params.n,
        "k": params.k,
        "a": str(a),
        "b": str(b),
        "distance": record.distance,
    }
    if cert is not None:
        verify_certificate(cert, source=a, target=b)
        if cert.edge_count < record.distance:
            raise InvariantError("certificate shorter than the BFS distance")
        payload["certificate"] = certificate_to_json(cert)
    if args.explain and a.mask != b.mask and a.mask & b.mask:
        payload["decomposition"] = decomposition_to_json(decompose(a, b))
    if trace is not None:
        payload["lift_trace"] = {
            "steps": [
                {
                    "kind": st.kind,
                    "marker": st.marker,
                    "n_before": st.n_before,
                    "n_after": st.n_after,
                }
                for st in trace.steps
            ],
            "levels": [
                {"level": i, "n": av.params.n, "a": str(av), "b": str(bv)}
                for i, (av, bv) in enumerate(zip(trace.a_levels, trace.b_levels))
            ],
        }
    return json.dumps(payload, indent=2) + "\n"


def cmd_diameter(args) -> str:
    n, k = args.n, args.k
    result = None
    if args.method in ("auto", "formula"):
        result = diameter_formula(n, k)
    if args.method == "bfs" or (
        args.method == "auto" and result is not None and not result.exact
    ):
        g = SchrijverGraph(CycleParams(n, k))
        bfs = g.diameter_bruteforce(orbit_reduction=not args.no_orbit_reduction)
        if result is not None and not (result.lo <= bfs.value <= result.hi):
            raise InvariantError(
                f"BFS diameter {bfs.value} escapes formula interval [{result.lo}..{result.hi}]"
            )
        result = bfs
    if args.format == "json":
        payload = {
            "n": n,
            "k": k,
            "lo": result.lo,
            "hi": result.hi,
            "method": result.method,
        }
        if result.witness:
            payload["witness"] = [str(result.witness[0]), str(result.witness[1])]
        return json.dumps(payload) + "\n"
    if result.exact:
        return f"{result.value}\n"
    return f"[{result.lo}..{result.hi}]\n"


def cmd_table(args) -> str:
    rows = table_rows(args.k_max, jobs=args.jobs)
    buf = io.StringIO()
    buf.write(TABLE_SCHEMA + "\n")
    buf.write("n,k,r,formula_lo,formula_hi,bfs,agree\n")
    for row in rows:
        buf.write(
            f"{row['n']},{row['k']},{row['r']},{row['formula_lo']},"
            f"{row['formula_hi']},{row['bfs']},{row['agree']}\n"
        )
    return buf.getvalue()


def cmd_witness(args) -> str:
    if args.kind == "lower4":
        a, b = witness_lower4(args.n, args.k)
        cert = None
    else:
        a, b, cert = witness_dist3(args.n, args.k)
    if args.format == "json":
        payload = {"n": args.n, "k": args.k, "kind": args.kind, "a": str(a), "b": str(b)}
        if cert is not None:
            payload["certificate"] = certificate_to_json(cert)
        return json.dumps(payload, indent=2) + "\n"
    return f"{a}\n{b}\n"


def cmd_verify_path(args) -> str:
    if args.file == "-":
        raw = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        data = json.loads(raw)
        n = int(data["n"])
        k = int(data["k"])
        bound = int(data["claimed_bound"])
        seqs = [
            tuple(int(x) for x in str(text).split(","))
            for text in data["vertices"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"malformed certificate payload: {exc}") from None
    problems = check_certificate_data(n, k, seqs, bound)
    if problems:
        raise CertificateError("; ".join(problems))
    return f"ok: {len(seqs) - 1} edges within claimed bound {bound}\n"


def cmd_verify(args) -> str:
    result = SUITES[args.suite](args.k_max)
    lines = [result.summary()]
    lines.extend(f"  counterexample: {msg}" for msg in result.failures)
    text = "\n".join(lines) + "\n"
    if not result.ok:
        sys.stdout.write(text)
        raise InvariantError(f"suite {args.suite} found violations")
    return text


def cmd_scan(args) -> str:
    rows = scan_rows(args.k_max, jobs=args.jobs)
    buf = io.StringIO()
    buf.write(SCAN_SCHEMA + "\n")
    buf.write("k,r,n,diameter,next_diameter,gap\n")
    for row in rows:
        buf.write(
            f"{row['k']},{row['r']},{row['n']},{row['diameter']},"
            f"{row['next_diameter']},{row['gap']}\n"
        )
    return buf.getvalue()


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "distance": cmd_distance,
    "diameter": cmd_diameter,
    "table": cmd_table,
    "witness": cmd_witness,
    "verify-path": cmd_verify_path,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _COMMANDS[args.command](args)
    except (InvariantError, CertificateError) as exc:
        print(f"schrijver: {exc}", file=sys.stderr)
        return 2
    except (ParameterError, SchrijverError) as exc:
        print(f"schrijver: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"schrijver: {exc}", file=sys.stderr)
        return 1
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
