"""``scdt`` command line: decompose, solve, verify, gen, oracle.

Results go to stdout, diagnostics to stderr.  The last stdout line of every
run is a JSON run report.  Exit codes: 0 success (a ``NO-CVD(k)`` conclusion
counts as success), 1 verification found violations, 2 bad input or I/O,
3 the oracle refused an instance as too large.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass

from . import io as sio
from .decompose import budget_for, decompose
from .errors import InputError, NoCvdConclusion, ParseError, ScdtError, TooLarge, ValidationError
from .generators import HittingSetInstance, gen_planted, hitting_set_vc_instance, random_hitting_set, triangulate_for_fvs_oct
from .oracles import BRUTE, VERIFIERS, OracleBudget, uncovered_edges
from .solvers import SOLVERS, solve_vc_given_modulator
from .td import validate_td

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_TOO_LARGE = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    input_digest: str | None = None
    k: int | None = None
    result_kind: str = ""  # solution | no-cvd-conclusion | validation-report | decomposition | instance
    solution_size: int | None = None
    wall_time: float = 0.0
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _threads() -> int:
    # parallelism cap; the implementation runs sequentially, so this is only validated
    raw = os.environ.get("SCDT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise _Fail(EXIT_INPUT, f"SCDT_THREADS must be an integer, got {raw!r}") from None


def _load_graph(path: str, report: RunReport):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
    report.input_digest = sio.digest(text)
    try:
        return sio.parse_graph(text)
    except ParseError as exc:
        raise _Fail(EXIT_INPUT, f"{path}: {exc}") from None


def _ids(vs) -> str:
    return " ".join(str(v + 1) for v in sorted(vs))


def cmd_decompose(args, report: RunReport) -> int:
    g = _load_graph(args.input, report)
    report.k = args.k
    try:
        td = decompose(g, args.k)
    except NoCvdConclusion:
        print(f"NO-CVD({args.k})")
        report.result_kind = "no-cvd-conclusion"
        return EXIT_OK
    c, ell = budget_for(args.k)
    if args.validate:
        bad = validate_td(g, td)
        if not bad.ok:
            for v in bad:
                print(v, file=sys.stderr)
            raise _Fail(EXIT_INPUT, "self-validation failed")
        print("validation: clean")
    if args.out:
        try:
            sio.write_decomposition(td, args.out)
        except OSError as exc:
            raise _Fail(EXIT_INPUT, f"cannot write {args.out}: {exc.strerror}") from None
    print(f"decomposition: {len(td)} bags, budget ({c}, {ell}), max |N| {td.max_rest()}")
    report.result_kind = "decomposition"
    return EXIT_OK


def cmd_solve(args, report: RunReport) -> int:
    g = _load_graph(args.input, report)
    kind = args.problem.upper()
    report.k = args.k
    if args.modulator:
        if kind != "VC":
            raise _Fail(EXIT_INPUT, "--modulator is only supported for vc")
        try:
            mod = sio.read_vertex_list(args.modulator)
            sol = solve_vc_given_modulator(g, mod, args.target)
        except OSError as exc:
            raise _Fail(EXIT_INPUT, f"cannot read {args.modulator}: {exc.strerror}") from None
        except (ParseError, InputError) as exc:
            raise _Fail(EXIT_INPUT, str(exc)) from None
    else:
        if args.k is None:
            raise _Fail(EXIT_INPUT, "--k is required (the promised CVD bound)")
        try:
            sol = SOLVERS[kind](g, args.k, args.target)
        except NoCvdConclusion:
            print(f"NO-CVD({args.k})")
            report.result_kind = "no-cvd-conclusion"
            return EXIT_OK
    print(f"{kind} size: {sol.size}")
    print(f"vertices: {_ids(sol.vertices)}")
    if args.target is not None:
        print("YES" if sol.meets_target else "NO")
    if args.out:
        try:
            sio.write_solution(sol, args.out)
        except OSError as exc:
            raise _Fail(EXIT_INPUT, f"cannot write {args.out}: {exc.strerror}") from None
    report.result_kind = "solution"
    report.solution_size = sol.size
    return EXIT_OK


def cmd_verify(args, report: RunReport) -> int:
    g = _load_graph(args.graph, report)
    report.result_kind = "validation-report"
    problems: list[str] = []
    if args.decomposition:
        try:
            td = sio.read_decomposition(args.decomposition)
        except OSError as exc:
            raise _Fail(EXIT_INPUT, f"cannot read {args.decomposition}: {exc.strerror}") from None
        except ParseError as exc:
            raise _Fail(EXIT_INPUT, f"{args.decomposition}: {exc}") from None
        except ValidationError as exc:
            problems = list(exc.violations)
        else:
            report.k = td.k
            problems = [str(v) for v in validate_td(g, td)]
    else:
        kind, path = args.solution
        kind = kind.upper()
        if kind not in VERIFIERS:
            raise _Fail(EXIT_INPUT, f"unknown solution kind {kind!r}")
        try:
            sol = sio.read_solution(path, kind)
        except OSError as exc:
            raise _Fail(EXIT_INPUT, f"cannot read {path}: {exc.strerror}") from None
        except ParseError as exc:
            raise _Fail(EXIT_INPUT, f"{path}: {exc}") from None
        out_of_range = [v for v in sol.vertices if v >= g.n]
        if out_of_range:
            problems.append(f"vertices {_ids(out_of_range)} are not in the graph")
        elif not VERIFIERS[kind](g, sol.vertices):
            if kind == "VC":
                problems += [f"edge {u + 1}-{v + 1} is not covered" for u, v in uncovered_edges(g, sol.vertices)]
            else:
                problems.append(f"G - X is not {'a forest' if kind == 'FVS' else 'bipartite' if kind == 'OCT' else 'chordal'}")
        report.solution_size = sol.size
    for p in problems:
        print(f"violation: {p}")
    if problems:
        return EXIT_VIOLATION
    print("clean")
    return EXIT_OK


def cmd_gen(args, report: RunReport) -> int:
    report.result_kind = "instance"
    report.seed = args.seed
    meta: dict = {"generator": args.generator, "seed": args.seed}
    try:
        if args.generator == "planted":
            inst = gen_planted(args.n, args.k, args.density, args.seed, args.apex_density)
            g, mod = inst.graph, inst.modulator
            report.k = args.k
            meta.update(n=args.n, k=args.k, density=args.density, apex_density=args.apex_density)
        elif args.generator == "hitting-set":
            if args.sets:
                fam = sio.read_sets(args.sets)
                universe = args.universe or max((max(s) + 1 for s in fam), default=0)
                hs = HittingSetInstance(universe, tuple(fam))
            else:
                if not args.universe:
                    raise _Fail(EXIT_INPUT, "hitting-set needs --sets FILE or --universe N")
                hs = random_hitting_set(args.universe, args.num_sets, args.seed)
            g, mod, offset = hitting_set_vc_instance(hs)
            if args.triangulate:
                g = triangulate_for_fvs_oct(g)
            meta.update(universe=hs.universe_size, sets=[sorted(v + 1 for v in s) for s in hs.family],
                        offset=offset, triangulated=bool(args.triangulate))
        else:
            src = _load_graph(args.input, report)
            g = triangulate_for_fvs_oct(src)
            mod = None
            meta.update(source_vertices=src.n, added=g.n - src.n)
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read input: {exc.strerror}") from None
    except (InputError, ParseError) as exc:
        raise _Fail(EXIT_INPUT, str(exc)) from None
    if mod is not None:
        meta["modulator"] = sorted(v + 1 for v in mod)
    try:
        sio.write_graph(g, args.out, [f"{args.generator} seed={args.seed}"])
        if mod is not None:
            sio.write_vertex_list(mod, args.out + ".mod")
        with open(args.out + ".meta.json", "w", encoding="utf-8") as fh:
            json.dump(meta, fh, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot write {args.out}: {exc.strerror}") from None
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    return EXIT_OK


def cmd_oracle(args, report: RunReport) -> int:
    g = _load_graph(args.input, report)
    kind = args.problem.upper()
    try:
        sol = BRUTE[kind](g, OracleBudget(args.max_n) if args.max_n else None)
    except TooLarge as exc:
        print(str(exc), file=sys.stderr)
        report.result_kind = "too-large"
        return EXIT_TOO_LARGE
    print(f"{kind} size: {sol.size}")
    print(f"vertices: {_ids(sol.vertices)}")
    report.result_kind = "solution"
    report.solution_size = sol.size
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scdt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="build a (4, 7k+5)-semi-clique tree decomposition")
    d.add_argument("--input", required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--out")
    d.add_argument("--validate", action="store_true", help="re-check the result before writing it")
    d.set_defaults(func=cmd_decompose)

    s = sub.add_parser("solve", help="exact VC / FVS / OCT")
    s.add_argument("problem", choices=["vc", "fvs", "oct"])
    s.add_argument("--input", required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--target", type=int)
    s.add_argument("--modulator", help="file with a chordal modulator (vc only)")
    s.add_argument("--out", help="write the witness as a solution file")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a decomposition or a solution")
    v.add_argument("--graph", required=True)
    grp = v.add_mutually_exclusive_group(required=True)
    grp.add_argument("--decomposition")
    grp.add_argument("--solution", nargs=2, metavar=("KIND", "FILE"))
    v.set_defaults(func=cmd_verify)

    gsub = sub.add_parser("gen", help="write a generated instance").add_subparsers(dest="generator", required=True)
    gp = gsub.add_parser("planted")
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--k", type=int, required=True)
    gp.add_argument("--density", type=float, default=0.5)
    gp.add_argument("--apex-density", type=float, default=0.5)
    gh = gsub.add_parser("hitting-set")
    gh.add_argument("--sets", help="one set per line, 1-based element ids")
    gh.add_argument("--universe", type=int)
    gh.add_argument("--num-sets", type=int, default=5)
    gh.add_argument("--triangulate", action="store_true", help="apply the triangle gadget for FVS/OCT")
    gt = gsub.add_parser("triangulate")
    gt.add_argument("--input", required=True)
    for q in (gp, gh, gt):
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--out", required=True)
        q.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="brute-force optimum for small graphs")
    o.add_argument("problem", choices=["vc", "fvs", "oct", "cvd"])
    o.add_argument("--input", required=True)
    o.add_argument("--max-n", type=int)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    command = args.command if args.command != "gen" else f"gen {args.generator}"
    report = RunReport(command)
    start = time.perf_counter()
    try:
        _threads()
        code = args.func(args, report)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = exc.code
        report.result_kind = report.result_kind or "error"
    except ScdtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
        report.result_kind = "error"
    report.wall_time = round(time.perf_counter() - start, 6)
    print(report.to_json())
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
