"""Command-line front end.

Reports are ``key: value`` lines on stdout. Exit codes: 0 success,
1 no solution / not applicable / invalid certificate, 2 usage or parse
error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .core import (
    InternalError,
    InvalidInputError,
    NoSolutionError,
    ResourceLimitError,
    verify_hitting_set,
)
from .matching import NoCoverError, max_matching, min_edge_cover
from .reductions import (
    extract_embedding,
    normalize_psi,
    psi_to_hitting_set,
    split_edges_triangle_free,
    vertex_cover_system,
)
from .solvers import (
    SolveResult,
    Status,
    brute_force_min_hitting_set,
    format_trace,
    greedy_hitting_set,
    solve_35,
    solve_auto,
    solve_dual_vc1,
    solve_vc1,
)
from .vc import alpha_beta_profile, dual_vc_dimension, vc_dimension

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _ids(xs) -> str:
    return ",".join(str(x + 1) for x in xs)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(out, **fields) -> None:
    for k, v in fields.items():
        if isinstance(v, bool):
            v = "yes" if v else "no"
        out.write(f"{k}: {v}\n")


def cmd_vcdim(args, out) -> int:
    F = formats.parse_hypergraph(_read(args.file))
    rep = vc_dimension(F, cap=args.cap)
    _emit(out, vc=rep.vc_dim)
    if args.dual:
        _emit(out, dual_vc=dual_vc_dimension(F, cap=args.cap))
    _emit(out, witness=_ids(rep.witness) or "-", capped=rep.capped)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    F = formats.parse_hypergraph(_read(args.file))
    prof = alpha_beta_profile(F, args.alpha)
    _emit(out, alpha=prof.alpha, beta=prof.beta, witness=_ids(prof.witness) or "-")
    if args.beta is not None:
        _emit(out, ab_system=prof.beta <= args.beta)
    return EXIT_OK


def _run_solver(F, algo: str, guard: bool) -> SolveResult:
    if algo == "vc1":
        return solve_vc1(F, guard=guard)
    if algo == "dualvc1":
        return solve_dual_vc1(F, guard=guard)
    if algo == "sys35":
        return solve_35(F, guard=guard)
    if algo == "brute":
        return brute_force_min_hitting_set(F)
    if algo == "greedy":
        try:
            return SolveResult(Status.SOLVED, greedy_hitting_set(F), method="greedy", exact=False)
        except NoSolutionError:
            return SolveResult(Status.NO_SOLUTION, method="greedy")
    return solve_auto(F)


def cmd_solve(args, out) -> int:
    F = formats.parse_hypergraph(_read(args.file))
    res = _run_solver(F, args.algo, not args.no_guard)
    _emit(out, status=res.status.value)
    if res.solution is not None:
        _emit(out, size=res.solution.size, elements=_ids(res.solution) or "-",
              method=res.method, exact=res.exact)
    else:
        _emit(out, method=res.method, reason=res.reason)
        if res.witness:
            _emit(out, witness=_ids(res.witness))
    if args.trace:
        Path(args.trace).write_text(format_trace(res.trace, base=1))
    return EXIT_OK if res.status is Status.SOLVED else EXIT_FAIL


def cmd_verify(args, out) -> int:
    F = formats.parse_hypergraph(_read(args.file))
    S = formats.parse_solution(args.solution, F.universe_size)
    ok = verify_hitting_set(F, S)
    _emit(out, valid=ok, size=len(set(S)))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen_psi(args, out) -> int:
    inst = formats.parse_psi(_read(args.file))
    normalized = inst.t != inst.k
    if normalized:
        inst = normalize_psi(inst)
    F, budget, layout = psi_to_hitting_set(inst)
    Path(args.output).write_text(formats.serialize_hypergraph(F))
    if args.layout:
        # the layout refers to set positions in the written (sorted) file
        order = sorted(range(F.num_sets), key=lambda c: F.sets[c])
        layout.set_labels = [layout.set_labels[c] for c in order]
        layout.system = F.canonical()
        Path(args.layout).write_text(formats.serialize_layout(layout))
    _emit(out, universe=F.universe_size, sets=F.num_sets, budget=budget,
          nominal_budget=layout.nominal_budget, normalized=normalized)
    return EXIT_OK


def cmd_gen_vc36(args, out) -> int:
    G = formats.parse_graph(_read(args.file))
    H, offset = split_edges_triangle_free(G)
    F = vertex_cover_system(H)
    Path(args.output).write_text(formats.serialize_hypergraph(F))
    _emit(out, universe=F.universe_size, sets=F.num_sets, offset=offset)
    return EXIT_OK


def cmd_extract(args, out) -> int:
    F = formats.parse_hypergraph(_read(args.file))
    layout = formats.parse_layout(_read(args.layout), F)
    S = formats.parse_solution(args.solution, F.universe_size)
    assignment = extract_embedding(None, layout, S)
    pairs = [f"{i + 1}:{u + 1}" for i, u in enumerate(assignment) if u is not None]
    _emit(out, status="ok", embedding=",".join(pairs) or "-")
    return EXIT_OK


def cmd_matching(args, out) -> int:
    G = formats.parse_graph(_read(args.file))
    M = max_matching(G)
    _emit(out, matching=len(M), matching_edges=_ids(M) or "-")
    try:
        cover = min_edge_cover(G)
    except NoCoverError as exc:
        _emit(out, edge_cover="none", isolated_vertex=exc.vertex + 1)
    else:
        _emit(out, edge_cover=len(cover), cover_edges=_ids(cover) or "-")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lowvc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("vcdim", help="VC-dimension of a hypergraph")
    s.add_argument("file")
    s.add_argument("--cap", type=int)
    s.add_argument("--dual", action="store_true")
    s.set_defaults(func=cmd_vcdim)

    s = sub.add_parser("classify", help="(alpha, beta) profile")
    s.add_argument("file")
    s.add_argument("--alpha", type=int, required=True)
    s.add_argument("--beta", type=int)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="minimum hitting set")
    s.add_argument("file")
    s.add_argument("--algo", default="auto",
                   choices=["auto", "vc1", "dualvc1", "sys35", "brute", "greedy"])
    s.add_argument("--no-guard", action="store_true")
    s.add_argument("--trace")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a hitting set")
    s.add_argument("file")
    s.add_argument("--solution", required=True)
    s.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="instance generators").add_subparsers(
        dest="generator", required=True)
    s = gen.add_parser("psi", help="PSI -> Hitting Set")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--layout")
    s.set_defaults(func=cmd_gen_psi)
    s = gen.add_parser("vc36", help="graph -> triangle-free Vertex Cover system")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen_vc36)

    s = sub.add_parser("extract", help="read a PSI embedding off a solution")
    s.add_argument("file")
    s.add_argument("--layout", required=True)
    s.add_argument("--solution", required=True)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("matching", help="maximum matching and minimum edge cover")
    s.add_argument("file")
    s.set_defaults(func=cmd_matching)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InvalidInputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
