"""Command line surface.

Every command is parameterized by a global ``--group m,n`` flag and writes
deterministic text (default) or JSON to stdout; diagnostics and notices go
to stderr.  Exit codes: 0 success, 1 usage error, 2 word parse error,
3 domain error (bad parameters, size budget, graph queries outside their
domain), 4 selfcheck failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cosets, graph, invariants, selfcheck
from .errors import (
    BudgetError,
    DomainError,
    NoPathError,
    NotANodeError,
    ParseError,
    WordConditionError,
)
from .normal_forms import bs1n_matrix, bs1n_normal_form, element_normal_form
from .params import GroupParams
from .words import britton_reduce, equal_elements, format_word, parse_word, t_exponent

_USAGE_EXIT = 1
_PARSE_EXIT = 2
_DOMAIN_EXIT = 3
_SELFCHECK_EXIT = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract says 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    top = _Parser(prog="bsscale", description=__doc__)
    top.add_argument("--group", metavar="M,N", help="group parameters, e.g. 2,3")
    top.add_argument("--output", choices=("text", "json"), default="text")
    top.add_argument(
        "--budget",
        type=int,
        default=cosets.DEFAULT_BUDGET,
        help="vertex budget for tree balls",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def cmd(name, **kwargs):
        return sub.add_parser(name, **kwargs)

    cmd("reduce").add_argument("word")
    cmd("nf").add_argument("word")
    cmd("rho").add_argument("word")
    p_eq = cmd("equal")
    p_eq.add_argument("word")
    p_eq.add_argument("other")
    cmd("scale").add_argument("word")
    cmd("modular").add_argument("word")
    cmd("flat-rank")
    cmd("kernel")
    p_mo = cmd("moller")
    p_mo.add_argument("--kmax", type=int, default=8)
    p_mo.add_argument("word")
    p_tr = cmd("trace")
    p_tr.add_argument("--start", type=int, default=1)
    p_tr.add_argument("--h", type=int, default=1)
    p_tr.add_argument("word")
    cmd("omega-edges").add_argument("--levels", type=int, default=3)
    p_od = cmd("omega-dist")
    p_od.add_argument("x", type=int)
    p_od.add_argument("y", type=int)
    cmd("orbit").add_argument("word")
    p_ob = cmd("orbit-brute")
    p_ob.add_argument("--dmax", type=int, default=None)
    p_ob.add_argument("word")
    p_ball = cmd("ball")
    p_ball.add_argument("--radius", type=int, required=True)
    p_ball.add_argument("--dot", metavar="PATH", default=None)
    cmd("census").add_argument("--radius", type=int, required=True)
    cmd("structure").add_argument("word", nargs="?", default=None)
    cmd("matrix").add_argument("word")
    cmd("scale-set").add_argument("--rho-max", type=int, required=True)
    cmd("selfcheck").add_argument("--seed", type=int, default=0)
    return top


def _group(args) -> GroupParams:
    if not args.group:
        raise _UsageError("--group M,N is required for this command")
    try:
        m_str, n_str = args.group.split(",")
        p = GroupParams(int(m_str), int(n_str))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise _UsageError(f"cannot parse --group {args.group!r}: expected M,N")
    return p


# commands whose answers route through discrete / divisor-case logic
_NOTICE_COMMANDS = frozenset(
    {
        "scale", "modular", "flat-rank", "kernel", "moller", "trace",
        "omega-edges", "omega-dist", "orbit", "orbit-brute", "census",
        "structure", "scale-set",
    }
)


def _notice(p: GroupParams, args, err) -> None:
    if args.output != "text" or args.command not in _NOTICE_COMMANDS:
        return
    if p.discrete:
        print(f"notice: |m| = |n| = {abs(p.m)}: the completion is discrete", file=err)
    elif p.divisor_case:
        print(
            "notice: one parameter divides the other; "
            "structured graph geometry is unavailable",
            file=err,
        )


def _emit(args, out, text: str, payload: dict) -> None:
    if args.output == "json":
        print(json.dumps(payload), file=out)
    else:
        print(text, file=out)


def _word_or_e(w: str) -> str:
    return format_word(w) or "e"


def run(argv: list[str], out=None, err=None) -> int:
    """Dispatch a full command line; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out, err)
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return _USAGE_EXIT
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return _PARSE_EXIT
    except (BudgetError, DomainError, NoPathError, NotANodeError, WordConditionError) as exc:
        print(f"domain error: {exc}", file=err)
        return _DOMAIN_EXIT


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd == "selfcheck":
        results = selfcheck.run_all(args.seed)
        failures = sum(1 for _, ok, _ in results if not ok)
        if args.output == "json":
            payload = {
                "results": [
                    {"name": name, "ok": ok, "detail": detail}
                    for name, ok, detail in results
                ],
                "failures": failures,
            }
            print(json.dumps(payload), file=out)
        else:
            for name, ok, detail in results:
                print(f"{'ok' if ok else 'FAIL'}: {name} ({detail})", file=out)
            print(f"{len(results) - failures}/{len(results)} suites passed", file=out)
        return _SELFCHECK_EXIT if failures else 0

    p = _group(args)
    _notice(p, args, err)

    if cmd == "reduce":
        w = britton_reduce(p, parse_word(args.word))
        _emit(args, out, _word_or_e(w), {"word": format_word(w)})
    elif cmd == "nf":
        nf = element_normal_form(p, parse_word(args.word))
        _emit(
            args,
            out,
            _word_or_e(nf.to_word()),
            {
                "syllables": [list(s) for s in nf.syllables],
                "tail": nf.tail,
                "word": format_word(nf.to_word()),
            },
        )
    elif cmd == "rho":
        rho = t_exponent(parse_word(args.word))
        _emit(args, out, str(rho), {"rho": rho})
    elif cmd == "equal":
        res = equal_elements(p, parse_word(args.word), parse_word(args.other))
        _emit(args, out, "true" if res else "false", {"equal": res})
    elif cmd == "scale":
        sv = invariants.scale(p, parse_word(args.word))
        _emit(args, out, str(sv.value), sv.as_dict())
    elif cmd == "modular":
        mv = invariants.modular(p, parse_word(args.word))
        _emit(args, out, f"{mv.numerator}/{mv.denominator}", mv.as_dict())
    elif cmd == "flat-rank":
        fr = invariants.flat_rank(p)
        _emit(args, out, str(fr), {"flat_rank": fr})
    elif cmd == "kernel":
        k = invariants.pi_kernel(p)
        _emit(args, out, str(k), {"kernel_exponent": k})
    elif cmd == "moller":
        if args.kmax < 1:
            raise _UsageError("--kmax must be positive")
        word = parse_word(args.word)
        seq, stable = invariants.moller_stabilization(p, word, args.kmax)
        target = invariants.scale(p, word).value
        ratio = str(seq[-1] // seq[-2]) if len(seq) > 1 and seq[-2] and seq[-1] % seq[-2] == 0 else "?"
        verdict = "OK" if stable else "DIAG ratios not stabilized at bound"
        _emit(
            args,
            out,
            f"{' '.join(str(v) for v in seq)} | ratio {ratio} | scale {target} {verdict}",
            {
                "indices": [str(v) for v in seq],
                "ratio": ratio,
                "scale": str(target),
                "stable": stable,
            },
        )
    elif cmd == "trace":
        val = graph.trace(p, parse_word(args.word), start=args.start, h=args.h)
        _emit(args, out, str(val), {"trace": str(val)})
    elif cmd == "omega-edges":
        nodes = []
        for lv in range(args.levels + 1):
            nodes.extend(graph.level_nodes(p, lv))
        edge_rows = []
        for nd in nodes:
            for eps, target in graph.edges_from(p, nd.value):
                edge_rows.append((nd.value, "t" if eps > 0 else "t^-1", target))
        text = "\n".join(f"{x} {lab} {y}" for x, lab, y in edge_rows)
        _emit(
            args,
            out,
            text,
            {
                "nodes": [
                    {
                        "value": nd.value,
                        "kind": nd.kind,
                        "level": nd.level,
                        "dist_left": nd.dist_left,
                    }
                    for nd in nodes
                ],
                "edges": [[x, lab, y] for x, lab, y in edge_rows],
            },
        )
    elif cmd == "omega-dist":
        d = graph.shortest_path_len(p, args.x, args.y)
        _emit(args, out, str(d), {"distance": d})
    elif cmd == "orbit":
        val = invariants.orbit_order(p, parse_word(args.word))
        _emit(args, out, str(val), {"orbit_order": str(val)})
    elif cmd == "orbit-brute":
        val = cosets.orbit_order_bruteforce(p, parse_word(args.word), args.dmax)
        _emit(
            args,
            out,
            "none" if val is None else str(val),
            {"orbit_order": None if val is None else str(val)},
        )
    elif cmd == "ball":
        table = cosets.enumerate_ball(p, args.radius, budget=args.budget)
        if args.dot:
            with open(args.dot, "w") as fh:
                fh.write(cosets.export_dot(table))
        _emit(
            args,
            out,
            f"vertices {len(table.vertices)} edges {len(table.edges)} "
            f"boundary {len(table.boundary)}",
            table.as_dict(),
        )
    elif cmd == "census":
        census = cosets.orbit_census(p, args.radius, budget=args.budget)
        pairs = sorted(census.items())
        _emit(
            args,
            out,
            " ".join(f"{order}:{count}" for order, count in pairs),
            {"census": [[order, count] for order, count in pairs]},
        )
    elif cmd == "structure":
        word = parse_word(args.word) if args.word is not None else None
        rep = invariants.structure_report(p, word)
        d = rep.as_dict()
        text = "\n".join(
            [
                f"primes_vplus: {' '.join(map(str, rep.primes_vplus))}",
                f"primes_vminus: {' '.join(map(str, rep.primes_vminus))}",
                f"quotient_order_bound: {rep.quotient_order_bound}",
                f"flat_rank: {rep.flat_rank}",
                f"kernel_exponent: {rep.kernel_exponent}",
                f"swap_applied: {str(rep.swap_applied).lower()}",
                f"discrete: {str(rep.discrete).lower()}",
                f"quasi_centre: {rep.quasi_centre}",
            ]
        )
        _emit(args, out, text, d)
    elif cmd == "matrix":
        word = parse_word(args.word)
        mat = bs1n_matrix(p, word)
        neg, q, pos = bs1n_normal_form(p, word)
        rows = [[str(mat.top_left), str(mat.top_right)], ["0", "1"]]
        _emit(
            args,
            out,
            f"[[{rows[0][0]}, {rows[0][1]}], [0, 1]] | t^-{neg} a^{q} t^{pos}",
            {"matrix": rows, "p": neg, "q": q, "r": pos},
        )
    elif cmd == "scale-set":
        if args.rho_max < 0:
            raise _UsageError("--rho-max must be nonnegative")
        values = sorted(invariants.scale_value_set(p, args.rho_max))
        _emit(
            args,
            out,
            " ".join(str(v) for v in values),
            {"values": [str(v) for v in values]},
        )
    else:  # pragma: no cover - argparse enforces the choices
        raise _UsageError(f"unknown command {cmd!r}")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
