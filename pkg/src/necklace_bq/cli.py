"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite finds a failure,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import List, Optional, TextIO

from . import maps
from .coloring import coproduct
from .dot import link_dot, quiver_dot
from .envelope import format_V
from .heightlink import LinkError, format_N, link_sort_key, link_str, normalize, normalize_link_random, parse_link
from .necklace import NecklaceError, bracket, cobracket, format_L, format_pairs, format_S, necklace_str
from .parse import ExpressionError, parse_element
from .quiver import Quiver, QuiverSyntaxError, jordan_quiver, parse_quiver
from .scalars import LinComb, ScalarSyntaxError
from .tensoralg import format_F
from .verify import SUITES, run_suite

# input kind, output kind
MAP_KINDS = {
    "q": ("N", "L"),
    "J": ("N", "F"),
    "p_h": ("N", "V"),
    "p_hbar": ("N", "S"),
    "p": ("N", "S"),
    "q_h": ("S", "S"),
    "q_hbar": ("V", "S"),
}

MAP_FUNCS = {
    "q": maps.q_map,
    "J": maps.J_map,
    "p_h": maps.p_h_map,
    "p_hbar": maps.p_hbar_map,
    "p": maps.p_map,
    "q_h": maps.q_h_map,
    "q_hbar": maps.q_hbar_map,
}

FORMATTERS = {"L": format_L, "S": format_S, "N": format_N, "F": format_F, "V": format_V}


class UsageError(Exception):
    pass


def _use_color(stream: TextIO) -> bool:
    mode = os.environ.get("NECKLACE_COLOR", "auto").lower()
    if mode == "never":
        return False
    if mode == "always":
        return True
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, stream: TextIO) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _use_color(stream) else text


def _load_quiver(path: Optional[str]) -> Quiver:
    if path is None:
        return jordan_quiver()
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_quiver(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read quiver file: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="necklace-bq", description="Necklace Lie bialgebras and their biquantization.")
    p.add_argument("--quiver", help="quiver file (default: the Jordan quiver)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", help="necklace bracket {x, y}")
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("cobracket", help="necklace cobracket ν(x)")
    s.add_argument("x")

    s = sub.add_parser("nq-mul", help="product x*y of height links")
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("nq-coproduct", help="iterated coproduct of a height-link element")
    s.add_argument("x")
    s.add_argument("--n", type=int, default=2, help="number of tensor factors")

    s = sub.add_parser("normalize", help="standard form of a height-link element")
    s.add_argument("x")
    s.add_argument("--schedule-seed", type=int, help="rewrite along a random schedule")

    s = sub.add_parser("map", help="apply one of the biquantization maps")
    s.add_argument("--which", required=True, choices=sorted(MAP_KINDS))
    s.add_argument("x")

    s = sub.add_parser("verify", help="run a seeded property suite and print a JSON report")
    s.add_argument("--suite", required=True, choices=list(SUITES))
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-edges", type=int, default=8)
    s.add_argument("--jobs", type=int, default=1, help="worker processes")

    s = sub.add_parser("emit-dot", help="Graphviz DOT for the quiver or a link")
    s.add_argument("what", choices=["quiver", "link"])
    s.add_argument("x", nargs="?")
    return p


def _coproduct_lines(q: Quiver, x: LinComb) -> List[str]:
    items = sorted(x.items(), key=lambda kv: tuple(link_sort_key(p) for p in kv[0]))
    return [f"{c} : " + " | ".join(link_str(q, p) for p in k) for k, c in items]


def _dispatch(args, q: Quiver, out: TextIO) -> int:
    cmd = args.command
    if cmd == "bracket":
        res = bracket(parse_element(q, "L", args.x), parse_element(q, "L", args.y))
        print(format_L(q, res), file=out)
    elif cmd == "cobracket":
        res = cobracket(parse_element(q, "L", args.x))
        print(format_pairs(q, res, necklace_str), file=out)
    elif cmd == "nq-mul":
        from .heightlink import n_product

        res = n_product(normalize(parse_element(q, "N", args.x)), normalize(parse_element(q, "N", args.y)))
        print(format_N(q, res), file=out)
    elif cmd == "nq-coproduct":
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        res = coproduct(normalize(parse_element(q, "N", args.x)), args.n)
        lines = _coproduct_lines(q, res)
        print("\n".join(lines) if lines else "0", file=out)
    elif cmd == "normalize":
        x = parse_element(q, "N", args.x)
        if args.schedule_seed is None:
            res = normalize(x)
        else:
            rng = random.Random(args.schedule_seed)
            res = LinComb()
            for k, c in x.items():
                res = res + normalize_link_random(k, rng).scale(c)
        print(format_N(q, res), file=out)
    elif cmd == "map":
        kin, kout = MAP_KINDS[args.which]
        res = MAP_FUNCS[args.which](parse_element(q, kin, args.x))
        print(FORMATTERS[kout](q, res), file=out)
    elif cmd == "verify":
        if args.samples < 0 or args.max_edges < 1 or args.jobs < 1:
            raise UsageError("--samples must be >= 0, --max-edges and --jobs >= 1")
        report = run_suite(args.suite, args.samples, args.seed, args.max_edges, args.jobs,
                           quiver=q if args.quiver else None)
        print(json.dumps(report, indent=2, ensure_ascii=False), file=out)
        status = _paint("PASS", "32", sys.stderr) if report["passed"] else _paint("FAIL", "31", sys.stderr)
        print(f"{args.suite}: {status} ({args.samples} samples, {report['seconds']}s)", file=sys.stderr)
        return 0 if report["passed"] else 1
    elif cmd == "emit-dot":
        if args.what == "quiver":
            out.write(quiver_dot(q))
        else:
            if args.x is None:
                raise UsageError("emit-dot link needs a link expression")
            out.write(link_dot(q, parse_link(q, args.x)))
    return 0


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        q = _load_quiver(args.quiver)
        return _dispatch(args, q, out)
    except (UsageError, QuiverSyntaxError, ExpressionError, NecklaceError, LinkError,
            ScalarSyntaxError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(_paint("error:", "31", sys.stderr) + f" {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
