"""``qpoints`` command line.

Exit codes: 0 success, 1 domain error (zero scalar, invalid matrix, oracle
disagreement), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .components import (
    PointVariety,
    ProjectivePoint,
    brute_force_components,
    components,
    membership,
    recursive_components,
)
from .errors import ParseError, QPointsError
from .matrix import (
    Pool,
    delete_index,
    example_p3_matrix,
    localize,
    random_matrix,
    rank_one_from_weights,
    sign_matrix,
)
from .parser import format_matrix_file, parse_matrix_file, parse_scalar, variety_to_json
from .scalar import symbol

EXAMPLE_COMMENTS = (
    "four-variable example; for generic x the components are P(0,1,2), P(1,2,3), P(0,3)",
    "setting x = a*c makes the whole matrix rank one",
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: str | None = None
    json: bool = False
    max_components: int | None = None
    verify: bool = False
    threads: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.max_components is not None and self.max_components < 1:
            raise UsageError("--max-components must be at least 1")
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")


def render_text(v: PointVariety) -> str:
    lines = [f"P({','.join(map(str, c))})" for c in v.sorted_components()]
    lines.append(f"dimension = {v.dimension}")
    lines.append(f"full space: {'yes' if v.is_full_space else 'no'}")
    return "\n".join(lines) + "\n"


def _render_list(v: PointVariety) -> str:
    return " ".join(f"P({','.join(map(str, c))})" for c in v.sorted_components())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qpoints", description="Point-variety components of quantum polynomial algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("components", help="list the irreducible components")
    c.add_argument("file", help="matrix file, or - for standard input")
    c.add_argument("--json", action="store_true")
    c.add_argument("--max-components", type=int, default=None, metavar="K")
    c.add_argument("--verify", action="store_true", help="cross-check against both oracles")
    c.add_argument("--threads", type=int, default=1)

    m = sub.add_parser("membership", help="test whether a point lies on the point variety")
    m.add_argument("file")
    m.add_argument("--point", required=True, help="comma-separated coordinates, 0 for zero")

    for name, help_ in (("localize", "print the localized matrix"), ("delete", "print the matrix with an index removed")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file")
        s.add_argument("--at", type=int, required=True)

    v = sub.add_parser("verify", help="run all three component algorithms and compare")
    v.add_argument("file")

    g = sub.add_parser("gen", help="print a generated matrix file")
    g.add_argument("kind", choices=("sign", "rank1", "random"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--weights", default=None, help="comma-separated weights for rank1")
    g.add_argument("--max-denominator", type=int, default=Pool.max_denominator)
    g.add_argument("--symbols", type=int, default=Pool.symbols)
    g.add_argument("--fresh", action="store_true", help="one independent symbol per entry")

    sub.add_parser("example", help="print the built-in four-variable example")
    return p


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_point(text: str):
    coords = []
    for tok in text.split(","):
        tok = tok.strip()
        coords.append(None if tok == "0" else parse_scalar(tok))
    return ProjectivePoint(tuple(coords))


def _cmd_components(args, out: TextIO, stdin: TextIO) -> int:
    cfg = RunConfig("components", args.file, args.json, args.max_components, args.verify, args.threads)
    Q = parse_matrix_file(_read(cfg.source, stdin))
    v = components(Q, max_components=cfg.max_components, threads=cfg.threads)
    if cfg.verify:
        others = {"brute-force": brute_force_components(Q), "recursive": recursive_components(Q)}
        bad = {name: w for name, w in others.items() if w != v}
        if bad:
            out.write(f"disagreement\n  cliques: {_render_list(v)}\n")
            for name, w in bad.items():
                out.write(f"  {name}: {_render_list(w)}\n")
            return 1
    out.write(variety_to_json(v) + "\n" if cfg.json else render_text(v))
    return 0


def _cmd_membership(args, out: TextIO, stdin: TextIO) -> int:
    Q = parse_matrix_file(_read(args.file, stdin))
    p = _parse_point(args.point)
    out.write("in pts\n" if membership(Q, p) else "NOT in pts\n")
    return 0


def _cmd_reduce(args, out: TextIO, stdin: TextIO) -> int:
    Q = parse_matrix_file(_read(args.file, stdin))
    op = localize if args.command == "localize" else delete_index
    R, index_map = op(Q, args.at)
    mapping = " ".join(f"{old}->{new}" for old, new in sorted(index_map.items()))
    out.write(format_matrix_file(R, [f"{args.command} at {args.at}; index map {mapping}"]))
    return 0


def _cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    Q = parse_matrix_file(_read(args.file, stdin))
    results = {
        "cliques": components(Q),
        "brute-force": brute_force_components(Q),
        "recursive": recursive_components(Q),
    }
    for name, v in results.items():
        out.write(f"{name}: {_render_list(v)}\n")
    agree = len(set(results.values())) == 1
    out.write(f"agreement: {'yes' if agree else 'no'}\n")
    return 0 if agree else 1


def _cmd_gen(args, out: TextIO, stdin: TextIO) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.kind == "sign":
        Q = sign_matrix(args.n)
    elif args.kind == "rank1":
        if args.weights is None:
            weights = [symbol(f"w{k}") for k in range(args.n + 1)]
        else:
            weights = [parse_scalar(w) for w in args.weights.split(",")]
            if len(weights) != args.n + 1:
                raise UsageError(f"--weights needs {args.n + 1} values, got {len(weights)}")
        Q = rank_one_from_weights(weights)
    else:
        pool = Pool(max_denominator=args.max_denominator, symbols=args.symbols, fresh=args.fresh)
        Q = random_matrix(args.n, args.seed, pool)
    out.write(format_matrix_file(Q))
    return 0


def _cmd_example(args, out: TextIO, stdin: TextIO) -> int:
    out.write(format_matrix_file(example_p3_matrix(), EXAMPLE_COMMENTS))
    return 0


COMMANDS = {
    "components": _cmd_components,
    "membership": _cmd_membership,
    "localize": _cmd_reduce,
    "delete": _cmd_reduce,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "example": _cmd_example,
}


def run(argv: Sequence[str], stdout: TextIO | None = None, stdin: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return COMMANDS[args.command](args, stdout, stdin)
    except (UsageError, ParseError) as exc:
        stderr.write(f"qpoints: error: {exc}\n")
        return 2
    except QPointsError as exc:
        stderr.write(f"qpoints: {type(exc).__name__}: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
