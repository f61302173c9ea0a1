"""Command-line front end. Every command prints exactly one JSON document.

Exit codes: 0 SAT/accept/pass/found, 1 UNSAT/reject/fail/absent,
2 usage or input error, 3 timeout or guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import catalog as cat
from .constructions import density_audit, random_construction
from .errors import GuardExceeded, InvalidCertificate, InvalidGraph, SearchTimeout
from .hypergraph import ThreeGraph
from .palette import PaletteCertificate, PropertyKind, solve, verify
from .palette.classify import classify
from .palette.solver import DEFAULT_MAX_VERTICES, DEFAULT_TIMEOUT_MS, threads_from_env
from .reduced import InvalidReducedGraph, ReducedThreeGraph, embeds, random_reduced

SCHEMA = 1
EXIT = {"SAT": 0, "accept": 0, "pass": 0, "found": 0, "ok": 0,
        "UNSAT": 1, "reject": 1, "fail": 1, "absent": 1,
        "error": 2, "timeout": 3, "guard": 3}


class UsageError(Exception):
    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail


@dataclass
class CommandResult:
    command: str
    status: str
    payload: object
    elapsed_ms: float = 0.0

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "status": self.status,
                "payload": self.payload, "elapsed_ms": round(self.elapsed_ms, 3)}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}", file=path) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}",
                         file=path, line=exc.lineno, column=exc.colno, offset=exc.pos) from exc


def load_graph(ref: str) -> ThreeGraph:
    """``name:<catalog spec>``, ``random:<n>:<seed>`` or a path to graph JSON."""
    try:
        if ref.startswith("name:"):
            return cat.from_spec(ref)
        if ref.startswith("random:"):
            _, n, seed = ref.split(":")
            return random_construction(int(n), int(seed))
        return ThreeGraph.from_dict(_read_json(ref))
    except (InvalidGraph, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad graph {ref!r}: {exc}") from exc


def _emit(doc: object, out: str | None) -> None:
    if out:
        Path(out).write_text(json.dumps(doc, indent=1) + "\n")


# commands -------------------------------------------------------------------

def cmd_catalog(args) -> CommandResult:
    if args.graph is None:
        return CommandResult("catalog", "ok", {"names": list(cat.NAMES)})
    return CommandResult("catalog", "ok", load_graph(args.graph).to_dict())


def cmd_check(args) -> CommandResult:
    F = load_graph(args.graph)
    res = solve(F, PropertyKind.parse(args.property), max_vertices=args.max_vertices,
                timeout_ms=args.timeout_ms, threads=args.threads)
    return CommandResult("check", res.status.value, res.to_dict())


def cmd_verify(args) -> CommandResult:
    F = load_graph(args.graph)
    try:
        cert = PaletteCertificate.from_dict(_read_json(args.certificate))
        verdict = verify(F, cert)
    except InvalidCertificate as exc:
        raise UsageError(f"invalid certificate: {exc}") from exc
    return CommandResult("verify", "accept" if verdict else "reject", verdict.to_dict())


def cmd_classify(args) -> CommandResult:
    F = load_graph(args.graph)
    report = classify(F, max_vertices=args.max_vertices, timeout_ms=args.timeout_ms,
                      threads=args.threads)
    return CommandResult("classify", "ok", report.to_dict())


def cmd_construct(args) -> CommandResult:
    if args.what == "random":
        doc = random_construction(args.n, args.seed).to_dict()
    else:
        doc = random_reduced(args.indices, args.class_size, args.edge_prob, args.seed).to_dict()
    _emit(doc, args.out)
    return CommandResult("construct", "ok", doc)


def cmd_audit(args) -> CommandResult:
    H = load_graph(args.graph)
    sizes = [int(s) for s in args.sizes.split(",") if s]
    try:
        audit = density_audit(H, args.d, args.mu, sizes, args.samples, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return CommandResult("audit", "pass" if audit.passed else "fail", audit.to_dict())


def cmd_embed(args) -> CommandResult:
    try:
        A = ReducedThreeGraph.from_dict(_read_json(args.reduced))
    except InvalidReducedGraph as exc:
        raise UsageError(f"invalid reduced graph: {exc}") from exc
    F = load_graph(args.target)
    w = embeds(A, F, all_orderings=args.all_orderings)
    if w is None:
        return CommandResult("embed", "absent", None)
    return CommandResult("embed", "found", w.to_dict())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="uniform-turan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def search_flags(sp):
        sp.add_argument("--graph", required=True, help="path to graph JSON, name:<catalog>, or random:<n>:<seed>")
        sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
        sp.add_argument("--timeout-ms", type=int, default=DEFAULT_TIMEOUT_MS)
        sp.add_argument("--threads", type=int, default=None, help="worker processes (fallback: TURAN_THREADS)")

    sp = sub.add_parser("catalog", help="list catalog names or print one graph")
    sp.add_argument("graph", nargs="?", help="e.g. name:wheel:6")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("check", help="search for a certificate of one kind")
    sp.add_argument("--property", required=True, choices=[k.value for k in PropertyKind])
    search_flags(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify", help="check a certificate against a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--certificate", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="bounds on the uniform Turan density")
    search_flags(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("construct", help="build a random construction or reduced graph")
    sp.add_argument("what", choices=["random", "reduced"])
    sp.add_argument("--n", type=int, default=50)
    sp.add_argument("--indices", type=int, default=6)
    sp.add_argument("--class-size", type=int, default=4)
    sp.add_argument("--edge-prob", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="also write the document to this file")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("audit", help="(d, mu)-density audit of a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--d", type=float, default=0.25)
    sp.add_argument("--mu", type=float, default=0.05)
    sp.add_argument("--sizes", default="50,100,150")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("embed", help="search a reduced graph for an embedding of F")
    sp.add_argument("--reduced", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--all-orderings", action="store_true")
    sp.set_defaults(func=cmd_embed)
    return p


def run(argv: list[str] | None = None) -> CommandResult:
    start = time.perf_counter()
    command = "?"
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        if getattr(args, "threads", 1) is None:
            args.threads = threads_from_env()
        result = args.func(args)
    except UsageError as exc:
        result = CommandResult(command, "error", {"error": str(exc), **exc.detail})
    except GuardExceeded as exc:
        result = CommandResult(command, "guard", {"error": str(exc)})
    except SearchTimeout as exc:
        result = CommandResult(command, "timeout", {"error": str(exc)})
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


def main(argv: list[str] | None = None) -> int:
    result = run(argv)
    if result.status in ("error", "guard", "timeout"):
        print(f"uniform-turan: {result.payload['error']}", file=sys.stderr)
    print(json.dumps(result.to_dict()))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
