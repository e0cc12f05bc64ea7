"""Command-line front end.

Graph files come in two dialects:

plain (0-indexed)::

    n m
    u v          (m lines)
    weights w0 ... w{n-1}   (optional)

DIMACS-like (1-indexed)::

    c comment
    p edge n m
    e u v        (m lines)
    n v w        (optional vertex weights)

Vertex ids in the output use the indexing of the input file.  Exit codes:
0 success, 1 input error, 2 certificate of non-membership.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import algorithms as alg
from .configurations import (
    DEFAULT_CAP, REPORT_KINDS, ClassId, ConfigKind, classes_of,
    configuration_inventory, contains_configuration,
)
from .elimination import EliminationCertificate, class_family, elimination_violation
from .errors import CertificateError, LexelimError
from .generators import ConfigParams, gen_chordal, gen_configuration, gen_random
from .graph import Graph, WeightedGraph, build_graph
from .lexbfs import lexbfs

EXIT_OK, EXIT_INPUT, EXIT_CERTIFICATE = 0, 1, 2


class ParseError(LexelimError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class GraphFile:
    weighted: WeightedGraph
    base: int  # 0 for the plain dialect, 1 for DIMACS

    @property
    def graph(self) -> Graph:
        return self.weighted.graph


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers in {what}") from None


def parse_graph(text: str) -> GraphFile:
    """Parse either dialect; errors carry 1-based line numbers."""
    lines = [(i, line.split()) for i, line in enumerate(text.splitlines(), 1)]
    lines = [(i, toks) for i, toks in lines if toks and toks[0] not in ("c", "#")]
    if not lines:
        raise ParseError(1, "empty graph file")
    if lines[0][1][0] == "p":
        return _parse_dimacs(lines)
    return _parse_plain(lines)


class _EdgeCollector:
    def __init__(self, n, base):
        self.n, self.base = n, base
        self.edges = []
        self.seen = set()

    def add(self, lineno, u, v):
        u -= self.base
        v -= self.base
        for x in (u, v):
            if not 0 <= x < self.n:
                raise ParseError(lineno, f"vertex {x + self.base} out of range")
        if u == v:
            raise ParseError(lineno, f"self-loop at {u + self.base}")
        key = (min(u, v), max(u, v))
        if key in self.seen:
            raise ParseError(lineno, f"duplicate edge {u + self.base} {v + self.base}")
        self.seen.add(key)
        self.edges.append(key)


def _check_counts(n, m, lineno):
    if n < 0 or m < 0:
        raise ParseError(lineno, "counts must be non-negative")


def _parse_plain(lines) -> GraphFile:
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n, m = _ints(head, lineno, "header")
    _check_counts(n, m, lineno)
    body = lines[1:]
    weights = None
    if body and body[-1][1][0] == "weights":
        wl, toks = body.pop()
        weights = _ints(toks[1:], wl, "weights")
        if len(weights) != n:
            raise ParseError(wl, f"expected {n} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise ParseError(wl, "weights must be non-negative")
    edges = _EdgeCollector(n, 0)
    for lineno, toks in body:
        if toks[0] == "weights":
            raise ParseError(lineno, "weights line must come last")
        if len(toks) != 2:
            raise ParseError(lineno, "edge line must be 'u v'")
        edges.add(lineno, *_ints(toks, lineno, "edge"))
    if len(edges.edges) != m:
        raise ParseError(lines[-1][0], f"header announces {m} edges, found {len(edges.edges)}")
    G = build_graph(n, edges.edges)
    return GraphFile(WeightedGraph(G, tuple(weights) if weights else (1,) * n), 0)


def _parse_dimacs(lines) -> GraphFile:
    lineno, head = lines[0]
    if len(head) != 4 or head[1] not in ("edge", "col"):
        raise ParseError(lineno, "header must be 'p edge n m'")
    n, m = _ints(head[2:], lineno, "header")
    _check_counts(n, m, lineno)
    edges = _EdgeCollector(n, 1)
    weights = [1] * n
    for lineno, toks in lines[1:]:
        tag = toks[0]
        if tag == "e" and len(toks) == 3:
            edges.add(lineno, *_ints(toks[1:], lineno, "edge"))
        elif tag == "n" and len(toks) == 3:
            v, w = _ints(toks[1:], lineno, "weight")
            if not 1 <= v <= n:
                raise ParseError(lineno, f"vertex {v} out of range")
            if w < 0:
                raise ParseError(lineno, "weights must be non-negative")
            weights[v - 1] = w
        else:
            raise ParseError(lineno, f"unrecognised line {' '.join(toks)!r}")
    if len(edges.edges) != m:
        raise ParseError(lines[-1][0], f"header announces {m} edges, found {len(edges.edges)}")
    return GraphFile(WeightedGraph(build_graph(n, edges.edges), tuple(weights)), 1)


def write_graph(G: Graph | WeightedGraph, dialect: str = "plain") -> str:
    """Serialise in either dialect; weights are written only when not all 1."""
    WG = G if isinstance(G, WeightedGraph) else WeightedGraph.unit(G)
    g = WG.graph
    unit = all(w == 1 for w in WG.weights)
    if dialect == "plain":
        out = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
        if not unit:
            out.append("weights " + " ".join(map(str, WG.weights)))
    elif dialect == "dimacs":
        out = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
        if not unit:
            out += [f"n {v + 1} {w}" for v, w in enumerate(WG.weights)]
    else:
        raise ValueError(f"unknown dialect {dialect!r}")
    return "\n".join(out) + "\n"


# --- commands -------------------------------------------------------------------

_CLASS_NAMES = {c.value.lower(): c for c in ClassId}
_CLASS_NAMES.update({c.name.lower().replace("_", ""): c for c in ClassId})


def _class_arg(text: str) -> ClassId:
    key = text.lower().replace("_", "").replace("-", "")
    if key not in _CLASS_NAMES:
        raise argparse.ArgumentTypeError(f"unknown class {text!r}")
    return _CLASS_NAMES[key]


def _ids(vs, base) -> str:
    return " ".join(str(v + base) for v in vs)


def _witness(vs, base) -> str:
    return ",".join(str(v + base) for v in sorted(vs))


def _print_certificate(cert, base, out):
    if isinstance(cert, EliminationCertificate):
        print(f"CERTIFICATE i={cert.position} W={_witness(cert.witness, base)}", file=out)
    else:
        where = f"i={cert.position}" if cert.position is not None else f"v={cert.vertex + base}"
        print(f"CERTIFICATE {where} W={_witness(cert.witness, base)}", file=out)
        print(f"{type(cert).__name__}: {cert}", file=sys.stderr)
    return EXIT_CERTIFICATE


def _load(path: str) -> GraphFile:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path) as fh:
        return parse_graph(fh.read())


def cmd_order(gf: GraphFile, args, out) -> int:
    G = gf.graph
    o = lexbfs(G, 0)
    print(_ids(o, gf.base), file=out)
    cert = elimination_violation(G, o, class_family(args.cls), args.cap)
    if cert is not None:
        return _print_certificate(cert, gf.base, out)
    print(f"ELIMINATION OK {args.cls}", file=out)
    return EXIT_OK


_ALGOS = {
    "chordal": lambda WG, a: alg.max_clique_chordal(WG),
    "ehf": lambda WG, a: alg.max_clique_ehf(WG),
    "c2": lambda WG, a: alg.max_clique_c2(WG),
    "c3": lambda WG, a: alg.max_clique_c3(WG, verify=a.verify),
    "c4": lambda WG, a: alg.max_clique_c4(WG, verify=a.verify),
    "c6": lambda WG, a: alg.max_clique_c6(WG, verify=a.verify),
    "brute": lambda WG, a: alg.max_clique_bruteforce(WG, cap=a.cap),
}


def cmd_clique(gf: GraphFile, args, out) -> int:
    res = _ALGOS[args.algo](gf.weighted, args)
    if isinstance(res, EliminationCertificate):
        return _print_certificate(res, gf.base, out)
    print(f"WEIGHT {res.weight}", file=out)
    print(f"CLIQUE {_ids(res.clique, gf.base)}".rstrip(), file=out)
    return EXIT_OK


def cmd_recognize(gf: GraphFile, args, out) -> int:
    G = gf.graph
    inventory = configuration_inventory(G, args.cap)
    for kind in REPORT_KINDS:
        if kind in inventory:
            w = contains_configuration(G, kind, args.cap)
            print(f"{kind} {_ids(w.vertices, gf.base)}", file=out)
    print("CLASSES: " + " ".join(str(c) for c in classes_of(G, args.cap)), file=out)
    return EXIT_OK


def cmd_color(gf: GraphFile, args, out) -> int:
    col = alg.color_universally_signable(gf.graph)
    print(f"COLORS {col.count}", file=out)
    for v, c in enumerate(col.color):
        print(f"{v + gf.base} {c}", file=out)
    return EXIT_OK


def cmd_generate(gf, args, out) -> int:
    kind, params = args.kind, args.params
    if kind in ("theta", "prism", "pyramid"):
        if len(params) != 3:
            raise ValueError(f"{kind} needs three path lengths")
        G, _ = gen_configuration(ConfigParams(ConfigKind(kind.capitalize()), tuple(int(x) for x in params)))
    elif kind == "wheel":
        if len(params) < 4:
            raise ValueError("wheel needs a rim length and at least three centre neighbours")
        G, _ = gen_configuration(ConfigParams(ConfigKind.WHEEL, rim=int(params[0]),
                                              center_nbrs=tuple(int(x) for x in params[1:])))
    elif kind == "random":
        if len(params) != 2:
            raise ValueError("random needs n and p")
        G = gen_random(int(params[0]), params[1], args.seed)
    else:
        if len(params) not in (1, 2):
            raise ValueError("chordal needs n and an optional density")
        density = params[1] if len(params) == 2 else "1/2"
        G = gen_chordal(int(params[0]), density, args.seed)
    out.write(write_graph(G))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for certificates here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexelim", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", help="LexBFS ordering verified against a class's family")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", type=_class_arg, default=ClassId.C8)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("clique", help="maximum weighted clique")
    p.add_argument("file")
    p.add_argument("--algo", choices=sorted(_ALGOS), default="ehf")
    p.add_argument("--verify", action="store_true", help="verify the elimination ordering first (c3, c4, c6)")
    p.add_argument("--cap", type=int, default=alg.BRUTE_FORCE_CAP)
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("recognize", help="Truemper configurations, holes and class membership")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("color", help="colouring for graphs without Truemper configurations")
    p.add_argument("file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("generate", help="write a generated graph in the plain dialect")
    p.add_argument("kind", choices=["theta", "prism", "pyramid", "wheel", "random", "chordal"])
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    gf = None
    try:
        if args.command != "generate":
            gf = _load(args.file)
        return args.func(gf, args, out)
    except CertificateError as exc:
        return _print_certificate(exc, gf.base, out)
    except (LexelimError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
