"""Command line front end.

Exit status: 0 yes/valid, 1 no/invalid, 2 bad input, 3 state cap exceeded.
Errors go to stderr as a single ``error: <kind>: <message>`` line.
"""

from __future__ import annotations

import argparse
import sys

from . import generators, oracle, poly, reductions
from . import io as fmt
from .core import GraphError, WalkError, check_walk, is_covering, is_sound, validate_graph
from .exact import (MAX_STATES_ENV, StateLimitExceeded, exists_covering_sound_cycle,
                    exists_sound_cycle)

YES, NO, BAD_INPUT, RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    """A usage problem detected after argument parsing."""


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _valid_instance(text):
    g, d = fmt.load_instance(text)
    report = validate_graph(g)
    if report:
        raise GraphError(f"invalid graph: {report[0]}"
                         + (f" (+{len(report) - 1} more)" if len(report) > 1 else ""))
    return g, d


def _pipeline(G, stage, lift, binarize):
    """Apply the requested constructions; returns ``(graph, d, [(stage, trace)])``."""
    if stage == "pipeline":
        G = reductions.hc_to_promise(G)
    g, d, trace = reductions.promise_to_pdbg(G)
    return _post(g, d, [("pdbg", trace)], lift, binarize)


def _post(g, d, stages, lift, binarize):
    if lift and binarize:
        raise InputError("--lift and --binarize both need an order-1 graph; pick one")
    if lift:
        g, d, t = reductions.lift_k(g, d, lift)
        stages.append(("lift", t))
    if binarize:
        g, d, t = reductions.binarize(g, d)
        stages.append(("binarize", t))
    return g, d, stages


# -- commands -----------------------------------------------------------------------

def cmd_validate(args):
    g, d = fmt.load_instance(_read(args.instance))
    report = validate_graph(g)
    if not report:
        print(f"VALID k={g.k} d={d} vertices={len(g.vertices)} edges={len(g.edges)} "
              f"symbols={len(g.alphabet)}")
        return YES
    print(f"INVALID {len(report)} violation(s)")
    for v in report:
        print(f"  {v}")
    return NO


def cmd_solve(args):
    g, d = _valid_instance(_read(args.instance))
    if args.shift is not None:
        d = args.shift
    poly_ok = len(g.alphabet) == 1 or g.k == 0
    engine = args.engine
    if engine == "poly" and not poly_ok:
        raise InputError("the poly engine needs a one-symbol alphabet or k=0")
    if engine == "poly" and args.witness:
        raise InputError("the poly engine does not produce witnesses")
    if engine == "auto":
        engine = "poly" if poly_ok and not args.witness else "exact"
    tag = "COVERING-SOUND-CYCLE" if args.covering else "SOUND-CYCLE"
    if engine == "poly":
        found = poly.solve(g, d, args.covering)
        print(f"{tag}: {'yes' if found else 'no'}")
        return YES if found else NO
    finder = exists_covering_sound_cycle if args.covering else exists_sound_cycle
    w = finder(g, d, max_states=args.max_states)
    if w is None:
        print(f"{tag}: no")
        return NO
    print(f"{tag}: yes")
    print(f"length: {len(w)}")
    if args.witness:
        _write(args.witness, fmt.dump_cycle(w))
    return YES


def cmd_reduce(args):
    text = _read(args.input)
    kind = fmt.sniff(text)
    if kind == "ugraph":
        if args.stage is None:
            raise InputError("--stage is required for an undirected graph input")
        G = fmt.load_ugraph(text)
        if args.stage == "promise":
            if args.lift or args.binarize:
                raise InputError("--lift and --binarize need a paired graph stage")
            _write(args.output, fmt.dump_ugraph(reductions.hc_to_promise(G)))
            return YES
        g, d, stages = _pipeline(G, args.stage, args.lift, args.binarize)
    elif kind == "pdbg":
        if args.stage is not None:
            raise InputError("--stage applies to undirected graph input only")
        g, d = _valid_instance(text)
        g, d, stages = _post(g, d, [], args.lift, args.binarize)
    else:
        raise InputError(f"unrecognized input kind {kind!r}")
    _write(args.output, fmt.dump_instance(g, d))
    if args.trace:
        _write(args.trace, fmt.dump_traces(stages))
    return YES


def cmd_witness(args):
    G = fmt.load_ugraph(_read(args.graph))
    if args.hamcycle:
        c = fmt.load_hamcycle(_read(args.hamcycle), G)
    else:
        c = oracle.find_ham_cycle(G)
        if c is None:
            print("HAMILTONIAN-CYCLE: no")
            return NO
    if args.stage == "pipeline":
        c = reductions.promote_hc_witness(G, c)
        G = c.graph
    g, d, _ = reductions.promise_to_pdbg(G)
    w = reductions.build_witness_cycle(G, c)
    g, d, stages = _post(g, d, [], args.lift, args.binarize)
    for _, t in stages:
        w = t.transport(w)
    if not (is_sound(g, w) and is_covering(g, w)):
        raise RuntimeError("constructed witness failed its self-check")
    print(f"WITNESS: length={len(w)} d={w.shift} sound covering")
    _write(args.output, fmt.dump_cycle(w))
    return YES


def cmd_verify(args):
    g, _ = _valid_instance(_read(args.instance))
    w = fmt.load_cycle(_read(args.cycle))
    d = w.shift if args.shift is None else args.shift
    try:
        check_walk(g, w)
    except WalkError as exc:
        print(f"INVALID not a closed walk: {exc}")
        return NO
    if not is_sound(g, w, d):
        print(f"INVALID not sound for d={d}")
        return NO
    if args.covering and not is_covering(g, w):
        print("INVALID does not cover every edge")
        return NO
    print(f"VALID length={len(w)} d={d}" + (" covering" if args.covering else ""))
    return YES


def cmd_dot(args):
    g, _ = fmt.load_instance(_read(args.instance))
    _write(args.output, fmt.to_dot(g))
    return YES


def cmd_gen(args):
    if args.family == "random":
        g, d = generators.random_pdbg(args.seed)
        _write(args.output, fmt.dump_instance(g, d))
        return YES
    if args.family == "random_ugraph":
        G = generators.random_ugraph(args.seed, args.n)
    else:
        G = generators.FAMILIES[args.family](args.n)
    _write(args.output, fmt.dump_ugraph(G))
    return YES


# -- argument parsing -----------------------------------------------------------------

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: usage: {message}\n")
        raise SystemExit(BAD_INPUT)


def build_parser():
    p = _Parser(prog="pdbg", description="Paired de Bruijn graph sound cycles and reductions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check an instance file")
    s.add_argument("instance", help="instance file, or - for stdin")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("solve", help="decide whether a (covering) sound cycle exists")
    s.add_argument("instance")
    s.add_argument("--covering", action="store_true", help="require every edge on the cycle")
    s.add_argument("--engine", choices=("auto", "exact", "poly"), default="auto")
    s.add_argument("--max-states", type=_positive, default=None,
                   help=f"state cap for the exact engine (default ${MAX_STATES_ENV} or 10^7)")
    s.add_argument("--shift", "-d", type=_nonnegative, default=None,
                   help="override the shift stored in the instance")
    s.add_argument("--witness", "-w", help="write a found cycle to this file")
    s.set_defaults(run=cmd_solve)

    s = sub.add_parser("reduce", help="run the hardness constructions")
    s.add_argument("input", help="ugraph file, or an order-1 instance for --lift/--binarize")
    s.add_argument("--stage", choices=("promise", "pdbg", "pipeline"),
                   help="promise: doubled graph; pdbg: gadget from the input as is; "
                        "pipeline: doubling then gadget")
    s.add_argument("--lift", type=_positive, metavar="K", help="lift the result to order K")
    s.add_argument("--binarize", action="store_true", help="re-encode over {0,1}")
    s.add_argument("--output", "-o", default="-")
    s.add_argument("--trace", help="write the reduction trace (JSON) here")
    s.set_defaults(run=cmd_reduce)

    s = sub.add_parser("witness", help="build the sound cycle from a hamiltonian cycle")
    s.add_argument("graph", help="ugraph file")
    s.add_argument("hamcycle", nargs="?", help="hamcycle file (searched for when omitted)")
    s.add_argument("--stage", choices=("pdbg", "pipeline"), default="pdbg")
    s.add_argument("--lift", type=_positive, metavar="K")
    s.add_argument("--binarize", action="store_true")
    s.add_argument("--output", "-o", default="-")
    s.set_defaults(run=cmd_witness)

    s = sub.add_parser("verify", help="check a cycle file against an instance by definition")
    s.add_argument("instance")
    s.add_argument("cycle")
    s.add_argument("--shift", "-d", type=_nonnegative, default=None,
                   help="shift to check (default: the one in the cycle file)")
    s.add_argument("--covering", action="store_true")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("dot", help="export an instance as Graphviz DOT")
    s.add_argument("instance")
    s.add_argument("--output", "-o", default="-")
    s.set_defaults(run=cmd_dot)

    s = sub.add_parser("gen", help="emit a deterministic test instance")
    s.add_argument("--family", default="k3",
                   choices=sorted(generators.FAMILIES) + ["random", "random_ugraph"])
    s.add_argument("--n", type=_positive, default=3, help="size for the *_n families")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--output", "-o", default="-")
    s.set_defaults(run=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except StateLimitExceeded as exc:
        sys.stderr.write(f"error: resource: {exc}\n")
        return RESOURCE
    except fmt.FormatError as exc:
        sys.stderr.write(f"error: format: {exc}\n")
    except GraphError as exc:
        sys.stderr.write(f"error: graph: {exc}\n")
    except (InputError, ValueError) as exc:
        sys.stderr.write(f"error: input: {exc}\n")
    return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
