"""Command-line interface.

Exit status: 0 on success, 1 when a check finds a violation or a search
finds nothing, 2 on usage or I/O errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from . import automata, carpi, constructions, morphisms, search, verify, words
from .io import format_codes, format_word, parse_codes, parse_word

EXIT_OK, EXIT_FOUND, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _load_dfa(args) -> automata.Dfa:
    if getattr(args, "dfa", None):
        return automata.from_json(_read_text(args.dfa))
    if args.i is None:
        raise CliError("either --dfa FILE or --i LEVEL (with --k/--base) is required")
    return automata.build_Di(parse_word(args.base), args.k, args.i)


def _occurrence(occ: words.Occurrence, w) -> str:
    if occ.exponent is None:
        what = "overlap"
    else:
        what = f"{occ.exponent}-power"
    return f"{what} at start {occ.start} period {occ.period}: {format_word(occ.factor(w))}"


# -- subcommands -------------------------------------------------------------

def cmd_gen_word(args) -> int:
    fam = args.family
    if fam == "thue-morse":
        if args.len is None:
            raise CliError("--len is required for thue-morse")
        w = morphisms.thue_morse_prefix(args.len)
    elif fam == "wi":
        w = constructions.build_w(parse_word(args.base), args.k, args.i)
    elif fam == "wi-prime":
        w = constructions.build_w_prime(parse_word(args.base), args.k, args.i)
    elif fam == "circ-squarefree":
        if args.len is None:
            raise CliError("--len is required for circ-squarefree")
        w = constructions.find_circularly_squarefree(args.len)
        if w is None:
            print(f"none: no circularly square-free ternary word of length {args.len}")
            return EXIT_FOUND
    else:  # simple-overlap
        if args.word is None:
            raise CliError("--word is required for simple-overlap")
        w = constructions.simple_overlap_from_square(parse_word(args.word))
    if args.cyc0:
        w = words.cyc(w, 0)
    print(format_word(w))
    if args.verbose:
        print(f"length {len(w)}", file=sys.stderr)
    return EXIT_OK


def cmd_gen_dfa(args) -> int:
    d = automata.build_Di(parse_word(args.base), args.k, args.i)
    _write_text(args.out, automata.to_json(d) + "\n")
    if args.out not in (None, "-"):
        print(f"wrote {d.state_count}-state DFA over {d.alphabet_size} letters to {args.out}")
    return EXIT_OK


def cmd_check(args) -> int:
    w = parse_word(args.word)
    kind = args.kind
    if kind == "primitive":
        ok = words.is_primitive(w)
        print("primitive" if ok else "not primitive")
        return EXIT_OK if ok else EXIT_FOUND
    if kind == "kpower":
        occ = words.find_kpower(w, args.k)
        if occ is None:
            print(f"{args.k}-power-free")
            return EXIT_OK
        print(_occurrence(occ, w))
        return EXIT_FOUND
    if kind == "overlap":
        occ = words.find_overlap(w)
        if occ is None:
            print("overlap-free")
            return EXIT_OK
        print(_occurrence(occ, w))
        return EXIT_FOUND
    if kind == "simple-power":
        ok = words.is_simple_kpower(w, args.k)
        print(f"simple {args.k}-power" if ok else f"not a simple {args.k}-power")
        return EXIT_OK if ok else EXIT_FOUND
    ok = words.is_circularly_squarefree(w)
    print("circularly square-free" if ok else "not circularly square-free")
    return EXIT_OK if ok else EXIT_FOUND


def _constraint(args) -> words.Constraint:
    if args.constraint == "overlap":
        return words.Constraint.overlap()
    return words.Constraint.kpower(args.k)


def cmd_search_shortest(args) -> int:
    d = _load_dfa(args)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(message)s")
    res = search.search_shortest_free(d, _constraint(args), args.max_len, args.threads)
    if res.word is None:
        print(f"none: no {_constraint(args)}-free accepted word of length <= {args.max_len}")
        return EXIT_FOUND
    print(format_word(res.word))
    print(f"length {len(res.word)}", file=sys.stderr)
    return EXIT_OK


def cmd_carpi(args) -> int:
    op = args.op
    if op == "phi":
        print(format_word(carpi.phi(parse_codes(args.word))))
    elif op == "phi-split":
        first, second = carpi.phi_split(parse_codes(args.word))
        print(f"{format_word(first)} {format_word(second)}")
    elif op == "invert":
        pre = carpi.invert_phi(parse_word(args.word), args.max_len)
        if not pre:
            print("none")
            return EXIT_FOUND
        for w in sorted(pre, key=lambda v: (len(v), v)):
            print(format_codes(w))
    elif op == "build-psi":
        psi = carpi.build_psi(_load_dfa(args), args.max_states)
        _write_text(args.out, automata.to_json(psi.dfa) + "\n")
        if args.out not in (None, "-"):
            print(f"wrote {psi.dfa.state_count}-state DFA over 25 letters to {args.out}")
    else:  # via-psi
        found = carpi.shortest_overlap_free_via_psi(_load_dfa(args), args.max_len)
        if found is None:
            print(f"none: no overlap-free image from preimages of length <= {args.max_len}")
            return EXIT_FOUND
        w, image = found
        print(format_word(image))
        print(f"preimage {format_codes(w)}", file=sys.stderr)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    d = _load_dfa(args)
    _write_text(args.out, automata.to_dot(d, hide_dead=not args.show_dead))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, args.max_len, args.long)
    for r in results:
        print(r.line())
        for ex in r.examples:
            print(f"#   counterexample {ex}")
    if args.suite in ("theorem7", "all"):
        print("# i\tstates\t|cyc0(w_i)|\tlog|w|/(log N)^2")
        for i, states, length, ratio in verify.growth_table():
            print(f"# {i}\t{states}\t{length}\t{ratio:.4f}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FOUND


# -- parser ------------------------------------------------------------------

def _add_family_args(p, require_level=True):
    p.add_argument("--k", type=int, default=3, help="repetition exponent (default 3)")
    p.add_argument("--base", default="01x3", help="base simple k-power w1 (default 01x3)")
    p.add_argument("--i", type=int, required=require_level, default=None, help="family level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powerfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-word", help="generate a word from one of the families")
    p.add_argument("--family", required=True,
                   choices=["thue-morse", "wi", "wi-prime", "circ-squarefree", "simple-overlap"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--base", default="01x3")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--len", type=int)
    p.add_argument("--word")
    p.add_argument("--cyc0", action="store_true", help="drop the last symbol")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_gen_word)

    p = sub.add_parser("gen-dfa", help="generate the automaton D_i as JSON")
    _add_family_args(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen_dfa)

    p = sub.add_parser("check", help="test a word for a repetition property")
    p.add_argument("--kind", required=True,
                   choices=["primitive", "kpower", "overlap", "simple-power", "circ-squarefree"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search-shortest", help="shortest repetition-free accepted word")
    p.add_argument("--dfa", help="DFA JSON file ('-' for stdin)")
    _add_family_args(p, require_level=False)
    p.add_argument("--constraint", choices=["kpower", "overlap"], default="kpower")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_search_shortest)

    p = sub.add_parser("carpi", help="Carpi map operations over the 25-letter alphabet")
    p.add_argument("op", choices=["phi", "phi-split", "invert", "build-psi", "via-psi"])
    p.add_argument("word", nargs="?", default="",
                   help="comma-separated codes (phi, phi-split) or a binary word (invert)")
    p.add_argument("--dfa", help="binary DFA JSON file (build-psi, via-psi)")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--max-states", type=int, default=1_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_carpi, i=None, k=3, base="01x3")

    p = sub.add_parser("export-dot", help="render a DFA as Graphviz")
    p.add_argument("--dfa", help="DFA JSON file")
    _add_family_args(p, require_level=False)
    p.add_argument("--show-dead", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=list(verify.SUITES), default="all")
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--long", action="store_true", help="include the i=3 shortest-word search")
    p.set_defaults(func=cmd_verify)
    return parser


def parse_command(argv: List[str]) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
