"""``maxcode`` command-line interface.

Exit status: 0 for yes / pass / converged, 1 for no / witness / cap reached,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from maxcode import automata as fa
from maxcode import operators as ops
from maxcode import order, stdprops, textio
from maxcode import transducer as td
from maxcode.errors import MaxcodeError

DEFAULT_TRACE_ENUM = 10


class _Fail(Exception):
    """Raised by a command to request exit status 1 after its output."""


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _show_language(lang: fa.Lang, args: argparse.Namespace) -> None:
    """Write the automaton to ``-o`` and list words on stdout.

    Without ``-o`` the automaton goes to stdout when the language is infinite
    and no ``--enum`` bound was given.
    """
    d = fa.determinize_minimize(lang)
    if args.output:
        Path(args.output).write_text(textio.format_automaton(d))
    if args.enum is not None:
        sys.stdout.write(textio.format_words(fa.enumerate_upto(d, args.enum)))
    elif fa.is_finite(d):
        sys.stdout.write(textio.format_words(fa.words(d)))
    elif not args.output:
        sys.stdout.write(textio.format_automaton(d))


def _universe(args: argparse.Namespace, alphabet: fa.Alphabet) -> fa.Lang:
    if args.universe_len is not None:
        return fa.sigma_length(alphabet, args.universe_len)
    if args.universe_maxlen is not None:
        return fa.sigma_upto(alphabet, args.universe_maxlen)
    if args.universe:
        return textio.load_language(args.universe, alphabet)
    return fa.sigma_star(alphabet)


def _instance(args: argparse.Namespace) -> ops.PropertyInstance:
    t = textio.read_transducer(args.transducer)
    return ops.PropertyInstance(t, _universe(args, t.alphabet))


# ---------------------------------------------------------------------------
# Commands


def cmd_build(args: argparse.Namespace) -> None:
    kind = args.kind
    if kind in ("tsub", "dsub"):
        if args.k is None:
            raise MaxcodeError(f"build {kind} needs K")
        t = stdprops.BUILDERS[kind](args.alphabet, args.k)
    else:
        if args.k is not None:
            raise MaxcodeError(f"build {kind} takes no K")
        t = stdprops.BUILDERS[kind](args.alphabet)
    _emit(textio.format_transducer(t), args.output)


def cmd_op(args: argparse.Namespace) -> None:
    t = textio.read_transducer(args.transducer)
    if args.op == "invert":
        result = td.invert(t)
    elif args.op == "power":
        if args.n is None:
            raise MaxcodeError("op power needs -n")
        result = td.power(t, args.n)
    else:
        if args.other is None:
            raise MaxcodeError(f"op {args.op} needs -s")
        s = textio.read_transducer(args.other)
        result = td.t_union(t, s) if args.op == "union" else td.compose(t, s)
    _emit(textio.format_transducer(result), args.output)


def cmd_apply(args: argparse.Namespace) -> None:
    t = textio.read_transducer(args.transducer)
    lang = textio.load_language(args.language, t.alphabet)
    _show_language(td.apply_lang(t, lang), args)


def cmd_ind(args: argparse.Namespace) -> None:
    p = _instance(args)
    _show_language(ops.ind(p, textio.load_language(args.language, p.alphabet)), args)


def cmd_mu(args: argparse.Namespace) -> None:
    p = _instance(args)
    _show_language(ops.mu(p, textio.load_language(args.language, p.alphabet)), args)


def cmd_embed(args: argparse.Namespace) -> None:
    p = _instance(args)
    trace = ops.mu_iterate(p, textio.load_language(args.language, p.alphabet), args.max_iter)
    if not trace.seed_independent:
        print("maxcode: warning: seed is not independent; maximality is not guaranteed", file=sys.stderr)
    if args.trace:
        directory = Path(args.trace)
        directory.mkdir(parents=True, exist_ok=True)
        bound = DEFAULT_TRACE_ENUM if args.enum is None else args.enum
        for i, it in enumerate(trace.iterates):
            (directory / f"mu{i}.fa").write_text(textio.format_automaton(it))
            listed = fa.words(it) if fa.is_finite(it) else fa.enumerate_upto(it, bound)
            (directory / f"mu{i}.txt").write_text(textio.format_words(listed))
    print(trace.status)
    _show_language(trace.final, args)
    if not trace.converged:
        raise _Fail


def cmd_check(args: argparse.Namespace) -> None:
    p = _instance(args)
    lang = textio.load_language(args.language, p.alphabet)
    if args.what == "independent":
        ok = ops.is_independent(p, lang)
        print("yes" if ok else "no")
    else:
        result = ops.is_maximal(p, lang)
        ok = result.ok
        print("yes" if ok else f"no\nwitness: {textio.format_word(result.witness)}")
    if not ok:
        raise _Fail


_VERIFIERS = {
    "altering": order.verify_input_altering,
    "decreasing": order.verify_input_decreasing,
    "transitive": order.verify_transitive,
}


def cmd_verify(args: argparse.Namespace) -> None:
    t = textio.read_transducer(args.transducer)
    result = _VERIFIERS[args.what](t, args.upto)
    if result:
        print("pass")
        return
    w = result.witness
    shown = " ".join(textio.format_word(x) for x in w) if isinstance(w, tuple) else textio.format_word(w)
    print(f"witness: {shown}")
    raise _Fail


def cmd_lang(args: argparse.Namespace) -> None:
    alphabet = fa.Alphabet.of(args.alphabet) if args.alphabet else None
    langs = [textio.load_language(s, alphabet) for s in args.languages]
    if args.what == "enumerate":
        if len(langs) != 1:
            raise MaxcodeError("lang enumerate takes one language")
        sys.stdout.write(textio.format_words(fa.enumerate_upto(langs[0], args.upto)))
        return
    if args.what == "empty":
        if len(langs) != 1:
            raise MaxcodeError("lang empty takes one language")
        ok = fa.is_empty(langs[0])
    else:
        if len(langs) != 2:
            raise MaxcodeError("lang equal takes two languages")
        ok = fa.equals(langs[0], langs[1])
    print("yes" if ok else "no")
    if not ok:
        raise _Fail


# ---------------------------------------------------------------------------
# Argument parsing


def _add_transducer(p: argparse.ArgumentParser) -> None:
    p.add_argument("-t", "--transducer", required=True, metavar="FILE", help="transducer file")


def _add_language(p: argparse.ArgumentParser) -> None:
    p.add_argument("-l", "--language", required=True, metavar="LANG", help="re:REGEX, words:W1,W2 or file:PATH")


def _add_universe(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("-m", "--universe", metavar="LANG", help="universe language (default: all words)")
    g.add_argument("--universe-len", type=int, metavar="N", help="universe = all words of length N")
    g.add_argument("--universe-maxlen", type=int, metavar="N", help="universe = all words of length <= N")


def _add_output(p: argparse.ArgumentParser, enum: bool = True) -> None:
    p.add_argument("-o", "--output", metavar="FILE", help="write the result to FILE")
    if enum:
        p.add_argument("--enum", type=int, metavar="N", help="list accepted words up to length N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxcode", description="Maximal embeddings of independent regular languages.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="emit a standard property transducer")
    p.add_argument("kind", choices=sorted(stdprops.BUILDERS))
    p.add_argument("k", nargs="?", type=int, help="number of errors for tsub/dsub")
    p.add_argument("--alphabet", default="01")
    _add_output(p, enum=False)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("op", help="transducer algebra")
    p.add_argument("op", choices=["invert", "union", "compose", "power"])
    _add_transducer(p)
    p.add_argument("-s", "--other", metavar="FILE", help="second transducer for union/compose")
    p.add_argument("-n", type=int, help="exponent for power (negative inverts)")
    _add_output(p, enum=False)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("apply", help="image t(L) of a language")
    _add_transducer(p)
    _add_language(p)
    _add_output(p)
    p.set_defaults(func=cmd_apply)

    for name, func, text in (("ind", cmd_ind, "ind(L)"), ("mu", cmd_mu, "one max-min step mu(L)")):
        p = sub.add_parser(name, help=text)
        _add_transducer(p)
        _add_language(p)
        _add_universe(p)
        _add_output(p)
        p.set_defaults(func=func)

    p = sub.add_parser("embed", help="iterate mu from a seed until it stabilizes")
    _add_transducer(p)
    _add_language(p)
    _add_universe(p)
    p.add_argument("--max-iter", type=int, default=ops.DEFAULT_MAX_ITER)
    p.add_argument("--trace", metavar="DIR", help="dump every iterate to DIR")
    _add_output(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("check", help="decide independence or maximality")
    p.add_argument("what", choices=["independent", "maximal"])
    _add_transducer(p)
    _add_language(p)
    _add_universe(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="bounded check of a transducer class")
    p.add_argument("what", choices=sorted(_VERIFIERS))
    _add_transducer(p)
    p.add_argument("--upto", type=int, default=order.DEFAULT_VERIFY_BOUND, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lang", help="language utilities")
    p.add_argument("what", choices=["equal", "empty", "enumerate"])
    p.add_argument("languages", nargs="+", metavar="LANG")
    p.add_argument("--alphabet", help="alphabet for re: and words: languages")
    p.add_argument("--upto", type=int, default=6, metavar="N")
    p.set_defaults(func=cmd_lang)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except _Fail:
        return 1
    except (MaxcodeError, OSError, ValueError) as exc:
        print(f"maxcode: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
