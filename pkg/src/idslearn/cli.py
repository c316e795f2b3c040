"""Command-line entry point: ``idslearn <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .automata import Dfa, minimize
from .bench import DEFAULT_BUDGET, BenchSpec, run_bench
from .equivalence import check_equiv
from .generators import derive_seed, iter_random_words, random_dfa, random_words
from .ids import Variant, learn_stream
from .teacher import Teacher

VARIANTS = [v.value for v in Variant]


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _align(a: Dfa, b: Dfa) -> Dfa:
    """Reorder ``b``'s symbols to match ``a``'s labels."""
    if a.labels == b.labels:
        return b
    if sorted(a.labels) != sorted(b.labels):
        raise ValueError(f"alphabets differ: {''.join(a.labels)!r} vs {''.join(b.labels)!r}")
    perm = [b.labels.index(c) for c in a.labels]
    return Dfa(b.num_states, b.alphabet_size, b.initial, b.finals,
               [[row[j] for j in perm] for row in b.transition], a.labels)


def cmd_learn(args) -> int:
    target = formats.read_dfa(args.target)
    teacher = Teacher(target)
    if args.words == "random":
        source = iter_random_words(target.alphabet_size, target.num_states, derive_seed(args.seed, 1))
        stop = lambda h: check_equiv(h.dfa, target).equivalent  # noqa: E731
    else:
        source = formats.read_words(args.words, target.labels)
        stop = None
    result = learn_stream(teacher, args.variant, source, stop=stop, budget=args.budget)
    verdict = check_equiv(result.hypothesis.dfa, target)
    stats = {
        "variant": args.variant,
        "mquery": result.stats.mquery,
        "bquery": result.stats.bquery,
        "time_ms": round(result.stats.elapsed_ms, 3),
        "strings_consumed": result.strings_consumed,
        "hypothesis_states": result.hypothesis.num_states,
        "generations": [g for g, _ in result.trace],
        "equivalent": verdict.equivalent,
    }
    if args.emit_hypothesis:
        formats.write_dfa(result.hypothesis.dfa, args.emit_hypothesis)
    if args.emit_stats:
        Path(args.emit_stats).write_text(json.dumps(stats, indent=2) + "\n")
    print(
        f"{args.variant}: {result.hypothesis.num_states} states, mquery={stats['mquery']} "
        f"bquery={stats['bquery']} equivalent={str(verdict.equivalent).lower()}"
    )
    return 0


def cmd_bench(args) -> int:
    spec = BenchSpec(
        state_sizes=args.sizes,
        trials_per_size=args.trials,
        alphabet_size=args.alphabet_size,
        variants=args.variants,
        base_seed=args.seed,
        query_budget=args.budget,
    )
    _emit(run_bench(spec, jobs=args.jobs), args.output)
    return 0


def cmd_gen_dfa(args) -> int:
    dfa = random_dfa(args.states, len(args.alphabet), args.seed)
    dfa = Dfa(dfa.num_states, dfa.alphabet_size, dfa.initial, dfa.finals, dfa.transition, tuple(args.alphabet))
    _emit(formats.format_dfa(dfa), args.output)
    return 0


def cmd_gen_strings(args) -> int:
    words = random_words(len(args.alphabet), args.max_len, args.count, args.seed)
    _emit(formats.format_words(words, args.alphabet), args.output)
    return 0


def cmd_check_equiv(args) -> int:
    a = formats.read_dfa(args.first)
    b = _align(a, formats.read_dfa(args.second))
    result = check_equiv(a, b)
    if result.equivalent:
        print("equivalent")
        return 0
    witness = a.decode(result.witness) or formats.EPSILON_TOKEN
    print(f"not equivalent; witness: {witness}")
    return 1


def cmd_minimize(args) -> int:
    _emit(formats.format_dfa(minimize(formats.read_dfa(args.dfa))), args.output)
    return 0


def _alphabet(text: str) -> str:
    if not text or len(set(text)) != len(text) or "#" in text or any(c.isspace() for c in text):
        raise argparse.ArgumentTypeError(f"alphabet must be distinct non-space characters, got {text!r}")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idslearn", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("learn", help="learn a target DFA with IDS")
    p.add_argument("--target", required=True, help="target DFA file")
    p.add_argument("--variant", choices=VARIANTS, default=Variant.PREFIX_CLOSED.value)
    p.add_argument("--words", default="random", help="word file, or 'random' to stream random words until equivalent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on mquery + bquery")
    p.add_argument("--emit-hypothesis", metavar="FILE")
    p.add_argument("--emit-stats", metavar="FILE")
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("bench", help="run the random-target experiment and write CSV")
    p.add_argument("--sizes", type=_int_list, default=list(range(5, 51, 5)))
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--variants", nargs="+", choices=VARIANTS, default=VARIANTS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen-dfa", help="write a random DFA")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet", type=_alphabet, default="ab")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen_dfa)

    p = sub.add_parser("gen-strings", help="write random non-empty words")
    p.add_argument("--alphabet", type=_alphabet, default="ab")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen_strings)

    p = sub.add_parser("check-equiv", help="exit 0 if two DFAs accept the same language, 1 otherwise")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_check_equiv)

    p = sub.add_parser("minimize", help="write the minimal DFA")
    p.add_argument("dfa")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_minimize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.FormatError, ValueError, OSError) as exc:
        print(f"idslearn: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
