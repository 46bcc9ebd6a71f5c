"""Command-line interface.

Subcommands: analyze, batch, classify, generate, syllables, plot, demo.
Machine-readable output goes to stdout, diagnostics to stderr.  Exit
codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from wordlength import __version__
from wordlength._backend import BACKEND_NAME
from wordlength.corpus import (
    ManifestEntry,
    analyze_corpus,
    analyze_text,
    classify,
    load_manifest,
    load_reference_table,
    read_results,
    write_results,
)
from wordlength.demo import build_demo_corpus
from wordlength.errors import WordlengthError
from wordlength.model import DEFAULT_LAMBDA1_MIN, ModelParams
from wordlength.plotting import PlotConfig, plot_plane
from wordlength.rules import load_rules, load_rules_file, tokenize, count_syllables
from wordlength.spectrum import build_rank_spectrum, write_spectrum_csv
from wordlength.synth import SynthConfig, generate_rank_spectrum, write_pseudo_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems via exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="wordlength",
                     description="Word-length spectrum analytics: fit the "
                                 "displaced-Poisson mixture and place texts "
                                 "in the I/alpha plane.")
    parser.add_argument("--version", action="version",
                        version=f"wordlength {__version__} ({BACKEND_NAME} backend)")
    parser.add_argument("--lambda1-min", type=float, default=DEFAULT_LAMBDA1_MIN,
                        help="floor of lambda1 (default %(default)s)")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("analyze", help="fit one text, print a JSON record")
    p.add_argument("file", type=Path)
    p.add_argument("--lang", required=True, help="language code or rule pack path")
    p.add_argument("--genre", default="", help="genre label for the record")
    p.add_argument("--spectrum", type=Path,
                   help="also dump the rank spectrum as CSV to this path")

    p = sub.add_parser("batch", help="analyze every text in a manifest")
    p.add_argument("manifest", type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("classify", help="nearest language/genre anchors for a point")
    p.add_argument("--i", required=True, type=float, dest="i_lang")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--table", type=Path, help="reference table override file")

    p = sub.add_parser("generate", help="emit a synthetic corpus")
    p.add_argument("--lambda0", required=True, type=float)
    p.add_argument("--lambda1", required=True, type=float)
    p.add_argument("--tokens", required=True, type=int)
    p.add_argument("--types", required=True, type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zipf-exponent", type=float, default=1.0)
    p.add_argument("--emit", choices=("spectrum", "text"), default="spectrum",
                   help="rank-spectrum CSV or plain-text pseudo-corpus")
    p.add_argument("--out", type=Path, help="output file (default stdout)")

    p = sub.add_parser("syllables", help="count syllables of a word")
    p.add_argument("word")
    p.add_argument("--lang", required=True, help="language code or rule pack path")

    p = sub.add_parser("plot", help="render a results file as an SVG scatter")
    p.add_argument("results", type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--ref-lang", help="draw a vertical line at this language's mean I")
    p.add_argument("--ref-genre", help="draw a horizontal line at this genre's mean alpha")
    p.add_argument("--i-max", type=float, default=1.0)
    p.add_argument("--alpha-max", type=float, default=1.0)

    p = sub.add_parser("demo", help="write the bundled synthetic demo corpus")
    p.add_argument("directory", type=Path)

    return parser


def _rules_for(lang: str):
    if lang.endswith(".rules") or "/" in lang:
        return load_rules_file(lang)
    return load_rules(lang)


def _fit_record(args) -> dict:
    rules = _rules_for(args.lang)
    entry = ManifestEntry(text_id=args.file.stem, path=args.file,
                          language=rules.language_code, genre=args.genre)
    result = analyze_text(entry, rules, args.lambda1_min)
    if result.error is not None:
        raise WordlengthError(result.error)
    return {
        "text_id": result.text_id,
        "language": result.language,
        "genre": result.genre,
        "n_tokens": result.n_tokens,
        "n_types": result.n_types,
        "lambda0": round(result.lambda0, 6),
        "lambda1": round(result.lambda1, 6),
        "lambda1_min": args.lambda1_min,
        "I": round(result.i_lang, 6),
        "alpha": round(result.alpha, 6),
        "chi_square": round(result.chi_square, 6),
        "dof": result.dof,
        "clipped": result.clipped,
        "unreliable": result.unreliable,
    }


def _cmd_analyze(args) -> int:
    record = _fit_record(args)
    if args.spectrum is not None:
        rules = _rules_for(args.lang)
        text = args.file.read_text(encoding="utf-8")
        spec = build_rank_spectrum(tokenize(text, rules, str(args.file)), rules)
        write_spectrum_csv(spec, args.spectrum)
    print(json.dumps(record, indent=2))
    return EXIT_OK


def _cmd_batch(args) -> int:
    entries = load_manifest(args.manifest)
    results = analyze_corpus(entries, lambda1_min=args.lambda1_min,
                             max_workers=args.workers)
    write_results(results, args.out, format=args.format)
    failed = sum(1 for r in results if r.error is not None)
    print(f"wrote {len(results)} results to {args.out}"
          + (f" ({failed} failed)" if failed else ""), file=sys.stderr)
    return EXIT_OK


def _cmd_classify(args) -> int:
    table = load_reference_table(args.table) if args.table else None
    res = classify(args.i_lang, args.alpha, table)
    print(f"{'|'.join(res.language_ties)} {'|'.join(res.genre_ties)}")
    print(f"I distance: {res.language_distance:.6f}")
    print(f"alpha distance: {res.genre_distance:.6f}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    params = ModelParams(lambda0=args.lambda0, lambda1=args.lambda1,
                         lambda1_min=args.lambda1_min)
    cfg = SynthConfig(params=params, n_tokens=args.tokens, n_types=args.types,
                      zipf_exponent=args.zipf_exponent, seed=args.seed)
    spec = generate_rank_spectrum(cfg)
    writer = write_spectrum_csv if args.emit == "spectrum" else write_pseudo_corpus
    if args.out is None:
        writer(spec, sys.stdout)
    else:
        writer(spec, args.out)
    return EXIT_OK


def _cmd_syllables(args) -> int:
    rules = _rules_for(args.lang)
    stream = tokenize(args.word, rules)
    if not stream.tokens:
        raise WordlengthError(f"{args.word!r} contains no word tokens")
    if len(stream.tokens) == 1:
        print(count_syllables(stream.tokens[0], rules))
    else:
        for token in stream.tokens:
            print(f"{token}\t{count_syllables(token, rules)}")
    return EXIT_OK


def _cmd_plot(args) -> int:
    results = read_results(args.results)
    cfg = PlotConfig(
        results=results,
        ref_language=args.ref_lang,
        ref_genre=args.ref_genre,
        i_range=(0.0, args.i_max),
        alpha_range=(0.0, args.alpha_max),
        output_path=args.out,
    )
    args.out.write_text(plot_plane(cfg), encoding="utf-8")
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_demo(args) -> int:
    manifest = build_demo_corpus(args.directory)
    print(manifest)
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "batch": _cmd_batch,
    "classify": _cmd_classify,
    "generate": _cmd_generate,
    "syllables": _cmd_syllables,
    "plot": _cmd_plot,
    "demo": _cmd_demo,
}


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            print("error: a subcommand is required", file=sys.stderr)
            return EXIT_USAGE
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WordlengthError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())
