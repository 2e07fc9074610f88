"""Command-line frontend: ``lip process|batch|goldens|bench|assets``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Sequence
from typing import Any, TextIO

from .assets import AssetError, default_assets, footprint_breakdown
from .bench import DEFAULT_CORPUS, bench, resident_probe
from .config import FLAG_NAMES, Config, ConfigError, load_config
from .goldens import DEFAULT_FIXTURES, run_goldens
from .pipeline import InputTooLarge, preprocess

FOOTPRINT_BUDGET = 3_723_000

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 already; keep the message short
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _flag_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("preprocessing flags")
    for name in FLAG_NAMES:
        group.add_argument(
            "--" + name.replace("_", "-"),
            dest=name,
            action=argparse.BooleanOptionalAction,
            default=None,
        )
    parent.add_argument("--config", help="JSON file with flag values")
    parent.add_argument("--assets", help="directory holding the dictionary files")
    return parent


def build_parser() -> argparse.ArgumentParser:
    flags = _flag_options()
    parser = _Parser(prog="lip", description="Rewrite chat messages into speakable text.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("process", parents=[flags], help="preprocess one message")
    p.add_argument("text", nargs="?", help="message text (read from stdin when omitted)")

    b = sub.add_parser("batch", parents=[flags], help="JSONL in on stdin, JSONL out on stdout")
    b.add_argument("--input", help="read JSONL from this file instead of stdin")

    g = sub.add_parser("goldens", parents=[flags], help="run the golden end-to-end cases")
    g.add_argument("--fixtures", default=str(DEFAULT_FIXTURES))

    n = sub.add_parser("bench", parents=[flags], help="latency percentiles per length bucket")
    n.add_argument("--corpus", default=str(DEFAULT_CORPUS))
    n.add_argument("--iters", type=int, default=10_000)
    n.add_argument("--warmup", type=int, default=200)

    a = sub.add_parser("assets", parents=[flags], help="on-disk footprint of the dictionaries")
    a.add_argument("--resident", action="store_true", help="also measure heap growth while loading")
    return parser


def _config_from(args: argparse.Namespace, env: dict[str, str]) -> Config:
    overrides: dict[str, Any] = {name: getattr(args, name) for name in FLAG_NAMES}
    overrides["asset_dir"] = args.assets
    return load_config(args.config, env, overrides)


def _process(args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO) -> int:
    text = args.text if args.text is not None else stdin.read().rstrip("\n")
    print(preprocess(text, config).tts_text, file=out)
    return EXIT_OK


def _batch_line(line: str, number: int, config: Config) -> dict[str, Any]:
    try:
        item = json.loads(line)
    except json.JSONDecodeError as exc:
        return {"line": number, "error": f"invalid JSON: {exc.msg}"}
    if not isinstance(item, dict) or not isinstance(item.get("text"), str):
        return {"line": number, "id": item.get("id") if isinstance(item, dict) else None,
                "error": "expected an object with a string 'text' field"}
    try:
        result = preprocess(item["text"], config)
    except InputTooLarge as exc:
        return {"line": number, "id": item.get("id"), "error": str(exc)}
    return {
        "id": item.get("id"),
        "tts_text": result.tts_text,
        "have_char": result.have_char,
        "emoji_count": result.unique_emoji_count,
    }


def _batch(args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO) -> int:
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        else:
            lines = stdin.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"lip batch: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for number, line in enumerate(lines, start=1):
        out.write(json.dumps(_batch_line(line, number, config), ensure_ascii=False) + "\n")
    return EXIT_OK


def _goldens(args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO) -> int:
    start = time.perf_counter()
    try:
        results = run_goldens(args.fixtures, config)
    except (OSError, ValueError, TypeError) as exc:
        print(f"lip goldens: cannot load fixtures: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.case.id}", file=out)
        if not r.passed:
            print(f"  expected: {r.case.expected}", file=out)
            print(f"  actual:   {r.actual}", file=out)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} passed in {elapsed:.3f}s", file=out)
    return EXIT_OK if passed == len(results) else EXIT_FAILED


def _bench(args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO) -> int:
    try:
        reports = bench(args.corpus, args.iters, config, warmup=args.warmup)
    except (OSError, ValueError) as exc:
        print(f"lip bench: {exc}", file=sys.stderr)
        return EXIT_USAGE
    json.dump([r.to_dict() for r in reports], out, indent=2)
    out.write("\n")
    return EXIT_OK


def _assets(args: argparse.Namespace, config: Config, out: TextIO, stdin: TextIO) -> int:
    bundle = default_assets(config.asset_dir)
    sizes = footprint_breakdown(bundle)
    width = max(len(name) for name in sizes)
    for name, size in sizes.items():
        print(f"{name:<{width}}  {size:>10,d} bytes", file=out)
    total = sum(sizes.values())
    verdict = "within" if total <= FOOTPRINT_BUDGET else "OVER"
    print(f"{'total':<{width}}  {total:>10,d} bytes ({verdict} budget of {FOOTPRINT_BUDGET:,d})", file=out)
    if args.resident:
        print(f"resident heap while loading: {resident_probe(config.asset_dir):,d} bytes", file=out)
    return EXIT_OK


_COMMANDS = {
    "process": _process,
    "batch": _batch,
    "goldens": _goldens,
    "bench": _bench,
    "assets": _assets,
}


def run_cli(
    argv: Sequence[str] | None = None,
    env: dict[str, str] | None = None,
    out: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = _config_from(args, dict(os.environ) if env is None else env)
        return _COMMANDS[args.command](args, config, out, stdin)
    except (ConfigError, AssetError) as exc:
        print(f"lip: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputTooLarge as exc:
        print(f"lip: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
