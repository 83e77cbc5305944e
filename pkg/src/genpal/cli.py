"""Command-line surface: scan texts, verify engines against the brute-force
oracle, and benchmark scan linearity.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import bench as bench_mod
from . import oracle
from .core import CenterArray, Text, rank_compress
from .encodings import ComplementMap
from .rev_engine import MODELS, scan_rev
from .sym_engine import scan_sym


@dataclass
class ScanConfig:
    model: str
    definition: str = "rev"
    direction: str = "outward"
    input_source: str = "-"
    input_format: str = "raw"  # raw | fasta | tokens
    output_format: str = "tsv"
    complement_spec: str | None = None
    static_spec: str | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}")
        if self.definition not in ("rev", "sym"):
            raise ValueError(f"unknown definition {self.definition!r}")
        if self.direction not in ("outward", "inward"):
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.direction == "inward" and (
            self.model != "ct" or self.definition != "sym"
        ):
            raise ValueError("--direction inward requires --model ct --definition sym")

    def complement(self) -> ComplementMap:
        if not self.complement_spec:
            return ComplementMap.identity()
        return ComplementMap.from_spec(
            self.complement_spec, token_mode=self.input_format == "tokens"
        )

    def build_text(self, payload: str) -> Text:
        if self.input_format == "tokens":
            tokens = [int(v) for v in payload.split()]
            static = (
                [int(v) for v in self.static_spec.split(",") if v.strip()]
                if self.static_spec
                else []
            )
            if self.model in ("op", "ct"):
                return rank_compress(tokens, static)
            return Text.from_tokens(tokens, static)
        return Text.from_str(payload, static_chars=self.static_spec or "")


def parse_fasta(stream_text: str) -> list[tuple[str, str]]:
    """Minimal FASTA reader: ``>``-headed records, sequence lines joined."""
    records: list[tuple[str, list[str]]] = []
    for lineno, line in enumerate(stream_text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            rec_id = line[1:].split()[0] if line[1:].split() else ""
            if not rec_id:
                raise ValueError(f"FASTA record without an id at line {lineno}")
            records.append((rec_id, []))
        else:
            if not records:
                raise ValueError(f"FASTA sequence before any header at line {lineno}")
            records[-1][1].append(line)
    return [(rid, "".join(chunks)) for rid, chunks in records]


def _engine_array(
    text: Text, model: str, definition: str, direction: str, cmap: ComplementMap
) -> CenterArray:
    if definition == "rev":
        return scan_rev(text, model, complement=cmap)
    return scan_sym(text, model, direction, complement=cmap).lengths


def _result_rows(arr: CenterArray) -> list[tuple[int, int, int, int]]:
    return [(t, w.i, w.j, length) for t, w, length in arr.items()]


def cmd_scan(config: ScanConfig, out=None) -> int:
    config.validate()
    out = out if out is not None else sys.stdout
    cmap = config.complement()
    if config.input_source == "-":
        payload = sys.stdin.read()
    else:
        with open(config.input_source, "r", encoding="utf-8") as fh:
            payload = fh.read()
    if config.input_format == "fasta":
        records = parse_fasta(payload)
    else:
        records = [("", payload.rstrip("\n"))]
    results = []
    for rec_id, seq in records:
        text = config.build_text(seq)
        arr = _engine_array(text, config.model, config.definition, config.direction, cmap)
        results.append((rec_id, text.n, _result_rows(arr)))
    if config.output_format == "json":
        objs = []
        for rec_id, n, rows in results:
            obj = {
                "n": n,
                "model": config.model,
                "definition": config.definition,
                "direction": config.direction if config.definition == "sym" else None,
                "maximal": [
                    {"center2": t, "start": i, "end": j, "len": length}
                    for t, i, j, length in rows
                ],
            }
            if config.input_format == "fasta":
                obj["id"] = rec_id
            objs.append(obj)
        payload_out = objs if config.input_format == "fasta" else objs[0]
        json.dump(payload_out, out)
        out.write("\n")
    else:
        for rec_id, _n, rows in results:
            prefix = f"{rec_id}\t" if config.input_format == "fasta" else ""
            for t, i, j, length in rows:
                out.write(f"{prefix}{t}\t{i}\t{j}\t{length}\n")
    return 0


def _render(symbols: tuple[int, ...]) -> str:
    if symbols and all(32 <= s < 127 for s in symbols):
        return "".join(map(chr, symbols))
    if all(s < 26 for s in symbols):
        return "".join(chr(ord("a") + s) for s in symbols)
    return " ".join(map(str, symbols))


def run_verify(
    config: ScanConfig,
    max_n: int,
    cases: int,
    alphabet: int = 4,
    out=None,
    engine=_engine_array,
) -> int:
    """Compare the engine against the oracle on seeded random strings; on a
    mismatch, shrink to a minimal failing string and report it."""
    config.validate()
    out = out if out is not None else sys.stdout
    cmap = config.complement()
    kwargs = {"complement": cmap} if config.model == "theta" else {}

    def mismatch(symbols: tuple[int, ...]):
        text = Text.from_tokens(symbols)
        got = engine(text, config.model, config.definition, config.direction, cmap)
        want = oracle.maximal_array_bruteforce(
            symbols, config.model, config.definition, config.direction, **kwargs
        )
        return None if tuple(want) == got.lengths else (got.lengths, tuple(want))

    rng = np.random.default_rng(config.seed)
    for case in range(cases):
        n = int(rng.integers(0, max_n + 1))
        symbols = tuple(int(v) for v in rng.integers(0, max(1, alphabet), size=n))
        diff = mismatch(symbols)
        if diff is None:
            continue
        while True:  # greedy one-symbol shrink keeping the mismatch
            for k in range(len(symbols)):
                candidate = symbols[:k] + symbols[k + 1 :]
                smaller = mismatch(candidate)
                if smaller is not None:
                    symbols, diff = candidate, smaller
                    break
            else:
                break
        got, want = diff
        out.write(
            f"mismatch (case {case}, minimal string): {_render(symbols)}\n"
            f"  engine: {got}\n  oracle: {want}\n"
        )
        return 1
    out.write(f"verified {cases} cases (max n {max_n}, alphabet {alphabet}): OK\n")
    return 0


def cmd_bench(
    config: ScanConfig, sizes_spec: str, generator: str, out=None
) -> int:
    config.validate()
    out = out if out is not None else sys.stdout
    if config.definition != "rev":
        raise ValueError("bench covers the rev engines; use --definition rev")
    if generator not in ("random", "runs", "dna"):
        raise ValueError(f"unknown generator {generator!r}")
    lo_s, sep, hi_s = sizes_spec.partition("..")
    if not sep:
        raise ValueError("--sizes expects the form A..B")
    sizes = bench_mod.doubling_sizes(int(lo_s), int(hi_s))
    cmap = config.complement() if config.complement_spec else None
    records = bench_mod.run_ladder(
        config.model, generator, sizes, seed=config.seed, complement=cmap
    )
    out.write(bench_mod.format_report(config.model, generator, records) + "\n")
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", required=True, choices=MODELS)
    parser.add_argument("--definition", default="rev", choices=("rev", "sym"))
    parser.add_argument(
        "--direction", default="outward", choices=("outward", "inward")
    )
    parser.add_argument("--map", dest="map_spec", default=None,
                        help="complement pairs, e.g. A:T,C:G")
    parser.add_argument("--static", default=None,
                        help="static symbols for the parameterized model")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpal",
        description="maximal generalized palindromes under five matching models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_scan = sub.add_parser("scan", help="scan a text and print all maximal palindromes")
    _add_common(p_scan)
    p_scan.add_argument("--input", default="-", help="path or - for stdin")
    p_scan.add_argument("--format", default="tsv", choices=("tsv", "json"))
    p_scan.add_argument("--fasta", action="store_true")
    p_scan.add_argument("--tokens", action="store_true",
                        help="input is whitespace-separated integers")

    p_verify = sub.add_parser("verify", help="engine vs brute-force oracle")
    _add_common(p_verify)
    p_verify.add_argument("--max-n", type=int, default=64)
    p_verify.add_argument("--cases", type=int, default=200)
    p_verify.add_argument("--alphabet", type=int, default=4)

    p_bench = sub.add_parser("bench", help="linearity benchmark of the rev engines")
    _add_common(p_bench)
    p_bench.add_argument("--sizes", default="1024..65536", help="size range A..B, doubling")
    p_bench.add_argument("--gen", default="random", choices=("random", "runs", "dna"))
    return parser


def _config_from(args: argparse.Namespace) -> ScanConfig:
    return ScanConfig(
        model=args.model,
        definition=args.definition,
        direction=args.direction,
        input_source=getattr(args, "input", "-"),
        input_format=(
            "fasta"
            if getattr(args, "fasta", False)
            else "tokens"
            if getattr(args, "tokens", False)
            else "raw"
        ),
        output_format=getattr(args, "format", "tsv"),
        complement_spec=args.map_spec,
        static_spec=args.static,
        seed=args.seed,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        if args.command == "scan":
            if getattr(args, "fasta", False) and getattr(args, "tokens", False):
                raise ValueError("--fasta and --tokens are mutually exclusive")
            return cmd_scan(config)
        if args.command == "verify":
            return run_verify(config, max_n=args.max_n, cases=args.cases,
                              alphabet=args.alphabet)
        return cmd_bench(config, args.sizes, args.gen)
    except (ValueError, OSError) as exc:
        print(f"genpal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
