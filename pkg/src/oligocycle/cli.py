"""Command line interface emitting figure-ready CSV and JSON.

Exit codes: 0 on success, 2 for arguments outside an operation's domain,
3 for corrupt or inconsistent serialized data.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bits import bits_from_bytes, bytes_from_bits
from .capacity import binary_entropy, cap_fixed_length, cap_flexible, empirical_cap
from .codec import SCHEMES, EncodedBatch, decode_payload, encode_payload, rate_table
from .cost import CostParams, cost_at_capacity, minimize_over_alphabet, minimize_over_rho, rho_star
from .counting import brute_force_count, subsequence_count
from .errors import CorruptDataError, DomainError

_DNA = {1: "A", 2: "C", 3: "G", 4: "T"}


def _fmt(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_rows(columns: list[str], rows: list[tuple], fmt: str, path: str) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        _write_text(path, "\n".join(lines) + "\n")
    else:
        doc = [dict(zip(columns, row)) for row in rows]
        _write_text(path, json.dumps(doc, indent=2) + "\n")


def _parse_int_list(text: str, label: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"{label} must be a comma-separated list of integers") from exc
    if not values:
        raise DomainError(f"{label} must not be empty")
    return values


def _rho_grid(start: float, stop: float, step: float) -> list[float]:
    if step <= 0:
        raise DomainError("rho step must be positive")
    if not 0.0 <= start <= stop <= 1.0:
        raise DomainError("rho range must satisfy 0 <= start <= stop <= 1")
    grid = []
    k = 0
    while True:
        rho = start + k * step
        if rho > stop + 1e-12:
            break
        grid.append(min(rho, 1.0))
        k += 1
    return grid


def cmd_capacity(args: argparse.Namespace) -> int:
    if args.flexible:
        doc = {"q": args.q, "kind": "flexible", "cap": cap_flexible(args.q)}
    else:
        doc = {
            "q": args.q,
            "kind": "fixed-length",
            "rho": args.rho,
            "cap": cap_fixed_length(args.q, args.rho),
        }
    print(json.dumps(doc))
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    if args.oracle:
        print(brute_force_count(args.q, args.cycles, args.length))
    else:
        print(subsequence_count(args.q, args.cycles, args.length))
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    with open(args.infile, "rb") as handle:
        payload = bits_from_bytes(handle.read())
    batch = encode_payload(
        args.scheme,
        payload,
        q=args.q,
        rho=args.rho,
        depth=args.depth,
        oligo_length=args.oligo_length,
        block_symbols=args.block_symbols,
    )
    _write_text(args.out, batch.to_json() + "\n")
    if args.oligos_out:
        if args.dna:
            if args.q != 4:
                raise DomainError("DNA letters are only defined for q = 4")
            lines = ["".join(_DNA[s] for s in o.symbols) for o in batch.oligos]
        else:
            lines = [o.to_text() for o in batch.oligos]
        _write_text(args.oligos_out, "\n".join(lines) + ("\n" if lines else ""))
    summary = {
        "scheme": batch.scheme,
        "oligos": len(batch.oligos),
        "cycles": batch.spec.total_cycles,
        "payload_bits": batch.payload_bits,
    }
    print(json.dumps(summary))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    with open(args.infile, "r", encoding="utf-8") as handle:
        batch = EncodedBatch.from_json(handle.read())
    bits = decode_payload(batch)
    if len(bits) % 8:
        raise CorruptDataError("decoded payload is not byte aligned")
    data = bytes_from_bits(bits)
    with open(args.out, "wb") as handle:
        handle.write(data)
    print(json.dumps({"payload_bytes": len(data)}))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    qs = sorted(set(_parse_int_list(args.q_list, "--q-list")))
    grid = _rho_grid(args.rho_start, args.rho_stop, args.rho_step)
    curve = args.curve
    if curve == "cap-vs-rho":
        columns = ["q", "rho", "cap", "entropy"]
        rows = [
            (q, rho, cap_fixed_length(q, rho), binary_entropy(rho)) for q in qs for rho in grid
        ]
    elif curve == "rate-vs-rho":
        columns = ["q", "rho", "scheme", "rate", "cap"]
        rows = [
            (q, row.rho, row.scheme, row.rate, row.cap) for q in qs for row in rate_table(q, grid)
        ]
        rows.sort(key=lambda r: (r[0], r[1], r[2]))
    elif curve == "rho-star":
        columns = ["q", "rho_lower", "rho_star"]
        rows = [(q, 2.0 / (q + 1), rho_star(q)) for q in qs]
    elif curve == "cost-vs-rho":
        params = CostParams(args.alpha, args.beta, args.bits, args.cycles)
        columns = ["q", "rho", "cost"]
        rows = [
            (q, rho, cost_at_capacity(params, q, rho))
            for q in qs
            for rho in grid
            if 0.0 < rho < 1.0
        ]
    elif curve == "empirical-convergence":
        cycles_list = sorted(set(_parse_int_list(args.cycles_list, "--cycles-list")))
        columns = ["q", "rho", "cycles", "empirical", "cap"]
        rows = [
            (q, rho, c, empirical_cap(q, c, rho), cap_fixed_length(q, rho))
            for q in qs
            for rho in grid
            for c in cycles_list
        ]
    else:
        raise DomainError(f"unknown curve {curve!r}")
    _emit_rows(columns, rows, args.format, args.out)
    return 0


def cmd_cost(args: argparse.Namespace) -> int:
    params = CostParams(args.alpha, args.beta, args.bits, args.cycles)
    if args.max_q is not None:
        q, rho, value = minimize_over_alphabet(params, args.max_q)
    else:
        q = args.q
        rho, value = minimize_over_rho(params, q)
    doc = {
        "q": q,
        "rho_opt": rho,
        "cost_opt": value,
        "rho_lower": 2.0 / (q + 1),
        "rho_star": rho_star(q),
    }
    print(json.dumps(doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oligocycle",
        description="Cycle-budget capacity, encoders, and cost curves for cyclic synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capacity", help="closed-form capacity at one operating point")
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rho", type=float, help="oligo length per cycle")
    group.add_argument("--flexible", action="store_true", help="no length constraint")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("count", help="exact count of synthesizable oligos")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cycles", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="brute-force enumeration instead")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("encode", help="encode a file into an oligo batch")
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rho", type=float, help="target length ratio (lookup, multisize)")
    p.add_argument("--depth", type=int, help="window depth in revolutions (lookup)")
    p.add_argument("--oligo-length", type=int, help="symbols per oligo (multisize)")
    p.add_argument("--block-symbols", type=int, help="info symbols per oligo (base)")
    p.add_argument("--in", dest="infile", required=True, help="input file")
    p.add_argument("--out", required=True, help="batch JSON output path")
    p.add_argument("--oligos-out", help="also write one oligo per line")
    p.add_argument("--dna", action="store_true", help="write oligos as ACGT (q=4 only)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover a file from an oligo batch")
    p.add_argument("--in", dest="infile", required=True, help="batch JSON input path")
    p.add_argument("--out", required=True, help="output file")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("sweep", help="tabulate a curve over q and rho")
    p.add_argument(
        "--curve",
        choices=["cap-vs-rho", "rate-vs-rho", "rho-star", "cost-vs-rho", "empirical-convergence"],
        required=True,
    )
    p.add_argument("--q-list", required=True, help="comma-separated alphabet sizes")
    p.add_argument("--rho-start", type=float, default=0.05)
    p.add_argument("--rho-stop", type=float, default=0.95)
    p.add_argument("--rho-step", type=float, default=0.05)
    p.add_argument("--cycles-list", default="25,50,100,200", help="empirical-convergence only")
    p.add_argument("--alpha", type=float, default=1.0, help="cost per cycle (cost-vs-rho)")
    p.add_argument("--beta", type=float, default=1.0, help="cost per base (cost-vs-rho)")
    p.add_argument("--bits", type=float, default=1e6, help="workload bits (cost-vs-rho)")
    p.add_argument("--cycles", type=int, default=200, help="cycles per run (cost-vs-rho)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("cost", help="minimize synthesis cost over rho")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--bits", type=float, required=True)
    p.add_argument("--cycles", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=int)
    group.add_argument("--max-q", type=int)
    p.set_defaults(func=cmd_cost)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorruptDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
