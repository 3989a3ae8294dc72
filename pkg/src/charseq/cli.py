"""Command-line entry point: ``charseq {field,gen,lc,klc,verify}``.

Exit codes: 0 success / all checked pieces match, 1 violation or internal
engine disagreement, 2 invalid arguments or unmet hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexity import (FULL_ENUM_MAX_PERIOD, ComplexityProfile, HypothesisError,
                         default_budget, k_error_profile_enum, k_error_profile_full,
                         linear_complexity_bm, linear_complexity_gcd)
from .gf import FieldError
from .sequences import BinarySequence, SequenceSpec
from .verify import VIOLATION, verify_theorem


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _sign(text: str) -> int:
    if text not in ("+1", "1", "-1"):
        raise argparse.ArgumentTypeError("gamma sign must be +1 or -1")
    return int(text)


def _add_field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--modulus", type=_int_list, help="c0,...,cr (monic)")
    parser.add_argument("--alpha-index", type=int)
    gamma = parser.add_mutually_exclusive_group()
    gamma.add_argument("--gamma-sign", type=_sign)
    gamma.add_argument("--gamma-index", type=int, help="polynomial code of gamma")


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="sequence file (text or JSON)")
    source.add_argument("--stdin", action="store_true")


def _emit(obj, args, text_lines=None) -> None:
    if getattr(args, "format", "json") == "text" and text_lines is not None:
        print("\n".join(text_lines))
    else:
        print(json.dumps(obj, sort_keys=False))


def _gamma_of(args):
    if args.gamma_sign is not None:
        return "+1" if args.gamma_sign == 1 else "-1"
    if args.gamma_index is not None:
        return args.gamma_index
    return "default"


def _read_sequence(args) -> BinarySequence:
    text = sys.stdin.read() if args.stdin else open(args.input).read()
    try:
        if text.lstrip().startswith("{"):
            return BinarySequence.from_json(text)
        return BinarySequence.from_text(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed sequence input: {exc}")


def cmd_field(args) -> int:
    spec = SequenceSpec("character", args.p, args.r, modulus=args.modulus,
                        alpha_index=args.alpha_index, gamma=_gamma_of(args))
    f = spec.build_field()
    d = f.to_dict()
    _emit(d, args, [f"{k}: {v}" for k, v in d.items()])
    return 0


def cmd_gen(args) -> int:
    spec = SequenceSpec(args.kind, args.p, args.r, modulus=args.modulus,
                        alpha_index=args.alpha_index, gamma=_gamma_of(args),
                        d=args.d if args.kind == "indexed" else None)
    seq = spec.generate()
    out = seq.to_json() if args.format == "json" else seq.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def cmd_lc(args) -> int:
    s = _read_sequence(args)
    lc, char = linear_complexity_gcd(s)
    bm = linear_complexity_bm(s)
    d = {"period": s.period, "lc": lc, "characteristic_poly": char.to_hex(),
         "characteristic_degree": char.degree, "bm_crosscheck": bm}
    _emit(d, args, [f"period: {s.period}", f"lc: {lc}", f"bm: {bm}",
                    f"characteristic: {char.to_hex()} (degree {char.degree})"])
    if bm != lc:
        print(f"engine disagreement: gcd {lc} vs BM {bm}", file=sys.stderr)
        return 1
    return 0


def cmd_klc(args) -> int:
    s = _read_sequence(args)
    if not 0 <= args.k_max <= s.period:
        raise UsageError(f"--k-max must lie in [0, {s.period}]")
    method = args.method or ("full" if s.period <= FULL_ENUM_MAX_PERIOD else "enum")
    if method == "full":
        if s.period > FULL_ENUM_MAX_PERIOD:
            raise UsageError(f"full enumeration needs T <= {FULL_ENUM_MAX_PERIOD}")
        full = k_error_profile_full(s)
        profile = ComplexityProfile(full.period, full.entries[: args.k_max + 1])
    else:
        budget = args.budget if args.budget is not None else default_budget()
        profile = k_error_profile_enum(s, args.k_max, budget=budget, workers=args.workers)
    _emit(profile.to_dict(), args,
          [f"k={e.k} lc={e.lc} {e.method}" for e in profile.entries])
    return 0


def cmd_verify(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    if args.gamma_sign is not None:
        signs = [args.gamma_sign]
    elif args.theorem == 3:
        signs = [1]
    elif args.theorem == 4:
        signs = [-1]
    elif args.r == 2:
        signs = [1, -1]
    else:
        signs = [None]
    reports = [verify_theorem(args.theorem, args.p, args.r, sign, k_max=args.k_max,
                              budget=budget, workers=args.workers)
               for sign in signs]
    verdict = VIOLATION if any(r.verdict == VIOLATION for r in reports) else \
        "match" if all(r.verdict == "match" for r in reports) else "unchecked"
    d = {"theorem": args.theorem, "verdict": verdict,
         "reports": [r.to_dict(timing=args.timing) for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"theorem {r.theorem} p={args.p} r={args.r} "
                     f"chi(gamma)={r.parameters['chi_gamma']}: {r.verdict}")
        for pc in r.pieces:
            lines.append(f"  k in [{pc.k_lo}, {pc.k_hi}] {pc.kind} {pc.predicted}: "
                         f"{pc.verdict} {pc.measured}")
    _emit(d, args, lines)
    return 1 if verdict == VIOLATION else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charseq",
        description="Quadratic-character sequences over F_{p^r} and their "
                    "(k-error) linear complexity over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="print a field descriptor")
    _add_field_args(p_field)

    p_gen = sub.add_parser("gen", help="generate one period of a sequence")
    p_gen.add_argument("--kind", choices=["character", "indexed", "modified", "sidelnikov"],
                       default="character")
    _add_field_args(p_gen)
    p_gen.add_argument("--d", type=int, default=2)
    p_gen.add_argument("--output")

    p_lc = sub.add_parser("lc", help="linear complexity with BM cross-check")
    _add_input_args(p_lc)

    p_klc = sub.add_parser("klc", help="k-error linear complexity profile")
    _add_input_args(p_klc)
    p_klc.add_argument("--k-max", type=int, required=True)
    p_klc.add_argument("--method", choices=["enum", "full"])
    p_klc.add_argument("--budget", type=int)
    p_klc.add_argument("--workers", type=int, default=1)

    p_ver = sub.add_parser("verify", help="check a theorem instance")
    p_ver.add_argument("--theorem", type=int, choices=[1, 2, 3, 4], required=True)
    p_ver.add_argument("--p", type=int, required=True)
    p_ver.add_argument("--r", type=int, default=2)
    p_ver.add_argument("--gamma-sign", type=_sign)
    p_ver.add_argument("--k-max", type=int, default=3,
                       help="largest k searched when full enumeration is out of reach")
    p_ver.add_argument("--budget", type=int)
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--timing", action="store_true")

    for sp, default in ((p_field, "json"), (p_gen, "text"), (p_lc, "json"),
                        (p_klc, "json"), (p_ver, "json")):
        sp.add_argument("--format", choices=["json", "text"], default=default)
    return parser


COMMANDS = {"field": cmd_field, "gen": cmd_gen, "lc": cmd_lc, "klc": cmd_klc,
            "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, FieldError, HypothesisError, ValueError, OSError) as exc:
        print(f"charseq {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
