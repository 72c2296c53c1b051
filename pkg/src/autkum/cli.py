"""Command-line front end.

Subcommands: verify (the full pipeline), gram (CSV export of the standard
intersection matrix), fiber (classify a divisor), conjugate (a conjugated
translation), witness (escape exponent of a Laurent set), supersingular
(deterministic supersingular parameter), schreier (stabilizer generators).
"""

from __future__ import annotations

import argparse
import sys

from . import fgcert
from .curvelattice import classify_fiber, gram_csv, kummer_config, parse_divisor
from .ellcurve import find_supersingular_lambda
from .errors import AutkumError
from .exactfield import parse_laurent
from .lineaction import affine_text, conjugate_generator
from .verifier import PipelineParams, emit_report, run_pipeline


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autkum",
        description="exact verification of the curve-lattice construction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the full verification pipeline")
    verify.add_argument("--p", type=int, default=3, help="odd prime characteristic")
    verify.add_argument("--depth", type=int, default=50, help="span staircase depth")
    verify.add_argument("--nmax", type=int, default=20, help="conjugation exponent range")
    verify.add_argument("--seed", type=int, default=0, help="seed for randomized subchecks")
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--out", default=None, help="write the report to a file")

    sub.add_parser("gram", help="print the 24-curve Gram matrix as CSV")

    fiber = sub.add_parser("fiber", help="classify a divisor as a singular fiber")
    fiber.add_argument("--divisor", required=True, help='e.g. "C + 2*C11 + E2 + 2*C12 + E3 + 2*C13 + 3*F1"')

    conj = sub.add_parser("conjugate", help="the translation by t**n")
    conj.add_argument("--n", type=int, required=True)
    conj.add_argument("--p", type=int, default=3)

    wit = sub.add_parser("witness", help="least power of t outside a Laurent span")
    wit.add_argument("--gens", required=True, help='comma-separated, e.g. "1, t, t^3"')
    wit.add_argument("--p", type=int, default=3)

    ss = sub.add_parser("supersingular", help="deterministic supersingular parameter")
    ss.add_argument("--p", type=int, required=True)

    sch = sub.add_parser("schreier", help="stabilizer generators of a permutation action")
    sch.add_argument("--gens", required=True, help='e.g. "a=(0 1); b=(0 1)"')
    sch.add_argument("--base", type=int, default=0)

    return parser


def _cmd_verify(args) -> int:
    params = PipelineParams(
        p=args.p, depth=args.depth, n_max=args.nmax, seed=args.seed, fmt=args.format
    )
    report = run_pipeline(params)
    payload = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0 if report.overall == "pass" else 1


def _cmd_gram(_args) -> int:
    sys.stdout.write(gram_csv(kummer_config()))
    return 0


def _cmd_fiber(args) -> int:
    cfg = kummer_config()
    divisor = parse_divisor(args.divisor, cfg)
    print(classify_fiber(cfg, divisor))
    return 0


def _cmd_conjugate(args) -> int:
    print(affine_text(conjugate_generator(args.n, args.p)))
    return 0


def _cmd_witness(args) -> int:
    vectors = [parse_laurent(part, args.p) for part in args.gens.split(",") if part.strip()]
    print(fgcert.escape_witness(vectors, args.p))
    return 0


def _cmd_supersingular(args) -> int:
    lam = find_supersingular_lambda(args.p)
    print(repr(lam))
    return 0


def _cmd_schreier(args) -> int:
    gens = fgcert.parse_permutations(args.gens)
    for word in fgcert.schreier_generators(gens, args.base):
        print(word.to_text())
    return 0


_HANDLERS = {
    "verify": _cmd_verify,
    "gram": _cmd_gram,
    "fiber": _cmd_fiber,
    "conjugate": _cmd_conjugate,
    "witness": _cmd_witness,
    "supersingular": _cmd_supersingular,
    "schreier": _cmd_schreier,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except AutkumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
