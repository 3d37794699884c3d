"""Command-line workbench for the codec.

Subcommands: encode, corrupt, decode, bench, selftest.  Exit status 0 on
success, 1 when decoding fails or a check does not hold, 2 on usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import contextlib
import random
import sys

from ..codec import (CodeParams, FailureCause, ReceivedWord,
                     decode_errors_only, decode_gao, decode_suggested,
                     decode_truong, encode)
from ..galois import DEFAULT_PRIMITIVE_POLYS, Field
from ..polynomial import Poly
from ..spectral import cyclotomic_quotient, interpolate_all, interpolate_subset
from . import blockio
from .bench import ComplexityClaimError, bench, format_report, write_csv
from .channel import ChannelSpec, corrupt
from .oracle import oracle_decode

ALGORITHMS = {
    "gao": decode_gao,
    "truong": decode_truong,
    "suggested": decode_suggested,
    "errors-only": None,  # handled separately: takes a plain vector
}

USAGE_ERROR = 2
DECODE_ERROR = 1


class UsageError(ValueError):
    pass


def _field_args(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--m", type=int, required=required,
                        help="extension degree of GF(2^m)")
    parser.add_argument("--prim-poly", type=_hex_int, default=None,
                        metavar="HEX", help="primitive polynomial bits, hex")
    parser.add_argument("--n", type=int, default=None,
                        help="block length; must equal 2^m - 1")
    parser.add_argument("--k", type=int, required=required,
                        help="message length")


def _hex_int(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex value: {text!r}") from None


def _io_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="infile", default="-", metavar="PATH",
                        help="input path, - for stdin")
    parser.add_argument("--out", dest="outfile", default="-", metavar="PATH",
                        help="output path, - for stdout")


def _params_from_args(args: argparse.Namespace) -> CodeParams:
    if args.m is None:
        raise UsageError("--m is required")
    field = Field(args.m, args.prim_poly)
    if args.n is not None and args.n != field.n:
        raise UsageError(f"--n {args.n} does not match 2^{args.m} - 1 = {field.n}")
    if args.k is None:
        raise UsageError("--k is required")
    return CodeParams(field, args.k)


def _check_params_match(args: argparse.Namespace, params: CodeParams) -> None:
    field = params.field
    if args.m is not None and args.m != field.m:
        raise UsageError(f"--m {args.m} does not match file header m = {field.m}")
    if args.k is not None and args.k != params.k:
        raise UsageError(f"--k {args.k} does not match file header k = {params.k}")
    if args.n is not None and args.n != params.n:
        raise UsageError(f"--n {args.n} does not match file header n = {params.n}")
    if args.prim_poly is not None and args.prim_poly != field.prim_poly:
        raise UsageError(f"--prim-poly 0x{args.prim_poly:x} does not match "
                         f"file header 0x{field.prim_poly:x}")


@contextlib.contextmanager
def _open_in(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path, "r") as handle:
            yield handle


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as handle:
            yield handle


def _cmd_encode(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    with _open_in(args.infile) as src:
        messages = blockio.read_messages(src, params)
    with _open_out(args.outfile) as dst:
        blockio.write_header(dst, params)
        for message in messages:
            blockio.write_block(dst, encode(params, message))
    return 0


def _parse_positions(text: str, t: int, l: int) -> tuple[tuple, tuple]:
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"bad --positions value: {text!r}") from None
    if len(values) != t + l:
        raise UsageError(
            f"--positions needs t + l = {t + l} entries, got {len(values)}")
    return values[:t], values[t:]


def _cmd_corrupt(args: argparse.Namespace) -> int:
    with _open_in(args.infile) as src:
        params, blocks = blockio.read_blocks(src)
    _check_params_match(args, params)
    error_positions = erasure_positions = None
    if args.positions is not None:
        error_positions, erasure_positions = _parse_positions(
            args.positions, args.t, args.l)
    rng = random.Random(args.seed)
    with _open_out(args.outfile) as dst:
        blockio.write_header(dst, params)
        for block in blocks:
            if block.erasures:
                raise UsageError("corrupt expects clean codeword blocks, "
                                 "found erasure marks")
            spec = ChannelSpec(t=args.t, l=args.l, seed=rng.getrandbits(32),
                               error_positions=error_positions,
                               erasure_positions=erasure_positions)
            received = corrupt(params, block.symbols, spec)
            blockio.write_block(dst, received.symbols, received.erasures)
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    with _open_in(args.infile) as src:
        params, blocks = blockio.read_blocks(src)
    _check_params_match(args, params)
    failures = 0
    with _open_out(args.outfile) as dst:
        for index, block in enumerate(blocks):
            if args.algorithm == "errors-only":
                if block.erasures:
                    print(f"block {index}: erasures present, "
                          f"errors-only cannot apply", file=sys.stderr)
                    failures += 1
                    continue
                result = decode_errors_only(params, block.symbols,
                                            self_check=args.self_check)
            else:
                decoder = ALGORITHMS[args.algorithm]
                result = decoder(params, block, self_check=args.self_check)
            if result.ok:
                dst.write(" ".join(str(s) for s in result.message) + "\n")
            else:
                print(f"block {index}: decode failed ({result.cause.value})",
                      file=sys.stderr)
                failures += 1
    return DECODE_ERROR if failures else 0


def _cmd_bench(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    try:
        report = bench(params, args.trials, l=args.l, t=args.t,
                       seed=args.seed, strict=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_report(report))
    if args.csv is not None:
        write_csv(report, args.csv)
        print(f"wrote {args.csv}")
    if args.l >= 1 and not report.claim_holds:
        print("claim violated: suggested exceeded truong on trials "
              f"{report.mult_violations + report.iteration_violations}",
              file=sys.stderr)
        return DECODE_ERROR
    return 0


def _selftest_checks(seed: int):
    rng = random.Random(seed)

    def radius_roundtrip() -> bool:
        params = CodeParams(Field(3), 3)
        pairs = [(t, l) for t in range(params.d) for l in range(params.d)
                 if 2 * t + l < params.d]
        for _ in range(120):
            message = tuple(rng.randrange(8) for _ in range(3))
            t, l = pairs[rng.randrange(len(pairs))]
            spec = ChannelSpec(t=t, l=l, seed=rng.getrandbits(32))
            received = corrupt(params, encode(params, message), spec)
            for decoder in (decode_gao, decode_truong, decode_suggested):
                if decoder(params, received).message != message:
                    return False
            if l == 0:
                if decode_errors_only(params, received.symbols).message != message:
                    return False
        return True

    def reduction_identity() -> bool:
        field = Field(4)
        n = field.n
        for _ in range(60):
            l = rng.randrange(n - 1)
            erased = sorted(rng.sample(range(n), l))
            values = [0 if i in set(erased) else rng.randrange(field.order)
                      for i in range(n)]
            locator = Poly.one(field)
            for pos in erased:
                locator = locator * Poly(field, [field.alpha_pow(pos), 1])
            full = interpolate_all(field, values)
            part = interpolate_subset(
                field, [(i, values[i]) for i in range(n) if i not in set(erased)])
            if full % cyclotomic_quotient(locator, n) != part:
                return False
        return True

    def degenerate_erasures() -> bool:
        params = CodeParams(Field(3), 3)
        message = (1, 5, 2)
        codeword = encode(params, message)
        wiped = ReceivedWord(codeword, erasures=tuple(range(params.d - 1)))
        over = ReceivedWord(codeword, erasures=tuple(range(params.d)))
        for decoder in (decode_gao, decode_truong, decode_suggested):
            if decoder(params, wiped).message != message:
                return False
            if decoder(params, over).cause is not FailureCause.DEGREE_OVERFLOW:
                return False
        return True

    def oracle_agreement() -> bool:
        params = CodeParams(Field(3), 3)
        for _ in range(40):
            message = tuple(rng.randrange(8) for _ in range(3))
            t, l = rng.choice([(2, 0), (1, 2), (0, 4), (1, 0)])
            spec = ChannelSpec(t=t, l=l, seed=rng.getrandbits(32))
            received = corrupt(params, encode(params, message), spec)
            expect = oracle_decode(params, received)
            for decoder in (decode_gao, decode_truong, decode_suggested):
                if decoder(params, received) != expect:
                    return False
        return True

    def count_claim() -> bool:
        params = CodeParams(Field(4), 7)
        try:
            report = bench(params, 10, l=2, t=2, seed=rng.getrandbits(32))
        except ComplexityClaimError:
            return False
        return report.claim_holds

    return [("radius roundtrip", radius_roundtrip),
            ("reduction identity", reduction_identity),
            ("degenerate erasures", degenerate_erasures),
            ("oracle agreement", oracle_agreement),
            ("count claim", count_claim)]


def _cmd_selftest(args: argparse.Namespace) -> int:
    status = 0
    for name, check in _selftest_checks(args.seed):
        if check():
            print(f"ok: {name}")
        else:
            print(f"FAIL: {name}")
            status = DECODE_ERROR
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rscodec",
        description="Reed-Solomon errors-and-erasures workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enc = sub.add_parser("encode", help="encode message lines into a block file")
    _field_args(p_enc, required=True)
    _io_args(p_enc)
    p_enc.set_defaults(handler=_cmd_encode)

    p_cor = sub.add_parser("corrupt", help="add errors and erasures to blocks")
    _field_args(p_cor, required=False)
    _io_args(p_cor)
    p_cor.add_argument("--t", type=int, default=0, help="error count")
    p_cor.add_argument("--l", type=int, default=0, help="erasure count")
    p_cor.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_cor.add_argument("--positions", default=None, metavar="LIST",
                       help="comma-separated positions: t error entries, "
                            "then l erasure entries")
    p_cor.set_defaults(handler=_cmd_corrupt)

    p_dec = sub.add_parser("decode", help="decode a block file to message lines")
    _field_args(p_dec, required=False)
    _io_args(p_dec)
    p_dec.add_argument("--algorithm", choices=sorted(ALGORITHMS),
                       default="suggested")
    p_dec.add_argument("--self-check", action="store_true",
                       help="re-encode and verify corrected positions")
    p_dec.set_defaults(handler=_cmd_decode)

    p_ben = sub.add_parser("bench", help="compare pipeline operation counts")
    _field_args(p_ben, required=True)
    p_ben.add_argument("--t", type=int, default=None,
                       help="error count; random within radius if omitted")
    p_ben.add_argument("--l", type=int, default=0, help="erasure count")
    p_ben.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_ben.add_argument("--trials", type=int, default=100)
    p_ben.add_argument("--csv", default=None, metavar="PATH",
                       help="write mean per-step counts as CSV")
    p_ben.set_defaults(handler=_cmd_bench)

    p_st = sub.add_parser("selftest", help="run built-in consistency checks")
    p_st.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_st.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.handler(args)
    except (UsageError, blockio.BlockFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def run() -> int:
    return main()


if __name__ == "__main__":
    sys.exit(main())
