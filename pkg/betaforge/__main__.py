import argparse
import sys
from fractions import Fraction

from ovos_utils.log import LOG

from betaforge import codec
from betaforge.acceptance import AcceptanceSuite
from betaforge.configuration import CONFIGURATION, get_max_n
from betaforge.exceptions import BetaforgeError
from betaforge.files import atomic_write
from betaforge.plmaps import compose, counterexample_map, evaluate, invert, \
    validate_membership
from betaforge.representability import IMPOSSIBLE, INCONCLUSIVE, \
    decide_nonneg, verify_certificate
from betaforge.subdivision import context_from_string, enumerate_carets, \
    parse_coefficients
from betaforge.treepairs import compose_pairs, equivalent, reduce
from betaforge.treepairs.presentation import LTR, RTL, emit_presentation
from betaforge.treepairs.render import pair_to_dot, pair_to_text

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_IMPOSSIBLE = 3
EXIT_INCONCLUSIVE = 4

ROOT_WIDTH = Fraction(1, 10 ** 10)


def _context(coeffs):
    """a_1 .. a_n as separate arguments, or one polynomial like x^2+x-1."""
    return context_from_string(" ".join(coeffs))


def _read(path):
    with open(path) as f:
        return f.read()


def _output(text, path=None):
    if path:
        atomic_write(path, text)
        LOG.info("wrote " + path)
    else:
        sys.stdout.write(text)


def cmd_group(args):
    ctx = _context(args.coeffs)
    shapes = enumerate_carets(ctx, cap=args.cap)
    lines = ["polynomial: {}".format(ctx.poly),
             "root interval: {}".format(ctx.isolating_interval(ROOT_WIDTH)),
             "root: {}".format(ctx.beta),
             "reciprocal relation: {}".format(ctx.describe_reciprocal()),
             "caret shapes: {}".format(len(shapes))]
    lines += ["  {}".format(s) for s in shapes]
    _output("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_carets(args):
    ctx = _context(args.coeffs)
    shapes = enumerate_carets(ctx, cap=args.cap)
    _output(codec.dumps([[str(leg) for leg in s.legs] for s in shapes]))
    return EXIT_OK


def cmd_obstruct(args):
    ctx = _context(args.coeffs)
    p = parse_coefficients(args.vec)
    cert = decide_nonneg(ctx, p, max_n=args.max_n or get_max_n())
    _output(codec.dumps(codec.encode_certificate(cert, ctx, p)), args.out)
    LOG.info("{}: {}".format(ctx.poly, cert.kind))
    if cert.kind == IMPOSSIBLE:
        return EXIT_IMPOSSIBLE
    if cert.kind == INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_verify_cert(args):
    cert, ctx, p = codec.decode_certificate(codec.loads(_read(args.file)))
    ok = verify_certificate(ctx, p, cert)
    _output("{} certificate: {}\n".format(cert.kind,
                                          "valid" if ok else "INVALID"))
    return EXIT_OK if ok else EXIT_FAILED


def _load_map(path):
    return codec.decode_plmap(codec.loads(_read(path)))


def cmd_plmap(args):
    f = _load_map(args.map)
    if args.action == "compose" and not args.other:
        raise ValueError("compose needs a second map")
    if args.action == "compose":
        result = compose(f, _load_map(args.other))
        _output(codec.dumps(codec.encode_plmap(result)), args.out)
    elif args.action == "invert":
        _output(codec.dumps(codec.encode_plmap(invert(f))), args.out)
    elif args.action == "eval":
        value = evaluate(f, Fraction(args.point))
        interval = value.approx(Fraction(1, 10 ** args.digits))
        _output("f({}) in {}\n".format(args.point, interval))
    else:
        report = validate_membership(f, _context(args.group), args.module)
        lines = ["slopes: {}".format(", ".join(
            "?" if e is None else "beta^{}".format(e)
            for e in report.exponents)),
            "breakpoints ok: {}".format(report.breakpoints_ok)]
        lines += ["offending: {}".format(v) for v in report.offending]
        lines += report.diagnostics
        lines.append("member: {}".format(report.verdict))
        _output("\n".join(lines) + "\n")
        return EXIT_OK if report.verdict else EXIT_FAILED
    return EXIT_OK


def _load_pair(path):
    return codec.decode_treepair(codec.loads(_read(path)))


def cmd_treepair(args):
    pair = _load_pair(args.pair)
    if args.action in ("compose", "equiv") and not args.other:
        raise ValueError("{} needs a second pair".format(args.action))
    if args.action == "compose":
        result = compose_pairs(pair, _load_pair(args.other),
                               budget=args.budget)
        _output(codec.dumps(codec.encode_treepair(result)), args.out)
    elif args.action == "reduce":
        _output(codec.dumps(codec.encode_treepair(reduce(pair))), args.out)
    elif args.action == "equiv":
        same = equivalent(pair, _load_pair(args.other))
        _output("equivalent: {}\n".format(same))
        return EXIT_OK if same else EXIT_FAILED
    else:
        if args.format == "dot":
            text = pair_to_dot(pair)
        elif args.format == "json":
            text = codec.dumps(codec.encode_treepair(pair))
        else:
            text = pair_to_text(pair)
        _output(text, args.out)
    return EXIT_OK


def cmd_presentation(args):
    relations = emit_presentation(args.a, args.b, args.max_index,
                                  convention=args.convention)
    _output("".join("{}\n".format(r) for r in relations), args.out)
    return EXIT_OK


def cmd_counterexample(args):
    arrangement = None
    if args.domain or args.codomain:
        arrangement = ([int(t) for t in args.domain or ()],
                       [int(t) for t in args.codomain or ()])
    f = counterexample_map(args.a, args.b, arrangement)
    _output(codec.dumps(codec.encode_plmap(f)), args.out)
    return EXIT_OK


def cmd_verify_paper(args):
    suite = AcceptanceSuite(parallel=args.parallel)

    def report(result):
        _output("{:<28} {:<4} {:>7.2f}s  {}\n".format(
            result.name, "PASS" if result.passed else "FAIL",
            result.seconds, result.detail))

    suite.on("check:result", report)
    results = suite.run()
    failed = [r.name for r in results if not r.passed]
    if failed:
        LOG.error("failed: " + ", ".join(failed))
        return EXIT_FAILED
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="betaforge",
        description="exact computations in groups F_beta")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR",
                        default=CONFIGURATION["log_level"])
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("group", help="validate a subdivision polynomial")
    p.add_argument("coeffs", nargs="+", help="a_1 ... a_n")
    p.add_argument("--cap", type=int, help="caret enumeration cap")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("carets", help="list caret shapes as JSON")
    p.add_argument("coeffs", nargs="+", help="a_1 ... a_n")
    p.add_argument("--cap", type=int, help="caret enumeration cap")
    p.set_defaults(func=cmd_carets)

    p = sub.add_parser("obstruct",
                       help="decide nonnegative representability")
    p.add_argument("coeffs", nargs="+", help="a_1 ... a_n")
    p.add_argument("--vec", nargs="+", required=True,
                   help="coordinates in the basis lambda^(n-1) .. 1")
    p.add_argument("--max-n", type=int, help="iteration bound")
    p.add_argument("--out", help="certificate file")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("verify-cert", help="recheck a certificate file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("plmap", help="piecewise linear maps")
    p.add_argument("action", choices=["compose", "invert", "eval",
                                      "validate"])
    p.add_argument("map", help="map JSON file")
    p.add_argument("other", nargs="?", help="second map for compose")
    p.add_argument("--point", default="1/2", help="rational for eval")
    p.add_argument("--digits", type=int, default=12,
                   help="enclosure width 10^-digits for eval")
    p.add_argument("--group", nargs="+", default=["1", "1"],
                   help="group polynomial a_1 ... a_n for validate")
    p.add_argument("--module", default="auto",
                   choices=["auto", "nadic", "integral"])
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_plmap)

    p = sub.add_parser("treepair", help="tree pair diagrams")
    p.add_argument("action", choices=["compose", "reduce", "equiv",
                                      "render"])
    p.add_argument("pair", help="tree pair JSON file")
    p.add_argument("other", nargs="?", help="second pair")
    p.add_argument("--format", default="dot",
                   choices=["dot", "json", "text"])
    p.add_argument("--budget", type=int, help="caret insertion budget")
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_treepair)

    p = sub.add_parser("presentation", help="emit relations for ax^2+bx-1")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("max_index", type=int)
    p.add_argument("--convention", default=LTR, choices=[LTR, RTL])
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("counterexample",
                       help="map in F_sqrt(beta) outside F_beta")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--domain", nargs="+",
                   help="cell tokens: 2 deep, 1 shallow, 0 rest")
    p.add_argument("--codomain", nargs="+")
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify-paper", help="run the acceptance suite")
    p.add_argument("--parallel", action="store_true", default=None)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    LOG.set_level(args.log_level.upper())
    try:
        return args.func(args)
    except (BetaforgeError, ValueError, OSError) as e:
        LOG.error("{}: {}".format(type(e).__name__, e))
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
