"""Command-line front end: generate objects and run verification suites."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Callable

from . import catalanz, cfseries, gf2sign, seq
from .errors import (NoConvergenceError, NonUnitError, SingularMinorError,
                     SizeGuardError)
from .report import VerifyReport

DEFAULT_SIZE = 256
DEFAULT_ORDER = 512

_SEQ_KINDS = {
    "s": (0, seq.s),
    "stilde": (0, seq.s_tilde),
    "ttilde": (0, seq.t_tilde),
    "mu": (0, seq.mu),
    "b0": (0, seq.b0),
    "d": (1, seq.d),
    "example1": (1, seq.example1_sign),
}

_TRI_KINDS = {
    "L": gf2sign.L, "M": gf2sign.M, "Ltilde": gf2sign.LTILDE,
    "Mtilde": gf2sign.MTILDE, "Ltilde0": gf2sign.LTILDE0,
    "Mtilde0": gf2sign.MTILDE0,
}
_BIG_KINDS = {
    "LZ": catalanz.LZ, "MZ": catalanz.MZ,
    "LtildeZ": catalanz.LTILDEZ, "MtildeZ": catalanz.MTILDEZ,
}


def _matrix_rows(mat) -> list[list[int]]:
    return [[int(v) for v in row] for row in mat]


def _emit_matrix(mat, fmt: str) -> str:
    rows = _matrix_rows(mat)
    if fmt == "json":
        return json.dumps(rows)
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in rows)
    width = max(len(str(v)) for row in rows for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row)
                     for row in rows)


def _emit_values(values: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(values)
    if fmt == "csv":
        return ",".join(str(v) for v in values)
    return " ".join(str(v) for v in values)


def _cmd_seq(args) -> int:
    start, fn = _SEQ_KINDS[args.kind]
    values = [fn(n) for n in range(start, start + args.count)]
    print(_emit_values(values, args.format))
    return 0


def _letter_str(letter: seq.FoldLetter) -> str:
    return f"{'-' if letter.sign < 0 else ''}x{letter.var_index}"


def _cmd_word(args) -> int:
    if (args.level is None) == (args.index is None):
        raise SystemExit(_usage_error("word needs exactly one of --level/--index"))
    if args.level is not None:
        letters = seq.fold_word(args.level)
    else:
        letters = [seq.fold_stream(args.index)]
    if args.format == "json":
        print(json.dumps([[let.var_index, let.sign] for let in letters]))
    else:
        joiner = "," if args.format == "csv" else " "
        print(joiner.join(_letter_str(let) for let in letters))
    return 0


def _cmd_matrix(args) -> int:
    if args.kind in _TRI_KINDS:
        mat = gf2sign.build_tri(_TRI_KINDS[args.kind], args.size)
    else:
        mat = catalanz.build_catalan_matrix(_BIG_KINDS[args.kind], args.size)
    print(_emit_matrix(mat, args.format))
    return 0


def _cmd_hankel(args) -> int:
    if args.source == "mu":
        mat = gf2sign.hankel_bits(gf2sign.MU_SHIFT0, args.size)
    elif args.source == "mu-shift":
        mat = gf2sign.hankel_bits(gf2sign.MU_SHIFT1, args.size)
    elif args.source == "catalan":
        mat = catalanz.build_catalan_matrix(catalanz.H_CAT, args.size)
    else:
        mat = catalanz.build_catalan_matrix(catalanz.H_CAT_SHIFT, args.size)
    print(_emit_matrix(mat, args.format))
    return 0


def _cmd_cf(args) -> int:
    series = cfseries.cf_limit_example(args.example, args.order)
    if args.format == "json":
        print(json.dumps(series.to_strings()))
    else:
        joiner = "," if args.format == "csv" else " "
        print(joiner.join(series.to_strings()))
    return 0


def _cmd_jacobi(args) -> int:
    cf = cfseries.stieltjes_extract(cfseries.mu_moments(), args.depth)
    a = [str(v) for v in cf.a]
    b = [str(v) for v in cf.b]
    if args.format == "json":
        print(json.dumps({"a": a, "b": b}))
    else:
        joiner = "," if args.format == "csv" else " "
        print("a: " + joiner.join(a))
        print("b: " + joiner.join(b))
    return 0


def _cmd_dets(args) -> int:
    moments = cfseries.mu_moments()
    values = [cfseries.hankel_det(moments, n) for n in range(1, args.max + 1)]
    print(_emit_values(values, args.format))
    return 0


def _cmd_unique(args) -> int:
    if (args.check is None) == (args.search is None):
        raise SystemExit(_usage_error("unique needs exactly one of --check/--search"))
    if args.check is not None:
        c = [int(tok) for tok in args.check.split(",")]
        result = cfseries.uniqueness_check(c)
        if args.format == "json":
            print(json.dumps({"pass": result.ok, "eps": result.eps,
                              "fail_index": result.fail_index,
                              "which": result.which}))
        elif result.ok:
            print("PASS eps=" + ",".join(str(e) for e in result.eps))
        else:
            print(f"FAIL n={result.fail_index} which={result.which}")
        return 0 if result.ok else 1
    survivors = cfseries.uniqueness_search(args.search)
    if args.format == "json":
        print(json.dumps([list(svr) for svr in survivors]))
    else:
        for svr in survivors:
            print(",".join(str(v) for v in svr))
    return 0


def _random_eps(rng: random.Random, n: int) -> list[int]:
    length = n.bit_length() + 1
    return [1] + [rng.choice((-1, 1)) for _ in range(length - 1)]


def _suite_runners(size: int, order: int,
                   seed: int) -> dict[str, Callable[[], VerifyReport]]:
    rng = random.Random(seed)

    def run_eps() -> VerifyReport:
        n = min(size, 64)
        report = VerifyReport("eps", n)
        for _ in range(10):
            report.merge(gf2sign.verify_eps(_random_eps(rng, n), n))
        return report

    def run_unique_search() -> VerifyReport:
        report = VerifyReport("unique-search", 8)
        survivors = set(cfseries.uniqueness_search(8))
        expected = set()
        for signs in ((a, b, c, d) for a in (-1, 1) for b in (-1, 1)
                      for c in (-1, 1) for d in (-1, 1)):
            cand = [0] * 8
            for k, sg in enumerate(signs):
                cand[(1 << k) - 1] = sg
            expected.add(tuple(cand))
        for extra in sorted(survivors - expected):
            report.add(0, 0, "not a survivor", list(extra))
        for missing in sorted(expected - survivors):
            report.add(0, 0, list(missing), "missing survivor")
        return report

    return {
        "thm1": lambda: cfseries.verify_thm1(),
        "thm2": lambda: gf2sign.verify_thm2(min(size, 4096)),
        "thm3": lambda: gf2sign.verify_thm3(size),
        "thm4": lambda: cfseries.verify_thm4(min(size, 48)),
        "thm5": lambda: gf2sign.verify_thm5(size),
        "mdl": lambda: gf2sign.verify_prop_mdl(size),
        "ml-lm": lambda: gf2sign.verify_prop_ml_lm(size),
        "babab": lambda: gf2sign.verify_babab(size),
        "lemma5": lambda: cfseries.verify_lemma5(4),
        "catalan-lu": lambda: catalanz.verify_catalan_lu(min(size, 64)),
        "exp-products": lambda: catalanz.verify_exp_products(min(size, 48)),
        "log-conjecture": lambda: catalanz.check_log_conjecture(min(size, 48)),
        "eps": run_eps,
        "dets": lambda: cfseries.verify_det_identities(min(size, 32)),
        "unique-search": run_unique_search,
    }


def _cmd_verify(args) -> int:
    runners = _suite_runners(args.size, args.order, args.seed)
    if args.suite != "all" and args.suite not in runners:
        raise SystemExit(_usage_error(f"unknown suite {args.suite!r}"))
    names = list(runners) if args.suite == "all" else [args.suite]
    results = []
    failed = False
    for name in names:
        t0 = time.perf_counter()
        report = runners[name]()
        elapsed_ms = int((time.perf_counter() - t0) * 1000)
        entry = report.as_dict()
        entry["elapsed_ms"] = elapsed_ms
        if args.order != DEFAULT_ORDER or name == "thm1":
            entry["order"] = args.order
        results.append(entry)
        if not report.ok and (args.strict or not report.conjecture):
            failed = True
    if args.format == "json":
        print(json.dumps(results if args.suite == "all" else results[0]))
    else:
        for entry in results:
            status = "pass" if entry["pass"] else "FAIL"
            tag = " (conjecture)" if entry.get("conjecture") else ""
            print(f"suite={entry['suite']} size={entry['size']} {status}{tag}")
            for f in entry["failures"][:20]:
                print(f"  ({f['i']},{f['j']}): expected {f['expected']}, "
                      f"got {f['got']}")
    return 1 if failed else 0


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldcat",
        description="Exact paperfolding / Catalan-mod-2 toolkit")
    parser.add_argument("--format", choices=("plain", "csv", "json"),
                        default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a named sequence prefix")
    p.add_argument("--kind", choices=sorted(_SEQ_KINDS), required=True)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("word", help="print a folding word or letter")
    p.add_argument("--level", type=int)
    p.add_argument("--index", type=int)
    p.set_defaults(fn=_cmd_word)

    p = sub.add_parser("matrix", help="print a triangular matrix")
    p.add_argument("--kind", choices=sorted(_TRI_KINDS) + sorted(_BIG_KINDS),
                   required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("hankel", help="print a Hankel matrix")
    p.add_argument("--source",
                   choices=("mu", "mu-shift", "catalan", "catalan-shift"),
                   required=True)
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(fn=_cmd_hankel)

    p = sub.add_parser("cf", help="continued-fraction limit of an example")
    p.add_argument("--example", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(fn=_cmd_cf)

    p = sub.add_parser("jacobi", help="Jacobi coefficients of the mu moments")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_jacobi)

    p = sub.add_parser("dets", help="Hankel determinants of mu")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(fn=_cmd_dets)

    p = sub.add_parser("unique", help="Hankel uniqueness check/search")
    p.add_argument("--check")
    p.add_argument("--search", type=int)
    p.set_defaults(fn=_cmd_unique)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True)
    p.add_argument("--size", type=int, default=DEFAULT_SIZE)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except SystemExit as exc:  # argparse usage errors and explicit exits
        return exc.code if isinstance(exc.code, int) else 2
    except (SizeGuardError, NonUnitError, SingularMinorError,
            NoConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
