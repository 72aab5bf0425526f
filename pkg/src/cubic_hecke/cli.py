"""Command-line front end.

Exit status: 0 success, 1 precondition error, 2 numeric guard, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import cache
from .eisenstein import InputTooLarge, ResourceLimit, format_eis, norm, parse_eis
from .lfunctions import NumericGuardError

EXIT_OK, EXIT_PRECONDITION, EXIT_GUARD, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    cache_dir: str | None = None
    threads: int = 1
    output: str | None = None
    format: str = "json"


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def _number(text: str) -> float:
    return float(text)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output and cfg.output != "-":
        with open(cfg.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cx(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


# ---------------------------------------------------------------- commands


def cmd_sieve(cfg: RunConfig, a) -> int:
    from .primes import family_array, family_to_csv

    rows = family_array(a.limit, split_only=a.split_only)
    _emit(cfg, family_to_csv(rows))
    return EXIT_OK


def cmd_symbol(cfg: RunConfig, a) -> int:
    from .symbols import symbol

    x, n = parse_eis(a.a), parse_eis(a.n)
    v = symbol(x, n)
    _emit(cfg, json.dumps({"a": format_eis(x), "n": format_eis(n), "value": str(v), "exponent": v.code()}))
    return EXIT_OK


def cmd_gauss(cfg: RunConfig, a) -> int:
    from .gauss import gauss_sum

    k, n = parse_eis(a.k), parse_eis(a.n)
    g = gauss_sum(k, n).value
    _emit(cfg, json.dumps({"k": format_eis(k), "n": format_eis(n), "value": _cx(g), "abs2_over_norm": abs(g) ** 2 / norm(n)}))
    return EXIT_OK


def cmd_gauss_batch(cfg: RunConfig, a) -> int:
    from .gauss import gauss_csv, gauss_table, gauss_table_cached
    from .primes import primary_prime_table

    if cfg.threads > 1 and not a.family:
        rows = primary_prime_table(a.limit, workers=cfg.threads)
        _emit(cfg, gauss_csv(rows, gauss_table(rows)))
        return EXIT_OK
    rows, g = gauss_table_cached(int(a.limit), family_only=a.family)
    _emit(cfg, gauss_csv(rows, g))
    return EXIT_OK


def cmd_lvalue(cfg: RunConfig, a) -> int:
    from .lfunctions import completed_L, hecke_L, make_handle

    h = make_handle(parse_eis(a.pi), "Q" if a.q_side else "K", conjugate=a.conj)
    s = a.s
    out = {
        "pi": format_eis(h.character.pi),
        "side": h.side,
        "conjugate": h.conjugate,
        "s": _cx(s),
        "mode": a.mode,
        "L": _cx(hecke_L(h, s, a.mode)),
        "root_number": _cx(h.root_number),
    }
    if s.imag != 0 or s.real > 0:
        out["Lambda"] = _cx(completed_L(h, s))
    _emit(cfg, json.dumps(out, indent=2))
    return EXIT_OK


def cmd_zeros(cfg: RunConfig, a) -> int:
    from .lfunctions import find_zeros, make_handle, zero_csv

    h = make_handle(parse_eis(a.pi), "Q" if a.q_side else "K", conjugate=a.conj)
    zl = find_zeros(h, a.T, strict=False)
    _emit(cfg, zero_csv(zl))
    if zl.status != "ok":
        print(f"zero finder failure: {zl.status}", file=sys.stderr)
        return EXIT_GUARD
    return EXIT_OK


def _report_out(cfg: RunConfig, rep, dump: str | None) -> int:
    from .moments import dump_terms_csv

    if dump:
        with open(dump, "w") as f:
            f.write(dump_terms_csv(rep))
    _emit(cfg, rep.to_json())
    if rep.flags:
        print("flagged terms:\n  " + "\n  ".join(rep.flags), file=sys.stderr)
        return EXIT_GUARD
    return EXIT_OK


def cmd_moment(cfg: RunConfig, a) -> int:
    from . import moments as M

    if a.dump_terms:
        cache.set_cache_dir("")  # fresh computation so the per-prime terms exist
    kind = a.kind
    if a.q_side and not kind.startswith("q_"):
        kind = "q_" + kind
    need = {"ratios": ("alpha", "beta"), "first": ("alpha",), "negative": ("beta",), "logderiv": ("alpha",)}
    base = kind[2:] if kind.startswith("q_") else kind
    if base not in need:
        raise M.PreconditionError(f"unknown kind {a.kind!r}")
    shifts = []
    for name in need[base]:
        v = getattr(a, name)
        if v is None:
            raise M.PreconditionError(f"--{name} is required for kind {base}")
        shifts.append(v)
    if kind.startswith("q_"):
        rep = M.q_side_suite(a.X, kind, tuple(shifts), a.weight)
    elif base == "ratios":
        rep = M.ratios_sum(a.X, *shifts, weight=a.weight)
    elif base == "first":
        rep = M.first_moment(a.X, *shifts, weight=a.weight)
    elif base == "negative":
        rep = M.negative_moment(a.X, *shifts, weight=a.weight)
    else:
        rep = M.logderiv_moment(a.X, *shifts, weight=a.weight)
    return _report_out(cfg, rep, a.dump_terms)


def cmd_density(cfg: RunConfig, a) -> int:
    from . import moments as M

    rep = M.one_level_density(a.X, a.a, a.weight, q_side=a.q_side)
    return _report_out(cfg, rep, None)


def cmd_verify(cfg: RunConfig, a) -> int:
    from .verify import run_suite

    results = run_suite(a.suite, echo=lambda line: print(line, flush=True))
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    if cfg.output:
        _emit(cfg, json.dumps([r.__dict__ for r in results], indent=2))
    return EXIT_OK if passed == len(results) else EXIT_GUARD


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubic-hecke", description=__doc__.splitlines()[0])
    p.add_argument("--cache-dir", default=None, help="cache directory ('' disables; default $CACHE_DIR)")
    p.add_argument("--threads", default="1", help="worker count or 'auto'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sieve", help="family primes = 1 mod 9 up to a norm limit")
    s.add_argument("--limit", type=_number, required=True)
    s.add_argument("--split-only", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sieve)

    s = sub.add_parser("symbol", help="cubic residue symbol (a/n)_3")
    s.add_argument("--a", required=True)
    s.add_argument("--n", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_symbol)

    s = sub.add_parser("gauss", help="cubic Gauss sum g(k, n)")
    s.add_argument("--k", default="1")
    s.add_argument("--n", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gauss)

    s = sub.add_parser("gauss-batch", help="g(1, pi) for all primary primes up to a limit")
    s.add_argument("--limit", type=_number, required=True)
    s.add_argument("--family", action="store_true", help="only primes = 1 mod 9")
    s.add_argument("--out")
    s.set_defaults(func=cmd_gauss_batch)

    s = sub.add_parser("lvalue", help="L(s, chi_pi) or L_Q(s, chi)")
    s.add_argument("--pi", required=True)
    s.add_argument("--s", type=_complex_arg, required=True)
    s.add_argument("--q-side", action="store_true")
    s.add_argument("--conj", action="store_true")
    s.add_argument("--mode", choices=("auto", "direct", "reflected"), default="auto")
    s.add_argument("--out")
    s.set_defaults(func=cmd_lvalue)

    s = sub.add_parser("zeros", help="critical-line zeros up to height T")
    s.add_argument("--pi", required=True)
    s.add_argument("--T", type=float, required=True)
    s.add_argument("--q-side", action="store_true")
    s.add_argument("--conj", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("moment", help="family moment report")
    s.add_argument("--kind", required=True, choices=("ratios", "first", "negative", "logderiv",
                                                      "q_ratios", "q_first", "q_negative", "q_logderiv"))
    s.add_argument("--X", type=_number, required=True)
    s.add_argument("--alpha", type=_complex_arg)
    s.add_argument("--beta", type=_complex_arg)
    s.add_argument("--q-side", action="store_true")
    s.add_argument("--weight", default="bump")
    s.add_argument("--dump-terms", metavar="CSV")
    s.add_argument("--out")
    s.set_defaults(func=cmd_moment)

    s = sub.add_parser("density", help="one-level density report")
    s.add_argument("--X", type=_number, required=True)
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--q-side", action="store_true")
    s.add_argument("--weight", default="bump")
    s.add_argument("--out")
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("verify", help="acceptance battery")
    s.add_argument("--suite", choices=("core", "all"), default="core")
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)
    return p


def dispatch(cfg: RunConfig, args) -> int:
    if cfg.cache_dir is not None:
        cache.set_cache_dir(cfg.cache_dir)
    if cfg.threads > 1:
        import numba

        numba.set_num_threads(min(cfg.threads, numba.config.NUMBA_NUM_THREADS))
    try:
        return args.func(cfg, args)
    except NumericGuardError as e:
        print(f"numeric guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ResourceLimit, InputTooLarge, MemoryError) as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ZeroDivisionError, ArithmeticError) as e:
        print(f"precondition: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = os.cpu_count() or 1 if args.threads == "auto" else int(args.threads)
    cfg = RunConfig(args.command, vars(args), args.cache_dir, max(1, threads), getattr(args, "out", None), args.format)
    return dispatch(cfg, args)


if __name__ == "__main__":
    sys.exit(main())
