"""Command-line interface.

    chevbass compute -m 13203 -g 8353
    chevbass compute -m 13203 --crt 81:10,163:40 --json
    chevbass cyclotomic 7
    chevbass h1 -n 81 -g 10 -p 3 -t 4
    chevbass selftest --depth quick

Exit codes: 0 success, 1 selftest failure, 2 input error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import cohom, selftest
from .cbalgo import Check, chevalley_bass
from .errors import FactorizationBoundError, InputError
from .field import AbelianFieldSpec, cyclotomic_spec
from .modarith import crt_combine
from .report import ReportDocument, encode_int
from .unitgroup import UnitSubgroup, subgroup_basis

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(token: str, what: str) -> int:
    try:
        return int(token.strip(), 10)
    except ValueError:
        raise UsageError(f"{what}: {token!r} is not a decimal integer") from None


def _generators(text: str | None) -> list[int]:
    if not text:
        return []
    return [_int(tok, "generator") for tok in text.split(",") if tok.strip()]


def _crt_generator(text: str) -> tuple[int, int]:
    """'81:10,163:40' (or space separated) -> CRT residue and modulus."""
    pairs = []
    for tok in text.replace(",", " ").split():
        if ":" not in tok:
            raise UsageError(f"--crt: {tok!r} is not of the form modulus:residue")
        mod, res = tok.split(":", 1)
        if "^" in mod:
            base, exp = mod.split("^", 1)
            modulus = _int(base, "--crt modulus") ** _int(exp, "--crt exponent")
        else:
            modulus = _int(mod, "--crt modulus")
        pairs.append((_int(res, "--crt residue"), modulus))
    return crt_combine(pairs)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chevbass", description="Chevalley-Bass numbers of abelian fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--full-scan", action="store_true",
                       help="run the cohomology scan even when the bounds coincide")
        p.add_argument("--verbose", action="store_true", help="stream every surjectivity check")
        p.add_argument("--threads", type=int, default=1, help="parallel checks (default 1)")

    c = sub.add_parser("compute", help="field given by m and generators of Gal(Q(zeta_m)/K)")
    c.add_argument("-m", "--modulus", required=True)
    c.add_argument("-g", "--generators", default="", help="comma-separated residues mod m")
    c.add_argument("--crt", action="append", default=[], metavar="MOD:RES,...",
                   help="add a generator given by CRT components, e.g. 3^4:10,163:40")
    common(c)

    y = sub.add_parser("cyclotomic", help="Q(zeta_r)")
    y.add_argument("r")
    common(y)

    h = sub.add_parser("h1", help="H^1(G, mu_{p^t}) for G = <generators> mod n")
    h.add_argument("-n", "--modulus", required=True)
    h.add_argument("-g", "--generators", default="")
    h.add_argument("-p", required=True)
    h.add_argument("-t", required=True)
    h.add_argument("--json", action="store_true")

    s = sub.add_parser("selftest", help="run the verification batteries")
    s.add_argument("--depth", choices=sorted(selftest.DEPTHS), default="default")
    return ap


def _run_compute(spec: AbelianFieldSpec, args, out) -> int:
    def stream(p: int, c: Check):
        verdict = "surjective" if c.surjective else "NOT surjective"
        print(f"check p={p} j={c.j} t={c.t} n={c.n} {verdict}", file=sys.stderr)

    t0 = time.perf_counter_ns()
    rep = chevalley_bass(spec, full_scan=args.full_scan,
                         on_check=stream if args.verbose else None,
                         threads=max(1, args.threads))
    ms = (time.perf_counter_ns() - t0) // 1_000_000
    doc = ReportDocument.from_report(rep, ms)
    print(doc.to_json() if args.json else doc.to_text(), file=out)
    return EXIT_OK


def _cmd_compute(args, out) -> int:
    m = _int(args.modulus, "modulus")
    if m < 1:
        raise UsageError(f"modulus: {args.modulus!r} must be positive")
    gens = _generators(args.generators)
    for text in args.crt:
        g, mod = _crt_generator(text)
        if mod != m:
            raise UsageError(f"--crt {text!r}: moduli multiply to {mod}, not {m}")
        gens.append(g)
    try:
        spec = AbelianFieldSpec(m, tuple(gens))
    except InputError as exc:
        raise UsageError(str(exc)) from None
    return _run_compute(spec, args, out)


def _cmd_cyclotomic(args, out) -> int:
    r = _int(args.r, "r")
    if r < 1:
        raise UsageError(f"r: {args.r!r} must be positive")
    return _run_compute(cyclotomic_spec(r), args, out)


def _cmd_h1(args, out) -> int:
    n = _int(args.modulus, "modulus")
    p = _int(args.p, "p")
    t = _int(args.t, "t")
    if n < 1 or p < 2 or t < 0:
        raise UsageError("need n >= 1, p prime, t >= 0")
    if n % p**t:
        raise UsageError(f"{p}^{t} does not divide {n}")
    try:
        H = UnitSubgroup(n, tuple(_generators(args.generators)))
    except InputError as exc:
        raise UsageError(str(exc)) from None
    basis = subgroup_basis(H)
    g = cohom.h1(basis, p, t)
    if args.json:
        print(json.dumps({
            "modulus": encode_int(n), "p": p, "t": t,
            "basis": [[encode_int(b), encode_int(e)] for b, e in basis.basis],
            "invariant_factors": [encode_int(x) for x in g.invariant_factors],
            "representatives": [[encode_int(x) for x in r] for r in g.representatives],
        }, indent=2), file=out)
        return EXIT_OK
    print("trivial" if g.trivial else "[" + ", ".join(map(str, g.invariant_factors)) + "]", file=out)
    if g.representatives:
        gens = ", ".join(f"{b} (order {e})" for b, e in basis.basis)
        print(f"basis: {gens}", file=out)
        for d, rep in zip(g.invariant_factors, g.representatives):
            print(f"  order {d}: cocycle values {list(rep)}", file=out)
    return EXIT_OK


def _cmd_selftest(args, out) -> int:
    res = selftest.run(args.depth, log=lambda s: print(s, file=out))
    total = sum(b.passed for b in res.batteries)
    failed = sum(b.failed for b in res.batteries)
    print(f"{'PASS' if res.ok else 'FAIL'}: {total} passed, {failed} failed", file=out)
    return EXIT_OK if res.ok else EXIT_SELFTEST


COMMANDS = {
    "compute": _cmd_compute,
    "cyclotomic": _cmd_cyclotomic,
    "h1": _cmd_h1,
    "selftest": _cmd_selftest,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"chevbass: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"chevbass: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FactorizationBoundError as exc:
        print(f"chevbass: resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
