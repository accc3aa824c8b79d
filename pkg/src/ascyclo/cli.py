"""Command line interface: ``ascyclo [global flags] <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 parse or input error,
3 field too large, 4 degenerate input (right-hand side in wp(K)).
"""

import argparse
import json
import sys

from . import __version__
from .algebra import PrimePoly, field_from_q, parse_poly, parse_ratfunc
from .artin_schreier import is_equivalent, wp_reduce
from .carlitz import carlitz_action, ramification_data, torsion_report
from .census import census_bruteforce, n_alpha
from .embed import certify, splitting_smoke_test
from .errors import AscycloError, BudgetExceeded, DegenerateInput, FieldTooLarge
from .grid import load_grid, run_grid
from .unit_group import units_report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_TOO_LARGE, EXIT_DEGENERATE = 0, 1, 2, 3, 4


def _modulus(text):
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad modulus {text!r}") from None


def build_parser():
    ap = argparse.ArgumentParser(prog="ascyclo", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--q", default="2", help="field size: q or p^t (default 2)")
    ap.add_argument("--fq-modulus", type=_modulus, default=None,
                    help="F_q modulus as comma-separated F_p coefficients, low to high")
    ap.add_argument("--json", action="store_true", help="emit JSON on stdout")
    ap.add_argument("--budget", type=int, default=None, help="enumeration budget")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normal form of a right-hand side")
    p.add_argument("expr")

    p = sub.add_parser("equiv", help="do two right-hand sides give the same field?")
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("census", help="count fields ramified only at P, exhaustively")
    p.add_argument("prime")
    p.add_argument("alpha", type=int)
    p.add_argument("--method", choices=("linear", "direct"), default="linear")
    p.add_argument("--representatives", type=int, default=16)

    p = sub.add_parser("units", help="order-p elements of (F_q[T]/P^beta)^*")
    p.add_argument("prime")
    p.add_argument("beta", type=int)

    p = sub.add_parser("carlitz", help="Carlitz operator [M](u)")
    p.add_argument("poly")
    p.add_argument("--torsion", type=int, metavar="BETA",
                   help="treat the input as a prime P and report P^BETA torsion data")

    p = sub.add_parser("certify", help="cyclotomic modulus and constant extension containing K(y)")
    p.add_argument("expr")

    p = sub.add_parser("smoke", help="prime splitting check of a certificate")
    p.add_argument("expr")
    p.add_argument("--bound", type=int, default=6, help="max degree of tested primes")

    p = sub.add_parser("verify", help="run a verification grid")
    p.add_argument("grid", nargs="?", default=None, help="grid file (default: bundled grid)")
    return ap


def _field(args):
    return field_from_q(args.q, args.fq_modulus)


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_normalize(args):
    F = _field(args)
    s = parse_ratfunc(F, args.expr)
    nf, witness = wp_reduce(s)
    data = {"input": str(s), "normal_form": nf.to_dict(), "witness": str(witness), "in_wp": nf.is_zero()}
    lines = [f"s           = {s}"]
    if nf.is_zero():
        lines.append("element of ℘(K)")
    else:
        lines.append(f"normal form = {nf}")
        if nf.constant:
            lines.append(f"  constant  {nf.constant}")
        if not nf.polypart.is_zero():
            lines.append(f"  polypart  {nf.polypart}")
        for P, a, f in nf.terms:
            lines.append(f"  term      prime={P} alpha={a} numerator={f}")
    lines.append(f"witness     = {witness}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_equiv(args):
    F = _field(args)
    nf1 = wp_reduce(parse_ratfunc(F, args.expr1))[0]
    nf2 = wp_reduce(parse_ratfunc(F, args.expr2))[0]
    j = is_equivalent(nf1, nf2)
    data = {"expr1": str(nf1), "expr2": str(nf2), "equivalent": j is not None, "j": j}
    _emit(args, data, "inequivalent" if j is None else f"j = {j}")
    return EXIT_OK


def _prime(F, text):
    return PrimePoly.of(parse_poly(F, text))


def cmd_census(args):
    F = _field(args)
    P = _prime(F, args.prime)
    budget = args.budget or 2**20
    try:
        rep = census_bruteforce(P, args.alpha, budget, args.method, args.representatives)
    except BudgetExceeded as exc:
        print(f"census: {exc}; reporting the formula only", file=sys.stderr)
        data = {"field": {"p": F.p, "t": F.t, "q": F.q, "modulus": list(F.modulus)},
                "prime": str(P), "alpha": args.alpha, "formula_count": n_alpha(P, args.alpha),
                "brute_count": None, "enumerated_equations": 0, "representatives": []}
        _emit(args, data, f"formula N_alpha = {data['formula_count']}  (brute force over budget)")
        return EXIT_OK
    data = rep.to_dict()
    lines = [
        f"q={F.q} P={P} alpha={args.alpha} alpha0={rep.alpha0}",
        f"formula count     {data['formula_count']}",
        f"brute-force count {rep.brute_count}  ({rep.enumerated_equations} equations)",
        f"class sizes       {data['class_sizes']}",
        "representatives:",
    ] + [f"  {r}" for r in data["representatives"]]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if rep.matches else EXIT_FAIL


def cmd_units(args):
    F = _field(args)
    P = _prime(F, args.prime)
    data = units_report(P, args.beta, args.budget or 2**16)
    text = "\n".join(f"{k:18} {v}" for k, v in data.items() if k != "field")
    _emit(args, data, text)
    ok = data["r_p_brute"] in (None, data["r_p_formula"]) and \
        data["subgroups_brute"] in (None, data["subgroups_formula"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_carlitz(args):
    F = _field(args)
    M = parse_poly(F, args.poly)
    if args.torsion is not None:
        P = PrimePoly.of(M)
        data = torsion_report(P, args.torsion)
        text = "\n".join(f"{k:16} {v}" for k, v in data.items())
        _emit(args, data, text)
        return EXIT_OK if data["difference"] == data["phi"] else EXIT_FAIL
    op = carlitz_action(M)
    data = {"M": str(M), "degree": op.degree, "terms": op.to_list()}
    _emit(args, data, f"[{M}](u) = {op}")
    return EXIT_OK


def cmd_certify(args):
    F = _field(args)
    cert = certify(parse_ratfunc(F, args.expr))
    ram = ramification_data(cert.source)
    data = cert.to_dict()
    data["ramification"] = ram.to_dict()
    mod = " * ".join(f"({P})^{e}" for P, e in cert.finite_modulus) or "1"
    lines = [
        f"source                     {cert.source}",
        f"finite modulus             {mod}",
        f"infinite exponent          {cert.infinite_exponent}",
        f"constant field degree      {cert.constant_degree}",
        f"needs constant part        {cert.needs_constant_part}",
        f"minimal cyclotomic part    {cert.minimal_for_cyclotomic_part}",
    ]
    for (P, a), c, d in zip(ram.terms, ram.conductor_exponents, ram.different_exponents):
        lines.append(f"  place {P}: alpha={a} conductor exponent={c} different exponent={d}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_smoke(args):
    F = _field(args)
    cert = certify(parse_ratfunc(F, args.expr))
    rep = splitting_smoke_test(cert, args.bound)
    lines = [f"status {rep.status}: {len(rep.tested)} primes tested, {len(rep.violations)} violations"]
    lines += [f"  Q = {Q}  trace = {tr}" for Q, tr in rep.tested]
    _emit(args, rep.to_dict(), "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args):
    grid = load_grid(args.grid)
    results = []
    for res in run_grid(grid):
        results.append(res)
        if not args.json:
            print(f"{res.status.upper():4}  {res.mode:9}  {res.label:36}  {res.detail}", flush=True)
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skip")}
    summary = (f"{len(results)} entries: {counts['pass']} passed, "
               f"{counts['fail']} failed, {counts['skip']} skipped")
    if args.json:
        print(json.dumps({"results": [r.to_dict() for r in results], "summary": counts}, indent=2))
    else:
        print(summary)
    return EXIT_FAIL if counts["fail"] else EXIT_OK


COMMANDS = {
    "normalize": cmd_normalize,
    "equiv": cmd_equiv,
    "census": cmd_census,
    "units": cmd_units,
    "carlitz": cmd_carlitz,
    "certify": cmd_certify,
    "smoke": cmd_smoke,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except FieldTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except DegenerateInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (AscycloError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
