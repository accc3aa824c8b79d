"""Verification grids: a line-oriented list of checks run by ``ascyclo verify``.

Format, one entry per line (``#`` starts a comment)::

    p t prime_expr mode params [key=value ...]

* ``prime_expr`` is a monic irreducible polynomial in T (no spaces, or quoted),
  or ``*d`` for every monic irreducible of degree <= d.
* ``mode`` is one of census, units, identity, splitting.
* ``params`` lists alpha (census, identity, splitting) or beta (units) values:
  ``1,3,5``, ``1-6`` or a mix.  In census, identity and splitting modes every
  value must be prime to p.
* options: ``modulus=c0,c1,...`` (F_q modulus, low to high),
  ``bound=N`` (splitting: max deg Q, default 6),
  ``sample=N`` (splitting: representatives per census, default 8).

Directive lines ``budget N`` and ``units_budget N`` set enumeration budgets for
the entries that follow.  Entries whose enumeration exceeds the budget are
reported as skipped.
"""

import shlex
from dataclasses import dataclass, field as dc_field
from importlib import resources

from .algebra import PrimePoly, enumerate_monic_irreducibles, field_make, parse_poly
from .census import census_bruteforce, census_identity_check, n_alpha
from .artin_schreier import equivalent_generator_data
from .embed import certify, splitting_smoke_test
from .carlitz import ramification_data
from .errors import AscycloError, BudgetExceeded, GridParseError
from .unit_group import count_order_p, n_beta, n_beta_difference, phi, scan_units

MODES = ("census", "units", "identity", "splitting")
DEFAULT_BUDGET = 2**20
DEFAULT_UNITS_BUDGET = 2**16


@dataclass
class GridEntry:
    p: int
    t: int
    prime: str
    mode: str
    params: tuple
    budget: int
    units_budget: int
    modulus: tuple = None
    options: dict = dc_field(default_factory=dict)
    line: int = 0


@dataclass
class GridSpec:
    entries: list
    budget: int = DEFAULT_BUDGET


@dataclass
class CheckResult:
    status: str  # pass, fail, skip
    mode: str
    label: str
    detail: str

    def to_dict(self):
        return {"status": self.status, "mode": self.mode, "check": self.label, "detail": self.detail}


def _parse_params(text, lineno):
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise GridParseError(f"line {lineno}: bad parameter list {text!r}") from None
    if not out or min(out) < 1:
        raise GridParseError(f"line {lineno}: parameters must be positive integers")
    return tuple(out)


def parse_grid(text):
    entries = []
    budget, units_budget = DEFAULT_BUDGET, DEFAULT_UNITS_BUDGET
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            words = shlex.split(line)
        except ValueError as exc:
            raise GridParseError(f"line {lineno}: {exc}") from None
        if words[0] in ("budget", "units_budget"):
            if len(words) != 2 or not words[1].isdigit():
                raise GridParseError(f"line {lineno}: expected '{words[0]} N'")
            if words[0] == "budget":
                budget = int(words[1])
            else:
                units_budget = int(words[1])
            continue
        if len(words) < 5:
            raise GridParseError(f"line {lineno}: expected 'p t prime_expr mode params'")
        try:
            p, t = int(words[0]), int(words[1])
        except ValueError:
            raise GridParseError(f"line {lineno}: p and t must be integers") from None
        prime, mode = words[2], words[3]
        if mode not in MODES:
            raise GridParseError(f"line {lineno}: unknown mode {mode!r}")
        params = _parse_params(words[4], lineno)
        if mode != "units":
            bad = [a for a in params if a % p == 0]
            if bad:
                raise GridParseError(f"line {lineno}: alpha {bad[0]} is divisible by p = {p}")
        options, modulus = {}, None
        for opt in words[5:]:
            key, sep, val = opt.partition("=")
            if not sep:
                raise GridParseError(f"line {lineno}: bad option {opt!r}")
            if key == "modulus":
                try:
                    modulus = tuple(int(c) for c in val.split(","))
                except ValueError:
                    raise GridParseError(f"line {lineno}: bad modulus {val!r}") from None
            elif key in ("bound", "sample"):
                if not val.isdigit():
                    raise GridParseError(f"line {lineno}: {key} must be an integer")
                options[key] = int(val)
            else:
                raise GridParseError(f"line {lineno}: unknown option {key!r}")
        entries.append(GridEntry(p, t, prime, mode, params, budget, units_budget, modulus, options, lineno))
    return GridSpec(entries, budget)


def load_grid(path=None):
    """Parse a grid file; ``None`` loads the bundled default grid."""
    if path is None:
        text = resources.files("ascyclo").joinpath("data/default.grid").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_grid(text)


def _primes(entry):
    try:
        F = field_make(entry.p, entry.t, entry.modulus)
    except AscycloError as exc:
        raise GridParseError(f"line {entry.line}: {exc}") from None
    if entry.prime.startswith("*"):
        try:
            dmax = int(entry.prime[1:])
        except ValueError:
            raise GridParseError(f"line {entry.line}: bad wildcard {entry.prime!r}") from None
        return F, list(enumerate_monic_irreducibles(F, dmax))
    try:
        return F, [PrimePoly.of(parse_poly(F, entry.prime))]
    except AscycloError as exc:
        raise GridParseError(f"line {entry.line}: {exc}") from None


def _label(F, P, name, value):
    return f"q={F.q} P={P} {name}={value}"


def _run_census(F, P, alpha, entry):
    label = _label(F, P, "alpha", alpha)
    try:
        rep = census_bruteforce(P, alpha, budget=entry.budget)
    except BudgetExceeded:
        return CheckResult("skip", "census", label, "over budget")
    size = equivalent_generator_data(P, alpha)[1]
    ok = rep.brute_count == n_alpha(P, alpha) and set(rep.class_sizes) == {size}
    detail = (f"formula={rep.formula_count} brute={rep.brute_count} "
              f"equations={rep.enumerated_equations} class_size={sorted(rep.class_sizes)} expected={size}")
    return CheckResult("pass" if ok else "fail", "census", label, detail)


def _run_units(F, P, beta, entry):
    label = _label(F, P, "beta", beta)
    try:
        scan = scan_units(P, beta, budget=entry.units_budget)
    except BudgetExceeded:
        return CheckResult("skip", "units", label, "over budget")
    r, n = count_order_p(P, beta), n_beta(P, beta)
    ok = scan.order_p == r and scan.subgroups == n and scan.units == phi(P, beta)
    detail = f"r_p={r} brute={scan.order_p} subgroups={n} brute={scan.subgroups} units={scan.units}"
    return CheckResult("pass" if ok else "fail", "units", label, detail)


def _run_identity(F, P, alpha, entry):
    label = _label(F, P, "alpha", alpha)
    p = F.p
    ok = census_identity_check(P, alpha)
    diff = n_beta_difference(P, alpha)
    detail = f"N_alpha={n_alpha(P, alpha)} p*(n(a+1)-n(a))={p * diff}"
    try:
        lo = scan_units(P, alpha, budget=entry.units_budget).subgroups
        hi = scan_units(P, alpha + 1, budget=entry.units_budget).subgroups
        ok = ok and hi - lo == diff
        detail += f" brute_difference={hi - lo}"
    except BudgetExceeded:
        detail += " brute_difference=over-budget"
    return CheckResult("pass" if ok else "fail", "identity", label, detail)


def _run_splitting(F, P, alpha, entry):
    label = _label(F, P, "alpha", alpha)
    bound = entry.options.get("bound", 6)
    sample = entry.options.get("sample", 8)
    try:
        rep = census_bruteforce(P, alpha, budget=entry.budget, max_representatives=sample)
    except BudgetExceeded:
        return CheckResult("skip", "splitting", label, "over budget")
    ok, tested, vacuous = True, 0, 0
    for nf in rep.class_representatives:
        cert = certify(nf)
        ram = ramification_data(nf)
        exps = [e for _, e in cert.finite_modulus]
        ok &= exps == [a + 1 for _, a, _ in nf.terms] and tuple(exps) == ram.conductor_exponents
        smoke = splitting_smoke_test(cert, bound)
        ok &= smoke.ok
        tested += len(smoke.tested)
        vacuous += smoke.status == "vacuous"
    detail = (f"representatives={len(rep.class_representatives)} primes_tested={tested} "
              f"vacuous={vacuous} bound={bound}")
    return CheckResult("pass" if ok else "fail", "splitting", label, detail)


_RUNNERS = {
    "census": _run_census,
    "units": _run_units,
    "identity": _run_identity,
    "splitting": _run_splitting,
}


def run_grid(grid):
    """Yield a CheckResult per (entry, prime, parameter), in grid order."""
    for entry in grid.entries:
        F, primes = _primes(entry)
        for P in primes:
            for val in entry.params:
                yield _RUNNERS[entry.mode](F, P, val, entry)
