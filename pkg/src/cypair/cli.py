"""Command-line front end.

Subcommands: `identities`, `chi-d cp|table`, `blowup-check`, `hrr cp`,
and `hodge bundle|blowup|correction|ledger`.  Every command produces a
report of named checks; `--json` emits it as a single deterministic JSON
document (rationals rendered as strings, checks sorted by name) and
`--out` redirects the report to a file.

Exit codes: 0 when every check passes, 1 when a mathematical check
fails, 2 for invalid input of any kind.  The environment variable
CYPAIR_JOBS caps how many identity verifications run concurrently.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import chow, hodge, sncpair, symcalc

DEFAULT_SEED = 7
JOBS_ENV_VAR = "CYPAIR_JOBS"


class CliInputError(ValueError):
    pass


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail"
    expected: str
    actual: str


@dataclass
class Report:
    command: str
    checks: list[Check]
    notes: list[str]

    @property
    def overall(self) -> str:
        return "pass" if all(c.status == "pass" for c in self.checks) else "fail"


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def _check(name: str, actual, expected=None) -> Check:
    """A named check; without an expectation it is informational and passes."""
    if expected is None:
        rendered = _fmt(actual)
        return Check(name, "pass", rendered, rendered)
    ok = actual == expected
    return Check(name, "pass" if ok else "fail", _fmt(expected), _fmt(actual))


def _emit(report: Report, args) -> int:
    report.checks.sort(key=lambda c: c.name)
    if args.json:
        payload = {
            "command": report.command,
            "overall": report.overall,
            "checks": [
                {"name": c.name, "status": c.status,
                 "expected": c.expected, "actual": c.actual}
                for c in report.checks
            ],
        }
        text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        lines = list(report.notes)
        for c in report.checks:
            lines.append(
                f"[{c.status.upper()}] {c.name}: "
                f"expected {c.expected}, actual {c.actual}")
        lines.append(f"overall: {report.overall}")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.overall == "pass" else 1


def _jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliInputError(f"{JOBS_ENV_VAR} must be an integer, got {raw!r}")


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CliInputError(f"{path}: {exc.strerror or exc}")


def _load_pair(path: str) -> sncpair.SncPair:
    text = _read_text(path)
    try:
        return sncpair.pair_from_json(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")
    except ValueError as exc:
        raise CliInputError(f"{path}: {exc}")


def _load_diamond(source: str) -> hodge.HodgeDiamond:
    """A builtin diamond name (point, cpN) or a JSON file path."""
    if source == "point":
        return hodge.HodgeDiamond.point()
    match = re.fullmatch(r"cp(\d+)", source)
    if match:
        return hodge.HodgeDiamond.projective_space(int(match.group(1)))
    text = _read_text(source)
    try:
        return hodge.diamond_from_json(text)
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}")
    except ValueError as exc:
        raise CliInputError(f"{source}: {exc}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_identities(args) -> Report:
    if not 1 <= args.max_m <= symcalc.MAX_VERIFY_ROOTS:
        raise CliInputError(
            f"--max-m must lie in 1..{symcalc.MAX_VERIFY_ROOTS}, got {args.max_m}")

    def run(m: int) -> list[Check]:
        checks = []
        for i, residual in enumerate(symcalc.verify_total_class_identities(m), 1):
            checks.append(_check(f"m{m}-todd-identity-{i}", repr(residual), "0"))
        for i, residual in enumerate(symcalc.verify_shifted_class_identities(m), 1):
            checks.append(_check(f"m{m}-todd-prime-identity-{i}", repr(residual), "0"))
        return checks

    values = range(1, args.max_m + 1)
    jobs = _jobs()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(run, values))
    else:
        batches = [run(m) for m in values]
    checks = [c for batch in batches for c in batch]
    return Report("identities", checks, [])


def _parse_mults(raw: str | None) -> tuple[int, ...]:
    if not raw:
        return ()
    try:
        return tuple(int(chunk) for chunk in raw.split(","))
    except ValueError:
        raise CliInputError(f"--mults must be a comma-separated integer list, got {raw!r}")


def cmd_chi_d_cp(args) -> Report:
    mults = _parse_mults(args.mults)
    try:
        model, pair = sncpair.cp_pair(args.r, args.s, args.d, mults)
    except sncpair.PairValidationError as exc:
        raise CliInputError(str(exc))
    by_enumeration = sncpair.chi_d(pair)
    by_derivative = sncpair.chi_d_via_fprime(model)
    checks = [
        _check("chi-d-enumeration", by_enumeration),
        _check("fprime-at-1", by_derivative),
        _check("enumeration-matches-fprime", by_enumeration, by_derivative),
        _check("chi-d-vanishes", by_enumeration, Fraction(0)),
    ]
    notes = [f"model pair on projective {args.r}-space, "
             f"multiplicities {pair.mults}"]
    return Report("chi-d cp", checks, notes)


def cmd_chi_d_table(args) -> Report:
    pair = _load_pair(args.file)
    value = sncpair.chi_d(pair)
    return Report("chi-d table", [_check("chi-d", value)], [])


def cmd_blowup_check(args) -> Report:
    if (args.file is None) == (args.random is None):
        raise CliInputError("exactly one of --file or --random is required")
    if args.file is not None:
        pair = _load_pair(args.file)
        result = sncpair.check_blowup_invariance(pair)
        checks = [
            _check("exceptional-multiplicity", result.exceptional_multiplicity),
            _check("chi-d-before", result.before),
            _check("chi-d-after", result.after),
            _check("invariance", result.after, result.before),
            _check("center-coefficient", result.center_chi_d),
            _check("exceptional-coefficient", result.exceptional_chi_d),
        ]
        return Report("blowup-check", checks, [])

    if args.random < 1:
        raise CliInputError("--random wants a positive count")
    import random as random_module

    rng = random_module.Random(args.seed)
    checks = []
    for i in range(args.random):
        pair = sncpair.random_blowup_instance(rng)
        result = sncpair.check_blowup_invariance(pair)
        checks.append(
            _check(f"instance-{i:04d}", result.after, result.before))
    notes = [f"{args.random} synthetic stratum tables, seed {args.seed}"]
    return Report("blowup-check", checks, notes)


def cmd_hrr_cp(args) -> Report:
    if args.n < 0:
        raise CliInputError("--n must be non-negative")
    if not 0 <= args.p <= args.n:
        raise CliInputError(f"--p must lie in 0..{args.n}")
    value = chow.chi_twisted_hodge(args.n, args.p, args.twist)
    checks = []
    if 1 <= args.twist <= args.p:
        checks.append(_check("twisted-forms-vanish", value, Fraction(0)))
    elif args.twist == 0:
        checks.append(_check("untwisted-forms-sign", value, Fraction((-1) ** args.p)))
    else:
        checks.append(_check("chi", value))
    notes = [f"chi of projective {args.n}-space with values in "
             f"Omega^{args.p} twisted by O({args.twist}): {value}"]
    return Report("hrr cp", checks, notes)


def cmd_hodge_bundle(args) -> Report:
    base = _load_diamond(args.base)
    if args.fiber_dim < 0:
        raise CliInputError("--fiber-dim must be non-negative")
    total = hodge.projective_bundle_diamond(base, args.fiber_dim)
    checks = [
        _check("betti-vector", ",".join(map(str, total.betti_vector()))),
        _check("euler", total.euler(), (args.fiber_dim + 1) * base.euler()),
    ]
    return Report("hodge bundle", checks, [total.pretty()])


def cmd_hodge_blowup(args) -> Report:
    ambient = _load_diamond(args.x)
    center = _load_diamond(args.y)
    try:
        blown = hodge.blowup_diamond(ambient, center, args.codim)
    except hodge.DiamondError as exc:
        raise CliInputError(str(exc))
    expected_euler = ambient.euler() + (args.codim - 1) * center.euler()
    checks = [
        _check("betti-vector", ",".join(map(str, blown.betti_vector()))),
        _check("euler", blown.euler(), expected_euler),
    ]
    return Report("hodge blowup", checks, [blown.pretty()])


def cmd_hodge_correction(args) -> Report:
    diamond = _load_diamond(args.diamond)
    coefficient = hodge.correction_term(diamond)
    checks = [
        _check("correction-coefficient", coefficient),
        _check("correction-units", "(log 2pi)/2"),
    ]
    notes = [f"correction term: {coefficient} * (log 2pi)/2"]
    return Report("hodge correction", checks, notes)


def cmd_hodge_ledger(args) -> Report:
    if (args.diamond is None) == (args.random is None):
        raise CliInputError("exactly one of --diamond or --random is required")
    checks = []
    if args.diamond is not None:
        diamond = _load_diamond(args.diamond)
        checks.append(
            _check("ledger-identities", hodge.lambda_exponent_check(diamond), True))
    else:
        if args.random < 1:
            raise CliInputError("--random wants a positive count")
        import random as random_module

        rng = random_module.Random(args.seed)
        for i in range(args.random):
            diamond = hodge.random_symmetric_diamond(rng)
            checks.append(
                _check(f"diamond-{i:04d}", hodge.lambda_exponent_check(diamond), True))
    return Report("hodge ledger", checks, [])


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true",
                        help="emit the report as a single JSON document")
    parser.add_argument("--out", metavar="PATH",
                        help="write the report to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cypair",
        description="Exact checks for simple normal crossing pair combinatorics.",
        epilog=f"Set {JOBS_ENV_VAR} to cap concurrent checks (default 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities",
                       help="verify the Todd / exterior-character identities")
    p.add_argument("--max-m", type=int, default=6,
                   help="verify for every root count up to this bound")
    _add_output_flags(p)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("chi-d", help="weighted Euler characteristics")
    chi_sub = p.add_subparsers(dest="mode", required=True)
    pc = chi_sub.add_parser("cp", help="model pair on projective r-space")
    pc.add_argument("--r", type=int, required=True, help="ambient dimension")
    pc.add_argument("--s", type=int, required=True,
                    help="number of coordinate hyperplanes")
    pc.add_argument("--d", type=int, required=True, help="pluricanonical degree")
    pc.add_argument("--mults", default="",
                    help="comma-separated positive multiplicities, one per hyperplane")
    _add_output_flags(pc)
    pc.set_defaults(func=cmd_chi_d_cp)
    pt = chi_sub.add_parser("table", help="stratum table from a JSON file")
    pt.add_argument("--file", required=True, help="stratum-table document")
    _add_output_flags(pt)
    pt.set_defaults(func=cmd_chi_d_table)

    p = sub.add_parser("blowup-check",
                       help="check blow-up invariance of chi_d")
    p.add_argument("--file", help="stratum table with center metadata")
    p.add_argument("--random", type=int, metavar="COUNT",
                   help="run COUNT random synthetic tables instead")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for --random (default {DEFAULT_SEED})")
    _add_output_flags(p)
    p.set_defaults(func=cmd_blowup_check)

    p = sub.add_parser("hrr", help="Riemann-Roch Euler characteristics")
    hrr_sub = p.add_subparsers(dest="mode", required=True)
    ph = hrr_sub.add_parser("cp", help="twisted Hodge sheaves on projective space")
    ph.add_argument("--n", type=int, required=True, help="ambient dimension")
    ph.add_argument("--p", type=int, required=True, help="form degree")
    ph.add_argument("--twist", type=int, default=0, help="line-bundle twist")
    _add_output_flags(ph)
    ph.set_defaults(func=cmd_hrr_cp)

    p = sub.add_parser("hodge", help="Hodge diamond bookkeeping")
    hodge_sub = p.add_subparsers(dest="mode", required=True)
    pb = hodge_sub.add_parser("bundle", help="projective bundle diamond")
    pb.add_argument("--base", required=True,
                    help="builtin name (point, cpN) or diamond JSON file")
    pb.add_argument("--fiber-dim", type=int, required=True)
    _add_output_flags(pb)
    pb.set_defaults(func=cmd_hodge_bundle)
    pl = hodge_sub.add_parser("blowup", help="blow-up diamond")
    pl.add_argument("--x", required=True, help="ambient diamond (name or file)")
    pl.add_argument("--y", required=True, help="center diamond (name or file)")
    pl.add_argument("--codim", type=int, required=True)
    _add_output_flags(pl)
    pl.set_defaults(func=cmd_hodge_blowup)
    pco = hodge_sub.add_parser("correction", help="normalization correction term")
    pco.add_argument("--diamond", required=True, help="diamond (name or file)")
    _add_output_flags(pco)
    pco.set_defaults(func=cmd_hodge_correction)
    ple = hodge_sub.add_parser("ledger", help="determinant-line exponent identities")
    ple.add_argument("--diamond", help="diamond (name or file)")
    ple.add_argument("--random", type=int, metavar="COUNT",
                     help="check COUNT random symmetric diamonds instead")
    ple.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_output_flags(ple)
    ple.set_defaults(func=cmd_hodge_ledger)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _emit(report, args)


if __name__ == "__main__":
    sys.exit(main())
