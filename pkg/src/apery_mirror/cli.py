"""Command-line front end.

    apery-mirror expand OBJECT [--family beukers|dwork] [--order N] [--format json|csv] [--no-cache]
    apery-mirror verify SUITE [--order N] [--no-cache]
    apery-mirror instantons [--family beukers|dwork] [--order N] [--check-period] [--format json|csv]
    apery-mirror apery [--order N] [--format json|csv]

Exit status: 0 success, 1 failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import modular
from .apery import apery_sequences, zeta3_convergent
from .frobenius import CanonicalBasis
from .instanton import InstantonTable, lambert_extract
from .mirror import beukers_tilde_h3, build_mirror, family, yukawa_bp_normalized, yukawa_D, yukawa_variant
from .series import PowerSeries
from .verify import SUITES, run_suite

log = logging.getLogger(__name__)

CACHE_ENV = "APERY_MIRROR_CACHE"

OBJECTS = ("w0", "h1", "h2", "h3", "T", "F", "H", "theta-hex", "phi-of-q", "q-of-phi", "rho",
           "yukawa", "yukawa-variant", "yukawa-bp-normalized")
BEUKERS_ONLY = {"T", "F", "H", "theta-hex", "yukawa-variant"}
PHI_OBJECTS = {"w0", "h1", "h2", "h3", "q-of-phi", "rho"}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# documents
# ---------------------------------------------------------------------------

def _pair(c: Fraction) -> list[str]:
    c = Fraction(c)
    return [str(c.numerator), str(c.denominator)]


def _unpair(p) -> Fraction:
    return Fraction(int(p[0]), int(p[1]))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass
class SeriesDocument:
    name: str
    variable: str
    order: int
    coefficients: list
    provenance: dict = field(default_factory=dict)

    @classmethod
    def from_series(cls, name: str, s: PowerSeries, provenance: dict) -> "SeriesDocument":
        return cls(name, s.var, s.order, [_pair(c) for c in s.coeffs], dict(provenance))

    def to_series(self) -> PowerSeries:
        return PowerSeries([_unpair(p) for p in self.coefficients], self.order, self.variable)

    def to_dict(self) -> dict:
        return {"name": self.name, "variable": self.variable, "order": self.order,
                "coefficients": self.coefficients, "provenance": self.provenance}

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "SeriesDocument":
        d = json.loads(text)
        return cls(d["name"], d["variable"], d["order"], [list(p) for p in d["coefficients"]],
                   d.get("provenance", {}))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "numerator", "denominator"])
        for i, (num, den) in enumerate(self.coefficients):
            w.writerow([i, num, den])
        return buf.getvalue()


def instanton_document(t: InstantonTable, fam: str, order: int) -> dict:
    return {
        "name": "instantons",
        "family": fam,
        "order": order,
        "c0": _pair(t.c0),
        "N": [{"k": k, "value": _pair(v), "integral": flag}
              for k, (v, flag) in enumerate(zip(t.N, t.integral_flags), 1)],
        "integral": t.all_integral,
        "period": t.detected_period,
        "period_status": "detected" if t.detected_period is not None else "undetermined",
        "verified_to": t.verified_to,
    }


# ---------------------------------------------------------------------------
# cache of canonical bases
# ---------------------------------------------------------------------------

def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "apery-mirror"


def _cache_path(fam: str, order: int) -> Path:
    return cache_dir() / f"basis-{fam}-{order}.json"


def load_basis(fam: str, order: int, use_cache: bool = True) -> CanonicalBasis:
    path = _cache_path(fam, order)
    if use_cache and path.exists():
        try:
            data = json.loads(path.read_text())
            series = tuple(SeriesDocument.from_json(canonical_json(d)).to_series() for d in data["series"])
            return CanonicalBasis(series, fam)
        except (OSError, ValueError, KeyError) as exc:
            log.warning("ignoring unreadable cache file %s: %s", path, exc)
    basis = family(fam).basis(order)
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            docs = [SeriesDocument.from_series(f"h{j}", s, {"family": fam}).to_dict()
                    for j, s in enumerate(basis.series)]
            tmp = path.with_suffix(".tmp")
            tmp.write_text(canonical_json({"family": fam, "order": order, "series": docs}))
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("could not write cache file %s: %s", path, exc)
    return basis


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def compute_object(name: str, fam: str, order: int, use_cache: bool = True) -> PowerSeries:
    if name not in OBJECTS:
        raise UsageError(f"unknown object {name!r}; choose from {', '.join(OBJECTS)}")
    if name in BEUKERS_ONLY and fam != "beukers":
        raise UsageError(f"object {name!r} is only defined for the beukers family")
    if order < 0:
        raise UsageError("order must be nonnegative")
    n = max(order, 1)
    if name == "T":
        return modular.T_series(n).truncate(order)
    if name == "F":
        return modular.F_series(n).truncate(order)
    if name == "H":
        return modular.h_series(n).truncate(order)
    if name == "theta-hex":
        return modular.hexagonal_theta(n).truncate(order)
    extra = 1 if name == "yukawa-bp-normalized" else 0
    basis = load_basis(fam, n + extra, use_cache)
    if name in ("w0", "h1", "h2", "h3"):
        return basis.series[0 if name == "w0" else int(name[1])].truncate(order)
    m = build_mirror(basis)
    if name == "phi-of-q":
        out = m.phi_of_q
    elif name == "q-of-phi":
        out = m.q_of_phi
    elif name == "rho":
        out = m.rho
    elif name == "yukawa":
        out = yukawa_D(m)
    elif name == "yukawa-variant":
        out = yukawa_variant(m, beukers_tilde_h3(n))
    else:
        out = yukawa_bp_normalized(m)
    return out.truncate(order)


def cmd_expand(args) -> int:
    s = compute_object(args.object, args.family, args.order, not args.no_cache)
    var = "phi" if args.object in PHI_OBJECTS else "q"
    doc = SeriesDocument.from_series(args.object, s.with_var(var), {
        "family": args.family if args.object not in BEUKERS_ONLY else "beukers",
        "normalization": "hatted: (2 pi i)^j absorbed, d/dtau -> q d/dq",
    })
    sys.stdout.write(doc.to_json() + "\n" if args.format == "json" else doc.to_csv())
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.order)
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        print(line)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def cmd_instantons(args) -> int:
    if args.order < 1:
        raise UsageError("instantons need --order of at least 1")
    basis = load_basis(args.family, args.order, not args.no_cache)
    t = lambert_extract(yukawa_D(build_mirror(basis))).with_period()
    doc = instanton_document(t, args.family, args.order)
    if args.format == "json":
        sys.stdout.write(canonical_json(doc) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "numerator", "denominator"])
        for entry in doc["N"]:
            w.writerow([entry["k"], *entry["value"]])
        sys.stdout.write(buf.getvalue())
    if args.check_period and (t.detected_period is None or not t.all_integral):
        print("instanton check failed: "
              + ("period undetermined" if t.detected_period is None else "non-integral entries"),
              file=sys.stderr)
        return 1
    return 0


def cmd_apery(args) -> int:
    n = max(args.order, 1)
    pair = apery_sequences(n)
    ratio, err = zeta3_convergent(n)
    if args.format == "json":
        doc = {"name": "apery", "n_max": n, "A": [str(a) for a in pair.A],
               "B": [_pair(b) for b in pair.B], "convergent": _pair(ratio),
               "zeta3_error_bound": str(err)}
        sys.stdout.write(canonical_json(doc) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "A", "B_numerator", "B_denominator"])
        for i, (a, b) in enumerate(zip(pair.A, pair.B)):
            w.writerow([i, a, *_pair(b)])
        sys.stdout.write(buf.getvalue())
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="apery-mirror", description="Exact series for Apery's numbers and their mirror data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt=True, fam=True):
        if fam:
            sp.add_argument("--family", choices=("beukers", "dwork"), default="beukers")
        sp.add_argument("--order", type=int, default=10)
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--no-cache", action="store_true", help="do not read or write the basis cache")

    e = sub.add_parser("expand", help="emit an exact expansion")
    e.add_argument("object")
    common(e)
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", help="run an invariant suite")
    v.add_argument("suite", choices=("all", *SUITES))
    common(v, fmt=False, fam=False)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("instantons", help="instanton numbers of the Yukawa coupling")
    common(i)
    i.add_argument("--check-period", action="store_true")
    i.set_defaults(func=cmd_instantons)

    a = sub.add_parser("apery", help="Apery's sequences and the zeta(3) convergent")
    common(a, fam=False)
    a.set_defaults(func=cmd_apery)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"apery-mirror: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
