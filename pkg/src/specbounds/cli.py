"""Command-line interface: geom, spectrum, bound, verify, lemmas.

Numbers are printed with 17 significant digits. Exit status is 0 on
success, 1 when a strict verification row (or a lemma check) fails and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

from . import lemmas
from .bounds import (
    FAMILY_ALIASES,
    POLY_FAMILIES,
    STOKES_FAMILIES,
    BoundRequest,
    HypothesisWarning,
    Validity,
    bound,
)
from .geometry import Domain, DomainError, GeometrySummary, parse_domain, rearrangement_constants, summarize
from .spectra import exact_spectrum, fd_spectrum

CSV_HEADER = ["domain", "operator", "l", "k", "method", "eigen_sum", "family", "bound", "margin", "satisfied", "validity"]
LEMMA_SUITES = ("polynomial", "delta", "profile", "ramp-comparison", "fourier-density")
# families whose value does not involve the moment of inertia
INERTIA_FREE = {"levine_protter", "berezin_li_yau", "ilyin_bly", "power_sum", "power_sum_two_term", "neg_power_sum"}
LAPLACIAN_FAMILIES = ("berezin_li_yau", "melas", "yolcu_yolcu", "four_term")


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.17g}"


@dataclass(frozen=True)
class VerificationRow:
    domain: str
    operator: str
    l: int
    k: int
    method: str
    eigen_sum: float
    family: str
    bound: float
    margin: float
    satisfied: bool
    validity: str
    strict: bool

    def cells(self) -> list[str]:
        return [
            self.domain,
            self.operator,
            str(self.l),
            str(self.k),
            self.method,
            fmt(self.eigen_sum),
            self.family,
            fmt(self.bound),
            fmt(self.margin),
            "true" if self.satisfied else "false",
            self.validity,
        ]


# --- helpers ---------------------------------------------------------------------


def _domain_from_args(args) -> Domain:
    if getattr(args, "domain", None):
        return parse_domain(args.domain)
    if not getattr(args, "shape", None):
        raise UsageError("give --domain or --shape")
    parts = [f"shape={args.shape}"]
    for key in ("radius", "lengths", "axes", "vertices", "side"):
        val = getattr(args, key, None)
        if val is not None:
            parts.append(f"{key}={val}")
    if getattr(args, "dim", None) is not None:
        parts.append(f"n={args.dim}")
    return parse_domain(" ".join(parts))


def _add_domain_flags(p, required=False):
    p.add_argument("--domain", help="plain-text domain, e.g. 'shape=box lengths=1,2' or 'square'")
    p.add_argument("--shape", help="box, square, disk, ball, ellipse or polygon")
    p.add_argument("--radius")
    p.add_argument("--side")
    p.add_argument("--lengths", help="comma-separated edge lengths")
    p.add_argument("--axes", help="comma-separated semi-axes")
    p.add_argument("--vertices", help="x:y pairs separated by commas, counter-clockwise")
    p.add_argument("--dim", type=int, help="dimension of a ball")


def _parse_k_range(text: str) -> range:
    """'5' -> 5..5, '1:200' -> 1..200 (inclusive); an empty range is allowed."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return range(int(lo), int(hi) + 1)
        k = int(text)
        return range(k, k + 1)
    except ValueError:
        raise UsageError(f"bad k range {text!r}") from None


def _canonical(family: str) -> str:
    return FAMILY_ALIASES.get(family, family)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------------


def run_geom(args) -> int:
    dom = _domain_from_args(args)
    s = summarize(dom)
    c = rearrangement_constants(s)
    lines = [
        f"domain,{dom.label}",
        f"dimension,{s.dimension}",
        f"volume,{fmt(s.volume)}",
        f"inertia,{fmt(s.inertia)}",
        f"height_cap,{fmt(c.m)}",
        f"slope_cap,{fmt(c.lcap)}",
        f"stokes_height_cap,{fmt(c.m_s)}",
        f"stokes_slope_cap,{fmt(c.l_s)}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _spectrum(dom: Domain, l: int, k: int, method: str, h: float | None, grid: str):
    if method == "exact":
        return exact_spectrum(dom, l, k)
    if method == "fd":
        if h is None:
            raise UsageError("--method fd needs --h")
        return fd_spectrum(dom, l, h, k, grid=grid)
    raise UsageError(f"unknown method {method!r}")


def run_spectrum(args) -> int:
    dom = _domain_from_args(args)
    spec = _spectrum(dom, args.l, args.k, args.method, args.h, args.grid)
    _emit(spec.to_csv(), args.out)
    return 0


def run_bound(args) -> int:
    family = _canonical(args.family)
    if args.domain or args.shape:
        geom = summarize(_domain_from_args(args))
    else:
        if args.vol is None or args.n is None:
            raise UsageError("give a domain or both --n and --vol")
        if args.inertia is None:
            if family not in INERTIA_FREE:
                raise UsageError(f"{family} needs --inertia")
            inertia = 1.0  # unused by the inertia-free families
        else:
            inertia = args.inertia
        geom = GeometrySummary(args.vol, inertia, args.n)
    operator = "stokes" if family in STOKES_FAMILIES else "polyharmonic"
    try:
        req = BoundRequest(geom, args.k, args.l, operator, args.exponent)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", HypothesisWarning)
            bv = bound(family, req, as_printed=args.as_printed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    text = fmt(bv.value) + "\n"
    if args.verbose:
        text += f"direction,{bv.direction}\nvalidity,{bv.validity.value}\n"
        for e, c in bv.terms:
            text += f"term,{fmt(e)},{fmt(c)}\n"
    _emit(text, args.out)
    return 0


def verify_rows(dom: Domain, l: int, ks: range, families, method: str, h=None, grid="polar", fd_tolerance=0.05):
    """One VerificationRow per (k, family), sorted by k then family."""
    families = sorted({_canonical(f) for f in families})
    for fam in families:
        if fam not in POLY_FAMILIES:
            raise UsageError(f"verify supports polyharmonic families only, got {fam!r}")
    ks = [k for k in ks if k >= 1]
    if not ks:
        return []
    spec = _spectrum(dom, l, max(ks), method, h, grid)
    partial = spec.sums().partial_sums
    geom = summarize(dom)
    label = dom.label
    rows = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        for k in sorted(ks):
            for fam in families:
                bv = bound(fam, BoundRequest(geom, k, l))
                total = float(partial[k - 1])
                margin = total - bv.value
                strict = method == "exact" and bv.validity is Validity.EXACT
                if strict:
                    ok = margin >= 0
                else:
                    # FD sums and non-proven forms get a relative tolerance band
                    ok = margin >= -fd_tolerance * abs(bv.value)
                rows.append(
                    VerificationRow(label, "polyharmonic", l, k, spec.method_label, total, fam, bv.value, margin, ok, bv.validity.value, strict)
                )
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.cells())
    return buf.getvalue()


def write_plot_data(rows, directory: str):
    """Two-column (k, value) files: one per family plus the eigenvalue sums."""
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    series: dict[str, dict[int, float]] = {"eigen_sum": {}}
    for r in rows:
        series.setdefault(r.family, {})[r.k] = r.bound
        series["eigen_sum"][r.k] = r.eigen_sum
    for name, data in sorted(series.items()):
        lines = [f"{k} {fmt(v)}" for k, v in sorted(data.items())]
        (path / f"{name}.dat").write_text("\n".join(lines) + ("\n" if lines else ""))


def run_verify(args) -> int:
    dom = _domain_from_args(args)
    families = args.family or (LAPLACIAN_FAMILIES if args.l == 1 else ("levine_protter", "four_term"))
    rows = verify_rows(dom, args.l, _parse_k_range(args.k), families, args.method, args.h, args.grid, args.fd_tolerance)
    _emit(rows_to_csv(rows), args.out)
    if args.plot_dir:
        write_plot_data(rows, args.plot_dir)
    return 1 if any(r.strict and not r.satisfied for r in rows) else 0


def lemma_reports(suite: str, seed: int, samples: int | None):
    if suite == "polynomial":
        return [lemmas.polynomial_sweep(samples or 10_000, seed)]
    if suite == "delta":
        return lemmas.delta_suite()
    if suite == "profile":
        return [lemmas.profile_sweep(samples or 1000, seed)]
    if suite == "ramp-comparison":
        return lemmas.ramp_sweep(samples or 500, seed)
    if suite == "fourier-density":
        return lemmas.fourier_density_box(samples or 5)[1]
    if suite == "all":
        out = []
        for name in LEMMA_SUITES:
            out.extend(lemma_reports(name, seed, None))
        return out
    raise UsageError(f"unknown lemma suite {suite!r}")


def run_lemmas(args) -> int:
    reports = lemma_reports(args.suite, args.seed, args.samples)
    records = [r.to_record() for r in reports]
    _emit(json.dumps(records, indent=2, default=float) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


# --- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specbounds", description="Eigenvalue-sum bounds and spectra for clamped polyharmonic problems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geom", help="volume, inertia and Fourier-density caps of a domain")
    _add_domain_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=run_geom)

    p = sub.add_parser("spectrum", help="first k eigenvalues as CSV")
    _add_domain_flags(p)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("exact", "fd"), default="exact")
    p.add_argument("--h", type=float)
    p.add_argument("--grid", choices=("polar", "cartesian"), default="polar")
    p.add_argument("--out")
    p.set_defaults(func=run_spectrum)

    names = sorted(set(POLY_FAMILIES) | set(STOKES_FAMILIES) | set(FAMILY_ALIASES) | {"power_sum", "power_sum_two_term", "neg_power_sum"})
    p = sub.add_parser("bound", help="evaluate one bound family")
    _add_domain_flags(p)
    p.add_argument("--family", required=True, choices=names)
    p.add_argument("--n", type=int)
    p.add_argument("--vol", type=float)
    p.add_argument("--inertia", type=float)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exponent", type=float, help="q for power_sum, p for neg_power_sum")
    p.add_argument("--as-printed", action="store_true", help="use the uncorrected printed coefficients")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=run_bound)

    p = sub.add_parser("verify", help="compare eigenvalue sums with bounds over a k range")
    _add_domain_flags(p)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--k", default="1:200", help="k or kmin:kmax (inclusive)")
    p.add_argument("--family", action="append", choices=sorted(set(POLY_FAMILIES) | {a for a, f in FAMILY_ALIASES.items() if f in POLY_FAMILIES}))
    p.add_argument("--method", choices=("exact", "fd"), default="exact")
    p.add_argument("--h", type=float)
    p.add_argument("--grid", choices=("polar", "cartesian"), default="polar")
    p.add_argument("--fd-tolerance", type=float, default=0.05, help="relative band for non-strict rows")
    p.add_argument("--plot-dir", help="write two-column (k, value) files per family here")
    p.add_argument("--out")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("lemmas", help="run the auxiliary inequality checks, JSON output")
    p.add_argument("--suite", default="all", help="one of " + ", ".join(LEMMA_SUITES + ("all",)))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int)
    p.add_argument("--out")
    p.set_defaults(func=run_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
