"""Command line front end: analyze, builtin, discretize, sweep.

Reports are single JSON documents with the frozen top-level keys
``input``, ``spectrum``, ``classification``, ``grams``, ``warnings``
(sweeps use their own schema, see :class:`SweepResult`).  All numbers are
serialized with 17 significant digits, so identical invocations produce
byte-identical output and matrix files round-trip exactly.

Exit codes: 0 analysis ran (whatever the verdicts), 2 input could not be
parsed, 3 dimensions are inconsistent.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import families, inner, metrics, schrodinger
from .linalg import (
    DimensionMismatch,
    MatrixFormatError,
    Spectrum,
    ToleranceConfig,
    as_matrix,
    eigendecompose,
    load_matrix,
    matrix_to_doc,
    save_matrix,
    to_json_text,
)

# Matrices and grams up to this dimension are embedded in reports;
# larger ones are summarized by a content fingerprint.
EMBED_LIMIT = 16

SECULAR_TOL = 1e-8


class InvalidRange(Exception):
    """Raised for an empty or inverted sweep range."""


def fingerprint(m) -> str:
    """Short content hash of a matrix (shape header + raw complex128 bytes)."""
    m = as_matrix(m)
    digest = hashlib.sha256()
    digest.update(f"{m.shape[0]}:".encode())
    digest.update(np.ascontiguousarray(m).tobytes())
    return digest.hexdigest()[:16]


def _matrix_doc(m) -> dict:
    m = as_matrix(m)
    if m.shape[0] <= EMBED_LIMIT:
        doc = matrix_to_doc(m)
        doc["fingerprint"] = fingerprint(m)
        return doc
    return {"n": int(m.shape[0]), "fingerprint": fingerprint(m)}


def _finite_or_none(x: float):
    return float(x) if np.isfinite(x) else None


def _spectrum_doc(spec: Spectrum | None) -> dict | None:
    if spec is None:
        return None
    reality = []
    for tag in spec.reality:
        entry = {"tag": tag.kind}
        if tag.partner is not None:
            entry["partner"] = int(tag.partner)
        reality.append(entry)
    return {
        "eigenvalues": [complex(p.eigenvalue) for p in spec.pairs],
        "residuals": [float(p.residual) for p in spec.pairs],
        "reality": reality,
        "diagonalizer_condition": _finite_or_none(spec.diagonalizer_condition),
        "flags": list(spec.flags),
    }


def _metric_report_doc(rep: metrics.MetricReport) -> dict:
    return {
        "name": rep.name,
        "provenance": rep.provenance,
        "residual": _finite_or_none(rep.residual),
        "holds": rep.holds,
        "metric": _matrix_doc(rep.metric),
    }


def _classification_doc(report: metrics.ClassificationReport) -> dict:
    doc = {
        "hermitian": {"holds": report.hermitian[0], "residual": report.hermitian[1]},
        "self_adjoint": {"holds": report.self_adjoint[0], "residual": report.self_adjoint[1]},
        "pseudo_real": [_metric_report_doc(r) for r in report.pseudo_real],
        "pseudo_adjoint": [_metric_report_doc(r) for r in report.pseudo_adjoint],
        "pseudo_hermitian": [_metric_report_doc(r) for r in report.pseudo_hermitian],
        "pt_symmetric": None,
        "reality_checks": [
            {
                "eigen_index": c.eigen_index,
                "metric": c.metric_name,
                "epsilon": complex(c.epsilon),
                "colinearity_residual": c.colinearity_residual,
                "holds": c.holds,
            }
            for c in report.reality_checks
        ],
    }
    if report.pt_symmetric is not None:
        name, residual, holds = report.pt_symmetric
        doc["pt_symmetric"] = {"parity": name, "residual": residual, "holds": holds}
    return doc


def _gram_doc(rep: inner.GramReport, metric_name: str | None) -> dict:
    doc = {
        "kind": rep.kind,
        "metric": metric_name,
        "offdiag_max": rep.offdiag_max,
        "norms": [complex(x) for x in rep.norms],
        "signature": list(rep.signature),
    }
    if rep.gram.shape[0] <= EMBED_LIMIT:
        doc["gram"] = matrix_to_doc(rep.gram)
    return doc


def build_report(h, candidates, tol: ToleranceConfig, input_doc: dict,
                 parity=None, parity_name: str = "reversal",
                 spectrum: Spectrum | None = None,
                 gram_spectrum: Spectrum | None = None) -> dict:
    """Classify ``h`` and assemble the full report document.

    ``gram_spectrum`` selects the states the Gram reports run over
    (defaults to the classification spectrum).
    """
    report = metrics.classify(h, candidates, tol, parity=parity,
                              parity_name=parity_name, spectrum=spectrum)
    warnings = list(report.warnings)
    shown = gram_spectrum if gram_spectrum is not None else report.spectrum

    grams: list[dict] = []
    if shown is not None and len(shown) > 0:
        states = [p.eigenvector for p in shown.pairs]
        eigenvalues = [p.eigenvalue for p in shown.pairs]
        grams.append(_gram_doc(inner.hermitian_gram(states, tol), None))
        grams.append(_gram_doc(inner.transpose_gram(states, eigenvalues, tol), None))
        for rep in report.pseudo_hermitian:
            if rep.holds:
                grams.append(_gram_doc(
                    inner.eta_gram(states, rep.metric, eigenvalues, tol), rep.name))
        if report.pt_symmetric is not None:
            name = report.pt_symmetric[0]
            par = as_matrix(parity) if parity is not None else metrics.default_parity(h.shape[0])
            grams.append(_gram_doc(inner.pt_gram(states, par, eigenvalues, tol), name))

    return {
        "input": input_doc,
        "spectrum": _spectrum_doc(shown),
        "classification": _classification_doc(report),
        "grams": grams,
        "warnings": warnings,
    }


# ---------------------------------------------------------------------------
# Parameter sweeps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepPointMetric:
    holds: bool
    canonical: np.ndarray


@dataclass(frozen=True)
class SweepPoint:
    value: float
    max_imag: float
    spectrum_real: bool
    metrics: dict


@dataclass(frozen=True)
class SweepResult:
    """Family sweep over one parameter.

    ``breaking_point`` brackets the first flip of the all-real flag (an
    interval, not a point: at the coalescence the pairing is
    ill-conditioned).  A metric is *secular* when it certifies at every
    real-phase point and its canonical normalization is constant across
    them to within ``SECULAR_TOL``.
    """

    family: str
    parameter: str
    fixed: dict
    points: tuple[SweepPoint, ...]
    breaking_point: tuple[float, float] | None
    secular_metrics: tuple[str, ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(p.value for p in self.points)


def sweep_values(start: float, stop: float, step: float) -> np.ndarray:
    if step <= 0:
        raise InvalidRange("step must be positive")
    if stop < start:
        raise InvalidRange("empty range")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def sweep_family(family: str, parameter: str, values, fixed: dict,
                 tol: ToleranceConfig | None = None) -> SweepResult:
    """Evaluate a builtin family along one parameter."""
    tol = tol or ToleranceConfig()
    values = np.asarray(list(values), dtype=float)
    if values.size == 0:
        raise InvalidRange("empty range")
    if np.any(np.diff(values) <= 0):
        raise InvalidRange("values must be strictly increasing")

    points: list[SweepPoint] = []
    for value in values:
        assignments = dict(fixed)
        assignments[parameter] = float(value)
        h, params, candidates, _ = families.instantiate_builtin(family, assignments)
        spec = eigendecompose(h, tol)
        scale = max(1.0, float(np.linalg.norm(h)))
        max_imag = float(np.abs(spec.eigenvalues.imag).max())
        all_real = all(tag.kind == "real" for tag in spec.reality)

        found: dict[str, SweepPointMetric] = {}
        for name, metric in candidates.items():
            reports = [
                metrics.check_pseudo_real(h, metric, tol, name=name),
                metrics.check_pseudo_adjoint(h, metric, tol, name=name),
                metrics.check_pseudo_hermitian(h, metric, tol, name=name),
            ]
            holds = any(r.holds for r in reports)
            found[name] = SweepPointMetric(holds, reports[0].metric)
        try:
            d = metrics.build_diagonalizer(spec, tol)
            for name, construct, check in (
                ("from_D_rho", metrics.rho_from_diagonalizer, metrics.check_pseudo_real),
                ("from_D_mu", metrics.mu_from_diagonalizer, metrics.check_pseudo_adjoint),
                ("from_D_eta_plus", metrics.eta_plus_from_diagonalizer,
                 metrics.check_pseudo_hermitian),
            ):
                rep = check(h, construct(d), tol, name=name, provenance="from_diagonalizer")
                found[name] = SweepPointMetric(rep.holds, rep.metric)
        except (metrics.NearDefective, metrics.SingularMatrix):
            pass

        points.append(SweepPoint(float(value), max_imag, bool(all_real), found))

    breaking = None
    for i in range(len(points) - 1):
        if points[i].spectrum_real != points[i + 1].spectrum_real:
            breaking = (points[i].value, points[i + 1].value)
            break

    real_points = [p for p in points if p.spectrum_real]
    secular: list[str] = []
    if real_points:
        names = sorted({name for p in real_points for name in p.metrics})
        for name in names:
            entries = [p.metrics.get(name) for p in real_points]
            if any(e is None or not e.holds for e in entries):
                continue
            ref = entries[0].canonical
            if all(e.canonical.shape == ref.shape
                   and float(np.abs(e.canonical - ref).max()) <= SECULAR_TOL
                   for e in entries[1:]):
                secular.append(name)

    return SweepResult(
        family=family,
        parameter=parameter,
        fixed=dict(fixed),
        points=tuple(points),
        breaking_point=breaking,
        secular_metrics=tuple(secular),
    )


def _sweep_doc(result: SweepResult) -> dict:
    return {
        "family": result.family,
        "parameter": result.parameter,
        "fixed": result.fixed,
        "values": list(result.values),
        "points": [
            {
                "value": p.value,
                "max_imag": p.max_imag,
                "spectrum_real": p.spectrum_real,
                "metrics": {
                    name: {"holds": m.holds, "canonical": _matrix_doc(m.canonical)}
                    for name, m in p.metrics.items()
                },
            }
            for p in result.points
        ],
        "breaking_point": list(result.breaking_point) if result.breaking_point else None,
        "secular_metrics": list(result.secular_metrics),
    }


# ---------------------------------------------------------------------------
# Argument handling
# ---------------------------------------------------------------------------


def _tol_from_args(args) -> ToleranceConfig:
    return ToleranceConfig(
        residual_tol=args.tol_residual,
        reality_tol=args.tol_reality,
        metric_tol=args.tol_metric,
    )


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol-residual", type=float, default=1e-10,
                        help="relative eigenpair residual tolerance")
    parser.add_argument("--tol-reality", type=float, default=1e-8,
                        help="relative imaginary-part tolerance for a real eigenvalue")
    parser.add_argument("--tol-metric", type=float, default=1e-8,
                        help="relative similarity residual for a holding metric")
    parser.add_argument("--json", metavar="PATH", default=None,
                        help="write the report here instead of stdout")


def _parse_metric_specs(specs, kind: str) -> dict:
    out = {}
    for spec in specs or ():
        if "=" in spec:
            name, _, path = spec.partition("=")
        else:
            path = spec
            name = Path(spec).stem
        if not name:
            raise MatrixFormatError(f"empty metric name in --{kind} {spec!r}")
        out[name] = load_matrix(path)
    return out


def _parse_assignments(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        name, eq, raw = pair.partition("=")
        if not eq or not name:
            raise MatrixFormatError(f"expected NAME=VALUE, got {pair!r}")
        try:
            out[name] = float(raw)
        except ValueError as exc:
            raise MatrixFormatError(f"parameter {name!r} has non-numeric value {raw!r}") from exc
    return out


def _emit(args, doc: dict) -> None:
    text = to_json_text(doc) + "\n"
    if args.json:
        Path(args.json).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    h = load_matrix(args.matrix)
    candidates = {}
    for kind in ("rho", "mu", "eta"):
        candidates.update(_parse_metric_specs(getattr(args, kind), kind))
    for name, metric in candidates.items():
        if metric.shape != h.shape:
            raise DimensionMismatch(
                f"metric '{name}' is {metric.shape[0]}x{metric.shape[0]}, "
                f"matrix is {h.shape[0]}x{h.shape[0]}"
            )
    parity = None
    parity_name = "reversal"
    if args.parity:
        parity = load_matrix(args.parity)
        parity_name = Path(args.parity).stem
        if parity.shape != h.shape:
            raise DimensionMismatch("parity matrix dimension mismatch")
    tol = _tol_from_args(args)
    input_doc = {
        "source": args.matrix,
        "n": int(h.shape[0]),
        "matrix": _matrix_doc(h),
        "candidates": sorted(candidates),
        "tolerances": {"residual": tol.residual_tol, "reality": tol.reality_tol,
                       "metric": tol.metric_tol},
    }
    _emit(args, build_report(h, candidates, tol, input_doc,
                             parity=parity, parity_name=parity_name))
    return 0


def _cmd_builtin(args) -> int:
    assignments = _parse_assignments(args.params)
    h, params, candidates, extras = families.instantiate_builtin(args.name, assignments)
    if args.matrix:
        save_matrix(args.matrix, h)
    tol = _tol_from_args(args)
    input_doc = {
        "source": f"builtin:{args.name}",
        "parameters": params,
        "n": int(h.shape[0]),
        "matrix": _matrix_doc(h),
        "candidates": sorted(candidates),
        "tolerances": {"residual": tol.residual_tol, "reality": tol.reality_tol,
                       "metric": tol.metric_tol},
    }
    input_doc.update(extras)
    _emit(args, build_report(h, candidates, tol, input_doc))
    return 0


_FAMILY_DEFAULT_MASS = {"morse": 0.5}


def _cmd_discretize(args) -> int:
    family = args.family.replace("-", "_")
    params = {}
    for name in ("alpha", "beta", "gamma", "C", "D", "g"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    if args.k is not None:
        params["k"] = args.k
    pot = schrodinger.PotentialSpec(family, params, shift=args.shift)

    x_max = args.xmax
    x_min = args.xmin if args.xmin is not None else -x_max
    mass = args.mass if args.mass is not None else _FAMILY_DEFAULT_MASS.get(family, 1.0)
    grid = schrodinger.GridSpec(x_min, x_max, args.n, mass=mass)

    h = schrodinger.build_hamiltonian(pot, grid)
    if args.matrix:
        save_matrix(args.matrix, h)

    tol = _tol_from_args(args)
    full = eigendecompose(h, tol)
    bound = schrodinger.bound_spectrum(h, grid, args.states, tol)

    candidates = {"identity": np.eye(grid.n_points, dtype=np.complex128)}
    parity = None
    parity_name = "reversal"
    if grid.symmetric:
        parity = schrodinger.build_operators(grid).Par
        parity_name = "grid_reversal"
        candidates["parity"] = parity
    gauge = schrodinger.gauge_metric(pot, grid)
    if gauge is not None:
        candidates[gauge[0]] = gauge[1]

    input_doc = {
        "source": f"discretize:{family}",
        "parameters": params,
        "shift": args.shift,
        "grid": {"x_min": grid.x_min, "x_max": grid.x_max,
                 "n_points": grid.n_points, "mass": grid.mass},
        "states": args.states,
        "n": int(h.shape[0]),
        "matrix": _matrix_doc(h),
        "candidates": sorted(candidates),
        "tolerances": {"residual": tol.residual_tol, "reality": tol.reality_tol,
                       "metric": tol.metric_tol},
    }
    _emit(args, build_report(h, candidates, tol, input_doc,
                             parity=parity, parity_name=parity_name,
                             spectrum=full, gram_spectrum=bound))
    return 0


def _cmd_sweep(args) -> int:
    fixed = _parse_assignments(args.fixed)
    values = sweep_values(getattr(args, "from"), args.to, args.step)
    tol = _tol_from_args(args)
    result = sweep_family(args.family, args.parameter, values, fixed, tol)
    _emit(args, _sweep_doc(result))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudoherm",
        description="Symmetry analysis of finite-dimensional complex Hamiltonians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a matrix from an interchange file")
    p.add_argument("--matrix", required=True, help="input matrix file")
    p.add_argument("--rho", action="append", metavar="[NAME=]PATH",
                   help="candidate pseudo-reality metric (repeatable)")
    p.add_argument("--mu", action="append", metavar="[NAME=]PATH",
                   help="candidate pseudo-adjointness metric (repeatable)")
    p.add_argument("--eta", action="append", metavar="[NAME=]PATH",
                   help="candidate pseudo-Hermiticity metric (repeatable)")
    p.add_argument("--parity", metavar="PATH", default=None,
                   help="override the default reversal parity")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("builtin", help="instantiate and analyze a builtin family")
    p.add_argument("name", choices=sorted(families.BUILTINS))
    p.add_argument("params", nargs="*", metavar="NAME=VALUE")
    p.add_argument("--matrix", metavar="PATH", default=None,
                   help="also write the matrix in interchange format")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_builtin)

    p = sub.add_parser("discretize", help="discretize a 1-D potential family and analyze it")
    p.add_argument("--family", required=True,
                   choices=[f.replace("_", "-") for f in schrodinger.FAMILIES])
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--C", type=float, default=None)
    p.add_argument("--D", type=float, default=None)
    p.add_argument("--g", type=float, default=None)
    p.add_argument("--k", type=int, default=None, help="odd monomial exponent")
    p.add_argument("--shift", type=float, default=0.0, help="imaginary coordinate shift")
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--xmin", type=float, default=None, help="defaults to -xmax")
    p.add_argument("--n", type=int, default=512, help="number of interior grid points")
    p.add_argument("--mass", type=float, default=None,
                   help="particle mass (default 1; morse defaults to 1/2)")
    p.add_argument("--states", type=int, default=4, help="bound states to keep")
    p.add_argument("--matrix", metavar="PATH", default=None,
                   help="also write the discretized matrix")
    _add_common_flags(p)
    p.set_defaults(func=_cmd_discretize)

    p = sub.add_parser("sweep", help="sweep one parameter of a builtin family")
    p.add_argument("family", choices=sorted(families.BUILTINS))
    p.add_argument("parameter")
    p.add_argument("fixed", nargs="*", metavar="NAME=VALUE")
    p.add_argument("--from", type=float, required=True, dest="from")
    p.add_argument("--to", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    _add_common_flags(p)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MatrixFormatError, families.UnknownBuiltin, families.MissingParameter,
            schrodinger.InvalidGrid, schrodinger.ParameterOutOfRange,
            InvalidRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
