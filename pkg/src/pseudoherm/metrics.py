"""Symmetry classification of complex Hamiltonians and metric construction.

A matrix H is called

* pseudo-real under an invertible rho        when  rho H rho^-1 = conj(H),
* pseudo-adjoint under an invertible mu      when  mu H mu^-1 = H^T,
* pseudo-Hermitian under an invertible eta   when  eta H eta^-1 = H^dagger.

Pseudo-reality is the necessary condition for a real spectrum; an
eigenvalue is actually real exactly when its eigenvector additionally
satisfies the colinearity condition rho^-1 conj(psi) = eps * psi (checked
by :func:`eigenstate_reality_check`).  When H is diagonalizable by D the
three metrics can be constructed directly:

* rho  = conj(D) D^-1           (real spectrum; satisfies rho conj(rho) = 1),
* mu   = (D D^T)^-1             (any diagonalizable H; symmetric),
* eta+ = (D D^dagger)^-1        (real spectrum; Hermitian positive definite),

and a pseudo-real + pseudo-adjoint pair composes into a pseudo-Hermiticity
metric eta = (mu rho^-1)^T.

Metrics are meaningful only up to a nonzero complex scalar, so reports
store them canonically normalized: the first nonzero entry in row-major
order is scaled to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    ConvergenceFailure,
    DimensionMismatch,
    NearDefective,
    SingularMatrix,
    Spectrum,
    ToleranceConfig,
    ZeroVector,
    as_matrix,
    as_vector,
    build_diagonalizer,
    eigendecompose,
    fro,
    inverse,
    similarity_residual,
)

PSEUDO_REAL = "pseudo_real"
PSEUDO_ADJOINT = "pseudo_adjoint"
PSEUDO_HERMITIAN = "pseudo_hermitian"

# Entries at or below this fraction of the largest magnitude count as zero
# when locating the canonical normalization pivot.
CANONICAL_ZERO_REL = 1e-12


@dataclass(frozen=True)
class MetricReport:
    """Outcome of one similarity check.

    ``metric`` is stored canonically normalized; ``residual`` is the
    relative similarity residual against the kind's target and the check
    holds when it does not exceed ``metric_tol``.
    """

    kind: str
    name: str
    metric: np.ndarray
    residual: float
    holds: bool
    provenance: str


@dataclass(frozen=True)
class RealityCheck:
    """Colinearity test rho^-1 conj(psi) = eps * psi for one eigenvector."""

    eigen_index: int
    metric_name: str
    epsilon: complex
    colinearity_residual: float
    holds: bool


@dataclass(frozen=True)
class ClassificationReport:
    """Full symmetry verdict for one Hamiltonian."""

    hermitian: tuple[bool, float]
    self_adjoint: tuple[bool, float]
    pseudo_real: tuple[MetricReport, ...]
    pseudo_adjoint: tuple[MetricReport, ...]
    pseudo_hermitian: tuple[MetricReport, ...]
    pt_symmetric: tuple[str, float, bool] | None
    spectrum: Spectrum | None
    reality_checks: tuple[RealityCheck, ...]
    warnings: tuple[str, ...] = ()


def canonical_normalize(m) -> np.ndarray:
    """Scale so the first nonzero entry (row-major) equals 1.

    Entries below ``CANONICAL_ZERO_REL`` times the largest magnitude are
    treated as zero, so tiny numerical residue cannot become the pivot.
    """
    m = as_matrix(m)
    flat = m.reshape(-1)
    top = float(np.abs(flat).max())
    if top == 0.0:
        raise SingularMatrix("zero matrix has no canonical normalization")
    idx = int(np.argmax(np.abs(flat) > CANONICAL_ZERO_REL * top))
    return m / flat[idx]


def _check(kind: str, h, metric, target, tol, name, provenance) -> MetricReport:
    residual = similarity_residual(metric, h, target)
    return MetricReport(
        kind=kind,
        name=name,
        metric=canonical_normalize(metric),
        residual=float(residual),
        holds=bool(residual <= tol.metric_tol),
        provenance=provenance,
    )


def check_pseudo_real(h, rho, tol: ToleranceConfig | None = None,
                      name: str = "rho", provenance: str = "user") -> MetricReport:
    """Test rho H rho^-1 = conj(H)."""
    h = as_matrix(h)
    return _check(PSEUDO_REAL, h, rho, h.conj(), tol or DEFAULT_TOL, name, provenance)


def check_pseudo_adjoint(h, mu, tol: ToleranceConfig | None = None,
                         name: str = "mu", provenance: str = "user") -> MetricReport:
    """Test mu H mu^-1 = H^T."""
    h = as_matrix(h)
    return _check(PSEUDO_ADJOINT, h, mu, h.T, tol or DEFAULT_TOL, name, provenance)


def check_pseudo_hermitian(h, eta, tol: ToleranceConfig | None = None,
                           name: str = "eta", provenance: str = "user") -> MetricReport:
    """Test eta H eta^-1 = H^dagger."""
    h = as_matrix(h)
    return _check(PSEUDO_HERMITIAN, h, eta, h.conj().T, tol or DEFAULT_TOL, name, provenance)


def compose_eta(rho, mu) -> np.ndarray:
    """Combine a pseudo-reality and a pseudo-adjointness metric.

    Returns ``(mu rho^-1)^T``, which certifies pseudo-Hermiticity whenever
    rho and mu certify their respective relations on the same H.
    """
    rho = as_matrix(rho)
    mu = as_matrix(mu)
    rho_inv, _ = inverse(rho)
    return (mu @ rho_inv).T.copy()


def rho_from_diagonalizer(d) -> np.ndarray:
    """Pseudo-reality metric ``conj(D) D^-1`` of a real-spectrum Hamiltonian.

    Satisfies ``rho conj(rho) = 1`` to machine precision.
    """
    d = as_matrix(d)
    d_inv, _ = inverse(d)
    return d.conj() @ d_inv


def mu_from_diagonalizer(d) -> np.ndarray:
    """Pseudo-adjointness metric ``(D D^T)^-1`` of a diagonalizable Hamiltonian.

    The result is made exactly transpose-symmetric by averaging, which is
    a projection onto the symmetry the exact expression has.
    """
    d = as_matrix(d)
    s = d @ d.T
    s = (s + s.T) / 2.0
    mu, _ = inverse(s)
    return (mu + mu.T) / 2.0


def eta_plus_from_diagonalizer(d) -> np.ndarray:
    """Positive-definite metric ``(D D^dagger)^-1`` of a real-spectrum Hamiltonian.

    Exactly Hermitian by construction (averaged with its own dagger).
    """
    d = as_matrix(d)
    s = d @ d.conj().T
    s = (s + s.conj().T) / 2.0
    eta, _ = inverse(s)
    return (eta + eta.conj().T) / 2.0


def _colinearity(rho_inv: np.ndarray, psi: np.ndarray, tol: ToleranceConfig,
                 eigen_index: int, metric_name: str) -> RealityCheck:
    w = rho_inv @ psi.conj()
    eps = complex((psi.conj() @ w) / (psi.conj() @ psi))
    residual = float(np.linalg.norm(w - eps * psi) / np.linalg.norm(w))
    return RealityCheck(
        eigen_index=eigen_index,
        metric_name=metric_name,
        epsilon=eps,
        colinearity_residual=residual,
        holds=bool(residual <= tol.metric_tol),
    )


def eigenstate_reality_check(rho, psi, tol: ToleranceConfig | None = None,
                             eigen_index: int = -1,
                             metric_name: str = "rho") -> RealityCheck:
    """Check whether ``rho^-1 conj(psi)`` is colinear with ``psi``.

    For an eigenvector of a pseudo-real H, colinearity is equivalent to
    the reality of its eigenvalue.  The proportionality factor ``eps`` is
    reported but deliberately not constrained to unit modulus.
    """
    tol = tol or DEFAULT_TOL
    rho = as_matrix(rho)
    psi = as_vector(psi)
    if float(np.linalg.norm(psi)) == 0.0:
        raise ZeroVector("eigenstate reality check needs a nonzero vector")
    rho_inv, _ = inverse(rho)
    return _colinearity(rho_inv, psi, tol, eigen_index, metric_name)


def default_parity(n: int) -> np.ndarray:
    """Anti-diagonal reversal matrix, the default parity for matrix input."""
    return np.fliplr(np.eye(n, dtype=np.complex128)).copy()


def symmetry_generator(eta_i, eta_j, h) -> tuple[np.ndarray, float]:
    """Symmetry generator built from two pseudo-Hermiticity metrics of H.

    When eta_i and eta_j both certify eta H eta^-1 = H^dagger, equating the
    two relations gives eta_j^-1 eta_i H = H eta_j^-1 eta_i, so the product
    in that order is the commuting generator; the function returns it with
    its relative commutator residual.  (Writing the product with the
    inverse on the right commutes with H^dagger instead, not H.)
    """
    eta_i = as_matrix(eta_i)
    h = as_matrix(h)
    eta_j_inv, _ = inverse(eta_j)
    gen = eta_j_inv @ eta_i
    denom = fro(h) * fro(gen)
    residual = fro(h @ gen - gen @ h) / denom if denom > 0 else 0.0
    return gen, float(residual)


def classify(h, candidates=None, tol: ToleranceConfig | None = None,
             parity=None, parity_name: str = "reversal",
             spectrum: Spectrum | None = None) -> ClassificationReport:
    """Run the full symmetry analysis of one Hamiltonian.

    ``candidates`` maps metric names to matrices; every candidate is tested
    against all three similarity targets.  When the eigenvector matrix is
    well enough conditioned, metrics constructed from the diagonalizer are
    appended with provenance ``"from_diagonalizer"``.  Every eigenvector is
    then run through the reality check against every holding pseudo-reality
    metric.  Failed checks are recorded, never raised; only input-format
    errors propagate.

    The PT verdict is pseudo-reality under a designated parity matrix
    (grid/anti-diagonal reversal by default, overridable via ``parity``).
    A precomputed ``spectrum`` may be passed to avoid a second eigensolve.
    """
    h = as_matrix(h)
    tol = tol or DEFAULT_TOL
    n = h.shape[0]
    scale = max(1.0, fro(h))
    warn: list[str] = []

    herm_res = fro(h - h.conj().T) / scale
    sa_res = fro(h - h.T) / scale
    hermitian = (bool(herm_res <= tol.metric_tol), float(herm_res))
    self_adjoint = (bool(sa_res <= tol.metric_tol), float(sa_res))

    by_kind: dict[str, list[MetricReport]] = {
        PSEUDO_REAL: [],
        PSEUDO_ADJOINT: [],
        PSEUDO_HERMITIAN: [],
    }
    checkers = {
        PSEUDO_REAL: check_pseudo_real,
        PSEUDO_ADJOINT: check_pseudo_adjoint,
        PSEUDO_HERMITIAN: check_pseudo_hermitian,
    }

    def run_all(name: str, metric: np.ndarray, provenance: str) -> None:
        for kind, checker in checkers.items():
            try:
                by_kind[kind].append(checker(h, metric, tol, name=name, provenance=provenance))
            except SingularMatrix:
                warn.append(f"metric '{name}' is singular; {kind} check skipped")
                by_kind[kind].append(MetricReport(
                    kind=kind, name=name, metric=np.array(metric, dtype=np.complex128),
                    residual=math.inf, holds=False, provenance=provenance,
                ))

    for name, metric in (candidates or {}).items():
        metric = as_matrix(metric)
        if metric.shape != h.shape:
            raise DimensionMismatch(
                f"candidate '{name}' has shape {metric.shape}, expected {h.shape}"
            )
        run_all(name, metric, "user")

    if spectrum is None:
        try:
            spectrum = eigendecompose(h, tol)
        except ConvergenceFailure as exc:
            warn.append(f"eigendecomposition failed: {exc}")
            spectrum = None

    if spectrum is not None:
        try:
            d = build_diagonalizer(spectrum, tol)
            run_all("from_D_rho", rho_from_diagonalizer(d), "from_diagonalizer")
            run_all("from_D_mu", mu_from_diagonalizer(d), "from_diagonalizer")
            run_all("from_D_eta_plus", eta_plus_from_diagonalizer(d), "from_diagonalizer")
        except (NearDefective, SingularMatrix) as exc:
            warn.append(f"diagonalizer metrics suppressed: {exc}")

    parity = as_matrix(parity) if parity is not None else default_parity(n)
    if parity.shape != h.shape:
        raise DimensionMismatch("parity matrix dimension mismatch")
    try:
        pt_res = similarity_residual(parity, h, h.conj())
        pt = (parity_name, float(pt_res), bool(pt_res <= tol.metric_tol))
    except SingularMatrix:
        warn.append("parity matrix is singular; PT check skipped")
        pt = None

    reality_checks: list[RealityCheck] = []
    if spectrum is not None:
        # invert each holding metric once; the check itself is then a matvec
        holding_rhos = []
        for rep in by_kind[PSEUDO_REAL]:
            if not rep.holds:
                continue
            try:
                holding_rhos.append((rep, inverse(rep.metric)[0]))
            except SingularMatrix:
                warn.append(f"reality check with '{rep.name}' skipped (singular)")
        for k, pair in enumerate(spectrum.pairs):
            for rep, rho_inv in holding_rhos:
                reality_checks.append(_colinearity(
                    rho_inv, pair.eigenvector, tol,
                    eigen_index=k, metric_name=rep.name))

    return ClassificationReport(
        hermitian=hermitian,
        self_adjoint=self_adjoint,
        pseudo_real=tuple(by_kind[PSEUDO_REAL]),
        pseudo_adjoint=tuple(by_kind[PSEUDO_ADJOINT]),
        pseudo_hermitian=tuple(by_kind[PSEUDO_HERMITIAN]),
        pt_symmetric=pt,
        spectrum=spectrum,
        reality_checks=tuple(reality_checks),
        warnings=tuple(warn),
    )
