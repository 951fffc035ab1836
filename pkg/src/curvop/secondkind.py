"""Curvature operators on tensor spaces: assembly, spectra, positivity.

The operator of the second kind acts on traceless symmetric 2-tensors,
a space of dimension N = (n-1)(n+2)/2; the operator of the first kind
acts on 2-forms, dimension n(n-1)/2. Both are realized as symmetric
matrices in explicit orthonormal bases. The bilinear form behind the
second-kind matrix is

    M[a,b] = sum_{ijkl} R_iklj phi_a[i,j] phi_b[k,l],

whose eigenvalues are basis-independent. Eigenvalue positivity is graded
by the (k+alpha) conditions: the sum of the k smallest eigenvalues plus
alpha times the next one is positive (or nonnegative).

Eigenvalues come from a cyclic Jacobi solver written here so the library
has no solver dependency; matrices in this problem are at most a few
dozen rows, well inside Jacobi's comfort zone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    NoConvergence,
    NotSymmetric,
    ParameterOutOfRange,
)
from .tensor import DEFAULT_TOL, CurvatureTensor, ToleranceConfig

ALPHA_ALWAYS = "always"
ALPHA_UNATTAINABLE = "unattainable"


def lambda2_dim(n: int) -> int:
    return n * (n - 1) // 2


def s20_dim(n: int) -> int:
    """Dimension of the traceless symmetric 2-tensors, (n-1)(n+2)/2."""
    return (n - 1) * (n + 2) // 2


def lambda2_basis(n: int) -> np.ndarray:
    """Orthonormal basis of 2-forms as an (n(n-1)/2, n, n) stack.

    Element (i,j), i<j in lexicographic order, is (e_i ^ e_j)/sqrt(2)
    under the inner product <A,B> = (1/2) tr(A^T B): entries +-1 at
    (i,j)/(j,i).
    """
    if n < 2:
        raise DimensionTooSmall(f"need dimension >= 2, got {n}")
    mats = np.zeros((lambda2_dim(n), n, n))
    a = 0
    for i in range(n):
        for j in range(i + 1, n):
            mats[a, i, j] = 1.0
            mats[a, j, i] = -1.0
            a += 1
    return mats


@dataclass(frozen=True, eq=False)
class SymTensorBasis:
    """Orthonormal basis of traceless symmetric 2-tensors.

    ``elements`` is an (N, n, n) stack, orthonormal under <A,B> = tr(A B)
    with every element traceless. ``rotated`` conjugates each element by
    an orthogonal matrix, producing the image basis.
    """

    dim: int
    elements: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.elements.shape[0]

    def gram(self) -> np.ndarray:
        return np.einsum("aij,bij->ab", self.elements, self.elements)

    def max_trace(self) -> float:
        return float(np.abs(np.einsum("aii->a", self.elements)).max())

    def rotated(self, q: np.ndarray) -> "SymTensorBasis":
        q = np.asarray(q, dtype=float)
        if q.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"rotation must be {self.dim}x{self.dim}, got {q.shape}")
        rotated = np.einsum("ip,apq,jq->aij", q, self.elements, q)
        return SymTensorBasis(self.dim, rotated)


def s20_basis(n: int) -> SymTensorBasis:
    """Standard orthonormal basis of the traceless symmetric 2-tensors.

    Off-diagonal elements (e_i (.) e_j)/sqrt(2) for i<j followed by the
    diagonal ladder xi_j = (e_1 (.) e_1 + ... - j e_{j+1} (.) e_{j+1}) /
    (2 sqrt(j(j+1))) for j = 1..n-1, written as symmetric matrices. Count
    is exactly (n-1)(n+2)/2.
    """
    if n < 2:
        raise DimensionTooSmall(f"need dimension >= 2, got {n}")
    els = []
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = m[j, i] = inv_sqrt2
            els.append(m)
    for j in range(1, n):
        m = np.zeros((n, n))
        c = 1.0 / np.sqrt(j * (j + 1))
        for p in range(j):
            m[p, p] = c
        m[j, j] = -j * c
        els.append(m)
    return SymTensorBasis(n, np.array(els))


def second_kind_matrix(t: CurvatureTensor, basis: SymTensorBasis | None = None) -> np.ndarray:
    """Matrix of the second-kind operator in the given traceless basis.

    Defaults to ``s20_basis(t.dim)``. The result is an (N, N) symmetric
    matrix whose (a,b) entry is the bilinear form on elements a and b.
    """
    if basis is None:
        basis = s20_basis(t.dim)
    if basis.dim != t.dim:
        raise DimensionMismatch(f"tensor dim {t.dim} vs basis dim {basis.dim}")
    phi = basis.elements
    # M[a,b] = sum_{ijkl} R_iklj phi_a[i,j] phi_b[k,l], contracted in two
    # matrix-product steps (axes of t.array are labeled i, k, l, j).
    half = np.tensordot(phi, t.array, axes=([1, 2], [0, 3]))  # a k l
    return np.tensordot(half, phi, axes=([1, 2], [1, 2]))  # a b


def first_kind_matrix(t: CurvatureTensor) -> np.ndarray:
    """Matrix of the first-kind operator on 2-forms.

    Entry ((i,j),(k,l)) is R_ijkl over lexicographic index pairs i<j,
    k<l; with the 2-form inner product <A,B> = (1/2) tr(A^T B) this is
    the operator matrix in the basis ``lambda2_basis``.
    """
    n = t.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    a = t.array
    m = np.empty((len(pairs), len(pairs)))
    for p, (i, j) in enumerate(pairs):
        for q, (k, l) in enumerate(pairs):
            m[p, q] = a[i, j, k, l]
    return m


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a symmetric matrix.

    ``eigenvalues`` ascend; ``eigenvectors`` holds the matching
    orthonormal columns (None when the solve skipped them); ``residual``
    is the largest entry of |M V - V diag(lambda)| actually achieved,
    or the final off-diagonal Frobenius norm in the vector-free case.
    """

    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray | None = field(repr=False)
    residual: float

    @property
    def size(self) -> int:
        return self.eigenvalues.shape[0]

    def to_dict(self) -> dict:
        return {"eigenvalues": [float(v) for v in self.eigenvalues]}


def _off_norm(a: np.ndarray) -> float:
    # Summed directly over off-diagonal entries: the subtraction form
    # ``||A||_F^2 - ||diag||_F^2`` cancels catastrophically once the
    # off-diagonal mass drops below ||A||_F * sqrt(eps).
    od = a.copy()
    np.fill_diagonal(od, 0.0)
    return float(np.sqrt((od * od).sum()))


def eigen_sym(
    m: np.ndarray,
    tol: float | None = None,
    max_sweeps: int = 100,
    vectors: bool = True,
) -> Spectrum:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair whose magnitude exceeds a
    skip threshold, stopping when the off-diagonal Frobenius norm falls
    below ``tol`` (default ``tol_eigen``) times the matrix Frobenius
    norm. Raises NotSymmetric for non-square or asymmetric input and
    NoConvergence if ``max_sweeps`` sweeps do not reach tolerance.
    ``vectors=False`` skips the eigenvector accumulation (the returned
    eigenvectors are None and the residual is the final off-diagonal
    norm), which matters in eigenvalue-only inner loops.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {m.shape}")
    size = m.shape[0]
    norm = float(np.sqrt((m * m).sum()))
    if norm > 0 and float(np.abs(m - m.T).max()) > 1e-10 * norm:
        raise NotSymmetric("matrix is not symmetric within 1e-10 of its norm")
    if tol is None:
        tol = DEFAULT_TOL.tol_eigen

    a0 = (m + m.T) / 2.0
    a = a0.copy()
    v = np.eye(size) if vectors else None
    if norm == 0.0 or size == 1:
        order = np.argsort(np.diag(a))
        return Spectrum(np.diag(a)[order], v[:, order] if vectors else None, 0.0)

    off = _off_norm(a)
    converged = False
    for _ in range(max_sweeps):
        if off <= tol * norm:
            converged = True
            break
        skip = off / (size * size)
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if abs(apq) <= skip * 1e-2:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta == 0 else math.copysign(1.0, theta)
                t = sign / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = c * a[:, p] - s * a[:, q]
                col_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = col_p, col_q
                row_p = c * a[p, :] - s * a[q, :]
                row_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = row_p, row_q
                a[p, q] = a[q, p] = 0.0
                if v is not None:
                    vec_p = c * v[:, p] - s * v[:, q]
                    vec_q = s * v[:, p] + c * v[:, q]
                    v[:, p], v[:, q] = vec_p, vec_q
        off = _off_norm(a)
    else:
        converged = off <= tol * norm
    if not converged:
        raise NoConvergence(
            f"Jacobi did not reach tol {tol:.1e} in {max_sweeps} sweeps (off={off:.3e})"
        )
    diag = np.diag(a).copy()
    order = np.argsort(diag, kind="stable")
    eigenvalues = diag[order]
    if v is None:
        return Spectrum(eigenvalues, None, off)
    eigenvectors = v[:, order]
    residual = float(np.abs(a0 @ eigenvectors - eigenvectors * eigenvalues).max())
    return Spectrum(eigenvalues, eigenvectors, residual)


def _check_k_alpha(size: int, k: int, alpha: float) -> None:
    if not 1 <= k <= size:
        raise ParameterOutOfRange(f"k must lie in 1..{size}, got {k}")
    if not 0.0 <= alpha <= 1.0:
        raise ParameterOutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    if k + alpha > size:
        raise ParameterOutOfRange(f"k + alpha = {k + alpha} exceeds the matrix size {size}")


def _ascending_eigenvalues(spectrum) -> np.ndarray:
    """Coerce a Spectrum or a raw eigenvalue sequence to an ascending array."""
    if hasattr(spectrum, "eigenvalues"):
        return spectrum.eigenvalues
    ev = np.asarray(spectrum, dtype=float)
    if ev.ndim != 1 or ev.shape[0] < 1:
        raise ParameterOutOfRange(f"expected a 1-d eigenvalue sequence, got shape {ev.shape}")
    return np.sort(ev)


def k_alpha_value(spectrum, k: int, alpha: float) -> float:
    """The graded eigenvalue sum lambda_1 + ... + lambda_k + alpha lambda_{k+1}.

    Accepts a ``Spectrum`` or any eigenvalue sequence (sorted ascending
    internally).
    """
    ev = _ascending_eigenvalues(spectrum)
    _check_k_alpha(ev.shape[0], k, alpha)
    sums = np.cumsum(ev)
    value = float(sums[k - 1])
    if k < ev.shape[0]:
        value += alpha * float(ev[k])
    return value


def k_alpha_positive(spectrum, k: int, alpha: float, strict: bool = True) -> bool:
    """Decide (k+alpha)-positivity (strict) or -nonnegativity of a spectrum."""
    value = k_alpha_value(spectrum, k, alpha)
    return value > 0.0 if strict else value >= 0.0


def alpha_star(spectrum, k: int) -> float | str:
    """Largest alpha in [0,1] with sigma_k + alpha lambda_{k+1} >= 0.

    Returns "always" when the sum is nonnegative for every alpha (and in
    particular when sigma_k > 0), the critical ratio -sigma_k/lambda_{k+1}
    when that lies in [0,1], and "unattainable" when no alpha in [0,1]
    restores nonnegativity.
    """
    ev = _ascending_eigenvalues(spectrum)
    size = ev.shape[0]
    if not 1 <= k <= size - 1:
        raise ParameterOutOfRange(f"k must lie in 1..{size - 1}, got {k}")
    sigma = float(np.cumsum(ev)[k - 1])
    lam_next = float(ev[k])
    if sigma > 0.0:
        return ALPHA_ALWAYS
    if sigma == 0.0 and lam_next == 0.0:
        return ALPHA_ALWAYS
    if lam_next <= 0.0:
        return ALPHA_UNATTAINABLE
    ratio = -sigma / lam_next + 0.0
    return ratio if ratio <= 1.0 else ALPHA_UNATTAINABLE


def named_conditions(n: int) -> dict[str, tuple[int, float, bool]]:
    """Standard named (k, alpha, strict) conditions for dimension n.

    Includes 4.5-positivity/nonnegativity whenever the space is large
    enough and the (n + (n-2)/n) pair, whose fraction is rendered in
    lowest terms, e.g. "(4+1/2)-positive".
    """
    size = s20_dim(n)
    conds: dict[str, tuple[int, float, bool]] = {}
    if 4 + 0.5 <= size:
        conds["4.5-positive"] = (4, 0.5, True)
        conds["4.5-nonnegative"] = (4, 0.5, False)
    frac = Fraction(n - 2, n)
    alpha = (n - 2) / n
    if n + alpha <= size:
        label = f"({n}+{frac})" if frac != 0 else f"({n}+0)"
        conds[f"{label}-positive"] = (n, alpha, True)
        conds[f"{label}-nonnegative"] = (n, alpha, False)
    return conds


@dataclass(frozen=True, eq=False)
class PositivityProfile:
    """Graded positivity data of one spectrum.

    For each k in 1..N-1: the partial sum sigma_k and the threshold
    ``alpha_star`` entry ("always", a float in [0,1], or "unattainable").
    ``verdicts`` holds named condition decisions computed from the same
    eigenvalues.
    """

    eigenvalues: np.ndarray = field(repr=False)
    sigmas: np.ndarray = field(repr=False)
    alpha_stars: tuple
    verdicts: dict[str, bool]

    def alpha_star(self, k: int) -> float | str:
        if not 1 <= k <= len(self.alpha_stars):
            raise ParameterOutOfRange(f"k must lie in 1..{len(self.alpha_stars)}, got {k}")
        return self.alpha_stars[k - 1]

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "profile": [
                {"k": k + 1, "sigma": float(self.sigmas[k]), "alphaStar": self.alpha_stars[k]}
                for k in range(len(self.alpha_stars))
            ],
            "verdicts": dict(self.verdicts),
        }


def positivity_profile(spectrum: Spectrum, dim: int | None = None) -> PositivityProfile:
    """Tabulate sigma_k and alpha_star for k = 1..N-1, plus named verdicts.

    ``dim`` names the ambient dimension for the named conditions; when
    omitted it is inferred from the spectrum size N = (n-1)(n+2)/2 if
    that has an integer solution, else named verdicts are skipped.
    """
    ev = spectrum.eigenvalues
    size = ev.shape[0]
    sums = np.cumsum(ev)
    stars = tuple(alpha_star(spectrum, k) for k in range(1, size))
    if dim is None:
        dim = _infer_dim(size)
    verdicts: dict[str, bool] = {}
    if dim is not None:
        for name, (k, alpha, strict) in named_conditions(dim).items():
            verdicts[name] = k_alpha_positive(spectrum, k, alpha, strict)
    return PositivityProfile(ev.copy(), sums[: size - 1], stars, verdicts)


def _infer_dim(size: int) -> int | None:
    for n in range(2, 2 * size + 3):
        if s20_dim(n) == size:
            return n
    return None
