# Dense symmetric eigensolver: Householder tridiagonalization + implicit-shift QL

import asyncio
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config.config import Config
from operators.matrices import SymmetricMatrix
from spectra.measure import SpectralMeasure, Spectrum, cluster_multiplicities, default_tolerance
from utils.errors import ConvergenceFailure, InvalidParameters, NonSymmetricInput
from utils.logger import Logger

logger = Logger.get_logger("spectra")

MAX_QL_ITERATIONS = 60
_EPS = np.finfo(float).eps

MatrixLike = Union[SymmetricMatrix, np.ndarray]


def _as_symmetric_array(q: MatrixLike) -> np.ndarray:
    a = q.as_float() if isinstance(q, SymmetricMatrix) else np.asarray(q, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetricInput(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise NonSymmetricInput("matrix is not exactly symmetric")
    return a


def tridiagonalize(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Householder similarity reduction of a symmetric matrix to tridiagonal form.

    Returns the diagonal d (length n) and the off-diagonal e (length n - 1).
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        u = a[k + 1:, k].copy()
        alpha = math.sqrt(float(np.dot(u, u)))
        if alpha == 0.0:
            continue
        if u[0] < 0.0:
            alpha = -alpha
        u[0] += alpha
        h = float(np.dot(u, u)) / 2.0
        p = a[k + 1:, k + 1:] @ u / h
        kk = float(np.dot(u, p)) / (2.0 * h)
        v = p - kk * u
        a[k + 1:, k + 1:] -= np.outer(v, u) + np.outer(u, v)
        a[k + 1, k] = a[k, k + 1] = -alpha
    return np.diagonal(a).copy(), np.diagonal(a, 1).copy()


def tridiagonal_eigenvalues(diagonal: Sequence[float], off_diagonal: Sequence[float]) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit QL with Wilkinson-type shifts."""
    d = [float(x) for x in diagonal]
    n = len(d)
    # e[i] couples d[i] and d[i + 1]; the trailing slot is a sentinel
    e = [float(x) for x in off_diagonal] + [0.0]
    # absolute floor for the split test near a zero eigenspace
    scale = max([abs(x) for x in d] + [abs(x) for x in e])
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * max(dd, scale):
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > MAX_QL_ITERATIONS:
                raise ConvergenceFailure(f"QL iteration did not converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d, dtype=float))


def eigenvalues_array(q: MatrixLike, method: Optional[str] = None) -> np.ndarray:
    a = _as_symmetric_array(q)
    method = method or Config.EIGEN_METHOD
    if a.shape[0] == 0:
        return np.zeros(0)
    if method == "lapack":
        return np.sort(np.linalg.eigvalsh(a))
    if method != "householder_ql":
        raise InvalidParameters(f"unknown eigensolver method {method!r}")
    d, e = tridiagonalize(a)
    return tridiagonal_eigenvalues(d, e)


def symmetric_eigenvalues(q: MatrixLike, tol: Optional[float] = None, method: Optional[str] = None) -> Spectrum:
    a = _as_symmetric_array(q)
    eigenvalues = eigenvalues_array(a, method=method)
    if tol is None:
        tol = default_tolerance(a)
    return Spectrum(
        eigenvalues=eigenvalues.tolist(),
        clusters=cluster_multiplicities(eigenvalues, tol),
        tol=tol,
    )


async def solve_batch(matrices: List[MatrixLike], tol: Optional[float] = None,
                      method: Optional[str] = None) -> List[Spectrum]:
    """Independent eigensolves on a thread pool; results keep the input order."""
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=max(1, Config.WORKERS)) as executor:
        tasks = [
            loop.run_in_executor(executor, symmetric_eigenvalues, q, tol, method)
            for q in matrices
        ]
        spectra = await asyncio.gather(*tasks)
    logger.debug(f"[SPECTRA] solved batch of {len(spectra)} matrices")
    return list(spectra)


def spectral_measure(q: MatrixLike, tol: Optional[float] = None, method: Optional[str] = None) -> SpectralMeasure:
    """mu(Q) = (1/n) sum_i delta_{lambda_i(Q)}, atoms at the cluster representatives."""
    spectrum = symmetric_eigenvalues(q, tol=tol, method=method)
    if spectrum.order == 0:
        raise InvalidParameters("spectral measure needs a matrix of order >= 1")
    return SpectralMeasure.from_spectrum(spectrum)
