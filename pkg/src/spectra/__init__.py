from spectra.functions import TestFunction, bump, hat, polynomial
from spectra.measure import (
    SpectralMeasure,
    Spectrum,
    cluster_multiplicities,
    default_tolerance,
    integrate,
)
from spectra.eigensolver import (
    eigenvalues_array,
    solve_batch,
    spectral_measure,
    symmetric_eigenvalues,
    tridiagonal_eigenvalues,
    tridiagonalize,
)
