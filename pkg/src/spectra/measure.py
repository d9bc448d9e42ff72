# Spectra, tolerance clustering and atomic spectral measures

import json
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, root_validator

from config.config import Config
from spectra.functions import TestFunction

MASS_TOLERANCE = 1e-12


def default_tolerance(a: np.ndarray) -> float:
    """max(1e-8, 1e-12 * order * max|entry|), unless HYPERSPEC_TOL is set."""
    override = Config.cluster_tol()
    if override is not None:
        return override
    if a.size == 0:
        return 1e-8
    return max(1e-8, 1e-12 * a.shape[0] * float(np.max(np.abs(a))))


def cluster_multiplicities(eigenvalues: Sequence[float], tol: float) -> List[Tuple[float, int]]:
    """Greedy left-to-right grouping: a gap larger than tol starts a new cluster."""
    clusters: List[Tuple[float, int]] = []
    current: List[float] = []
    for value in eigenvalues:
        value = float(value)
        if current and value - current[-1] > tol:
            clusters.append((float(np.mean(current)), len(current)))
            current = []
        current.append(value)
    if current:
        clusters.append((float(np.mean(current)), len(current)))
    return clusters


class Spectrum(BaseModel):
    eigenvalues: List[float]
    clusters: List[Tuple[float, int]]
    tol: float

    @property
    def order(self) -> int:
        return len(self.eigenvalues)

    def multiplicity(self, value: float, tol: float = None) -> int:
        """M_value: number of eigenvalues within tol of value (0 if value is not in the spectrum)."""
        tol = self.tol if tol is None else tol
        return int(sum(1 for x in self.eigenvalues if abs(x - value) <= tol))

    def nonzero(self, tol: float = None) -> List[float]:
        tol = self.tol if tol is None else tol
        return [x for x in self.eigenvalues if abs(x) > tol]

    def to_dict(self) -> dict:
        n = self.order
        return {
            "eigenvalues": self.eigenvalues,
            "atoms": [atom for atom, _ in self.clusters],
            "multiplicities": [mult for _, mult in self.clusters],
            "weights": [mult / n for _, mult in self.clusters],
            "n": n,
            "tol": self.tol,
        }


class SpectralMeasure(BaseModel):
    """Finite atomic probability measure with strictly increasing atoms."""

    atoms: List[float]
    weights: List[float]
    n: int = 0
    tol: float = 0.0

    @root_validator(skip_on_failure=True)
    def _probability_measure(cls, values):
        atoms, weights = values["atoms"], values["weights"]
        if len(atoms) != len(weights):
            raise ValueError("atoms and weights differ in length")
        if any(b <= a for a, b in zip(atoms, atoms[1:])):
            raise ValueError("atoms must be strictly increasing")
        if any(w <= 0.0 for w in weights):
            raise ValueError("weights must be positive")
        if abs(sum(weights) - 1.0) > MASS_TOLERANCE:
            raise ValueError(f"total mass {sum(weights)!r} is not 1")
        return values

    @classmethod
    def from_spectrum(cls, spectrum: Spectrum) -> "SpectralMeasure":
        n = spectrum.order
        return cls(
            atoms=[atom for atom, _ in spectrum.clusters],
            weights=[mult / n for _, mult in spectrum.clusters],
            n=n,
            tol=spectrum.tol,
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[float, float]]) -> "SpectralMeasure":
        """Merge equal atoms and drop zero weights, e.g. (t-1)/t * delta_0 with t = 1."""
        merged = {}
        for atom, weight in pairs:
            if weight > 0.0:
                merged[float(atom)] = merged.get(float(atom), 0.0) + float(weight)
        atoms = sorted(merged)
        return cls(atoms=atoms, weights=[merged[a] for a in atoms])

    @classmethod
    def dirac(cls, atom: float) -> "SpectralMeasure":
        return cls(atoms=[float(atom)], weights=[1.0])

    def mass_near(self, value: float, tol: float) -> float:
        return float(sum(w for a, w in zip(self.atoms, self.weights) if abs(a - value) <= tol))

    def dominant_atom(self) -> float:
        index = int(np.argmax(self.weights))
        return self.atoms[index]

    def to_dict(self) -> dict:
        return {"atoms": self.atoms, "weights": self.weights, "n": self.n, "tol": self.tol}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def integrate(mu: SpectralMeasure, f: TestFunction) -> float:
    """sum_a w_a f(a)."""
    values = f(np.asarray(mu.atoms, dtype=float))
    return float(np.dot(np.asarray(mu.weights, dtype=float), values))
