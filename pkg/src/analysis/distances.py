# Distances between atomic spectral measures: total variation and weak-star test batteries

import math
from typing import List, Optional, Sequence

import numpy as np

from spectra.functions import TestFunction, bump, hat
from spectra.measure import SpectralMeasure, integrate
from utils.errors import UnboundedTestFunction

MATCH_FACTOR = 10.0
DEFAULT_MATCH_TOL = 1e-7


def default_match_tol(mu1: SpectralMeasure, mu2: SpectralMeasure) -> float:
    """Ten times the larger clustering tolerance of the two measures."""
    tol = max(mu1.tol, mu2.tol)
    return MATCH_FACTOR * tol if tol > 0.0 else DEFAULT_MATCH_TOL


def tv_distance(mu1: SpectralMeasure, mu2: SpectralMeasure, match_tol: Optional[float] = None) -> float:
    """
    Half the L1 distance of the atom weights. Atoms of the two measures closer than
    match_tol (chained left to right) are treated as one atom.
    """
    if match_tol is None:
        match_tol = default_match_tol(mu1, mu2)
    points = sorted(
        [(a, w, 0.0) for a, w in zip(mu1.atoms, mu1.weights)]
        + [(a, 0.0, w) for a, w in zip(mu2.atoms, mu2.weights)]
    )
    total = 0.0
    group_1 = group_2 = 0.0
    previous = None
    for atom, w1, w2 in points:
        if previous is not None and atom - previous > match_tol:
            total += abs(group_1 - group_2)
            group_1 = group_2 = 0.0
        group_1 += w1
        group_2 += w2
        previous = atom
    total += abs(group_1 - group_2)
    return 0.5 * total


def _centers(atoms: Sequence[float], offsets: Sequence[float], half_width: float) -> List[float]:
    centers = set()
    for atom in atoms:
        base = math.floor(atom)
        for offset in offsets:
            center = base + offset
            if abs(center - atom) < half_width:
                centers.add(float(center))
    return sorted(centers)


def build_battery(mu1: SpectralMeasure, mu2: SpectralMeasure, epsilon: Optional[float] = None,
                  half_width: float = 1.0) -> List[TestFunction]:
    """
    Hats at integer centers and smooth bumps at half-integer centers, kept only where
    the support meets an atom of either measure. epsilon attaches the hat modulus.
    """
    atoms = list(mu1.atoms) + list(mu2.atoms)
    hats = [hat(c, half_width, epsilon) for c in _centers(atoms, (-1.0, 0.0, 1.0), half_width)]
    bumps = [bump(c, half_width) for c in _centers(atoms, (-0.5, 0.5, 1.5), half_width)]
    return hats + bumps


def _require_compact(battery: Sequence[TestFunction]) -> None:
    for f in battery:
        if not f.compact:
            raise UnboundedTestFunction(f"test function {f.name} has no compact support")


def weak_star_gap(mu1: SpectralMeasure, mu2: SpectralMeasure, battery: Sequence[TestFunction]) -> float:
    """max over the battery of |mu1(f) - mu2(f)|."""
    _require_compact(battery)
    gaps = [abs(integrate(mu1, f) - integrate(mu2, f)) for f in battery]
    return float(max(gaps, default=0.0))


def weak_star_bound(battery: Sequence[TestFunction], n: int, schatten1: float) -> Optional[float]:
    """
    max over battery members with a declared modulus (eps, delta) of
    eps + 2 sup|f| * schatten1 / (delta * n); None when no member carries one.
    """
    _require_compact(battery)
    bounds = [
        f.modulus[0] + 2.0 * f.sup_abs * schatten1 / (f.modulus[1] * n)
        for f in battery
        if f.modulus is not None
    ]
    return float(max(bounds)) if bounds else None


def max_atom_weight(mu: SpectralMeasure) -> float:
    return float(np.max(mu.weights))
