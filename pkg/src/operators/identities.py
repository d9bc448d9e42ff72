# Spectral identities every oriented hypergraph satisfies: interval bounds,
# zero-multiplicity relations, and the eigenpair maps of p-regular hypergraphs.

from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel

from hypergraph.model import OrientedHypergraph
from hypergraph.structure import all_inputs_variant, is_p_regular, is_simple_graph
from operators.matrices import Operator, build_operator
from spectra.eigensolver import symmetric_eigenvalues
from spectra.measure import Spectrum
from utils.errors import InvalidParameters

INTERVAL_SLACK = 1e-8


def operator_spectra(g: OrientedHypergraph, operators=tuple(Operator)) -> Dict[Operator, Spectrum]:
    return {op: symmetric_eigenvalues(build_operator(g, op)) for op in operators}


def interval_for(g: OrientedHypergraph, op: Operator):
    n, m = g.n_vertices, g.m
    return {
        Operator.L: (0.0, float(n)),
        Operator.LH: (0.0, float(n)),
        Operator.D: (1.0, float(m)),
        Operator.A: (-float(m * n), float(m * n)),
        Operator.K: (0.0, float(m * (n + 1))),
        Operator.KH: (0.0, float(m * (n + 1))),
    }[op]


def check_interval_bounds(g: OrientedHypergraph, spectra: Optional[Dict[Operator, Spectrum]] = None) -> List[str]:
    """Eigenvalues of L, L^H in [0, n]; D in [1, m]; A in [-mn, mn]; K, K^H in [0, m(n+1)]."""
    spectra = spectra or operator_spectra(g)
    violations = []
    for op, spectrum in spectra.items():
        lo, hi = interval_for(g, op)
        for value in spectrum.eigenvalues:
            if value < lo - INTERVAL_SLACK or value > hi + INTERVAL_SLACK:
                violations.append(f"{op.value}: eigenvalue {value!r} outside [{lo}, {hi}]")
    return violations


class MultiplicityRelations(BaseModel):
    n: int
    m: int
    zero_l: int
    zero_lh: int
    zero_k: int
    zero_kh: int

    @property
    def holds(self) -> bool:
        return (
            self.zero_l - self.zero_lh == self.n - self.m
            and self.zero_l == self.zero_k
            and self.zero_kh == self.zero_lh
        )


def check_multiplicity_relations(g: OrientedHypergraph,
                                 spectra: Optional[Dict[Operator, Spectrum]] = None) -> MultiplicityRelations:
    spectra = spectra or operator_spectra(g, (Operator.L, Operator.LH, Operator.K, Operator.KH))
    return MultiplicityRelations(
        n=g.n_vertices,
        m=g.m,
        zero_l=spectra[Operator.L].multiplicity(0.0),
        zero_lh=spectra[Operator.LH].multiplicity(0.0),
        zero_k=spectra[Operator.K].multiplicity(0.0),
        zero_kh=spectra[Operator.KH].multiplicity(0.0),
    )


def check_regular_maps(g: OrientedHypergraph, tol: float = 1e-8) -> Optional[Dict[str, float]]:
    """
    For p-regular g, max deviation of sorted spectrum(K) from p * spectrum(L) and of
    sorted spectrum(A) from p * (1 - spectrum(L)). None when g is not regular.
    """
    p = is_p_regular(g)
    if p is None:
        return None
    spectra = operator_spectra(g, (Operator.L, Operator.K, Operator.A))
    lap = np.asarray(spectra[Operator.L].eigenvalues)
    kirchhoff = np.asarray(spectra[Operator.K].eigenvalues)
    adjacency = np.asarray(spectra[Operator.A].eigenvalues)
    k_error = float(np.max(np.abs(kirchhoff - p * lap)))
    a_error = float(np.max(np.abs(adjacency - np.sort(p * (1.0 - lap)))))
    return {"p": p, "k_error": k_error, "a_error": a_error, "holds": max(k_error, a_error) <= tol * max(1, p)}


def check_all_inputs_reflection(g: OrientedHypergraph, tol: float = 1e-8) -> Dict[str, object]:
    """
    For a simple graph g and its all-inputs variant g+: spectrum A(g+) = -spectrum A(g),
    spectrum L(g+) = 2 - spectrum L(g), and for p-regular g, spectrum K(g+) = 2p - spectrum K(g).
    """
    if not is_simple_graph(g):
        raise InvalidParameters("the all-inputs reflection needs a simple graph")
    plus = all_inputs_variant(g)
    ops = (Operator.A, Operator.L, Operator.K)
    ours, theirs = operator_spectra(g, ops), operator_spectra(plus, ops)

    def reflection_error(op: Operator, center: float) -> float:
        reflected = np.sort(center - np.asarray(ours[op].eigenvalues))
        return float(np.max(np.abs(reflected - np.asarray(theirs[op].eigenvalues))))

    p = is_p_regular(g)
    a_error = reflection_error(Operator.A, 0.0)
    l_error = reflection_error(Operator.L, 2.0)
    k_error = reflection_error(Operator.K, 2.0 * p) if p is not None else None
    worst = max(e for e in (a_error, l_error, k_error) if e is not None)
    return {
        "p": p,
        "a_error": a_error,
        "l_error": l_error,
        "k_error": k_error,
        "holds": worst <= tol * max(1, p or 1),
    }
