from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class TestFunction:
    """
    A real test function with a declared support.

    support=None marks an unbounded function (weak convergence only); a finite
    interval marks a compactly supported one (weak-star work). modulus, when
    given, is an (epsilon, delta) pair with |f(x) - f(y)| <= epsilon whenever
    |x - y| <= delta.
    """

    __test__ = False  # keep pytest from collecting this class

    name: str
    func: Callable[[np.ndarray], np.ndarray]
    support: Optional[Tuple[float, float]] = None
    sup_abs: float = float("inf")
    modulus: Optional[Tuple[float, float]] = None

    @property
    def compact(self) -> bool:
        return self.support is not None

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))


def hat(center: float, half_width: float = 1.0, epsilon: Optional[float] = None) -> TestFunction:
    """Piecewise-linear hat: 1 at center, 0 outside [center - w, center + w]."""

    def f(x: np.ndarray) -> np.ndarray:
        return np.clip(1.0 - np.abs(x - center) / half_width, 0.0, None)

    # Lipschitz constant 1 / w gives delta = epsilon * w
    modulus = (epsilon, epsilon * half_width) if epsilon is not None else None
    return TestFunction(
        name=f"hat({center:g},{half_width:g})",
        func=f,
        support=(center - half_width, center + half_width),
        sup_abs=1.0,
        modulus=modulus,
    )


def bump(center: float, half_width: float = 1.0) -> TestFunction:
    """Smooth bump exp(1 - 1 / (1 - s^2)) for |s| < 1, s = (x - center) / w."""

    def f(x: np.ndarray) -> np.ndarray:
        s = (x - center) / half_width
        out = np.zeros_like(s)
        inside = np.abs(s) < 1.0
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - s[inside] ** 2))
        return out

    return TestFunction(
        name=f"bump({center:g},{half_width:g})",
        func=f,
        support=(center - half_width, center + half_width),
        sup_abs=1.0,
    )


def polynomial(power: int) -> TestFunction:
    return TestFunction(name=f"x^{power}", func=lambda x: x ** power)
