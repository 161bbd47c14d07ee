"""The weighted translation operator, its powers, inverse and adjoint.

The operator maps f to w * (f shifted by g): (Tf)(x) = w(x) f(x - g). Powers
have the closed form T^n f = (prod_{i=0..n-1} w(. - i*g)) * f(. - n*g), which
is evaluated through accumulated log-products instead of iterating n times.
With strictly positive weights the operator is invertible; the right-inverse
map S coincides with T^{-1} on these lattices, and both are provided.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .lattice import INTEGERS, CompactVector, Lattice, StepElement
from .weights import LatticeWeight, reciprocal, translate_weight

__all__ = [
    "WeightedTranslation",
    "apply",
    "apply_power",
    "orbit",
    "inverse",
    "right_inverse_S",
    "S_power",
    "adjoint_apply",
]

# exp underflows to 0 below roughly -745; reciprocals of such weights overflow.
_LOG_UNDERFLOW = -709.0


@dataclass(frozen=True)
class WeightedTranslation:
    """The pair (step g, weight w) acting on p-summable lattice functions."""

    g: StepElement
    w: LatticeWeight
    lattice: Lattice = INTEGERS

    @property
    def norm_bound(self) -> float:
        """sup w, an upper bound for the operator norm on every p."""
        return self.w.sup

    @property
    def inverse_underflows(self) -> bool:
        """True when 1/w is not representable in float64 somewhere."""
        return self.w.log_inf < _LOG_UNDERFLOW


def apply(T: WeightedTranslation, f: CompactVector) -> CompactVector:
    """(Tf)(x) = w(x) * f(x - g)."""
    if len(f) == 0:
        return f
    lo = f.support_lo + T.g.steps
    xs = np.arange(lo, lo + len(f))
    return CompactVector(lo, f.values * T.w.value(xs))


def apply_power(T: WeightedTranslation, f: CompactVector, n: int) -> CompactVector:
    """T^n f via the product formula; n = 0 returns f unchanged."""
    if n < 0:
        raise ValueError("n must be >= 0; use S_power for negative powers")
    if n == 0 or len(f) == 0:
        return f
    lo = f.support_lo + n * T.g.steps
    xs = np.arange(lo, lo + len(f))
    acc = np.zeros(len(f))
    for i in range(n):
        acc += T.w.log_value(xs - i * T.g.steps)
    return CompactVector(lo, f.values * np.exp(acc))


def orbit(T: WeightedTranslation, f: CompactVector, n_max: int) -> list[CompactVector]:
    """[f, Tf, ..., T^{n_max} f], computed incrementally."""
    out = [f]
    cur = f
    for _ in range(n_max):
        cur = apply(T, cur)
        out.append(cur)
    return out


def inverse(T: WeightedTranslation) -> WeightedTranslation:
    """T^{-1}: step -g with weight x -> 1/w(x + g).

    Emits a warning when 1/w overflows float64 somewhere (the inverse is then
    numerically unbounded even though it exists algebraically).
    """
    if T.inverse_underflows:
        warnings.warn(
            "weight infimum underflows float64; inverse operator values may overflow",
            RuntimeWarning,
            stacklevel=2,
        )
    w_inv = translate_weight(reciprocal(T.w), -1, T.g)
    return WeightedTranslation(-T.g, w_inv, T.lattice)


def right_inverse_S(T: WeightedTranslation, f: CompactVector) -> CompactVector:
    """(Sf)(x) = f(x + g) / w(x + g); T(Sf) = f."""
    if len(f) == 0:
        return f
    lo = f.support_lo - T.g.steps
    xs = np.arange(f.support_lo, f.support_lo + len(f))
    return CompactVector(lo, f.values / T.w.value(xs))


def S_power(T: WeightedTranslation, f: CompactVector, k: int) -> CompactVector:
    """S^k f(x) = f(x + k*g) / prod_{i=1..k} w(x + i*g)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0 or len(f) == 0:
        return f
    lo = f.support_lo - k * T.g.steps
    xs = np.arange(lo, lo + len(f))
    acc = np.zeros(len(f))
    for i in range(1, k + 1):
        acc += T.w.log_value(xs + i * T.g.steps)
    return CompactVector(lo, f.values * np.exp(-acc))


def adjoint_apply(T: WeightedTranslation, functional: CompactVector) -> CompactVector:
    """Adjoint for the bilinear pairing: (T* phi)(y) = w(y + g) phi(y + g)."""
    if len(functional) == 0:
        return functional
    lo = functional.support_lo - T.g.steps
    xs = np.arange(functional.support_lo, functional.support_lo + len(functional))
    return CompactVector(lo, functional.values * T.w.value(xs))
