"""Convex polynomials of the operator and their combinators.

A convex polynomial has nonnegative coefficients summing to one, with an
optional root of given order at zero (the ``offset``). Applying one to the
operator at a vector is a single cached orbit sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lattice import CompactVector
from .operator import WeightedTranslation, orbit

__all__ = [
    "ConvexPolynomial",
    "geometric_convex_polynomial",
    "evaluate_poly",
    "shifted_average",
]


@dataclass(frozen=True, eq=False)
class ConvexPolynomial:
    """Coefficients a_0..a_n >= 0 with sum 1 and a_n > 0, times t^offset."""

    offset: int
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.coefficients, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        if np.any(arr < -1e-12):
            raise ValueError("coefficients must be nonnegative")
        arr = np.clip(arr, 0.0, None)
        total = float(arr.sum())
        if abs(total - 1.0) > 1e-8:
            raise ValueError(f"coefficients must sum to 1, got {total}")
        if arr[-1] <= 0.0:
            raise ValueError("top coefficient must be positive")
        object.__setattr__(self, "coefficients", arr / total)

    @property
    def degree(self) -> int:
        return self.offset + len(self.coefficients) - 1

    @staticmethod
    def identity() -> "ConvexPolynomial":
        return ConvexPolynomial(0, np.array([1.0]))

    @staticmethod
    def monomial(n: int) -> "ConvexPolynomial":
        return ConvexPolynomial(n, np.array([1.0]))

    @staticmethod
    def from_coefficients(coeffs, offset: int = 0, trim: bool = True) -> "ConvexPolynomial":
        """Build from raw coefficients, optionally trimming trailing ~zeros."""
        arr = np.asarray(coeffs, dtype=np.float64)
        if trim:
            nz = np.nonzero(arr > 1e-15)[0]
            if len(nz) == 0:
                raise ValueError("all coefficients vanish")
            arr = arr[: int(nz[-1]) + 1]
        return ConvexPolynomial(offset, arr)


def geometric_convex_polynomial(beta: float, k: int) -> ConvexPolynomial:
    """Normalized geometric averaging polynomial of length k.

    For beta > 1 the coefficient of t^j is (beta-1) beta^{k-1-j} / (beta^k - 1);
    for beta = 1 the average is uniform, 1/k on each of t^0..t^{k-1}. Evaluated
    through beta^{-j} so no intermediate overflows for large k.
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if beta == 1.0:
        coeffs = np.full(k, 1.0 / k)
    else:
        j = np.arange(k)
        coeffs = (beta - 1.0) * beta ** (-(j + 1.0)) / (1.0 - beta ** (-float(k)))
    return ConvexPolynomial(0, coeffs)


def evaluate_poly(P: ConvexPolynomial, T: WeightedTranslation, f: CompactVector) -> CompactVector:
    """P(T) f = sum_j a_j T^{offset+j} f over one orbit sweep."""
    orb = orbit(T, f, P.degree)
    out = CompactVector.zero()
    for j, a in enumerate(P.coefficients):
        if a != 0.0:
            out = out + a * orb[P.offset + j]
    return out


def shifted_average(P: ConvexPolynomial, Q: ConvexPolynomial, shift: int) -> ConvexPolynomial:
    """The convex polynomial (t^shift * P + Q) / 2.

    Degree is max(deg P + shift, deg Q); convexity is preserved by averaging.
    """
    if shift < 0:
        raise ValueError("shift must be nonnegative")
    lo = min(P.offset + shift, Q.offset)
    hi = max(P.degree + shift, Q.degree)
    coeffs = np.zeros(hi - lo + 1)
    coeffs[P.offset + shift - lo : P.offset + shift - lo + len(P.coefficients)] += 0.5 * P.coefficients
    coeffs[Q.offset - lo : Q.offset - lo + len(Q.coefficients)] += 0.5 * Q.coefficients
    return ConvexPolynomial(lo, coeffs)
