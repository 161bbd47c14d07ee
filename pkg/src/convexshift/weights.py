"""Eventually constant positive weight functions on the lattice.

A weight is two constant tails plus a finite core window. This class is
closed under translation, pointwise product, reciprocal and scalar scaling,
so every running product that the criterion checkers need stays inside the
class and is exactly computable on any finite window.

Values are stored as logarithms: products of hundreds of factors like 2^k
overflow float64 around k = 1024, while their logs stay small. Accessors
exponentiate on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lattice import StepElement

__all__ = [
    "LatticeWeight",
    "translate_weight",
    "pointwise_product",
    "reciprocal",
    "scale",
    "backward_product",
    "forward_product",
    "window_sup",
    "window_inf",
]


@dataclass(frozen=True, eq=False)
class LatticeWeight:
    """Strictly positive bounded weight, constant outside a finite core.

    value(x) = left_tail for x < core_lo, core[x - core_lo] inside the core
    window, right_tail for x >= core_lo + len(core). Stored in log space.
    """

    log_left: float
    log_right: float
    core_lo: int
    log_core: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.log_core, dtype=np.float64)
        object.__setattr__(self, "log_core", arr)
        for v in (self.log_left, self.log_right):
            if not np.isfinite(v):
                raise ValueError("weight tails must be finite and positive")
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("weight core values must be finite and positive")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_values(
        left_tail: float,
        right_tail: float,
        core_lo: int = 0,
        core: "np.ndarray | list[float] | tuple[float, ...]" = (),
    ) -> "LatticeWeight":
        core_arr = np.asarray(core, dtype=np.float64)
        if left_tail <= 0 or right_tail <= 0 or (core_arr.size and np.any(core_arr <= 0)):
            raise ValueError("weight values must be strictly positive")
        return LatticeWeight(
            float(np.log(left_tail)),
            float(np.log(right_tail)),
            int(core_lo),
            np.log(core_arr) if core_arr.size else np.zeros(0),
        )

    @staticmethod
    def constant(c: float) -> "LatticeWeight":
        return LatticeWeight.from_values(c, c)

    # -- accessors -----------------------------------------------------

    @property
    def core_hi(self) -> int:
        """First index at or beyond which the right tail applies."""
        return self.core_lo + len(self.log_core)

    @property
    def left_tail(self) -> float:
        return float(np.exp(self.log_left))

    @property
    def right_tail(self) -> float:
        return float(np.exp(self.log_right))

    @property
    def core(self) -> np.ndarray:
        return np.exp(self.log_core)

    def log_value(self, x) -> np.ndarray:
        """Vectorized log-weight at integer lattice points."""
        x = np.asarray(x)
        if len(self.log_core) == 0:
            return np.where(x < self.core_lo, self.log_left, self.log_right)
        idx = np.clip(x - self.core_lo, 0, len(self.log_core) - 1)
        mid = self.log_core[idx]
        return np.where(x < self.core_lo, self.log_left, np.where(x >= self.core_hi, self.log_right, mid))

    def value(self, x) -> np.ndarray:
        return np.exp(self.log_value(x))

    def value_at(self, x: int) -> float:
        return float(self.value(np.asarray(x)))

    @property
    def sup(self) -> float:
        return float(np.exp(self.log_sup))

    @property
    def log_sup(self) -> float:
        logs = [self.log_left, self.log_right]
        if len(self.log_core):
            logs.append(float(np.max(self.log_core)))
        return max(logs)

    @property
    def inf(self) -> float:
        return float(np.exp(self.log_inf))

    @property
    def log_inf(self) -> float:
        logs = [self.log_left, self.log_right]
        if len(self.log_core):
            logs.append(float(np.min(self.log_core)))
        return min(logs)

    def trimmed(self) -> "LatticeWeight":
        """Canonical form: shrink the core where it coincides with the tails."""
        lc = self.log_core
        a, b = 0, len(lc)
        while a < b and lc[a] == self.log_left:
            a += 1
        while b > a and lc[b - 1] == self.log_right:
            b -= 1
        if (a, b) == (0, len(lc)):
            return self
        return LatticeWeight(self.log_left, self.log_right, self.core_lo + a, lc[a:b].copy())

    def allclose(self, other: "LatticeWeight", lo: int, hi: int, rtol: float = 1e-12) -> bool:
        xs = np.arange(lo, hi + 1)
        return np.allclose(self.log_value(xs), other.log_value(xs), rtol=0, atol=np.log1p(rtol))


def translate_weight(w: LatticeWeight, n: int, g: StepElement) -> LatticeWeight:
    """The translated weight x -> w(x - n*g). Tails are preserved."""
    if n == 0:
        return w
    return LatticeWeight(w.log_left, w.log_right, w.core_lo + n * g.steps, w.log_core)


def pointwise_product(u: LatticeWeight, v: LatticeWeight) -> LatticeWeight:
    """Pointwise product u(x)*v(x); log-space sum, exact tail closure."""
    if len(u.log_core) == 0 and len(v.log_core) == 0 and u.core_lo == v.core_lo:
        return LatticeWeight(u.log_left + v.log_left, u.log_right + v.log_right, u.core_lo, np.zeros(0))
    lo = min(u.core_lo, v.core_lo)
    hi = max(u.core_hi, v.core_hi)
    xs = np.arange(lo, hi)
    return LatticeWeight(
        u.log_left + v.log_left,
        u.log_right + v.log_right,
        lo,
        u.log_value(xs) + v.log_value(xs),
    )


def reciprocal(w: LatticeWeight) -> LatticeWeight:
    """Pointwise reciprocal 1/w(x); exact in log space."""
    return LatticeWeight(-w.log_left, -w.log_right, w.core_lo, -w.log_core)


def scale(w: LatticeWeight, c: float) -> LatticeWeight:
    """The weight c*w for c > 0."""
    if c <= 0:
        raise ValueError("scaling factor must be positive")
    lc = float(np.log(c))
    return LatticeWeight(w.log_left + lc, w.log_right + lc, w.core_lo, w.log_core + lc)


def backward_product(w: LatticeWeight, g: StepElement, k: int) -> LatticeWeight:
    """prod_{i=1..k} w(x + i*g), built incrementally."""
    if k < 1:
        raise ValueError("k must be >= 1")
    prod = translate_weight(w, -1, g)
    for i in range(2, k + 1):
        prod = pointwise_product(prod, translate_weight(w, -i, g))
    return prod


def forward_product(w: LatticeWeight, g: StepElement, k: int) -> LatticeWeight:
    """prod_{i=0..k-1} w(x - i*g), built incrementally."""
    if k < 1:
        raise ValueError("k must be >= 1")
    prod = w
    for i in range(1, k):
        prod = pointwise_product(prod, translate_weight(w, i, g))
    return prod


def window_sup(w: LatticeWeight, window: tuple[int, int]) -> float:
    """Exact max of w over an inclusive lattice window."""
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError(f"empty window {window}")
    return float(np.exp(np.max(w.log_value(np.arange(lo, hi + 1)))))


def window_inf(w: LatticeWeight, window: tuple[int, int]) -> float:
    """Exact min of w over an inclusive lattice window."""
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError(f"empty window {window}")
    return float(np.exp(np.min(w.log_value(np.arange(lo, hi + 1)))))
