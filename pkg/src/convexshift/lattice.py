"""Lattice geometry: the group, finitely supported vectors, p-norms, pairings.

Two groups are modeled: the integer lattice, and the real line discretized on
a uniform grid. Both reduce to index arithmetic on ``int``; a gridded real
line carries a ``measure_weight`` (mass per grid point) so that p-norms are
Riemann sums. Translation lengths are always an integer number of lattice
steps, so translating a vector is an exact shift of its support interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Lattice",
    "StepElement",
    "CompactVector",
    "translate",
    "p_norm",
    "pair",
]


@dataclass(frozen=True)
class Lattice:
    """The underlying group: integers, or reals sampled on a uniform grid."""

    kind: str = "integers"
    grid_spacing: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in ("integers", "gridded-reals"):
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind == "integers" and self.grid_spacing != 1.0:
            raise ValueError("integer lattice has fixed spacing 1")
        if not (self.grid_spacing > 0):
            raise ValueError("grid_spacing must be positive")

    @property
    def measure_weight(self) -> float:
        """Mass carried by one lattice point (1 on Z, spacing on gridded R)."""
        return 1.0 if self.kind == "integers" else self.grid_spacing

    @staticmethod
    def integers() -> "Lattice":
        return Lattice("integers")

    @staticmethod
    def gridded(spacing: float) -> "Lattice":
        return Lattice("gridded-reals", float(spacing))

    def to_index(self, x: float) -> int:
        """Convert a group coordinate to a lattice index; must be on-grid."""
        raw = x / self.grid_spacing
        idx = round(raw)
        if abs(raw - idx) > 1e-9:
            raise ValueError(f"{x} is not a multiple of grid spacing {self.grid_spacing}")
        return int(idx)


INTEGERS = Lattice.integers()


@dataclass(frozen=True)
class StepElement:
    """A group element used for translation, in lattice units. Nonzero, hence
    aperiodic on these groups."""

    steps: int

    def __post_init__(self) -> None:
        if int(self.steps) != self.steps:
            raise ValueError("steps must be an integer")
        if self.steps == 0:
            raise ValueError("translation step must be nonzero (aperiodicity)")

    def __neg__(self) -> "StepElement":
        return StepElement(-self.steps)


@dataclass(frozen=True, eq=False)
class CompactVector:
    """A finitely supported complex function on the lattice.

    The value at lattice point ``support_lo + j`` is ``values[j]``; zero
    elsewhere. Instances are treated as immutable: never mutate ``values``.
    """

    support_lo: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.complex128)
        object.__setattr__(self, "values", arr)
        if arr.ndim != 1:
            raise ValueError("values must be one-dimensional")

    # -- constructors -------------------------------------------------

    @staticmethod
    def point_mass(index: int, value: complex = 1.0) -> "CompactVector":
        return CompactVector(index, np.array([value], dtype=np.complex128))

    @staticmethod
    def from_pairs(pairs: dict[int, complex]) -> "CompactVector":
        if not pairs:
            return CompactVector.zero()
        lo = min(pairs)
        hi = max(pairs)
        vals = np.zeros(hi - lo + 1, dtype=np.complex128)
        for idx, v in pairs.items():
            vals[idx - lo] += v
        return CompactVector(lo, vals)

    @staticmethod
    def zero() -> "CompactVector":
        return CompactVector(0, np.zeros(0, dtype=np.complex128))

    # -- basic geometry ------------------------------------------------

    @property
    def support_hi(self) -> int:
        """Inclusive upper end of the stored window (lo - 1 when empty)."""
        return self.support_lo + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def value_at(self, index: int) -> complex:
        j = index - self.support_lo
        if 0 <= j < len(self.values):
            return complex(self.values[j])
        return 0j

    def values_on(self, lo: int, hi: int) -> np.ndarray:
        """Dense values over the inclusive window [lo, hi]."""
        out = np.zeros(hi - lo + 1, dtype=np.complex128)
        a = max(lo, self.support_lo)
        b = min(hi, self.support_hi)
        if a <= b:
            out[a - lo : b - lo + 1] = self.values[a - self.support_lo : b - self.support_lo + 1]
        return out

    def trimmed(self, tol: float = 0.0) -> "CompactVector":
        """Drop leading/trailing entries with magnitude <= tol."""
        mags = np.abs(self.values)
        nz = np.nonzero(mags > tol)[0]
        if len(nz) == 0:
            return CompactVector.zero()
        a, b = int(nz[0]), int(nz[-1])
        return CompactVector(self.support_lo + a, self.values[a : b + 1].copy())

    # -- linear structure ----------------------------------------------

    def __add__(self, other: "CompactVector") -> "CompactVector":
        if len(self) == 0:
            return other
        if len(other) == 0:
            return self
        lo = min(self.support_lo, other.support_lo)
        hi = max(self.support_hi, other.support_hi)
        vals = self.values_on(lo, hi)
        vals += other.values_on(lo, hi)
        return CompactVector(lo, vals)

    def __sub__(self, other: "CompactVector") -> "CompactVector":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "CompactVector":
        return CompactVector(self.support_lo, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "CompactVector":
        return self * (-1.0)

    def allclose(self, other: "CompactVector", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        lo = min(self.support_lo, other.support_lo) if (len(self) and len(other)) else 0
        if len(self) == 0 and len(other) == 0:
            return True
        if len(self) == 0:
            lo, hi = other.support_lo, other.support_hi
        elif len(other) == 0:
            lo, hi = self.support_lo, self.support_hi
        else:
            hi = max(self.support_hi, other.support_hi)
        return np.allclose(self.values_on(lo, hi), other.values_on(lo, hi), rtol=rtol, atol=atol)


def translate(f: CompactVector, n: int, g: StepElement) -> CompactVector:
    """Translate ``f`` by ``n`` copies of ``g``: result(x) = f(x - n*g)."""
    if n == 0:
        return f
    return CompactVector(f.support_lo + n * g.steps, f.values)


def p_norm(f: CompactVector, p: float, lattice: Lattice = INTEGERS) -> float:
    """(sum |f(x)|^p * measure_weight)^(1/p). Requires p >= 1."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if len(f) == 0:
        return 0.0
    mags = np.abs(f.values)
    if p == 2.0:
        total = float(np.sum(mags * mags))
    else:
        total = float(np.sum(mags**p))
    return (total * lattice.measure_weight) ** (1.0 / p)


def pair(f: CompactVector, functional: CompactVector) -> complex:
    """Bilinear pairing sum_x f(x) * functional(x), no conjugation."""
    if len(f) == 0 or len(functional) == 0:
        return 0j
    a = max(f.support_lo, functional.support_lo)
    b = min(f.support_hi, functional.support_hi)
    if a > b:
        return 0j
    fa = f.values[a - f.support_lo : b - f.support_lo + 1]
    la = functional.values[a - functional.support_lo : b - functional.support_lo + 1]
    return complex(np.dot(fa, la))


def check_window(window: tuple[int, int]) -> tuple[int, int]:
    """Validate an inclusive integer window (lo, hi)."""
    lo, hi = int(window[0]), int(window[1])
    if lo > hi:
        raise ValueError(f"empty window {window}")
    return lo, hi
