"""Constructive convex-transitivity machinery.

For each k the geometric averaging polynomial P_k and the corrector map
S_k = c_k (beta I - T) S^k (with c_k = (beta^k - 1)/(1 - beta), read as its
limit -k when beta = 1) satisfy the exact algebraic identity

    P_k(T) S_k h - h = -beta^k S^k h,

which telescopes out of the geometric coefficients. The demo tabulates the
three norms the construction drives to zero, together with the residual of
that identity as a per-k self check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import CompactVector, p_norm
from .operator import S_power, WeightedTranslation, apply, apply_power
from .polynomials import evaluate_poly, geometric_convex_polynomial

__all__ = ["almost_inverse_map", "transitivity_demo", "DemoRow"]


def almost_inverse_map(
    T: WeightedTranslation, beta: float, k: int, h: CompactVector
) -> CompactVector:
    """S_k h = c_k (beta I - T) S^k h, the approximate right inverse of P_k(T).

    c_k = (beta^k - 1)/(1 - beta) for beta > 1 and its beta->1 limit -k at
    beta = 1 (the limit sign keeps the displayed identity exact).
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    u = S_power(T, h, k)
    c = -float(k) if beta == 1.0 else (beta**k - 1.0) / (1.0 - beta)
    return c * (beta * u - apply(T, u))


@dataclass(frozen=True)
class DemoRow:
    k: int
    q1: float
    q2: float
    q3: float
    identity_residual: float


def transitivity_demo(
    T: WeightedTranslation,
    beta: float,
    f0: CompactVector,
    h: CompactVector,
    k_range: tuple[int, int],
    p: float = 2.0,
) -> list[DemoRow]:
    """Tabulate the three vanishing quantities of the construction.

    q1: the scaled k-th orbit norm sigma_k^{-1} ||T^k f0||_p with
        sigma_k = (beta^k - 1)/(beta - 1) for beta > 1 and k for beta = 1.
        This is the component of ||P_k(T)(beta I - T) f0||_p that the weight
        conditions drive to zero; the remaining component is the constant
        beta^k (beta-1)/(beta^k-1) ||f0||_p, irreducible for compactly
        supported f0 because the two supports are disjoint for large k.
    q2: ||S_k h||_p.
    q3: ||P_k(T) S_k h - h||_p, with the identity residual
        ||(P_k(T) S_k h - h) + beta^k S^k h||_p / ||h||_p reported per row.
    """
    if beta < 1:
        raise ValueError("beta must be >= 1")
    k_lo, k_hi = int(k_range[0]), int(k_range[1])
    if k_lo < 1 or k_hi < k_lo:
        raise ValueError("k_range must be a nonempty range of positive integers")
    norm_h = p_norm(h, p, T.lattice)
    rows = []
    for k in range(k_lo, k_hi + 1):
        coef = (beta - 1.0) / (beta**k - 1.0) if beta > 1.0 else 1.0 / k
        q1 = coef * p_norm(apply_power(T, f0, k), p, T.lattice)
        sk = almost_inverse_map(T, beta, k, h)
        q2 = p_norm(sk, p, T.lattice)
        P = geometric_convex_polynomial(beta, k)
        recon = evaluate_poly(P, T, sk)
        q3 = p_norm(recon - h, p, T.lattice)
        back = S_power(T, h, k)
        scale = beta**k if beta > 1.0 else 1.0
        residual = p_norm((recon - h) + scale * back, p, T.lattice)
        rows.append(DemoRow(k, q1, q2, q3, residual / norm_h if norm_h > 0 else residual))
    return rows
