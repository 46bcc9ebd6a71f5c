"""Displaced-Poisson word-length model and its two text invariants.

A text is described by two parameters: lambda0, the token-weighted mean
word length in syllables, and lambda1, the expected word length at the
head of the descending-frequency rank list.  Word length follows a
1-displaced Poisson law whose parameter varies uniformly over the token
mass, rising linearly from lambda1 - 1 at the head of the list to
2*lambda0 - lambda1 - 1 at the tail.  Two derived quantities coordinate
texts in a plane:

    i_lang = (lambda0 - 1) * (lambda1 - lambda1_min)   (language invariant)
    alpha  = (lambda0 - lambda1) / (lambda0 - lambda1_min)   (genre invariant)

lambda1_min is the floor of lambda1, 0.5 by default.  alpha = 0 collapses
the mixture to a fixed-parameter distribution; alpha = 1 is the opposite
limit where lambda1 sits on the floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from wordlength._backend import kernels
from wordlength.errors import DomainError

DEFAULT_LAMBDA1_MIN = 0.5


@dataclass(frozen=True)
class ModelParams:
    """Fitted mixture parameters (lambda0, lambda1) plus the lambda1 floor."""

    lambda0: float
    lambda1: float
    lambda1_min: float = DEFAULT_LAMBDA1_MIN

    def __post_init__(self):
        if not (math.isfinite(self.lambda0) and math.isfinite(self.lambda1)
                and math.isfinite(self.lambda1_min)):
            raise DomainError("model parameters must be finite")
        if self.lambda0 < 1.0:
            raise DomainError(f"lambda0 must be >= 1, got {self.lambda0}")
        if self.lambda1 > self.lambda0:
            raise DomainError(
                f"lambda1 ({self.lambda1}) must not exceed lambda0 ({self.lambda0})")
        if self.lambda1 < self.lambda1_min:
            raise DomainError(
                f"lambda1 ({self.lambda1}) below lambda1_min ({self.lambda1_min})")


@dataclass(frozen=True)
class Invariants:
    """Coordinates of a text in the invariant plane."""

    i_lang: float
    alpha: float


@dataclass(frozen=True)
class MixtureSpec:
    """Derived integration range of the uniform parameter mixture.

    m_lo/m_hi bound the Poisson parameter; t_clamp is the fraction of the
    position mass whose raw parameter would be negative and is therefore
    pinned to the degenerate m=0 point (all length 1).
    """

    m_lo: float
    m_hi: float
    t_clamp: float

    @classmethod
    def from_params(cls, params: ModelParams) -> "MixtureSpec":
        m_lo = max(params.lambda1 - 1.0, 0.0)
        m_hi = 2.0 * params.lambda0 - params.lambda1 - 1.0
        if params.lambda0 > params.lambda1:
            t_clamp = max(
                0.0,
                (1.0 - params.lambda1) / (2.0 * (params.lambda0 - params.lambda1)),
            )
        else:
            t_clamp = 0.0
        return cls(m_lo=m_lo, m_hi=m_hi, t_clamp=t_clamp)


def shifted_poisson_pmf(k: int, m: float) -> float:
    """P(length = k) under the 1-displaced Poisson with parameter m >= 0.

    Equals exp(-m) * m**(k-1) / (k-1)! for k >= 1.
    """
    if k < 1:
        raise DomainError(f"length must be >= 1, got {k}")
    if m < 0.0 or not math.isfinite(m):
        raise DomainError(f"Poisson parameter must be finite and >= 0, got {m}")
    return kernels.shifted_pmf(k, m)


def conditional_mean(t: float, params: ModelParams) -> float:
    """Expected word length at coverage position t in [0, 1].

    Linear in t: lambda1 at the head of the rank list, integrating to
    lambda0 over the whole list.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"position t must lie in [0, 1], got {t}")
    return params.lambda1 + 2.0 * (params.lambda0 - params.lambda1) * t


def mixture_pmf(k: int, params: ModelParams) -> float:
    """P(length = k) under the uniform-parameter mixture.

    Closed form via partial exponential sums; for lambda1 = lambda0 the
    mixture collapses exactly to shifted_poisson_pmf(k, lambda0 - 1).
    """
    if k < 1:
        raise DomainError(f"length must be >= 1, got {k}")
    spec = MixtureSpec.from_params(params)
    return kernels.mixture_pmf_kernel(k, spec.m_lo, spec.m_hi, spec.t_clamp)


def compute_invariants(params: ModelParams) -> Invariants:
    """Map (lambda0, lambda1) to the invariant-plane coordinates (I, alpha)."""
    if params.lambda0 <= params.lambda1_min:
        raise DomainError(
            f"lambda0 ({params.lambda0}) must exceed lambda1_min "
            f"({params.lambda1_min})")
    i_lang = (params.lambda0 - 1.0) * (params.lambda1 - params.lambda1_min)
    alpha = (params.lambda0 - params.lambda1) / (params.lambda0 - params.lambda1_min)
    return Invariants(i_lang=i_lang, alpha=alpha)


def params_from_invariants(
    inv: Invariants, lambda1_min: float = DEFAULT_LAMBDA1_MIN
) -> ModelParams:
    """Invert the invariant formulas back to (lambda0, lambda1).

    Solves (lambda0 - 1)(lambda0 - lambda1_min)(1 - alpha) = I for lambda0
    via its positive quadratic root, then recovers lambda1.  Undefined at
    alpha = 1 (where I is forced to 0 and lambda0 is unconstrained).
    """
    if inv.i_lang < 0.0:
        raise DomainError(f"I must be >= 0, got {inv.i_lang}")
    if not 0.0 <= inv.alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {inv.alpha}")
    c = inv.i_lang / (1.0 - inv.alpha)
    disc = (1.0 - lambda1_min) ** 2 + 4.0 * c
    lambda0 = ((1.0 + lambda1_min) + math.sqrt(disc)) / 2.0
    lambda1 = lambda0 - inv.alpha * (lambda0 - lambda1_min)
    return ModelParams(lambda0=lambda0, lambda1=lambda1, lambda1_min=lambda1_min)
