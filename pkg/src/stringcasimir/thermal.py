"""Finite-temperature Casimir energies by Matsubara summation.

The thermal energy replaces the imaginary-axis integral of
:mod:`.energy` by a primed sum over Matsubara frequencies xi_n = 2 pi n T
(n = 0 term at half weight, evaluated through the analytic xi -> 0 limit
of the summand), truncated once the summands fall below 1e-16 with a
geometric tail bound folded into the error estimate.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import imag_axis_log_ratio, imag_axis_log_ratio_2n
from .energy import EnergyResult
from .errors import DomainError

__all__ = [
    "ThermalConfig",
    "casimir_two_piece_thermal",
    "high_t_limit",
    "mirror_limit",
    "casimir_2n_thermal",
    "casimir_2n_thermal_x0",
    "frequency_ratio",
]

_TERM_CUTOFF = 1e-16
_BLOCK = 256
_MAX_TERMS = 10**7


@dataclass(frozen=True)
class ThermalConfig:
    """Temperature in energy units (k_B = 1)."""

    temperature: float

    def __post_init__(self):
        if self.temperature < 0:
            raise DomainError(f"temperature must be nonnegative, got {self.temperature}")

    def matsubara(self, n):
        return 2.0 * math.pi * n * self.temperature

    @property
    def beta(self):
        if self.temperature == 0:
            raise DomainError("beta undefined at T = 0")
        return 1.0 / self.temperature


def _primed_sum(term_fn, n0_value, temperature):
    """T [ n0/2 + sum_{n>=1} term(n) ] with truncation and tail bound.

    Stops after three consecutive summands below the cutoff; the error
    estimate is the geometric bound last/(1 - ratio) scaled by T.
    """
    total = 0.5 * n0_value
    last = abs(n0_value)
    prev = None
    small_streak = 0
    n = 1
    while n < _MAX_TERMS and small_streak < 3:
        ns = np.arange(n, n + _BLOCK)
        terms = term_fn(ns)
        for t in terms:
            total += t
            if abs(t) < _TERM_CUTOFF:
                small_streak += 1
                if small_streak >= 3:
                    break
            else:
                small_streak = 0
                prev, last = last, abs(t)
        n += _BLOCK
    ratio = min(last / prev, 0.9) if prev and prev > 0 else 0.5
    tail = last * ratio / (1.0 - ratio)
    return temperature * total, temperature * tail


def casimir_two_piece_thermal(cfg, th):
    """Thermal Casimir energy of the two-piece string (Matsubara form).

    T = 0 callers should use :func:`..energy.casimir_two_piece`; the sum
    vanishes identically for s = 1 and for the uniform string x = 1.
    """
    if th.temperature <= 0:
        raise DomainError("casimir_two_piece_thermal requires T > 0")
    if cfg.tension_ratio == 1.0:
        return EnergyResult(0.0, "analytic-limit", 0.0)
    if cfg.length_ratio == 1.0:
        return EnergyResult(0.0, "matsubara", 0.0)
    t = th.temperature
    term_fn = lambda ns: imag_axis_log_ratio(2.0 * math.pi * ns * t, cfg)
    n0 = imag_axis_log_ratio(0.0, cfg)
    value, tail = _primed_sum(term_fn, n0, t)
    return EnergyResult(value, "matsubara", tail)


def high_t_limit(cfg, th):
    """High-temperature form: the n = 0 Matsubara term alone,

        E(T) = (T/2) ln[(F + 4s/(s+1)^2) / (F + 1)].

    Valid once the thermal frequency exceeds the geometric one
    (``frequency_ratio`` >= 1).
    """
    if th.temperature <= 0:
        raise DomainError("high_t_limit requires T > 0")
    if cfg.tension_ratio == 1.0:
        return EnergyResult(0.0, "analytic-limit", 0.0)
    value = 0.5 * th.temperature * imag_axis_log_ratio(0.0, cfg)
    return EnergyResult(value, "analytic-limit", 0.0)


def mirror_limit(x, th, printed_form=False):
    """Large-companion limit (s -> infinity) of the high-temperature energy,

        E(T) = -(T/2) ln(1 + 1/F(x)).

    The temperature prefactor is restored here for dimensional consistency
    with the finite-s high-temperature form; ``printed_form`` drops it to
    reproduce the bare -(1/2) ln(1 + 1/F) variant.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x}")
    if th.temperature <= 0:
        raise DomainError("mirror_limit requires T > 0")
    f = 4.0 * x / (1.0 - x) ** 2
    value = -0.5 * math.log1p(1.0 / f)
    if not printed_form:
        value *= th.temperature
    return EnergyResult(value, "analytic-limit", 0.0)


def casimir_2n_thermal(cfg, th):
    """Thermal Casimir energy of the 2N-piece string (Matsubara form).

    Vanishes identically for x = 1 and for N = 1.  At x = 0 with N >= 2
    the n = 0 summand diverges logarithmically (each decoupled piece
    contributes a classical zero mode), so that term is omitted; the
    remaining sum is finite and matches :func:`casimir_2n_thermal_x0`.
    """
    if th.temperature <= 0:
        raise DomainError("casimir_2n_thermal requires T > 0")
    n = cfg.piece_pairs
    if cfg.tension_ratio == 1.0 or n == 1:
        return EnergyResult(0.0, "analytic-limit", 0.0)
    t = th.temperature
    length = cfg.total_length
    term_fn = lambda ns: imag_axis_log_ratio_2n(2.0 * math.pi * ns * t * length / n, cfg)
    n0 = imag_axis_log_ratio_2n(0.0, cfg)
    if not math.isfinite(n0):
        n0 = 0.0  # dropped zero-mode term at x = 0
    value, tail = _primed_sum(term_fn, n0, t)
    return EnergyResult(value, "matsubara", tail)


def casimir_2n_thermal_x0(piece_pairs, th, total_length):
    """Decoupled-limit thermal energy,

        E = 2T sum'_{n>=0} ln[2^N sinh^N(xi_n L / 2N) / (2 sinh(xi_n L / 2))].

    The n = 0 summand is ln of a quantity vanishing like xi^{N-1} (extra
    zero modes of the N decoupled pieces) and is omitted for N >= 2, the
    same convention as :func:`casimir_2n_thermal` at x = 0.
    """
    if not (isinstance(piece_pairs, (int, np.integer)) and piece_pairs >= 1):
        raise DomainError(f"piece_pairs must be an integer >= 1, got {piece_pairs}")
    if th.temperature <= 0:
        raise DomainError("casimir_2n_thermal_x0 requires T > 0")
    if not total_length > 0:
        raise DomainError(f"total_length must be positive, got {total_length}")
    n = piece_pairs
    if n == 1:
        return EnergyResult(0.0, "analytic-limit", 0.0)
    t = th.temperature
    from .core import log_sinh

    def term_fn(ns):
        a = 2.0 * math.pi * ns * t * total_length / (2.0 * n)
        return 2.0 * ((n - 1) * math.log(2.0) + n * log_sinh(a) - log_sinh(n * a))

    value, tail = _primed_sum(term_fn, 0.0, t)
    return EnergyResult(value, "matsubara", tail)


def frequency_ratio(cfg, th):
    """Thermal-to-geometric frequency ratio  T L_I / (2 pi).

    >= 1 marks the high-temperature regime (the n = 0 Matsubara term
    dominates); << 1 the low-temperature regime.
    """
    return th.temperature * cfg.piece_length_i / (2.0 * math.pi)
