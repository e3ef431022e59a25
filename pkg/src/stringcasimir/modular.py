"""Dedekind eta and Jacobi theta_3 with certified series truncation.

Conventions used throughout:

    eta(tau)      = e^{pi i tau / 12} prod_{n>=1} (1 - e^{2 pi i n tau})
    theta_3(v|x)  = sum_n e^{i x n^2 + 2 pi i v n},   Im(x) > 0

(theta_3 takes the quadratic-exponent argument directly, not the nome.)
The q-products are truncated once the discarded factors are below 1e-18
with the remainder folded into an explicit error bound; close to the real
axis the plain series loses all precision, so magnitude evaluations go
through a fundamental-domain reduction instead (``log_abs_dedekind_eta``).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ModularLiftRequiredError

__all__ = [
    "ModularPoint",
    "dedekind_eta",
    "dedekind_eta_with_bound",
    "jacobi_theta3",
    "jacobi_theta3_with_bound",
    "log_abs_dedekind_eta",
]

_TRUNC = 1e-18
_MIN_IM = 1e-6


@dataclass(frozen=True)
class ModularPoint:
    """A point tau in the upper half-plane."""

    tau: complex

    def __post_init__(self):
        if not complex(self.tau).imag > 0:
            raise DomainError(f"tau must have positive imaginary part, got {self.tau}")


def _as_tau(p):
    tau = complex(p.tau) if isinstance(p, ModularPoint) else complex(p)
    if not tau.imag > 0:
        raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
    return tau


def dedekind_eta_with_bound(p):
    """eta(tau) together with an absolute truncation-error bound.

    The product is cut at the first n with |q|^n < 1e-18 (q = e^{2 pi i tau});
    the neglected factors multiply the result by at most
    exp(2 |q|^{n*+1} / (1 - |q|)), which is returned as a bound on the
    absolute error.  Below Im(tau) = 1e-6 the series is refused; use
    ``log_abs_dedekind_eta`` (modular lift) instead.
    """
    tau = _as_tau(p)
    if tau.imag < _MIN_IM:
        raise ModularLiftRequiredError(
            f"Im(tau) = {tau.imag:.3e} too small for the q-series; apply modular lift"
        )
    q = cmath.exp(2j * math.pi * tau)
    absq = abs(q)
    n_star = max(1, int(math.ceil(math.log(_TRUNC) / math.log(absq)))) if absq > 0 else 1
    ns = np.arange(1, n_star + 1)
    factors = 1.0 - q**ns
    prod = cmath.exp(1j * math.pi * tau / 12.0) * complex(np.prod(factors))
    rem = 2.0 * absq ** (n_star + 1) / (1.0 - absq)
    bound = abs(prod) * (math.exp(rem) - 1.0) + 1e-16 * n_star * abs(prod)
    return prod, bound


def dedekind_eta(p):
    """eta(tau) by the truncated q-product (real and positive on tau = iy)."""
    value, _ = dedekind_eta_with_bound(p)
    return value


def jacobi_theta3_with_bound(v, xarg):
    """theta_3(v|x) with an absolute truncation-error bound.

    Symmetric sum over n = -n*..n* with n* chosen so |e^{i x n^2}| < 1e-18;
    the discarded tail is bounded by a geometric series in |e^{ix}|^{2n*}.
    """
    x = complex(xarg)
    if not x.imag > 0:
        raise DomainError(f"theta_3 needs Im(x) > 0, got {x}")
    decay = x.imag  # |e^{i x n^2}| = e^{-Im(x) n^2}
    n_star = max(1, int(math.ceil(math.sqrt(-math.log(_TRUNC) / decay))))
    ns = np.arange(-n_star, n_star + 1)
    terms = np.exp(1j * x * ns**2 + 2j * math.pi * v * ns)
    total = complex(np.sum(terms))
    t_next = math.exp(-decay * (n_star + 1) ** 2)
    ratio = math.exp(-decay * (2 * n_star + 3))
    bound = 2.0 * t_next / (1.0 - ratio) + 1e-16 * (2 * n_star + 1)
    return total, bound


def jacobi_theta3(v, xarg):
    """theta_3(v|x) = sum_n e^{i x n^2 + 2 pi i v n}; even and 1-periodic in v."""
    value, _ = jacobi_theta3_with_bound(v, xarg)
    return value


def log_abs_dedekind_eta(z):
    """ln|eta(z)| for upper-half-plane z of any imaginary part.

    Reduces z to the fundamental domain with shifts z -> z + k (which leave
    |eta| unchanged up to the unit multiplier) and inversions z -> -1/z
    (|eta(z)| = |eta(-1/z)| / |z|^{1/2}), then sums the rapidly convergent
    q-series.  Accepts scalars or arrays; this is the precision lift used
    by the one-loop free energy, where eta is needed arbitrarily close to
    the real axis.
    """
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z).copy()
    if np.any(z.imag <= 0):
        raise DomainError("log_abs_dedekind_eta needs Im(z) > 0")
    acc = np.zeros(z.shape, dtype=float)
    for _ in range(256):
        z.real -= np.round(z.real)
        small = np.abs(z) < 1.0
        if not np.any(small):
            break
        acc[small] += -0.5 * np.log(np.abs(z[small]))
        z[small] = -1.0 / z[small]
    else:
        raise DomainError("fundamental-domain reduction did not terminate")
    # in the fundamental domain |q| <= e^{-pi sqrt(3)} ~ 4.3e-3
    out = acc - math.pi * z.imag / 12.0
    q = np.exp(2j * math.pi * z)
    qn = np.ones_like(q)
    for _ in range(16):
        qn = qn * q
        out += np.log(np.abs(1.0 - qn))
    return float(out[0]) if scalar else out
