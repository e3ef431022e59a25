"""Eigenfrequency spectra of the two-piece string.

Real roots of the dispersion function are located by a fine bracketing
scan plus bisection, and every multiplicity is confirmed by an
argument-principle winding integral on a small rectangle around the root.
Tangential zeros (where the dispersion function touches zero without a
sign change, e.g. the doubly degenerate modes of the uniform string) are
caught by refining local extrema to critical points and testing the
winding there; naive sign-change counting alone would miss them.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core import StringConfig, dispersion_two_piece, dispersion_two_piece_deriv
from .errors import DomainError, MultiplicityUndecidedError

__all__ = [
    "Spectrum",
    "ContourCount",
    "find_spectrum",
    "count_modes",
    "branch_spectrum_x0",
    "uniform_spectrum",
]

_BISECT_RTOL = 1e-13
_MERGE_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Sorted positive eigenfrequencies with integer multiplicities."""

    entries: tuple
    omega_max: float

    def __post_init__(self):
        omegas = [w for w, _ in self.entries]
        if any(b <= a for a, b in zip(omegas, omegas[1:])):
            raise DomainError("spectrum entries must be strictly increasing")
        if any(m < 1 for _, m in self.entries):
            raise DomainError("multiplicities must be positive integers")

    def omegas(self):
        return np.array([w for w, _ in self.entries])

    def multiplicities(self):
        return np.array([m for _, m in self.entries], dtype=int)

    def total_count(self):
        """Number of modes counted with multiplicity."""
        return int(sum(m for _, m in self.entries))


@dataclass(frozen=True)
class ContourCount:
    """Zeros-minus-poles count inside a rectangle in the frequency plane."""

    zeros_minus_poles: int
    contour: tuple  # (re_min, re_max, im_extent)


def _winding_number(func, re_lo, re_hi, height, n_start=64, n_max=8192, label=""):
    """Accumulated-phase winding of func around a rectangle.

    Doubles the sampling until two consecutive levels round to the same
    integer and land within 0.01 of it.
    """
    prev = None
    n = n_start
    while n <= n_max:
        per_edge = max(n // 4, 8)
        bottom = np.linspace(re_lo, re_hi, per_edge, endpoint=False) - 1j * height
        right = re_hi + 1j * np.linspace(-height, height, per_edge, endpoint=False)
        top = np.linspace(re_hi, re_lo, per_edge, endpoint=False) + 1j * height
        left = re_lo + 1j * np.linspace(height, -height, per_edge, endpoint=False)
        zs = np.concatenate([bottom, right, top, left])
        vals = func(zs)
        if np.any(vals == 0) or not np.all(np.isfinite(vals)):
            n *= 2
            continue
        rolled = np.roll(vals, -1)
        phases = np.angle(rolled / vals)
        wind = float(np.sum(phases) / (2.0 * math.pi))
        near = round(wind)
        if abs(wind - near) < 0.01 and prev == near:
            return near
        prev = near if abs(wind - near) < 0.01 else None
        n *= 2
    raise MultiplicityUndecidedError(
        f"multiplicity-undecided: winding failed to stabilize {label}", omega=None
    )


def _scan_grid(cfg, omega_max):
    s = cfg.length_ratio
    step = math.pi * min(1.0, s) / (4.0 * cfg.total_length * (1.0 + s))
    n = int(math.ceil(omega_max / step)) + 1
    grid = np.linspace(0.0, omega_max, n + 1)
    return grid, dispersion_two_piece(grid, cfg)


def _candidate_roots(cfg, grid, vals):
    """Bracketed sign-change roots plus refined tangential candidates."""
    g = lambda w: float(dispersion_two_piece(w, cfg))
    gp = lambda w: float(dispersion_two_piece_deriv(w, cfg))
    step = grid[1] - grid[0]
    roots = []

    sign_change = (vals[:-1] * vals[1:] < 0) & (grid[:-1] > 0)
    for i in np.nonzero(sign_change)[0]:
        roots.append(brentq(g, grid[i], grid[i + 1], xtol=1e-14, rtol=_BISECT_RTOL))

    # tangential / near-degenerate candidates: local extrema of g close to zero
    dip_threshold = min(0.25, 2.0 * (cfg.total_length * step) ** 2)
    interior = np.arange(1, len(grid) - 1)
    local_min = (vals[interior] < vals[interior - 1]) & (vals[interior] <= vals[interior + 1])
    local_max = (vals[interior] > vals[interior - 1]) & (vals[interior] >= vals[interior + 1])
    small = np.abs(vals[interior]) < dip_threshold
    for i in interior[(local_min | local_max) & small]:
        if vals[i - 1] * vals[i] < 0 or vals[i] * vals[i + 1] < 0:
            continue  # already caught as a sign change
        a, b = grid[i - 1], grid[i + 1]
        if gp(a) * gp(b) >= 0:
            continue
        crit = brentq(gp, a, b, xtol=1e-14, rtol=_BISECT_RTOL)
        gc = g(crit)
        if abs(gc) < 1e-9:
            if crit > 0:
                roots.append(crit)
        elif gc * vals[i - 1] < 0:
            # the dip crosses zero twice inside one cell
            roots.append(brentq(g, a, crit, xtol=1e-14, rtol=_BISECT_RTOL))
            roots.append(brentq(g, crit, b, xtol=1e-14, rtol=_BISECT_RTOL))
    roots.sort()

    merged = []
    for r in roots:
        if merged and abs(r - merged[-1]) < _MERGE_TOL * max(1.0, r):
            continue
        merged.append(r)
    return merged


def find_spectrum(cfg, omega_max):
    """All eigenfrequencies in (0, omega_max] with winding-confirmed
    multiplicities.

    Roots are bracketed on a grid finer than the tightest branch spacing,
    polished by bisection to ~1e-12 relative accuracy, and each root's
    multiplicity is the winding number of the dispersion function around a
    small rectangle isolating it.
    """
    if not isinstance(cfg, StringConfig):
        raise DomainError("find_spectrum expects a StringConfig")
    if not omega_max > 0:
        raise DomainError(f"omega_max must be positive, got {omega_max}")
    # scan past the ceiling so the last in-range roots know their true
    # right-hand isolation gaps (their winding rectangles may extend out)
    grid, vals = _scan_grid(cfg, omega_max + 1.2)
    roots = [r for r in _candidate_roots(cfg, grid, vals) if r > 0.0]

    func = lambda z: dispersion_two_piece(z, cfg)
    entries = []
    for k, r in enumerate(roots):
        if r > omega_max * (1.0 + 1e-12):
            continue
        gap_left = r - roots[k - 1] if k > 0 else r
        gap_right = roots[k + 1] - r if k + 1 < len(roots) else math.inf
        half = min(0.5, 0.45 * gap_left, 0.45 * gap_right)
        try:
            mult = _winding_number(func, r - half, r + half, half, label=f"at omega={r:.12g}")
        except MultiplicityUndecidedError:
            raise MultiplicityUndecidedError(
                f"multiplicity-undecided at omega={r:.12g}", omega=r
            ) from None
        if mult > 0:
            entries.append((r, mult))
    return Spectrum(entries=tuple(entries), omega_max=omega_max)


def count_modes(cfg, omega_max, im_extent=0.5):
    """Total zero count of the dispersion function in (0, omega_max) by the
    argument principle.

    The contour is the rectangle (re_min, re_max) x (-h, +h).  Its left
    edge sits below the first root (the trivial zero at omega = 0 is
    excluded); if omega_max falls on a root the right edge is shifted
    outward by half the local root spacing, and the contour actually used
    is returned so callers can compare against the same interval.
    """
    if not omega_max > 0:
        raise DomainError(f"omega_max must be positive, got {omega_max}")
    grid, vals = _scan_grid(cfg, omega_max + 2.0)
    roots = np.array(_candidate_roots(cfg, grid, vals))
    roots = roots[roots > 0]

    if len(roots) == 0 or omega_max < roots[0]:
        re_min = 0.5 * omega_max
        return ContourCount(0, (re_min, omega_max, im_extent))

    re_min = 0.5 * roots[0]
    re_max = omega_max
    spacing = np.median(np.diff(roots)) if len(roots) > 1 else roots[0]
    if np.min(np.abs(roots - re_max)) < 0.25 * spacing:
        re_max = re_max + 0.5 * spacing

    inside = roots[(roots > re_min) & (roots < re_max)]
    expected = max(len(inside), 1)
    func = lambda z: dispersion_two_piece(z, cfg)
    count = _winding_number(
        func,
        re_min,
        re_max,
        im_extent,
        n_start=max(256, 16 * expected),
        n_max=max(16384, 256 * expected),
        label=f"on (0, {re_max:.6g})",
    )
    return ContourCount(int(count), (re_min, re_max, im_extent))


def branch_spectrum_x0(s, branch, n_max):
    """Decoupled-limit (x = 0) eigenfrequency branches for integer s.

    First branch: omega_n = (1+s) n; second branch: omega_n = (1+1/s) n,
    n = 1..n_max.  Positive frequencies only, one entry per n; coincident
    frequencies between the two branches are the caller's bookkeeping.
    """
    if not (isinstance(s, (int, np.integer)) and s >= 1):
        raise DomainError(f"s must be an integer >= 1, got {s}")
    if not (isinstance(n_max, (int, np.integer)) and n_max >= 1):
        raise DomainError(f"n_max must be a positive integer, got {n_max}")
    if branch == "first":
        rate = 1.0 + s
    elif branch == "second":
        rate = 1.0 + 1.0 / s
    else:
        raise DomainError(f"branch must be 'first' or 'second', got {branch!r}")
    entries = tuple((rate * n, 1) for n in range(1, n_max + 1))
    return Spectrum(entries=entries, omega_max=rate * n_max)


def uniform_spectrum(total_length, omega_max):
    """Uniform closed string: omega_n = 2 pi n / L, each doubly degenerate."""
    if not total_length > 0:
        raise DomainError(f"total_length must be positive, got {total_length}")
    base = 2.0 * math.pi / total_length
    n_top = int(math.floor(omega_max / base + 1e-12))
    entries = tuple((base * n, 2) for n in range(1, n_top + 1))
    return Spectrum(entries=entries, omega_max=omega_max)
