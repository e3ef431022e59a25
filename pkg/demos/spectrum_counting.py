"""Eigenfrequency spectra and argument-principle mode counting.

Shows the doubly degenerate uniform-string modes, the two branch families
of the decoupled limit merging with multiplicity 2 at coincidences, and
the contour count agreeing with the multiplicity-summed root list.
"""

import math

from stringcasimir import (
    StringConfig,
    branch_spectrum_x0,
    count_modes,
    find_spectrum,
)

print("Uniform closed string, L = 2 pi (every mode doubly degenerate)")
spec = find_spectrum(StringConfig(1, 1.0, 2 * math.pi), 4.5)
for w, m in spec.entries:
    print(f"  omega = {w:.10f}   multiplicity {m}")

print("\nDecoupled limit x = 0, s = 2, L = pi: two branch families")
first = branch_spectrum_x0(2, "first", 3).omegas()
second = branch_spectrum_x0(2, "second", 6).omegas()
print("  first branch :", ", ".join(f"{w:g}" for w in first))
print("  second branch:", ", ".join(f"{w:g}" for w in second))
spec = find_spectrum(StringConfig(2, 0.0, math.pi), 10.0)
print("  merged spectrum (coincidences get multiplicity 2):")
for w, m in spec.entries:
    print(f"    omega = {w:.10f}   multiplicity {m}")

print("\nArgument-principle count vs multiplicity sum")
for s, x, omega_max in ((2, 0.0, 10.0), (1.7, 0.35, 12.0), (1, 0.5, 8.0)):
    cfg = StringConfig(s, x, math.pi)
    counted = count_modes(cfg, omega_max)
    spec = find_spectrum(cfg, counted.contour[1])
    print(f"  s={s:<4} x={x:<5} contour count = {counted.zeros_minus_poles:>3}   "
          f"sum of multiplicities = {spec.total_count():>3}")

print("\nMean mode density approaches L/pi (Weyl)")
cfg = StringConfig(2, 0.3, math.pi)
for omega_max in (20.0, 40.0, 80.0):
    spec = find_spectrum(cfg, omega_max)
    print(f"  N(omega <= {omega_max:5.1f}) * pi / (L omega) = "
          f"{spec.total_count() * math.pi / (cfg.total_length * omega_max):.4f}")
