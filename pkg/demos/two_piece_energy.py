"""Zero-temperature Casimir energy of the two-piece string.

Walks the (s, x) parameter plane: the energy vanishes for equal pieces
(s = 1) and for the uniform string (x = 1), is negative everywhere else,
and in the decoupled limit x -> 0 lands on the closed form
-(pi / 24 L)(s + 1/s - 2).  Also demonstrates the s -> 1/s and x -> 1/x
invariances.
"""

import math

import numpy as np

from stringcasimir import StringConfig, casimir_two_piece, casimir_two_piece_x0

L = math.pi

print("Decoupled limit against the closed form, L = pi")
print(f"{'s':>4} {'quadrature':>16} {'closed form':>16} {'difference':>12}")
for s in (1, 2, 3, 4, 6):
    quad = casimir_two_piece(StringConfig(s, 0.0, L)).value
    closed = casimir_two_piece_x0(s, L).value
    print(f"{s:>4} {quad:>16.12f} {closed:>16.12f} {quad - closed:>12.2e}")

print("\nEnergy over the tension ratio, s = 2")
xs = np.linspace(0.0, 1.0, 11)
values = [casimir_two_piece(StringConfig(2, x, L)).value for x in xs]
for x, v in zip(xs, values):
    bar = "#" * int(round(-v * 2000))
    print(f"  x = {x:4.2f}  E = {v:+.8f}  {bar}")

print("\nSymmetries")
a = casimir_two_piece(StringConfig(3.0, 0.4, L)).value
b = casimir_two_piece(StringConfig(1 / 3.0, 0.4, L)).value
print(f"  E(s=3)   = {a:+.12f}")
print(f"  E(s=1/3) = {b:+.12f}   |diff| = {abs(a - b):.1e}")
c = casimir_two_piece(StringConfig(3.0, 2.5, L)).value  # x > 1 maps to 1/x
d = casimir_two_piece(StringConfig(3.0, 0.4, L)).value
print(f"  E(x=2.5) = {c:+.12f}   equals E(x=0.4): {abs(c - d) < 1e-12}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 3.4))
    for s in (1.5, 2, 4, 8):
        grid = np.linspace(0.0, 0.99, 60)
        ax.plot(grid, [casimir_two_piece(StringConfig(s, x, L)).value for x in grid],
                label=f"s = {s}")
    ax.set_xlabel("tension ratio x")
    ax.set_ylabel("E")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig("two_piece_energy.png", dpi=150)
    print("\nwrote two_piece_energy.png")
except ImportError:
    pass
