"""Reducing the chain system to radial equations and probing solutions.

Assembles the radial first-order system for the four-component preset,
integrates it outward, measures how well the samples satisfy the
equation, estimates the integrator's convergence order, and reads the
large-distance envelope off the solution.
"""

import numpy as np

from helirep.gelfand_yaglom import dirac_system
from helirep.radial import (
    assemble_rfs,
    bessel_probe,
    convergence_order,
    integrate,
    residual,
)

system = dirac_system()
init = np.array([1.0, 0.0, 1j, 0.0])

for variant in ("printed", "alt"):
    rs = assemble_rfs(system, "1/2", "1/2", variant=variant)
    sol = integrate(rs, 0.5, 60.0, init, 10000)
    defect = residual(rs, sol)
    probe = bessel_probe(sol)
    print(f"{variant} sign variant on r in [0.5, 60]:")
    print(f"  equation defect (5-point check)  {defect:.2e}")
    print(f"  oscillation periods observed     {probe['periods']:.1f}")
    print(f"  mean wavelength                  {probe['wavelength_mean']:.4f}"
          f"  (2*pi = {2 * np.pi:.4f})")
    print(f"  envelope exponent                "
          f"{probe['envelope_exponent']:+.4f}")
    assert defect <= 1e-7

rs = assemble_rfs(system, "1/2", "1/2", variant="alt")
order = convergence_order(rs, 0.5, 10.0, init, base_steps=200)
print(f"step-halving convergence order: {order['order']:.2f} "
      f"(5th-order accept-all runs)")
assert order["order"] >= 4.0

probe = bessel_probe(integrate(rs, 0.5, 60.0, init, 10000))
print(f"alt-variant verdict: {probe['verdict']} — amplitude falls like "
      f"r^{probe['envelope_exponent']:+.2f} with steady wavelength, the "
      f"cylinder-function signature")
assert probe["verdict"] == "pass"
