"""Separated radial first-order systems and their numerical diagnostics.

Separating the angular dependence from a chain wave equation leaves,
per sector, a linear system  A f'(r) + C f(r)/r + kappa f(r) = 0  on
the chain components.  The derivative matrix A is twice the assembled
longitudinal matrix; the 1/r matrix C carries the printed diagonal and
ladder cross terms, the latter weighted by the opposite sector's
spectator ladder factors.  The printed diagonal signs are kept
literally under ``variant="printed"``; ``variant="alt"`` flips the
three diagonal 1/r signs for sensitivity runs (the source typesets a
dangling sign pair there, so both readings are kept on equal footing).

Diagnostics: adaptive integration, a finite-difference residual, a
fixed-step convergence-order estimate, and an asymptotics probe that
tests for cylinder-function behavior (envelope ~ r^(-1/2), constant
wavelength).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .gelfand_yaglom import GYSystem, RepChain, is_interlocking
from .halfint import HalfInt, mrange

_VARIANTS = ("printed", "alt")


@dataclass(frozen=True)
class RadialBlock:
    """One sector's system  A f' + C f/r + kappa f = 0."""

    labels: tuple
    deriv: np.ndarray
    inv_r: np.ndarray
    kappa: complex

    @property
    def dim(self):
        return len(self.labels)


@dataclass(frozen=True)
class RadialSystem:
    """Both sectors of the separated system for one ansatz weight pair."""

    chain: RepChain
    l0: HalfInt
    l0_dot: HalfInt
    variant: str
    plain: RadialBlock
    conjugate: RadialBlock

    def block(self, sector):
        if sector == "plain":
            return self.plain
        if sector == "conjugate":
            return self.conjugate
        raise ValueError(f"unknown sector {sector!r}")


@dataclass(frozen=True)
class RadialSolution:
    """Samples of one sector's components on an increasing radius grid."""

    grid: np.ndarray
    values: np.ndarray
    labels: tuple
    sector: str
    variant: str


def _sqrt_pairs(a, b):
    """sqrt(a*b) for integer factors, zero when the ladder exits."""
    prod = a * b
    return math.sqrt(prod) if prod > 0 else 0.0


def _spectator_weights(spec_l, spec_m):
    """Lowering/raising ladder factors of the spectator projection."""
    lt, mt = spec_l.twice, spec_m.twice
    down = _sqrt_pairs(lt + mt, lt - mt + 2) / 2.0
    up = _sqrt_pairs(lt + mt + 2, lt - mt) / 2.0
    return down, up


def _assemble_block(chain, table, kappa, spec_l, spec_m, variant, sector):
    basis = tuple(chain.basis())
    index = {label: i for i, label in enumerate(basis)}
    dim = len(basis)
    deriv = np.zeros((dim, dim), dtype=complex)
    inv_r = np.zeros((dim, dim), dtype=complex)
    down, up = _spectator_weights(spec_l, spec_m)
    flip = -1.0 if variant == "alt" else 1.0
    nreps = len(chain.reps)
    for (kr, ks, lr, ls), value in table.items():
        if not (0 <= kr < nreps and 0 <= ks < nreps):
            raise ValueError(
                f"{sector} coefficient names rep {max(kr, ks)}, chain has {nreps}"
            )
        if kr != ks and not is_interlocking(chain.reps[kr], chain.reps[ks]):
            raise ValueError(
                f"{sector} coefficient on non-interlocking pair ({kr}, {ks})"
            )
        if lr not in chain.tower_spins(kr) or ls not in chain.tower_spins(ks):
            raise ValueError(
                f"{sector} coefficient targets tower ({lr}, {ls}) "
                f"absent from reps ({kr}, {ks})"
            )
        lt = lr.twice
        for m in mrange(lr):
            mt = m.twice
            row = index[basis[0]._replace(k=kr, l=lr, m=m)]
            if ls.twice == lt - 2:
                stretch = _sqrt_pairs(lt - mt, lt + mt) / 2.0
                terms = (
                    (m, 2.0 * stretch, flip * -(lt + 2) / 2.0 * stretch),
                    (m - 1, 0.0, 1j * _sqrt_pairs(lt + mt, lt + mt - 2) / 2.0 * down),
                    (m + 1, 0.0, 1j * _sqrt_pairs(lt - mt, lt - mt - 2) / 2.0 * up),
                )
            elif ls.twice == lt:
                terms = (
                    (m, float(mt), flip * -mt / 2.0),
                    (m - 1, 0.0, -1j * _sqrt_pairs(lt + mt, lt - mt + 2) / 2.0 * down),
                    (m + 1, 0.0, 1j * _sqrt_pairs(lt + mt + 2, lt - mt) / 2.0 * up),
                )
            else:
                stretch = _sqrt_pairs(lt + 2 - mt, lt + 2 + mt) / 2.0
                terms = (
                    (m, 2.0 * stretch, flip * lt / 2.0 * stretch),
                    (m - 1, 0.0, -1j * _sqrt_pairs(lt - mt + 2, lt - mt + 4) / 2.0 * down),
                    (m + 1, 0.0, -1j * _sqrt_pairs(lt + mt + 2, lt + mt + 4) / 2.0 * up),
                )
            for target_m, d_weight, r_weight in terms:
                if d_weight == 0.0 and r_weight == 0.0:
                    continue
                col = index[basis[0]._replace(k=ks, l=ls, m=target_m)]
                deriv[row, col] += value * d_weight
                inv_r[row, col] += value * r_weight
    return RadialBlock(basis, deriv, inv_r, complex(kappa))


def assemble_rfs(system: GYSystem, l0, l0_dot, variant="printed", mdot=None, m=None):
    """Radial system for the ansatz weights (l0, l0_dot).

    Each chain component (k, l, m) contributes one equation per sector;
    neighbors are the towers l-1, l, l+1 and projections m-1, m, m+1,
    with the cross terms carrying the spectator ladder factors of the
    opposite sector's weight (projection ``mdot`` resp. ``m``, both
    defaulting to the extreme value, where the raising factor dies).
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")
    l0, l0_dot = HalfInt(l0), HalfInt(l0_dot)
    top = max(
        (l.twice for k in range(len(system.chain.reps))
         for l in system.chain.tower_spins(k)),
    )
    if l0.twice < top or l0_dot.twice < top:
        raise ValueError(
            "ansatz weights must dominate every tower spin of the chain"
        )
    mdot = l0_dot if mdot is None else HalfInt(mdot)
    m = l0 if m is None else HalfInt(m)
    if abs(mdot.twice) > l0_dot.twice or abs(m.twice) > l0.twice:
        raise ValueError("spectator projection out of range")
    plain = _assemble_block(
        system.chain, system.coeffs.undotted, system.kappa, l0_dot, mdot,
        variant, "plain",
    )
    conjugate = _assemble_block(
        system.chain, system.coeffs.dotted, system.kappa_dot, l0, m,
        variant, "conjugate",
    )
    return RadialSystem(system.chain, l0, l0_dot, variant, plain, conjugate)


def _normal_form(block):
    """M(r) pieces with  f' = -(A^-1 C)/r f - kappa A^-1 f."""
    cond = np.linalg.cond(block.deriv)
    if not np.isfinite(cond) or cond > 1e12:
        raise ValueError(
            "derivative matrix is singular — the system has no normal form"
        )
    a_inv = np.linalg.inv(block.deriv)
    return -a_inv @ block.inv_r, -block.kappa * a_inv


def _real_split(mat):
    return np.block([[mat.real, -mat.imag], [mat.imag, mat.real]])


def integrate(system: RadialSystem, r0, r1, init, steps, sector="plain",
              rtol=1e-10, atol=1e-12):
    """Adaptive 4th/5th-order integration on a uniform output grid."""
    block = system.block(sector)
    r0, r1 = float(r0), float(r1)
    if r0 <= 0:
        raise ValueError("the radial origin is singular; need r0 > 0")
    if r1 <= r0:
        raise ValueError("need r1 > r0")
    steps = int(steps)
    if steps < 100:
        raise ValueError("need at least 100 steps")
    init = np.asarray(init, dtype=complex)
    if init.shape != (block.dim,):
        raise ValueError(f"initial vector must have {block.dim} components")
    over_r, constant = _normal_form(block)
    over_r_s = _real_split(over_r)
    constant_s = _real_split(constant)

    def rhs(r, z):
        return (over_r_s / r + constant_s) @ z

    grid = np.linspace(r0, r1, steps + 1)
    result = solve_ivp(
        rhs,
        (r0, r1),
        np.concatenate([init.real, init.imag]),
        method="RK45",
        t_eval=grid,
        rtol=rtol,
        atol=atol,
    )
    if not result.success:
        last = result.t[-1] if len(result.t) else r0
        raise RuntimeError(
            f"integration stalled at r = {last:.6g}: {result.message}"
        )
    values = (result.y[: block.dim] + 1j * result.y[block.dim:]).T
    if not np.all(np.isfinite(values)):
        raise RuntimeError("integration produced non-finite samples")
    return RadialSolution(grid, values, block.labels, sector, system.variant)


def residual(system: RadialSystem, solution: RadialSolution):
    """Max equation defect on the interior grid, derivatives by
    five-point fourth-order central differences."""
    block = system.block(solution.sector)
    r = solution.grid
    f = solution.values
    h = r[1] - r[0]
    if np.max(np.abs(np.diff(r) - h)) > 1e-9 * h:
        raise ValueError("residual needs a uniform grid")
    df = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12.0 * h)
    mid = f[2:-2]
    mid_r = r[2:-2, None]
    defect = (
        df @ block.deriv.T
        + (mid / mid_r) @ block.inv_r.T
        + block.kappa * mid
    )
    return float(np.max(np.abs(defect))) if defect.size else 0.0


def convergence_order(system: RadialSystem, r0, r1, init, sector="plain",
                      base_steps=400):
    """Richardson order estimate from step-capped fixed-step runs."""
    block = system.block(sector)
    init = np.asarray(init, dtype=complex)
    over_r, constant = _normal_form(block)
    over_r_s = _real_split(over_r)
    constant_s = _real_split(constant)

    def endpoint(n):
        h = (r1 - r0) / n
        result = solve_ivp(
            lambda r, z: (over_r_s / r + constant_s) @ z,
            (float(r0), float(r1)),
            np.concatenate([init.real, init.imag]),
            method="RK45",
            first_step=h,
            max_step=h,
            rtol=1e6,
            atol=1e6,
        )
        return result.y[:, -1]

    y1 = endpoint(base_steps)
    y2 = endpoint(2 * base_steps)
    y3 = endpoint(4 * base_steps)
    d12 = float(np.linalg.norm(y1 - y2))
    d23 = float(np.linalg.norm(y2 - y3))
    order = math.log2(d12 / d23) if d23 > 0 else float("inf")
    return {"order": order, "coarse_diff": d12, "fine_diff": d23}


def _zero_crossings(x, y):
    """Linear-interpolated zero crossings of y(x)."""
    out = []
    for i in range(len(y) - 1):
        a, b = y[i], y[i + 1]
        if a == 0.0:
            out.append(x[i])
        elif a * b < 0:
            out.append(x[i] - a * (x[i + 1] - x[i]) / (b - a))
    return np.asarray(out)


def bessel_probe(solution: RadialSolution, component=None):
    """Cylinder-asymptotics check of one solution component.

    Fits the power-law exponent of the oscillation envelope and the
    constancy of the local wavelength.  Verdicts: ``pass`` when the
    envelope exponent is -0.5 +- 0.1 and the wavelength drift is below
    five percent, ``fail`` otherwise, and ``inconclusive`` when fewer
    than three full oscillation periods are present (no oscillation at
    all is an outright fail).
    """
    r = solution.grid
    if component is None:
        component = int(np.argmax(np.max(np.abs(solution.values), axis=0)))
    y = solution.values[:, component]
    crossings = _zero_crossings(r, y.real)
    report = {
        "component": str(solution.labels[component]),
        "sector": solution.sector,
        "variant": solution.variant,
    }
    if len(crossings) < 2:
        report.update(
            verdict="fail", detail="no oscillation detected",
            periods=0.0, envelope_exponent=None, wavelength_drift=None,
        )
        return report
    periods = (len(crossings) - 1) / 2.0
    report["periods"] = periods
    half_waves = np.diff(crossings)
    wavelengths = half_waves * 2.0
    report["wavelength_mean"] = float(np.mean(wavelengths))
    report["wavelength_drift"] = float(
        np.std(wavelengths) / np.mean(wavelengths)
    )
    if periods < 3:
        report.update(
            verdict="inconclusive",
            detail="fewer than three oscillation periods",
            envelope_exponent=None,
        )
        return report

    mag = np.abs(y)
    peaks = [
        i for i in range(1, len(mag) - 1)
        if mag[i] >= mag[i - 1] and mag[i] >= mag[i + 1]
    ]
    if len(peaks) >= 4:
        xs, ys = r[peaks], mag[peaks]
    else:
        keep = mag > 0
        xs, ys = r[keep], mag[keep]
    slope = np.polyfit(np.log(xs), np.log(ys), 1)[0]
    report["envelope_exponent"] = float(slope)
    good = abs(slope + 0.5) <= 0.1 and report["wavelength_drift"] <= 0.05
    report["verdict"] = "pass" if good else "fail"
    report["detail"] = "cylinder asymptotics" if good else (
        "envelope or wavelength outside cylinder-function bounds"
    )
    return report
