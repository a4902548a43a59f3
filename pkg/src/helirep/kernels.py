"""Terminating hypergeometric kernels and factorial helpers.

Everything here evaluates finite sums only: series that fail to
terminate, or whose denominator parameters vanish before the last
needed term, raise instead of guessing.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

from .halfint import HalfInt


class NonTerminatingError(ValueError):
    """No numerator parameter truncates the series."""


class PoleError(ArithmeticError):
    """A denominator parameter vanishes before the series terminates."""


def ipow(k):
    """The imaginary unit to an exact integer power (int or HalfInt)."""
    if isinstance(k, HalfInt):
        k = k.as_int()
    return (1 + 0j, 1j, -1 + 0j, -1j)[int(k) % 4]


def fact(n):
    """Exact factorial of an integer-valued argument (int or HalfInt)."""
    if isinstance(n, HalfInt):
        n = n.as_int()
    n = int(n)
    if n < 0:
        raise ValueError(f"factorial of negative value {n}")
    return math.factorial(n)


def ln_factorial(n):
    """log(n!) via lgamma; exact enough for ratio work at any size."""
    if isinstance(n, HalfInt):
        n = n.as_int()
    n = int(n)
    if n < 0:
        raise ValueError(f"factorial of negative value {n}")
    return math.lgamma(n + 1)


def _exact_value(v):
    """Return v as int/Fraction when exactly representable, else None."""
    if isinstance(v, HalfInt):
        return v.as_fraction()
    if isinstance(v, numbers.Integral):
        return int(v)
    if isinstance(v, Fraction):
        return v
    return None


def _is_nonpositive_int(v):
    if isinstance(v, numbers.Integral):
        return v <= 0
    if isinstance(v, Fraction):
        return v.denominator == 1 and v <= 0
    if isinstance(v, float):
        return v <= 0 and v == round(v)
    return False


def terminating_series(num_params, den_params, x):
    """Sum of a generalized hypergeometric series that must terminate.

    Terms follow t_{k+1} = t_k * prod(a+k) / (prod(b+k) * (k+1)) * x with
    t_0 = 1.  At least one numerator parameter must be a non-positive
    integer; a vanishing denominator factor before the final term raises
    PoleError.  With exact parameters and an exact x the sum is returned
    as a Fraction, otherwise as a float/complex Kahan-compensated sum.
    """
    def norm(v):
        e = _exact_value(v)
        return v if e is None else e

    nums = [norm(a) for a in num_params]
    dens = [norm(b) for b in den_params]
    stops = [-int(round(float(a))) for a in nums if _is_nonpositive_int(a)]
    if not stops:
        raise NonTerminatingError(
            f"no non-positive integer among numerator parameters {nums}"
        )
    last = min(stops)

    exact_x = _exact_value(x)
    all_exact = all(isinstance(v, (int, Fraction)) for v in nums + dens)
    if exact_x is not None and all_exact:
        nums_e, dens_e = nums, dens
        term = Fraction(1)
        total = Fraction(1)
        for t in range(last):
            den = Fraction(t + 1)
            for b in dens_e:
                den *= b + t
            if den == 0:
                raise PoleError(
                    f"denominator parameter hits zero at term {t + 1} "
                    f"before termination at {last}"
                )
            num = Fraction(1)
            for a in nums_e:
                num *= a + t
            term = term * num / den * Fraction(exact_x)
            total += term
        return total

    nums_f = [complex(v).real if complex(v).imag == 0 else complex(v) for v in nums]
    dens_f = [complex(v).real if complex(v).imag == 0 else complex(v) for v in dens]
    term = 1.0 if not isinstance(x, complex) else (1.0 + 0.0j)
    total = term
    comp = 0.0  # Kahan compensation (real path)
    use_kahan = not isinstance(x, complex)
    for t in range(last):
        den = t + 1.0
        for b in dens_f:
            den *= b + t
        if den == 0:
            raise PoleError(
                f"denominator parameter hits zero at term {t + 1} "
                f"before termination at {last}"
            )
        num = 1.0
        for a in nums_f:
            num *= a + t
        term = term * num / den * x
        if use_kahan:
            y = term - comp
            s = total + y
            comp = (s - total) - y
            total = s
        else:
            total += term
    return total


def hyp2f1_term(a, b, c, x):
    """Terminating Gauss series 2F1(a, b; c; x)."""
    return terminating_series((a, b), (c,), x)


def hyp3f2_unit(a1, a2, a3, b1, b2):
    """Terminating 3F2 at unit argument (exact when parameters are exact)."""
    return terminating_series((a1, a2, a3), (b1, b2), Fraction(1))


def gamma_ratio_int(p, q):
    """Gamma(p)/Gamma(q) for integer arguments with pole bookkeeping.

    A pole in the denominator only (q <= 0 < p) gives exactly 0; a pole
    in the numerator only raises, since the ratio diverges.
    """
    p, q = int(p), int(q)
    if p > 0 and q > 0:
        return math.exp(ln_factorial(p - 1) - ln_factorial(q - 1))
    if p > 0 >= q:
        return 0.0
    if q > 0 >= p:
        raise PoleError(f"Gamma({p}) diverges while Gamma({q}) is finite")
    # Both arguments at poles: reflect to a finite ratio with a sign.
    sign = -1.0 if (q - p) % 2 else 1.0
    return sign * math.exp(ln_factorial(-q) - ln_factorial(-p))
