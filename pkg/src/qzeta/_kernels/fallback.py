"""Pure-Python series kernel.

Mirrors ``_series.pyx`` operation for operation (same expression grouping,
same overflow guard, same degeneracy checks) so the two backends agree to
rounding noise and either can back the public API.
"""

import cmath


def sharp_series_sum(k: complex, a: float, d: float, n_terms: int) -> complex:
    """Sum of the first ``n_terms`` series terms at k (term 0 is 1).

    Term j carries the product over l=1..j of the four exponential factors
    times the Gaussian quotient; consecutive terms differ by one multiplicative
    ratio, so the whole sum is a single O(n_terms) recurrence.  When either
    Gaussian exponent's real part exceeds 700 the quotient of the two
    (exp(x)+1) factors collapses to exp(x1-x2), which is exact to ~1e-290
    there and dodges overflow.
    """
    k = complex(k)
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for j in range(1, n_terms):
        e1 = 1.0 - cmath.exp(-(j + 2.0 * k - 1.0) / a)
        e2 = 1.0 - cmath.exp((j + k) / a)
        e3 = 1.0 - cmath.exp(-(j + k - 1.0) / a)
        e4 = 1.0 - cmath.exp(complex(j / a))
        if abs(e3) < 1e-300 or abs(e4) < 1e-300:
            raise ValueError(f"degenerate denominator in series term {j}")
        w1 = k + (j - 1.0)
        w2 = k + j
        x1 = d * (w1 * w1) / (4.0 * a)
        x2 = d * (w2 * w2) / (4.0 * a)
        if x1.real > 700.0 or x2.real > 700.0:
            gauss = cmath.exp(x1 - x2)
        else:
            gauss = (cmath.exp(x1) + 1.0) / (cmath.exp(x2) + 1.0)
        term = term * (((e1 * e2) / (e3 * e4)) * gauss)
        total = total + term
    return total
