# cython: language_level=3, cdivision=True, boundscheck=False
"""Compiled series kernel; mirrors ``fallback.py`` operation for operation."""

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double cabs(double complex)
    double creal(double complex)


def sharp_series_sum(double complex k, double a, double d, Py_ssize_t n_terms):
    """Sum of the first ``n_terms`` series terms at k (term 0 is 1).

    Same recurrence, overflow guard (Gaussian exponent real part > 700), and
    degeneracy checks as the pure-Python kernel.
    """
    cdef double complex total = 1.0
    cdef double complex term = 1.0
    cdef double complex e1, e2, e3, e4, w1, w2, x1, x2, gauss
    cdef Py_ssize_t j
    for j in range(1, n_terms):
        e1 = 1.0 - cexp(-(j + 2.0 * k - 1.0) / a)
        e2 = 1.0 - cexp((j + k) / a)
        e3 = 1.0 - cexp(-(j + k - 1.0) / a)
        e4 = 1.0 - cexp(j / a + 0j)
        if cabs(e3) < 1e-300 or cabs(e4) < 1e-300:
            raise ValueError(f"degenerate denominator in series term {j}")
        w1 = k + (j - 1.0)
        w2 = k + j
        x1 = d * (w1 * w1) / (4.0 * a)
        x2 = d * (w2 * w2) / (4.0 * a)
        if creal(x1) > 700.0 or creal(x2) > 700.0:
            gauss = cexp(x1 - x2)
        else:
            gauss = (cexp(x1) + 1.0) / (cexp(x2) + 1.0)
        term = term * (((e1 * e2) / (e3 * e4)) * gauss)
        total = total + term
    return total
