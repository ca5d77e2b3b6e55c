"""Dirichlet-kernel ratio with stable handling of its removable singularities."""

from __future__ import annotations

import numpy as np

# switch to the cosine-sum form when |sin| drops below this
_SINGULAR_SIN = 1e-8


def dirichlet_ratio(m_terms: int, s, period):
    """Evaluate sin(M pi s / n) / sin(pi s / n) for M = ``m_terms``, n = ``period``.

    The ratio equals the finite sum  sum_{r=0}^{M-1} cos((2r - M + 1) pi s / n),
    which is everywhere regular; near the removable singularities s = k n the
    sum is used directly, elsewhere the two-sine quotient.  The argument is
    measured from the nearest singular point (s - k n is exact in floating
    point there), so the quotient branch stays accurate arbitrarily close to
    the switch-over.

    ``s`` may be a scalar or an array; the return matches its shape.
    """
    s_arr = np.asarray(s, dtype=float)
    scalar = s_arr.ndim == 0
    s_arr = np.atleast_1d(s_arr)

    nearest = np.rint(s_arr / period)
    delta = s_arr - nearest * period              # exact near s = k * period
    v = (np.pi / period) * delta                  # in [-pi/2, pi/2]

    den_sign = np.where(np.mod(nearest, 2.0) == 0.0, 1.0, -1.0)
    num_sign = np.where(np.mod(m_terms * nearest, 2.0) == 0.0, 1.0, -1.0)
    den = den_sign * np.sin(v)
    num = num_sign * np.sin(m_terms * v)

    out = np.empty_like(s_arr)
    regular = np.abs(den) >= _SINGULAR_SIN
    out[regular] = num[regular] / den[regular]

    if not np.all(regular):
        near = ~regular
        coeff = 2.0 * np.arange(m_terms) - (m_terms - 1)
        sums = np.cos(np.outer(v[near], coeff)).sum(axis=1)
        sum_sign = np.where(np.mod((m_terms - 1) * nearest[near], 2.0) == 0.0, 1.0, -1.0)
        out[near] = sum_sign * sums

    return float(out[0]) if scalar else out
