"""Pure-Python kernels on common-denominator integer coefficients.

Every routine here has an identically named twin in ``_kernels.pyx``.
A slope ``(X[p] - X[q]) / (q - p)`` is returned as a ``(num, den)`` pair
with ``den = q - p > 0``; the caller divides by the shared denominator.
"""


def lower_hull(X):
    """Strict vertices of the lower hull of ``(k, X[k])``, left to right.

    Points on or above the chord of their neighbours are dropped.
    """
    hull = []
    for c in range(len(X)):
        xc = X[c]
        while len(hull) >= 2:
            a = hull[-2]
            b = hull[-1]
            if (b - a) * (xc - X[a]) - (c - a) * (X[b] - X[a]) <= 0:
                hull.pop()
            else:
                break
        hull.append(c)
    return hull


def minmax_slope(X, k):
    """min over p < k of max over q >= k of (X[p] - X[q]) / (q - p)."""
    n = len(X) - 1
    best_n = best_d = None
    for p in range(k):
        xp = X[p]
        tn = xp - X[k]
        td = k - p
        for q in range(k + 1, n + 1):
            sn = xp - X[q]
            sd = q - p
            if sn * td > tn * sd:
                tn, td = sn, sd
        if best_n is None or tn * best_d < best_n * td:
            best_n, best_d = tn, td
    return best_n, best_d


def maxmin_slope(X, k):
    """max over q >= k of min over p < k of (X[p] - X[q]) / (q - p)."""
    n = len(X) - 1
    best_n = best_d = None
    for q in range(k, n + 1):
        xq = X[q]
        rn = X[0] - xq
        rd = q
        for p in range(1, k):
            sn = X[p] - xq
            sd = q - p
            if sn * rd < rn * sd:
                rn, rd = sn, sd
        if best_n is None or rn * best_d > best_n * rd:
            best_n, best_d = rn, rd
    return best_n, best_d


def min_affine(rows, consts, X, dx):
    """min over i of dot(rows[i], X) + consts[i] * dx."""
    best = None
    for row, c in zip(rows, consts):
        v = c * dx
        for a, b in zip(row, X):
            if a:
                v += a * b
        if best is None or v < best:
            best = v
    return best
