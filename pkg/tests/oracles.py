"""Independent oracles used by the tests.

Everything here is computed from first principles with the standard
library only (``fractions.Fraction``), deliberately sharing no code
with the package under test.
"""

from fractions import Fraction
from itertools import product


def weyl_dim_type_a(coords) -> int:
    """Dimension of the irreducible sl(k+1) module with the given
    fundamental-weight coordinates, by the Weyl dimension formula.

    With l_i = sum of the coordinates from position i on (and l_{k+1} =
    0), the dimension is the product over i < j of
    (l_i - l_j + j - i) / (j - i).
    """
    a = list(coords)
    k = len(a)
    l = [sum(a[i:]) for i in range(k)] + [0]
    dim = Fraction(1)
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            dim *= Fraction(l[i] - l[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def weyl_dim_type_c(coords) -> int:
    """Dimension of the irreducible sp(2k) module with the given
    fundamental-weight coordinates, by the Weyl dimension formula.

    In the standard orthogonal coordinates lam_j = sum of the
    coordinates from position j on, with rho = (k, k-1, ..., 1), the
    positive roots e_i - e_j, e_i + e_j (i < j) and 2 e_i give
    dim = prod_{i<j} ((lam_i+rho_i)^2 - (lam_j+rho_j)^2)
                   / (rho_i^2 - rho_j^2)
        * prod_i (lam_i + rho_i) / rho_i.
    """
    a = list(coords)
    k = len(a)
    lam = [sum(a[j:]) for j in range(k)]
    rho = [k - j for j in range(k)]
    dim = Fraction(1)
    for i in range(k):
        for j in range(i + 1, k):
            dim *= Fraction(
                (lam[i] + rho[i]) ** 2 - (lam[j] + rho[j]) ** 2,
                rho[i] ** 2 - rho[j] ** 2,
            )
    for i in range(k):
        dim *= Fraction(lam[i] + rho[i], rho[i])
    assert dim.denominator == 1
    return int(dim)


def dominant_weights(rank: int, max_total: int):
    """All nonnegative-integer coordinate tuples with sum <= max_total."""
    out = [
        w
        for w in product(range(max_total + 1), repeat=rank)
        if sum(w) <= max_total
    ]
    out.sort()
    return out
