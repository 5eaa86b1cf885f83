"""Independent oracles used to pin expected values in the tests.

Nothing here shares code paths with the package: determinants are computed
by Bareiss elimination, Smith diagonals by determinantal divisors, kernels
by a separate column-reduction routine, linear solving by fraction Gaussian
elimination, and the cyclic-group (co)homology pins come from the classical
hand-written periodic norm-element resolution.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def determinantal_divisor_diagonal(rows: list[list[int]]) -> list[int]:
    """Smith diagonal via d_k = gcd of all k x k minors, s_k = d_k / d_(k-1)."""
    r = len(rows)
    c = len(rows[0]) if rows else 0
    diag = []
    prev = 1
    for k in range(1, min(r, c) + 1):
        dk = 0
        for ri in combinations(range(r), k):
            for ci in combinations(range(c), k):
                minor = det_bareiss([[rows[i][j] for j in ci] for i in ri])
                dk = gcd(dk, minor)
        if dk == 0:
            diag.extend([0] * (min(r, c) - k + 1))
            return diag
        diag.append(dk // prev)
        prev = dk
    return diag


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def column_reduction_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Kernel basis (as columns) via integer column echelon reduction."""
    r = len(rows)
    a = [list(map(int, row)) for row in rows]
    t = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(j1: int, j2: int, u: int, v: int, s: int, w: int) -> None:
        # (col j1, col j2) <- (u col j1 + v col j2, s col j1 + w col j2)
        for mat, height in ((a, r), (t, ncols)):
            for i in range(height):
                x, y = mat[i][j1], mat[i][j2]
                mat[i][j1], mat[i][j2] = u * x + v * y, s * x + w * y

    lead = 0
    for i in range(r):
        if lead >= ncols:
            break
        for j in range(lead + 1, ncols):
            if a[i][j] == 0:
                continue
            g, x, y = _xgcd(a[i][lead], a[i][j])
            p, q = a[i][lead] // g, a[i][j] // g
            colop(lead, j, x, y, -q, p)
        if a[i][lead] != 0:
            lead += 1
    return [[t[i][j] for i in range(ncols)] for j in range(lead, ncols)]


def solve_fraction(columns: list[list[int]], target: list[int]) -> list[int] | None:
    """Integer x with sum x_j col_j = target, via fraction elimination.

    Returns None when no rational solution exists or it is not integral.
    Requires the columns to be linearly independent.
    """
    rows = len(target)
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(rows)]
    pivot_rows = []
    ri = 0
    for cj in range(ncols):
        piv = next((i for i in range(ri, rows) if aug[i][cj] != 0), None)
        if piv is None:
            return None  # dependent columns not expected here
        aug[ri], aug[piv] = aug[piv], aug[ri]
        aug[ri] = [x / aug[ri][cj] for x in aug[ri]]
        for i in range(rows):
            if i != ri and aug[i][cj] != 0:
                factor = aug[i][cj]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[ri])]
        pivot_rows.append(ri)
        ri += 1
    for i in range(ri, rows):
        if aug[i][-1] != 0:
            return None
    sol = [aug[i][-1] for i in pivot_rows]
    if any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def subquotient_presentation_oracle(l_rows: list[list[int]], l_cols: int,
                                    n_cols: list[list[int]]) -> list[list[int]]:
    """Presentation of ker(L)/im(N), fully via the oracle routines.

    `n_cols` lists the columns of N; the result lists presentation columns
    over the oracle's kernel basis.
    """
    kernel = column_reduction_kernel(l_rows, l_cols)
    return [solve_fraction(kernel, col) for col in n_cols]


def cyclic_order2_ext_pin(n: int) -> tuple[int, tuple[int, ...]]:
    """Ext^n over Z[t]/(t^2 - 1) of (Z, Z) from the norm-element resolution.

    The classical periodic resolution ... -> R -(t+1)-> R -(t-1)-> R -> Z
    becomes, after Hom(-, Z), the integer cochain 0 -> Z -0-> Z -2-> Z -0->
    Z -2-> ...; the pin is ker/im of neighbouring scalars.
    """
    outgoing = 0 if n % 2 == 0 else 2  # scalar of delta_(n+1)^*
    incoming = 0 if n == 0 or n % 2 == 1 else 2  # scalar of delta_n^*
    if outgoing != 0:
        return (0, ())
    return (1, ()) if incoming == 0 else (0, (incoming,))


def cyclic_order2_tor_pin(n: int) -> tuple[int, tuple[int, ...]]:
    """Tor_n over Z[t]/(t^2 - 1) of (Z, Z) from the same resolution."""
    outgoing = 0 if n % 2 == 1 else (0 if n == 0 else 2)  # scalar of delta_n x Z
    incoming = 0 if n % 2 == 0 else 2  # scalar of delta_(n+1) x Z
    if outgoing != 0:
        return (0, ())
    return (1, ()) if incoming == 0 else (0, (incoming,))
