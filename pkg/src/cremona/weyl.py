"""The lattice Z^{1,n}, Weyl reflections, standard Coxeter elements, and
Salem/Pisot classification of integer polynomials.

Matrices are (n+1) x (n+1) integer lists acting on column vectors in the
basis (e_0, ..., e_n); the quadratic form is x_0^2 - x_1^2 - ... - x_n^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BUDGET_EXCEEDED, BadDimension, DimensionMismatch, NotARoot
from .linalg import charpoly_int, mat_mul
from .unipoly import pquo_exact  # noqa: F401  (re-exported convenience)

MODULUS_TOL = 1e-8
REFINE_TOL = 1e-10
BFS_BUDGET = 10 ** 6


def minkowski(u, v):
    """u0*v0 - u1*v1 - ... - un*vn."""
    if len(u) != len(v):
        raise DimensionMismatch(f"{len(u)} vs {len(v)}")
    return u[0] * v[0] - sum(a * b for a, b in zip(u[1:], v[1:]))


def basis_vector(n, i):
    v = [0] * (n + 1)
    v[i] = 1
    return v


def simple_roots(n):
    """alpha_0 = e0-e1-e2-e3 and alpha_j = e_j - e_{j+1}, j = 1..n-1."""
    if n < 3:
        raise BadDimension("need n >= 3")
    roots = []
    a0 = [0] * (n + 1)
    a0[0], a0[1], a0[2], a0[3] = 1, -1, -1, -1
    roots.append(a0)
    for j in range(1, n):
        a = [0] * (n + 1)
        a[j], a[j + 1] = 1, -1
        roots.append(a)
    return roots


def reflect(alpha, x):
    """R_alpha(x) = x + (x . alpha) alpha for a (-2)-root alpha."""
    if minkowski(alpha, alpha) != -2:
        raise NotARoot(f"alpha.alpha = {minkowski(alpha, alpha)} != -2")
    s = minkowski(x, alpha)
    return [xi + s * ai for xi, ai in zip(x, alpha)]


def reflection_matrix(alpha):
    """Matrix of R_alpha (columns are images of basis vectors)."""
    n = len(alpha) - 1
    cols = [reflect(alpha, basis_vector(n, i)) for i in range(n + 1)]
    return [[cols[j][i] for j in range(n + 1)] for i in range(n + 1)]


def kappa123(n):
    """Reflection in e0 - e1 - e2 - e3."""
    if n < 3:
        raise BadDimension("need n >= 3")
    a = [0] * (n + 1)
    a[0], a[1], a[2], a[3] = 1, -1, -1, -1
    return reflection_matrix(a)


def cyclic_permutation(n):
    """pi_n = R_{alpha_1} ... R_{alpha_{n-1}}: e_i -> e_{i+1} (i=1..n-1), e_n -> e_1."""
    roots = simple_roots(n)
    M = reflection_matrix(roots[1])
    for j in range(2, n):
        M = mat_mul(M, reflection_matrix(roots[j]))
    return M


def standard_element(n):
    """Standard Coxeter element w = pi_n kappa_123 of W_n (kappa_123 at n=3).

    Explicit action: w(e0) = 2e0-e2-e3-e4, w(e1) = e0-e3-e4,
    w(e2) = e0-e2-e4, w(e3) = e0-e2-e3, w(e_j) = e_{j+1} for 4 <= j <= n-1,
    and w(e_n) = e1.
    """
    if n < 3:
        raise BadDimension("need n >= 3")
    if n == 3:
        return kappa123(3)
    size = n + 1
    cols = [[0] * size for _ in range(size)]

    def setcol(j, entries):
        for i, v in entries:
            cols[j][i] = v

    setcol(0, [(0, 2), (2, -1), (3, -1), (4, -1)])
    setcol(1, [(0, 1), (3, -1), (4, -1)])
    setcol(2, [(0, 1), (2, -1), (4, -1)])
    setcol(3, [(0, 1), (2, -1), (3, -1)])
    for j in range(4, n):
        setcol(j, [(j + 1, 1)])
    setcol(n, [(1, 1)])
    return [[cols[j][i] for j in range(size)] for i in range(size)]


def minkowski_gram(n):
    J = [[0] * (n + 1) for _ in range(n + 1)]
    J[0][0] = 1
    for i in range(1, n + 1):
        J[i][i] = -1
    return J


def preserves_form(M):
    n = len(M) - 1
    J = minkowski_gram(n)
    Mt = [list(row) for row in zip(*M)]
    return mat_mul(mat_mul(Mt, J), M) == J


def char_poly(M):
    """Exact characteristic polynomial det(tI - M), constant term first."""
    return charpoly_int(M)


# -- cyclotomic machinery --------------------------------------------------

_cyclo_cache = {}


def cyclotomic(d):
    """Integer coefficients of the d-th cyclotomic polynomial, constant first."""
    if d in _cyclo_cache:
        return _cyclo_cache[d]
    # x^d - 1 divided by the product of Phi_e over proper divisors e of d
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _intpoly_quo(num, cyclotomic(e))
    _cyclo_cache[d] = num
    return num


def _intpoly_quo(num, den):
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    while len(num) - 1 >= dn and any(num):
        shift = len(num) - 1 - dn
        c = num[-1] // den[-1]
        out[shift] = c
        for i, b in enumerate(den):
            num[shift + i] -= c * b
        while num and num[-1] == 0:
            num.pop()
    if any(num):
        raise ArithmeticError("inexact integer polynomial division")
    return out


def _intpoly_divmod(num, den):
    """Division in Q[x] but returning None unless quotient is integral and exact."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * max(len(num) - dn, 0)
    while len(num) - 1 >= dn and any(num):
        shift = len(num) - 1 - dn
        if num[-1] % den[-1] != 0:
            return None
        c = num[-1] // den[-1]
        out[shift] = c
        for i, b in enumerate(den):
            num[shift + i] -= c * b
        while num and num[-1] == 0:
            num.pop()
    if any(num):
        return None
    return out


def strip_cyclotomic(p):
    """Divide out all cyclotomic factors; returns (residual, removed).

    Phi_d has degree phi(d) >= sqrt(d/2), so any cyclotomic factor of a
    degree-k polynomial has d <= 2*k^2; that bounds the search.
    """
    p = list(p)
    removed = []
    deg0 = len(p) - 1
    d = 1
    while d <= 2 * deg0 * deg0 and len(p) > 1:
        phi = cyclotomic(d)
        q = _intpoly_divmod(p, phi)
        if q is not None:
            removed.append(d)
            p = q
            continue  # the same factor may divide again
        d += 1
    return p, removed


def poly_roots_numeric(coeffs):
    """Roots of an integer/float polynomial, companion matrix + Newton polish."""
    cs = [complex(c) for c in coeffs]
    roots = np.roots(cs[::-1])
    out = []
    for r in roots:
        x = complex(r)
        for _ in range(50):
            f = 0j
            fp = 0j
            for c in reversed(cs):
                fp = fp * x + f
                f = f * x + c
            if abs(fp) < 1e-300:
                break
            step = f / fp
            x -= step
            if abs(step) <= REFINE_TOL * max(1.0, abs(x)):
                break
        out.append(x)
    return out


@dataclass
class SalemReport:
    kind: str  # Salem | Pisot | Cyclotomic | Other
    dominant_root: float
    residual: list
    removed_cyclotomic: list
    diagnostics: str = ""


def salem_classify(p):
    """Classify an integer polynomial after stripping cyclotomic factors."""
    p = [int(c) for c in p]
    if len(p) < 2 or p[-1] == 0:
        raise ValueError("need a nonzero polynomial of degree >= 1")
    residual, removed = strip_cyclotomic(p)
    if len(residual) <= 1:
        return SalemReport("Cyclotomic", 1.0, residual, removed)
    roots = poly_roots_numeric(residual)
    moduli = sorted(abs(r) for r in roots)
    dominant = max(moduli)
    real_dominant = max((r.real for r in roots if abs(r.imag) < MODULUS_TOL and r.real > 0),
                        default=dominant)
    if dominant <= 1.0 + MODULUS_TOL:
        # residual nontrivial but all roots on/in the circle and not cyclotomic
        return SalemReport("Other", dominant, residual, removed,
                           "non-cyclotomic with spectral radius 1")
    inside = [m for m in moduli if m < 1.0 - MODULUS_TOL]
    on_circle = [m for m in moduli if abs(m - 1.0) <= MODULUS_TOL]
    outside = [m for m in moduli if m > 1.0 + MODULUS_TOL]
    if len(outside) != 1:
        return SalemReport("Other", dominant, residual, removed,
                           f"{len(outside)} roots outside the unit circle")
    if on_circle and len(inside) + len(on_circle) + 1 == len(moduli):
        return SalemReport("Salem", real_dominant, residual, removed)
    if not on_circle and len(inside) + 1 == len(moduli):
        return SalemReport("Pisot", real_dominant, residual, removed)
    return SalemReport("Other", dominant, residual, removed, "mixed moduli pattern")


def spectral_radius(M):
    """Largest eigenvalue modulus; exact 1.0 when only cyclotomic factors remain."""
    cp = char_poly(M)
    residual, removed = strip_cyclotomic(cp)
    if len(residual) <= 1:
        return 1.0
    r = max(abs(r) for r in poly_roots_numeric(residual))
    return max(r, 1.0) if removed else r


def group_order_bfs(n, budget=BFS_BUDGET):
    """Order of W_n by breadth-first closure over the simple reflections."""
    if n < 3:
        raise BadDimension("need n >= 3")
    gens = [reflection_matrix(a) for a in simple_roots(n)]
    ident = tuple(
        tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1)
    )
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for g in gens:
                P = tuple(tuple(r) for r in mat_mul([list(r) for r in M], g))
                if P not in seen:
                    seen.add(P)
                    if len(seen) > budget:
                        return BUDGET_EXCEEDED
                    nxt.append(P)
        frontier = nxt
    return len(seen)
