"""Rational self-maps of the projective plane.

A RatMap is a coprime triple of homogeneous forms of a common degree.
Besides composition and ansatz-based inversion this module carries the
quadratic birationality criterion (det-jac splits into contracted lines),
indeterminacy point extraction for conic triples, the base-point
multiplicity solver, and de Jonquieres elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NOT_CONTRACTED, NOT_FOUND, NOT_FULLY_SPLIT, ZeroMap
from .linalg import det as mat_det
from .linalg import mat_inverse, nullspace
from .poly import (
    HomPoly,
    LinearForm,
    compose_reduce,
    factor_linear_cubic,
    field_roots,
    jacobian_det,
    parse_poly,
    reduce_triple,
    restrict_to_line,
    substitute,
)
from .scalars import Scalar
from .unipoly import RatFunc, padd, pdegree, pgcd, pmul, pquo_exact, pstrip

SZERO = Scalar(0)
SONE = Scalar(1)


class ProjPoint:
    """Point of P^2 with canonicalized coordinates (first nonzero is 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [Scalar.coerce(c) for c in coords]
        if len(coords) != 3 or all(not c for c in coords):
            raise ValueError("projective point needs a nonzero triple")
        lead = next(c for c in coords if c)
        object.__setattr__(self, "coords", tuple(c / lead for c in coords))

    def __setattr__(self, *_):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        # cross-product vanishing, scale free by construction
        a, b = self.coords, other.coords
        return (
            a[0] * b[1] == a[1] * b[0]
            and a[0] * b[2] == a[2] * b[0]
            and a[1] * b[2] == a[2] * b[1]
        )

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


class RatMap:
    """Coprime homogeneous triple (f0 : f1 : f2)."""

    __slots__ = ("components", "removed_factor")

    def __init__(self, components, removed_factor=None, _skip_check=False):
        components = tuple(components)
        if len(components) != 3:
            raise ValueError("need exactly three components")
        if all(c.is_zero() for c in components):
            raise ZeroMap("all components vanish")
        degs = {c.degree for c in components if not c.is_zero()}
        if len(degs) != 1:
            raise ValueError("components must share a degree")
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "removed_factor", removed_factor)

    def __setattr__(self, *_):
        raise AttributeError("RatMap is immutable")

    @property
    def degree(self):
        return next(c.degree for c in self.components if not c.is_zero())

    @staticmethod
    def identity():
        return RatMap((HomPoly.var("x"), HomPoly.var("y"), HomPoly.var("z")))

    @staticmethod
    def from_matrix(M):
        """Linear map from a 3x3 Scalar matrix (rows act on (x, y, z))."""
        vars_ = [HomPoly.var(v) for v in ("x", "y", "z")]
        comps = []
        for row in M:
            p = HomPoly.zero(1)
            for c, v in zip(row, vars_):
                p = p + v * Scalar.coerce(c)
            comps.append(p)
        return normalize(comps)

    def is_identity(self):
        return self.degree == 1 and self == RatMap.identity()

    def __eq__(self, other):
        """Projective equality (equal up to a scalar factor)."""
        if not isinstance(other, RatMap):
            return NotImplemented
        if self.degree != other.degree:
            return False
        f, g = self.components, other.components
        for i in range(3):
            for j in range(i + 1, 3):
                if f[i] * g[j] != f[j] * g[i]:
                    return False
        return True

    def apply(self, pt):
        """Image of a ProjPoint, or None when pt is an indeterminacy point."""
        vals = [c.eval(pt.coords) for c in self.components]
        if all(not v for v in vals):
            return None
        return ProjPoint(vals)

    def apply_complex(self, xyz):
        return tuple(c.eval_complex(xyz) for c in self.components)

    def coefficient_digits(self):
        """Rough total size of all coefficients, for budget checks."""
        total = 0
        for c in self.components:
            for v in c.terms.values():
                for f in (v.a, v.b):
                    total += len(str(f.numerator)) + len(str(f.denominator))
        return total

    def __str__(self):
        return " : ".join(str(c) for c in self.components)

    __repr__ = __str__


def parse_ratmap(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("map needs three ':'-separated components")
    return normalize(tuple(parse_poly(p) for p in parts))


def normalize(raw):
    """Divide out the common factor of a homogeneous triple."""
    raw = tuple(raw)
    if all(c.is_zero() for c in raw):
        raise ZeroMap("all components vanish")
    comps, g = reduce_triple(raw)
    if g is None:
        return RatMap(raw)
    return RatMap(tuple(comps), removed_factor=g)


def compose(f, g):
    """f after g."""
    comps, common = compose_reduce(f.components, g.components)
    if all(c.is_zero() for c in comps):
        raise ZeroMap("composition degenerates; g maps into Ind f")
    return RatMap(tuple(comps), removed_factor=common)


def iterate(f, k):
    out = f
    for _ in range(k - 1):
        out = compose(f, out)
    return out


# -- inversion by linear ansatz -------------------------------------------

def _monomials(deg):
    out = []
    for i in range(deg, -1, -1):
        for j in range(deg - i, -1, -1):
            out.append((i, j, deg - i - j))
    return out


def inverse(f, target_degree):
    """Inverse of degree target_degree via the cross-product linear ansatz.

    Unknown triple g; the conditions (g o f)_i * x_j - (g o f)_j * x_i = 0
    are linear in g's coefficients.  Returns a RatMap or NOT_FOUND.
    """
    d = target_degree
    nu = f.degree
    mons = _monomials(d)
    # images of each ansatz monomial under f
    imgs = [substitute(HomPoly.monomial(SONE, m), f.components) for m in mons]
    nmon = len(mons)
    vars_ = [HomPoly.var(v) for v in ("x", "y", "z")]
    big = _monomials(d * nu + 1)
    bigidx = {m: i for i, m in enumerate(big)}
    rows = {}

    def add_entry(eq_block, mono, col, coef):
        key = (eq_block, bigidx[mono])
        row = rows.setdefault(key, {})
        row[col] = row.get(col, SZERO) + coef

    pairs = [(0, 1), (0, 2), (1, 2)]
    for p_i, (ci, cj) in enumerate(pairs):
        for m_idx in range(nmon):
            base = imgs[m_idx]
            contrib_i = base * vars_[cj]
            contrib_j = base * vars_[ci]
            for e, c in contrib_i.terms.items():
                add_entry(p_i, e, ci * nmon + m_idx, c)
            for e, c in contrib_j.terms.items():
                add_entry(p_i, e, cj * nmon + m_idx, -c)
    ncols = 3 * nmon
    mat = []
    for key in sorted(rows):
        row = rows[key]
        mat.append([row.get(c, SZERO) for c in range(ncols)])
    basis = nullspace(mat, ncols)
    candidates = list(basis)
    if len(basis) > 1:
        acc = [SZERO] * ncols
        for v in basis:
            acc = [a + b for a, b in zip(acc, v)]
        candidates.append(acc)
    ident = RatMap.identity()
    for vec in candidates:
        comps = []
        for c in range(3):
            terms = {}
            for m_idx, m in enumerate(mons):
                coef = vec[c * nmon + m_idx]
                if coef:
                    terms[m] = coef
            comps.append(HomPoly(terms, d))
        if all(p.is_zero() for p in comps):
            continue
        if len({p.degree for p in comps if not p.is_zero()}) != 1:
            continue
        try:
            g = normalize(tuple(comps))
            if compose(g, f) == ident and compose(f, g) == ident:
                return g
        except ZeroMap:
            continue
    return NOT_FOUND


# -- contracted lines ------------------------------------------------------

def is_contracted_line(f, L):
    """Constant image point of the line {L = 0}, or NOT_CONTRACTED."""
    if isinstance(L, HomPoly):
        L = LinearForm.from_poly(L)
    restr = [restrict_to_line(c, L) for c in f.components]
    polys = [pstrip(list(r)) for r in restr]
    if all(not p for p in polys):
        raise ValueError("line is contained in the indeterminacy locus")
    n = f.degree
    nonzero = [p for p in polys if p]
    g = []
    for p in nonzero:
        g = pgcd(g, p) if g else list(p)
    tpow = min(n - pdegree(p) for p in nonzero)
    coords = []
    for p in polys:
        if not p:
            coords.append(SZERO)
            continue
        q = pquo_exact(p, g)
        if pdegree(q) > 0 or (n - pdegree(p)) != tpow:
            return NOT_CONTRACTED
        coords.append(q[0])
    return ProjPoint(coords)


# -- quadratic classification ---------------------------------------------

@dataclass
class QuadClass:
    stratum: str
    det_jac_lines: list = field(default_factory=list)
    contraction_targets: list = field(default_factory=list)
    ind_points: list = field(default_factory=list)
    field_obstructed: bool = False


def quadratic_classify(f):
    """Stratify a quadratic map per the three-contracted-lines criterion."""
    if f.removed_factor is not None and f.removed_factor.degree >= 1 and f.degree == 1:
        return QuadClass("Sigma0")
    if f.degree != 2:
        return QuadClass("NotQuadratic")
    J = jacobian_det(f.components)
    if J.is_zero():
        return QuadClass("NotBirational")
    factors = factor_linear_cubic(J)
    if factors is NOT_FULLY_SPLIT:
        return QuadClass("FieldObstruction", field_obstructed=True)
    lines = [lf for lf, _m in factors]
    mults = [m for _lf, m in factors]
    targets = []
    for lf in lines:
        t = is_contracted_line(f, lf)
        if t is NOT_CONTRACTED:
            return QuadClass("NotBirational", det_jac_lines=lines)
        targets.append(t)
    distinct = len(lines)
    if distinct == 3:
        M = [list(lf.coeffs) for lf in lines]
        if not mat_det(M):
            return QuadClass("NotBirational", det_jac_lines=lines,
                             contraction_targets=targets)
        stratum = "Sigma3"
    elif distinct == 2:
        stratum = "Sigma2"
    else:
        stratum = "Sigma1"
    pts, obstructed = indeterminacy_points_quadratic(f)
    return QuadClass(stratum, det_jac_lines=lines, contraction_targets=targets,
                     ind_points=pts, field_obstructed=obstructed)


# -- common zeros of the conic triple -------------------------------------

def _as_y_coeffs(biv_terms):
    """Bivariate dict {(i, j): c} -> list over y of x-coefficient lists."""
    dy = max((e[1] for e in biv_terms), default=0)
    out = [[] for _ in range(dy + 1)]
    dx = max((e[0] for e in biv_terms), default=0)
    grid = [[SZERO] * (dx + 1) for _ in range(dy + 1)]
    for (i, j), c in biv_terms.items():
        grid[j][i] = c
    return [pstrip(row) for row in grid]


def _sylvester_resultant(A, B):
    """Resultant in y of two polynomials with upoly-in-x coefficients."""
    m = len(A) - 1
    n = len(B) - 1
    size = m + n
    M = [[[] for _ in range(size)] for _ in range(size)]
    for r in range(n):
        for k in range(m + 1):
            M[r][r + k] = list(A[m - k])
    for r in range(m):
        for k in range(n + 1):
            M[n + r][r + k] = list(B[n - k])
    return _poly_det(M)


def _poly_det(M):
    n = len(M)
    if n == 1:
        return list(M[0][0])
    out = []
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [[M[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = pmul(M[0][j], _poly_det(minor))
        out = padd(out, term) if j % 2 == 0 else padd(out, [-c for c in term])
    return out


def indeterminacy_points_quadratic(f):
    """Common zeros of the component conics; returns (points, obstructed)."""
    if f.degree != 2:
        raise ValueError("map must be quadratic")
    field_d = Fraction(0)
    for c in f.components:
        if c.field_disc() != 0:
            field_d = c.field_disc()
            break
    pts = []
    obstructed = False

    # points on the line z = 0
    restr = []
    for c in f.components:
        b = [SZERO] * 3
        for (i, j, k), v in c.terms.items():
            if k == 0:
                b[i] = v
        restr.append(pstrip(b))
    nonzero = [p for p in restr if p]
    if nonzero:
        g = []
        for p in nonzero:
            g = pgcd(g, p) if g else list(p)
        tmin = min(2 - pdegree(p) for p in nonzero)
        if pdegree(g) > 0 or tmin > 0:
            # common factor g (in u = x/y) plus y^tmin
            roots, fully = field_roots(list(g), field_d)
            if not fully:
                obstructed = True
            for r in roots:
                pts.append(ProjPoint((r, SONE, SZERO)))
            if tmin > 0:
                pts.append(ProjPoint((SONE, SZERO, SZERO)))

    # affine chart z = 1
    aff = [_aff_collect(c) for c in f.components]
    found, ok = _affine_common_zeros(aff, field_d)
    if not ok:
        obstructed = True
    for (x0, y0) in found:
        pts.append(ProjPoint((x0, y0, SONE)))
    uniq = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    return uniq, obstructed


def _aff_collect(c):
    out = {}
    for (i, j, k), v in c.terms.items():
        out[(i, j)] = out.get((i, j), SZERO) + v
    return {e: v for e, v in out.items() if v}


def _affine_common_zeros(aff, field_d):
    """Common zeros of up to three bivariate polys (x, y); (solutions, complete)."""
    ycoeffs = [_as_y_coeffs(a) if a else [] for a in aff]
    complete = True
    # polynomials independent of y give direct x-conditions
    xconds = []
    posy = []
    for yc in ycoeffs:
        yc = [row for row in yc]
        while yc and not yc[-1]:
            yc.pop()
        if not yc:
            continue
        if len(yc) == 1:
            xconds.append(yc[0])
        else:
            posy.append(yc)
    xpoly = []
    for p in xconds:
        xpoly = pgcd(xpoly, p) if xpoly else list(p)
    if not xpoly:
        res = None
        for i in range(len(posy)):
            for j in range(i + 1, len(posy)):
                r = _sylvester_resultant(posy[i], posy[j])
                if r:
                    res = r
                    break
            if res:
                break
        if res is None:
            if len(posy) < 2:
                # a single conic: infinitely many zeros; not a finite Ind set
                return [], True
            # every pairwise resultant vanished: shared components
            return _degenerate_common_zeros(aff, field_d)
        xpoly = res
    xroots, fully = field_roots(xpoly, field_d)
    if not fully:
        complete = False
    sols = []
    for x0 in xroots:
        yuni = []
        for a in aff:
            coeffs = {}
            for (i, j), c in a.items():
                coeffs[j] = coeffs.get(j, SZERO) + c * x0 ** i
            lst = [coeffs.get(j, SZERO) for j in range(max(coeffs, default=0) + 1)]
            yuni.append(pstrip(lst))
        # drop components vanishing identically on this vertical line
        yuni = [lst for lst in yuni if lst]
        g = []
        for lst in yuni:
            g = pgcd(g, lst) if g else list(lst)
        if not g:
            continue
        if pdegree(g) == 0:
            continue
        yroots, fully = field_roots(g, field_d)
        if not fully:
            complete = False
        for y0 in yroots:
            if all(_aff_eval(a, x0, y0).is_zero() for a in aff):
                sols.append((x0, y0))
    return sols, complete


def _aff_eval(a, x0, y0):
    acc = SZERO
    for (i, j), c in a.items():
        acc = acc + c * x0 ** i * y0 ** j
    return acc


def _degenerate_common_zeros(aff, field_d):
    """Fallback when conics pairwise share components: intersect shared lines."""
    from .poly import poly_gcd

    polys = []
    for a in aff:
        terms = {}
        deg = max((i + j for (i, j) in a), default=0)
        for (i, j), c in a.items():
            terms[(i, j, deg - i - j)] = c
        polys.append(HomPoly(terms, deg))
    sols = []
    complete = True
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            g = poly_gcd(polys[i], polys[j])
            if g.degree == 0:
                continue
            facs = factor_linear_cubic(g, field_d)
            if facs is NOT_FULLY_SPLIT:
                complete = False
                continue
            k = ({0, 1, 2} - {i, j}).pop()
            for lf, _m in facs:
                b = restrict_to_line(polys[k], lf)
                b = pstrip(list(b))
                if not b:
                    complete = False
                    continue
                roots, fully = field_roots(b, field_d)
                if not fully:
                    complete = False
                param = _line_points(lf)
                for r in roots:
                    x0, y0, z0 = (p * r + q for (p, q) in param)
                    if z0:
                        sols.append((x0 / z0, y0 / z0))
    return sols, complete


def _line_points(lf):
    from .poly import parametrize_line

    return parametrize_line(lf)


# -- Noether multiplicity profiles ----------------------------------------

@dataclass(frozen=True)
class MultiplicityProfile:
    degree: int
    multiplicities: tuple

    def is_consistent(self):
        nu = self.degree
        m = self.multiplicities
        return sum(m) == 3 * (nu - 1) and sum(v * v for v in m) == nu * nu - 1


def noether_solve(nu, constraint=None):
    """All multisets of base-point multiplicities compatible with degree nu.

    Solves sum(m) = 3(nu-1), sum(m^2) = nu^2 - 1 with 1 <= m_i <= nu - 1,
    m_1 >= m_2 >= ...
    """
    if nu < 2:
        raise ValueError("degree must be at least 2")
    target_s = 3 * (nu - 1)
    target_q = nu * nu - 1
    out = []

    def rec(prefix, max_m, s, q):
        if s == 0 and q == 0:
            out.append(MultiplicityProfile(nu, tuple(prefix)))
            return
        if s <= 0 or q <= 0:
            return
        for m in range(min(max_m, s), 0, -1):
            if m * m > q:
                continue
            # remaining r values each at most m: need s - m <= m * (q - m^2)?
            rec(prefix + [m], m, s - m, q - m * m)

    rec([], nu - 1, target_s, target_q)
    if constraint is not None:
        out = [p for p in out if p.multiplicities and p.multiplicities[0] == constraint]
    return out


# -- de Jonquieres elements ------------------------------------------------

def _rf(v):
    return RatFunc.coerce(v)


class JonqElement:
    """Fibration-preserving map: x Mobius over C(y), y Mobius over C."""

    __slots__ = ("vertical", "base")

    def __init__(self, vertical, base):
        vertical = tuple(tuple(_rf(v) for v in row) for row in vertical)
        base = tuple(tuple(Scalar.coerce(v) for v in row) for row in base)
        a, b = vertical[0]
        c, d = vertical[1]
        if (a * d - b * c).is_zero():
            raise ValueError("vertical matrix is singular")
        al, be = base[0]
        ga, de = base[1]
        if not (al * de - be * ga):
            raise ValueError("base matrix is singular")
        object.__setattr__(self, "vertical", vertical)
        object.__setattr__(self, "base", base)

    def __setattr__(self, *_):
        raise AttributeError("JonqElement is immutable")

    @staticmethod
    def identity():
        one = RatFunc([SONE])
        zero = RatFunc([])
        return JonqElement(((one, zero), (zero, one)), ((SONE, SZERO), (SZERO, SONE)))

    def __eq__(self, other):
        """Equality as maps (both matrices up to scalar)."""
        if not isinstance(other, JonqElement):
            return NotImplemented
        return _proj_eq_2x2(self.vertical, other.vertical) and _proj_eq_2x2(
            self.base, other.base
        )


def _proj_eq_2x2(A, B):
    a = [A[0][0], A[0][1], A[1][0], A[1][1]]
    b = [B[0][0], B[0][1], B[1][0], B[1][1]]
    for i in range(4):
        for j in range(i + 1, 4):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def jonq_to_ratmap(j):
    """Projective model; the y/z fibration is preserved by construction."""
    (a, b), (c, d) = j.vertical
    dens = [list(v.den) for v in (a, b, c, d)]
    D = [SONE]
    for dn in dens:
        D = pquo_exact(pmul(D, dn), pgcd(D, dn))
    ps = []
    for v in (a, b, c, d):
        ps.append(pmul(list(v.num), pquo_exact(D, list(v.den))))
    m = max(pdegree(p) for p in ps if p)
    m = max(m, 0)

    def homog(p):
        terms = {}
        for k, coef in enumerate(p):
            if coef:
                terms[(0, k, m - k)] = coef
        return HomPoly(terms, m)

    PA, PB, PC, PD = (homog(p) for p in ps)
    X, Y, Z = (HomPoly.var(v) for v in ("x", "y", "z"))
    N1 = PA * X + PB * Z
    M1 = PC * X + PD * Z
    (al, be), (ga, de) = j.base
    N2 = Y * al + Z * be
    M2 = Y * ga + Z * de
    return normalize((N1 * M2, N2 * M1, M1 * M2))


def _mobius_subst_matrix(A, base):
    (al, be), (ga, de) = base
    num = [Scalar.coerce(be), Scalar.coerce(al)]
    den = [Scalar.coerce(de), Scalar.coerce(ga)]
    return tuple(
        tuple(v.subst_mobius(num, den) for v in row) for row in A
    )


def _mul2(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


def _inv2(A):
    a, b = A[0]
    c, d = A[1]
    dt = a * d - b * c
    return ((d / dt, -b / dt), (-c / dt, a / dt))


def _inv2_scalar(A):
    a, b = A[0]
    c, d = A[1]
    dt = a * d - b * c
    return ((d / dt, -b / dt), (-c / dt, a / dt))


def jonq_compose(j1, j2):
    """Group law matching ratmap composition: to_ratmap(j1 o j2) == f1 o f2."""
    vert = _mul2(_mobius_subst_matrix(j1.vertical, j2.base), j2.vertical)
    base = _mul2(j1.base, j2.base)
    return JonqElement(vert, base)


def jonq_inverse(j):
    base_inv = _inv2_scalar(j.base)
    vert_inv = _inv2(_mobius_subst_matrix(j.vertical, base_inv))
    return JonqElement(vert_inv, base_inv)
