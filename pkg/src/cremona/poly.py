"""Sparse polynomials over Scalar: homogeneous ternary forms and bivariate
affine polynomials, with gcd, substitution, Jacobians and splitting of low
degree forms into linear factors.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DegreeMismatch, NOT_FULLY_SPLIT
from .scalars import Scalar
from .unipoly import (
    RatFunc,
    padd,
    pdegree,
    pdivmod,
    pgcd,
    pmul,
    pquo_exact,
    pstrip,
)

SZERO = Scalar(0)
SONE = Scalar(1)

VARS = ("x", "y", "z")


class HomPoly:
    """Homogeneous polynomial in x, y, z with Scalar coefficients.

    terms maps exponent triples (i, j, k) with i+j+k == degree to nonzero
    coefficients.  The zero polynomial keeps a nominal degree so that
    addition stays total on homogeneous arguments.
    """

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree=None):
        clean = {}
        for exps, c in terms.items():
            c = Scalar.coerce(c)
            if not c:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent triple {exps}")
            clean[exps] = clean.get(exps, SZERO) + c
        clean = {e: c for e, c in clean.items() if c}
        degs = {sum(e) for e in clean}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        if clean:
            degree = degs.pop()
        elif degree is None:
            degree = 0
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", int(degree))

    def __setattr__(self, *_):
        raise AttributeError("HomPoly is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(degree=0):
        return HomPoly({}, degree)

    @staticmethod
    def monomial(coef, exps):
        return HomPoly({tuple(exps): Scalar.coerce(coef)})

    @staticmethod
    def var(name):
        i = VARS.index(name)
        e = [0, 0, 0]
        e[i] = 1
        return HomPoly({tuple(e): SONE})

    @staticmethod
    def constant(c):
        return HomPoly({(0, 0, 0): Scalar.coerce(c)})

    # -- basics -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.terms and other.terms and self.degree != other.degree:
            raise DegreeMismatch(f"add degree {self.degree} to {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, SZERO) + c
        deg = self.degree if self.terms else other.degree
        return HomPoly(out, deg)

    def __neg__(self):
        return HomPoly({e: -c for e, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar, Fraction)):
            c = Scalar.coerce(other)
            return HomPoly({e: v * c for e, v in self.terms.items()}, self.degree)
        if not isinstance(other, HomPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, SZERO) + c1 * c2
        return HomPoly(out, self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = HomPoly.constant(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def leading(self):
        """Leading (exponents, coefficient) in graded-lex order."""
        e = max(self.terms)
        return e, self.terms[e]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading()
        return self * c.inverse()

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), SZERO)

    def eval(self, point):
        """Exact evaluation at a triple of Scalars."""
        acc = SZERO
        for (i, j, k), c in self.terms.items():
            acc = acc + c * point[0] ** i * point[1] ** j * point[2] ** k
        return acc

    def eval_complex(self, point):
        acc = 0j
        for (i, j, k), c in self.terms.items():
            acc += c.to_complex() * point[0] ** i * point[1] ** j * point[2] ** k
        return acc

    def min_exponent(self, axis):
        return min((e[axis] for e in self.terms), default=0)

    def shift_down(self, axis, amount):
        """Divide by variable**amount (must divide exactly)."""
        if amount == 0:
            return self
        out = {}
        for e, c in self.terms.items():
            if e[axis] < amount:
                raise ArithmeticError("variable power does not divide")
            ee = list(e)
            ee[axis] -= amount
            out[tuple(ee)] = c
        return HomPoly(out, self.degree - amount)

    def field_disc(self):
        for c in self.terms.values():
            if c.d != 0:
                return c.d
        return Fraction(0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(
                f"{v}^{p}" if p > 1 else v
                for v, p in zip(VARS, e)
                if p > 0
            )
            if not mon:
                parts.append(f"{c}")
            elif c == SONE:
                parts.append(mon)
            elif c == -SONE:
                parts.append(f"-{mon}")
            elif c.is_rational() and "/" not in str(c):
                parts.append(f"{c}*{mon}")
            else:
                parts.append(f"({c})*{mon}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    __repr__ = __str__


def poly_arith(p, q, op):
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def substitute(p, images):
    """p(f0, f1, f2) for homogeneous images of a common degree."""
    f0, f1, f2 = images
    if not (f0.degree == f1.degree == f2.degree):
        raise DegreeMismatch("images must share a degree")
    m = f0.degree
    out = HomPoly.zero(p.degree * m)
    powers = [{0: HomPoly.constant(1)}, {0: HomPoly.constant(1)}, {0: HomPoly.constant(1)}]

    def powof(idx, f, k):
        cache = powers[idx]
        if k not in cache:
            cache[k] = powof(idx, f, k - 1) * f
        return cache[k]

    for (i, j, k), c in p.terms.items():
        term = powof(0, f0, i) * powof(1, f1, j) * powof(2, f2, k) * c
        out = out + term
    return out


def jacobian_det(triple):
    """Determinant of the Jacobian matrix of a homogeneous triple."""
    def partial(p, axis):
        out = {}
        for e, c in p.terms.items():
            if e[axis] == 0:
                continue
            ee = list(e)
            ee[axis] -= 1
            out[tuple(ee)] = c * e[axis]
        return HomPoly(out, max(p.degree - 1, 0))

    rows = [[partial(f, a) for a in range(3)] for f in triple]
    det = HomPoly.zero(3 * max(triple[0].degree - 1, 0))
    for perm, sign in (
        ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
        ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1),
    ):
        prod = rows[0][perm[0]] * rows[1][perm[1]] * rows[2][perm[2]]
        det = det + prod * sign
    return det


def divide_exact(p, q):
    """Quotient p/q when q divides p exactly, else None."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return HomPoly.zero(max(p.degree - q.degree, 0))
    if p.degree < q.degree:
        return None
    lt_e, lt_c = q.leading()
    rem = p
    quot = HomPoly.zero(p.degree - q.degree)
    while rem:
        re_, rc = rem.leading()
        diff = (re_[0] - lt_e[0], re_[1] - lt_e[1], re_[2] - lt_e[2])
        if any(d < 0 for d in diff):
            return None
        t = HomPoly.monomial(rc / lt_c, diff)
        quot = quot + t
        rem = rem - t * q
    return quot


# -- gcd ------------------------------------------------------------------

def _to_x_coeffs(biv):
    """Bivariate dict {(i,j): c} -> list over x of y-coefficient lists."""
    dx = max((e[0] for e in biv), default=0)
    dy = max((e[1] for e in biv), default=0)
    out = [[SZERO] * (dy + 1) for _ in range(dx + 1)]
    for (i, j), c in biv.items():
        out[i][j] = c
    return [pstrip(row) for row in out]


def _biv_from_x_coeffs(rows):
    out = {}
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                out[(i, j)] = c
    return out


def _biv_gcd(p, q):
    """gcd of bivariate dicts over the scalar field, up to a unit."""
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    rp = _to_x_coeffs(p)
    rq = _to_x_coeffs(q)
    cont_p = []
    for row in rp:
        cont_p = pgcd(cont_p, row) if cont_p or row else (row or cont_p)
    cont_q = []
    for row in rq:
        cont_q = pgcd(cont_q, row) if cont_q or row else (row or cont_q)
    cont = pgcd(cont_p, cont_q)
    prim_p = [pquo_exact(row, cont_p) if row else [] for row in rp]
    prim_q = [pquo_exact(row, cont_q) if row else [] for row in rq]
    # Euclid in F(y)[x]
    a = [RatFunc(row) for row in prim_p]
    b = [RatFunc(row) for row in prim_q]
    a = pstrip(a)
    b = pstrip(b)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    # clear denominators of the monic gcd in x
    den = [SONE]
    for c in a:
        den = pquo_exact(pmul(den, list(c.den)), pgcd(den, list(c.den)))
    rows = []
    for c in a:
        num = pmul(list(c.num), pquo_exact(den, list(c.den)))
        rows.append(num)
    # primitive part in y
    cont_g = []
    for row in rows:
        cont_g = pgcd(cont_g, row) if cont_g or row else (row or cont_g)
    rows = [pquo_exact(row, cont_g) if row else [] for row in rows]
    # multiply the y-content gcd back in
    rows = [pmul(row, cont) for row in rows]
    return _biv_from_x_coeffs(rows)


def _dehom_z(p):
    return {(e[0], e[1]): c for e, c in p.terms.items()}


def _hom_z(biv):
    deg = max((i + j for (i, j) in biv), default=0)
    return HomPoly({(i, j, deg - i - j): c for (i, j), c in biv.items()}, deg)


_sympy_cache = {}


def _sympy_ctx():
    """Lazy sympy import plus the symbol triple, cached."""
    if "sp" not in _sympy_cache:
        import sympy

        _sympy_cache["sp"] = sympy
        _sympy_cache["syms"] = sympy.symbols("x y z")
    return _sympy_cache["sp"], _sympy_cache["syms"]


def _field_domain(field_d):
    sp, _syms = _sympy_ctx()
    key = ("dom", field_d)
    if key not in _sympy_cache:
        if field_d:
            sd = sp.sqrt(sp.Rational(field_d.numerator, field_d.denominator))
            _sympy_cache[key] = (sp.QQ.algebraic_field(sd), sd)
        else:
            _sympy_cache[key] = (sp.QQ, None)
    return _sympy_cache[key]


def _expr_to_scalar(sp, co, sd, field_d):
    """Sympy coefficient (rational, or a + b*sqrt(d)) to Scalar."""
    if sd is not None:
        ce = sp.expand(co)
        b_expr = ce.coeff(sd)
        a_rat = sp.Rational(sp.expand(ce - b_expr * sd))
        b_rat = sp.Rational(b_expr)
        return Scalar(
            Fraction(int(a_rat.p), int(a_rat.q)),
            Fraction(int(b_rat.p), int(b_rat.q)),
            field_d,
        )
    r = sp.Rational(co)
    return Scalar(Fraction(int(r.p), int(r.q)))


def _to_sympy(p, field_d):
    sp, syms = _sympy_ctx()
    dom, sd = _field_domain(field_d)
    d = {}
    for e, c in p.terms.items():
        if c.b:
            co = dom.from_sympy(
                sp.Rational(c.a.numerator, c.a.denominator)
                + sp.Rational(c.b.numerator, c.b.denominator) * sd
            )
        else:
            co = dom.convert(sp.QQ(c.a.numerator, c.a.denominator), sp.QQ)
        d[e] = co
    return sp.Poly.from_dict(d, *syms, domain=dom)


def _from_sympy(pol, field_d):
    sp, _syms = _sympy_ctx()
    _dom, sd = _field_domain(field_d)
    terms = {}
    for mono, co in pol.as_dict().items():
        c = _expr_to_scalar(sp, co, sd if field_d else None, field_d)
        if c:
            terms[tuple(mono)] = c
    deg = max((sum(e) for e in terms), default=0)
    return HomPoly(terms, deg)


def _gcd_via_sympy(p, q):
    field_d = p.field_disc() or q.field_disc()
    e1, e2 = _to_sympy(p, field_d), _to_sympy(q, field_d)
    return _from_sympy(e1.gcd(e2), field_d)


def reduce_triple(raws):
    """Divide a homogeneous triple by its common factor.

    Returns (components, common_factor) where the factor is None when the
    triple was already coprime.
    """
    raws = list(raws)
    nonzero = [p for p in raws if not p.is_zero()]
    try:
        _sympy_ctx()
    except ImportError:
        g = gcd_many(raws)
        if g.degree == 0:
            return raws, None
        out = []
        for p in raws:
            if p.is_zero():
                out.append(HomPoly.zero(nonzero[0].degree - g.degree))
            else:
                out.append(divide_exact(p, g))
        return out, g
    field_d = Fraction(0)
    for p in nonzero:
        if p.field_disc():
            field_d = p.field_disc()
            break
    pols = [_to_sympy(p, field_d) for p in nonzero]
    g = pols[0]
    for pol in pols[1:]:
        if g.is_ground:
            break
        g = g.gcd(pol)
    if g.is_ground:
        return raws, None
    ghom = _from_sympy(g, field_d).monic()
    gmon = _to_sympy(ghom, field_d)
    out = []
    it = iter(pols)
    for p in raws:
        if p.is_zero():
            out.append(HomPoly.zero(nonzero[0].degree - ghom.degree))
        else:
            out.append(_from_sympy(next(it).exquo(gmon), field_d))
    return out, ghom


def _rescale_qq(sp, hs):
    """Scale a QQ Poly list to coprime integer coefficients."""
    num_gcd = 0
    den_lcm = 1
    for h in hs:
        for co in h.coeffs():
            num_gcd = math.gcd(num_gcd, int(co.p))
            den_lcm = den_lcm * int(co.q) // math.gcd(den_lcm, int(co.q))
    if num_gcd == 0:
        return hs
    scale = sp.Rational(den_lcm, num_gcd)
    if scale == 1:
        return hs
    return [h * scale for h in hs]


def _syms2():
    sp, _syms = _sympy_ctx()
    if "syms2" not in _sympy_cache:
        _sympy_cache["syms2"] = _sympy_cache["syms"][:2]
    return _sympy_cache["syms2"]


def _scalar_to_dom(sp, dom, sd, co):
    if co.b:
        return dom.from_sympy(
            sp.Rational(co.a.numerator, co.a.denominator)
            + sp.Rational(co.b.numerator, co.b.denominator) * sd
        )
    return dom.convert(sp.QQ(co.a.numerator, co.a.denominator), sp.QQ)


def _to_sympy2(p, field_d):
    """Dehomogenized (z = 1) sympy Poly in (x, y)."""
    sp, _ = _sympy_ctx()
    dom, sd = _field_domain(field_d)
    d = {}
    for (i, j, _k), co in p.terms.items():
        key = (i, j)
        val = _scalar_to_dom(sp, dom, sd, co)
        d[key] = d[key] + val if key in d else val
    return sp.Poly.from_dict(d, *_syms2(), domain=dom)


def _from_sympy2(pol, field_d, degree):
    """Rehomogenize a bivariate sympy Poly to a HomPoly of the given degree."""
    sp, _ = _sympy_ctx()
    _dom, sd = _field_domain(field_d)
    terms = {}
    for (i, j), co in pol.as_dict().items():
        c = _expr_to_scalar(sp, co, sd if field_d else None, field_d)
        if c:
            terms[(i, j, degree - i - j)] = c
    return HomPoly(terms, degree)


def compose_reduce(fcomps, gcomps):
    """Substitute the triple g into each component of f and strip the
    common factor.  Returns (components, common_factor_or_None).

    Works in the affine chart z = 1 (everything is homogeneous, so the
    bivariate computation plus degree bookkeeping loses nothing) for a
    much smaller dense representation.
    """
    if all(len(p.terms) == 1 for p in fcomps) and \
            all(len(p.terms) == 1 for p in gcomps):
        return _compose_monomials(fcomps, gcomps)
    try:
        sp, _syms = _sympy_ctx()
    except ImportError:
        comps = [substitute(c, tuple(gcomps)) for c in fcomps]
        return reduce_triple(comps)
    field_d = Fraction(0)
    for p in list(fcomps) + list(gcomps):
        if not p.is_zero() and p.field_disc():
            field_d = p.field_disc()
            break
    dg = next(p.degree for p in gcomps if not p.is_zero())
    df = next(p.degree for p in fcomps if not p.is_zero())
    bigdeg = df * dg
    gs = [_to_sympy2(p, field_d) for p in gcomps]
    dom, sd = _field_domain(field_d)
    one = sp.Poly.from_dict({(0, 0): dom.one}, *_syms2(), domain=dom)
    zero = sp.Poly.from_dict({}, *_syms2(), domain=dom)
    cache = {}

    def power(tag, k):
        if k == 0:
            return one
        key = (tag, k)
        if key not in cache:
            cache[key] = power(tag, k - 1) * gs[tag] if k > 1 else gs[tag]
        return cache[key]

    hs = []
    for c in fcomps:
        acc = zero
        for (i, j, k), co in c.terms.items():
            term = one.mul_ground(_scalar_to_dom(sp, dom, sd, co))
            if i:
                term = term * power(0, i)
            if j:
                term = term * power(1, j)
            if k:
                term = term * power(2, k)
            acc = acc + term
        hs.append(acc)
    nonzero = [h for h in hs if not h.is_zero]
    if not nonzero:
        return [HomPoly.zero(0)] * 3, None
    if not field_d:
        nonzero = _rescale_qq(sp, nonzero)
        it = iter(nonzero)
        hs = [next(it) if not h.is_zero else h for h in hs]
    # common z-power: bigdeg minus the top bivariate degree present
    zpow = bigdeg - max(h.total_degree() for h in nonzero)
    g = nonzero[0]
    for h in nonzero[1:]:
        if g.is_ground:
            break
        g = g.gcd(h)
    gdeg = g.total_degree()
    if gdeg == 0 and zpow == 0:
        return [_from_sympy2(h, field_d, bigdeg) for h in hs], None
    newdeg = bigdeg - zpow - gdeg
    comps = []
    for h in hs:
        if h.is_zero:
            comps.append(HomPoly.zero(newdeg))
        else:
            q = h.exquo(g) if gdeg else h
            comps.append(_from_sympy2(q, field_d, newdeg))
    ghom = _from_sympy2(g, field_d, zpow + gdeg).monic()
    return comps, ghom


def _compose_monomials(fcomps, gcomps):
    """Monomial triples compose by exponent arithmetic; the common factor is
    the componentwise-minimum monomial."""
    ge = []
    gc = []
    for p in gcomps:
        (e, c), = p.terms.items()
        ge.append(e)
        gc.append(c)
    out = []
    for p in fcomps:
        (e, c), = p.terms.items()
        exps = tuple(
            sum(e[t] * ge[t][axis] for t in range(3)) for axis in range(3)
        )
        coef = c
        for t in range(3):
            if e[t]:
                coef = coef * gc[t] ** e[t]
        out.append((exps, coef))
    mins = tuple(min(o[0][axis] for o in out) for axis in range(3))
    if not any(mins):
        return [HomPoly.monomial(c, e) for e, c in out], None
    comps = [
        HomPoly.monomial(c, tuple(e[a] - mins[a] for a in range(3)))
        for e, c in out
    ]
    return comps, HomPoly.monomial(SONE, mins)


def poly_gcd(p, q):
    """Monic greatest common divisor of two homogeneous ternary forms."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    try:
        return _gcd_via_sympy(p, q).monic()
    except ImportError:
        pass
    mono = [0, 0, 0]
    for a in range(3):
        mono[a] = min(p.min_exponent(a), q.min_exponent(a))
    ps = p
    qs = q
    for a in range(3):
        ps = ps.shift_down(a, ps.min_exponent(a))
        qs = qs.shift_down(a, qs.min_exponent(a))
    g2 = _biv_gcd(_dehom_z(ps), _dehom_z(qs))
    g = _hom_z(g2) * HomPoly.monomial(SONE, tuple(mono))
    return g.monic()


def gcd_many(polys):
    g = None
    for p in polys:
        if p.is_zero():
            continue
        g = p if g is None else poly_gcd(g, p)
        if g.degree == 0:
            break
    if g is None:
        raise ValueError("gcd of all-zero family")
    return g.monic()


# -- linear forms and line factorization ----------------------------------

class LinearForm:
    """A line a0*x + a1*y + a2*z = 0, canonicalized by leading coefficient 1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Scalar.coerce(c) for c in coeffs]
        if len(coeffs) != 3 or all(not c for c in coeffs):
            raise ValueError("linear form needs a nonzero coefficient triple")
        lead = next(c for c in coeffs if c)
        coeffs = [c / lead for c in coeffs]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("LinearForm is immutable")

    @staticmethod
    def from_poly(p):
        if p.degree != 1 or p.is_zero():
            raise ValueError("not a linear form")
        return LinearForm([
            p.coefficient((1, 0, 0)),
            p.coefficient((0, 1, 0)),
            p.coefficient((0, 0, 1)),
        ])

    def to_poly(self):
        a0, a1, a2 = self.coeffs
        return HomPoly({(1, 0, 0): a0, (0, 1, 0): a1, (0, 0, 1): a2}, 1)

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return str(self.to_poly())

    __repr__ = __str__


def parametrize_line(L):
    """Two spanning points of {L = 0}, as a map (s, t) -> P^2.

    Returns a triple of coefficient pairs ((p0, q0), (p1, q1), (p2, q2))
    meaning coordinate i equals p_i * s + q_i * t.
    """
    a = L.coeffs
    idx = next(i for i in range(3) if a[i])
    others = [i for i in range(3) if i != idx]
    pts = []
    for o in others:
        v = [SZERO, SZERO, SZERO]
        v[o] = SONE
        v[idx] = -a[o] / a[idx]
        pts.append(v)
    P, Q = pts
    return tuple((P[i], Q[i]) for i in range(3))


def restrict_to_line(p, L):
    """Binary form (in s, t) of p restricted to the line {L = 0}.

    Returned as a coefficient list b where b[i] multiplies s^i t^(n-i).
    """
    param = parametrize_line(L)
    n = p.degree
    out = [SZERO] * (n + 1)
    lin = []
    for (ps, qt) in param:
        lin.append([qt, ps])  # univariate in u with s -> u, t -> 1
    for e, c in p.terms.items():
        term = [Scalar.coerce(1)]
        for a in range(3):
            for _ in range(e[a]):
                term = pmul(term, lin[a])
        for i, v in enumerate(term):
            if v:
                out[i] = out[i] + c * v
    return out


# -- root finding over the working field ----------------------------------

def _int_divisors(n):
    n = abs(n)
    if n == 0:
        return [0]
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


_ROOT_SEARCH_CAP = 10 ** 7


def field_roots(coeffs, field_d=0):
    """Roots of a univariate Scalar polynomial inside Q(sqrt(field_d)).

    Returns (roots_with_multiplicity, fully_split).  Multiplicities come out
    of repeated deflation.  Gives up (fully_split=False) on irreducible
    factors of degree >= 2, on degree >= 3 factors with irrational
    coefficients, and on oversized rational-root searches.
    """
    p = pstrip([Scalar.coerce(c) for c in coeffs])
    roots = []
    fully = True
    while pdegree(p) >= 1:
        d = pdegree(p)
        if d == 1:
            roots.append(-p[0] / p[1])
            break
        if d == 2:
            a, b, c = p[2], p[1], p[0]
            disc = b * b - a * c * 4
            r = disc.sqrt_in_field(field_d)
            if r is None:
                fully = False
                break
            roots.append((-b + r) / (a * 2))
            roots.append((-b - r) / (a * 2))
            break
        if p[0].is_zero():
            roots.append(SZERO)
            p = p[1:]
            continue
        if not all(c.is_rational() for c in p):
            fully = False
            break
        den_lcm = 1
        for c in p:
            den_lcm = den_lcm * c.a.denominator // math.gcd(den_lcm, c.a.denominator)
        ints = [int(c.a * den_lcm) for c in p]
        content = 0
        for v in ints:
            content = math.gcd(content, v)
        ints = [v // content for v in ints]
        if abs(ints[0]) > _ROOT_SEARCH_CAP or abs(ints[-1]) > _ROOT_SEARCH_CAP:
            fully = False
            break
        found = None
        for num in _int_divisors(ints[0]):
            for den in _int_divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    val = sum(Fraction(ints[i]) * cand ** i for i in range(len(ints)))
                    if val == 0:
                        found = Scalar(cand)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            fully = False
            break
        roots.append(found)
        p, rem = pdivmod(p, [-found, SONE])
        assert not rem
    return roots, fully


def binary_form_factors(coeffs, field_d=0):
    """Linear factors (alpha, beta) of a binary form sum b_i s^i t^(n-i).

    Factor alpha*s + beta*t appears with its multiplicity.  Returns
    (factors, fully_split).
    """
    n = len(coeffs) - 1
    p = pstrip(list(coeffs))
    if not p:
        raise ValueError("zero binary form")
    d = len(p) - 1
    # f = t^(n-d) * homogenization of p(u), u = s/t
    factors = [((SZERO, SONE), n - d)] if n - d else []
    roots, fully = field_roots(p, field_d)
    cnt = {}
    for r in roots:
        cnt[r] = cnt.get(r, 0) + 1
    for r, m in cnt.items():
        factors.append(((SONE, -r), m))  # root u0: factor s - u0*t
    return factors, fully


def factor_linear_cubic(c, field_d=None):
    """Split a form of degree <= 3 into linear factors over the field.

    Returns a list of (LinearForm, multiplicity) or NOT_FULLY_SPLIT.
    """
    if c.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if field_d is None:
        field_d = c.field_disc()
    factors = []
    p = c
    # coordinate-variable factors first
    for a in range(3):
        m = p.min_exponent(a)
        if m:
            e = [0, 0, 0]
            e[a] = 1
            lf = LinearForm.from_poly(HomPoly.monomial(SONE, e))
            factors.append((lf, m))
            p = p.shift_down(a, m)
    while p.degree >= 1:
        if p.degree == 1:
            factors.append((LinearForm.from_poly(p), 1))
            p = HomPoly.constant(1)
            break
        lf = _find_linear_factor(p, field_d)
        if lf is None:
            return NOT_FULLY_SPLIT
        q = divide_exact(p, lf.to_poly())
        assert q is not None
        factors.append((lf, 1))
        p = q
    # merge duplicate factors
    merged = {}
    for lf, m in factors:
        merged[lf] = merged.get(lf, 0) + m
    return sorted(merged.items(), key=lambda it: str(it[0]))


def _find_linear_factor(p, field_d):
    """One linear factor of p (degree >= 2, no coordinate-variable factor)."""
    # restriction to z = 0 as binary form in (x, y): candidate (alpha, beta)
    n = p.degree
    bz = [SZERO] * (n + 1)
    for (i, j, k), c in p.terms.items():
        if k == 0:
            bz[i] = c  # x^i y^(n-i): s=x, t=y
    cands, _ = binary_form_factors(bz, field_d)
    for (alpha, beta), _m in cands:
        lf = _factor_with_xy_part(p, alpha, beta, field_d)
        if lf is not None:
            return lf
    return None


def _factor_with_xy_part(p, alpha, beta, field_d):
    """Search gamma with (alpha*x + beta*y + gamma*z) | p.

    The candidate (alpha, beta) comes from the z = 0 restriction, where a
    factor alpha*s + beta*t corresponds to alpha = root coefficient on x.
    Restricting p to the pencil of lines through (beta : -alpha : 0) gives,
    cell by cell in (s, t), polynomial conditions on gamma; their gcd's
    roots are the valid gamma values.
    """
    # binary_form_factors yields (r, 1) for root u0=r meaning factor s - u0 t
    # on the (x, y) form: x - u0*y, i.e. alpha=1? Map: factor a*s+b*t with
    # (a, b) = (alpha, beta) acts on (x, y): line alpha*x + beta*y (+ gamma*z).
    if beta:
        # param of alpha*x+beta*y+gamma*z = 0: (beta*s, -alpha*s - gamma*t, beta*t)
        x_lin = {(1, 0): beta}            # beta * s
        y_lin = {(1, 0): -alpha, (0, 1): None}  # -alpha*s - gamma*t
        z_lin = {(0, 1): beta}            # beta * t
    else:
        if not alpha:
            return None
        # line alpha*x + gamma*z = 0: param (-gamma*t, s, alpha*t)
        x_lin = {(0, 1): None}            # -gamma * t (gamma-linear)
        y_lin = {(1, 0): SONE}
        z_lin = {(0, 1): alpha}
    # cells: dict (es, et) -> upoly in gamma (list of Scalars)
    cells = {}

    def lin_as_gpoly(lin, negate_gamma):
        # returns dict (es, et) -> gamma-poly for one coordinate
        out = {}
        for key, val in lin.items():
            if val is None:
                out[key] = [SZERO, -SONE] if negate_gamma else [SZERO, SONE]
            else:
                out[key] = [val]
        return out

    gx = lin_as_gpoly(x_lin, negate_gamma=not beta)
    gy = lin_as_gpoly(y_lin, negate_gamma=bool(beta))
    gz = lin_as_gpoly(z_lin, negate_gamma=False)

    def gmul(f, g):
        out = {}
        for (a1, b1), p1 in f.items():
            for (a2, b2), p2 in g.items():
                key = (a1 + a2, b1 + b2)
                prod = pmul(p1, p2)
                out[key] = padd(out.get(key, []), prod)
        return {k: v for k, v in out.items() if v}

    def gpow(f, k):
        r = {(0, 0): [SONE]}
        base = f
        while k:
            if k & 1:
                r = gmul(r, base)
            base = gmul(base, base)
            k >>= 1
        return r

    for (i, j, k), c in p.terms.items():
        term = gmul(gmul(gpow(gx, i), gpow(gy, j)), gpow(gz, k))
        for key, gp in term.items():
            cells[key] = padd(cells.get(key, []), [c * v for v in gp])
    cells = {k: v for k, v in cells.items() if v}
    if not cells:
        return None
    g = []
    for gp in cells.values():
        g = pgcd(g, gp) if g else list(gp)
        if pdegree(g) == 0:
            return None
    roots, _ = field_roots(g, field_d)
    for gamma in roots:
        lf = LinearForm([alpha, beta, gamma])
        if divide_exact(p, lf.to_poly()) is not None:
            return lf
    return None


# -- bivariate affine polynomials ----------------------------------------

class BiPoly:
    """Polynomial in x, y over Scalar, not necessarily homogeneous."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for exps, c in terms.items():
            c = Scalar.coerce(c)
            if not c:
                continue
            exps = (int(exps[0]), int(exps[1]))
            clean[exps] = clean.get(exps, SZERO) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, *_):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def coerce(v):
        if isinstance(v, BiPoly):
            return v
        if isinstance(v, (int, Scalar, Fraction)):
            return BiPoly({(0, 0): Scalar.coerce(v)})
        raise TypeError(f"cannot coerce {v!r} to BiPoly")

    @staticmethod
    def var(name):
        if name == "x":
            return BiPoly({(1, 0): SONE})
        if name == "y":
            return BiPoly({(0, 1): SONE})
        raise ValueError(name)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        return max((i + j for (i, j) in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = BiPoly.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, SZERO) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-BiPoly.coerce(other))

    def __rsub__(self, other):
        return BiPoly.coerce(other) + (-self)

    def __mul__(self, other):
        other = BiPoly.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1])
                out[e] = out.get(e, SZERO) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = BiPoly.coerce(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def subst(self, fx, fy):
        """self(fx, fy) for BiPoly arguments."""
        out = BiPoly({})
        cache_x = {0: BiPoly.coerce(1)}
        cache_y = {0: BiPoly.coerce(1)}

        def pw(cache, base, k):
            if k not in cache:
                cache[k] = pw(cache, base, k - 1) * base
            return cache[k]

        for (i, j), c in self.terms.items():
            out = out + pw(cache_x, fx, i) * pw(cache_y, fy, j) * c
        return out

    def top_form(self):
        """Leading homogeneous part, as a BiPoly."""
        d = self.degree
        return BiPoly({e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def partial(self, axis):
        out = {}
        for e, c in self.terms.items():
            if e[axis] == 0:
                continue
            ee = list(e)
            ee[axis] -= 1
            out[tuple(ee)] = c * e[axis]
        return BiPoly(out)

    def eval(self, x, y):
        acc = SZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * x ** i * y ** j
        return acc

    def eval_complex(self, x, y):
        acc = 0j
        for (i, j), c in self.terms.items():
            acc += c.to_complex() * x ** i * y ** j
        return acc

    def as_uni_y(self):
        """Coefficient list in y when the polynomial does not involve x."""
        out = [SZERO] * (max((j for (_i, j) in self.terms), default=0) + 1)
        for (i, j), c in self.terms.items():
            if i != 0:
                raise ValueError("polynomial involves x")
            out[j] = c
        return pstrip(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (t[0] + t[1], t), reverse=True):
            c = self.terms[e]
            mon = "*".join(
                f"{v}^{p}" if p > 1 else v
                for v, p in zip(("x", "y"), e)
                if p > 0
            )
            if not mon:
                parts.append(f"{c}")
            elif c == SONE:
                parts.append(mon)
            elif c == -SONE:
                parts.append(f"-{mon}")
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*([xyz]\^\d+|[xyz]|sqrt\(-?\d+(?:/\d+)?\)|\d+/\d+|\d+|\*|\+|-|\(|\))")


def parse_poly(text, cls="hom"):
    """Parse polynomial input: `3*x^2*y - 1/2*z^3`, parentheses and `**` ok."""
    try:
        return _parse_poly_sympy(text, cls)
    except ImportError:
        return _parse_poly_basic(text, cls)


def _parse_poly_sympy(text, cls):
    sp, syms = _sympy_ctx()
    x, y, z = syms
    loc = {"x": x, "y": y, "z": z, "sqrt": sp.sqrt, "Rational": sp.Rational}
    expr = sp.expand(sp.sympify(text.replace("^", "**"), locals=loc, rational=True))
    gens = syms if cls == "hom" else syms[:2]
    pol = sp.Poly(expr, *gens, extension=True)
    rads = set()
    for pw in expr.atoms(sp.Pow):
        if pw.exp == sp.Rational(1, 2) and pw.base.is_Rational:
            rads.add(pw.base)
    has_i = expr.has(sp.I)
    if len(rads) > 1:
        from .errors import IncompatibleField

        raise IncompatibleField(f"multiple radicals in {text!r}")
    sd = None
    field_d = Fraction(0)
    if rads:
        r = rads.pop()
        rf = Fraction(int(r.p), int(r.q))
        if has_i:
            field_d = -rf
            sd = sp.sqrt(r) * sp.I
        else:
            field_d = rf
            sd = sp.sqrt(r)
    elif has_i:
        field_d = Fraction(-1)
        sd = sp.I
    out = {}
    for mono, co in pol.as_dict().items():
        c = _expr_to_scalar(sp, co, sd, field_d)
        if c:
            out[tuple(mono)] = c
    if cls == "hom":
        return HomPoly(out)
    return BiPoly({(i, j): c for (i, j), c in out.items()})


def _parse_poly_basic(text, cls="hom"):
    """Parse `3*x^2*y - 1/2*z^3` style input (no implicit multiplication)."""
    terms = []
    for sign, chunk in _split_terms(text):
        coef = Scalar(1) if sign == "+" else Scalar(-1)
        exps = [0, 0, 0]
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {chunk!r}")
            if factor[0] in "xyz":
                v = factor[0]
                k = 1
                if "^" in factor:
                    k = int(factor.split("^")[1])
                exps["xyz".index(v)] += k
            elif factor.startswith("sqrt"):
                from .scalars import parse_scalar
                coef = coef * parse_scalar(factor)
            else:
                coef = coef * Scalar(Fraction(factor))
        terms.append((tuple(exps), coef))
    if cls == "hom":
        out = {}
        for e, c in terms:
            out[e] = out.get(e, SZERO) + c
        return HomPoly(out)
    out = {}
    for e, c in terms:
        if e[2]:
            raise ValueError("z not allowed in a bivariate polynomial")
        key = (e[0], e[1])
        out[key] = out.get(key, SZERO) + c
    return BiPoly(out)


def _split_terms(text):
    """Split on top-level + and - (parentheses respected)."""
    out = []
    depth = 0
    sign = "+"
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
            cur.append(ch)
        elif ch == ")":
            depth -= 1
            cur.append(ch)
        elif ch in "+-" and depth == 0:
            prev = "".join(cur).strip()
            if prev and prev[-1] not in "*^":
                out.append((sign, prev))
                sign = ch
                cur = []
            elif not prev:
                sign = ch if sign == "+" else ("+" if ch == "-" else "-")
            else:
                cur.append(ch)
        else:
            cur.append(ch)
    chunk = "".join(cur).strip()
    if chunk:
        out.append((sign, chunk))
    return out
