"""Superfunctions on Minkowski superspacetime and the super Fourier transform.

A superfunction is a map into the 16-dimensional Grassmann module, stored as
one plane-wave sum per theta monomial.  Spacetime integrals are replaced by
finite plane-wave sums: the bosonic transform of ``a e^{i<q,x>}`` is the
coefficient ``a`` at momentum ``q``, and the purely odd part of the super
Fourier transform is the symplectic Hodge star.
"""

from __future__ import annotations

from . import conventions
from .exactnum import QC, as_complex, coerce, conj, scal_is_zero
from .grassmann import (MONOMIALS, Multivector, contract_gen, mono_key,
                        mono_mask, mask_from_key, minus_set, plus_set,
                        wedge_gen)
from .spin_geometry import pair_covector


class SideMismatch(ValueError):
    pass


class GradeMismatch(ValueError):
    pass


# -- plane-wave sums ----------------------------------------------------------

class PlaneWaveFn:
    """Finite sum of plane waves sum_q a_q e^{i<q,x>}.

    Terms are stored with the frequency sign absorbed into the momentum key,
    which is the canonical merge of (momentum, sign) pairs.  The same
    container doubles as a finite delta-coefficient sum in momentum space.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for q, a in terms.items():
                a = coerce(a)
                if not scal_is_zero(a):
                    self.terms[tuple(q)] = a

    @classmethod
    def wave(cls, amplitude, momentum, sign=1):
        q = tuple(momentum) if sign >= 0 else tuple(-x for x in momentum)
        return cls({q: amplitude})

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        out = dict(self.terms)
        for q, a in other.terms.items():
            out[q] = out.get(q, QC(0)) + a
        return PlaneWaveFn(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, s):
        return PlaneWaveFn({q: a * s for q, a in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        if not isinstance(other, PlaneWaveFn):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(scal_is_zero(self.terms.get(k, QC(0)) - other.terms.get(k, QC(0)))
                   for k in keys)

    def is_zero(self, tol=0.0):
        return all(scal_is_zero(a, tol) for a in self.terms.values())

    def max_abs(self):
        return max((abs(as_complex(a)) for a in self.terms.values()), default=0.0)

    def derivative(self, mu):
        """d/dx^mu: multiplies each term by i q_mu."""
        return PlaneWaveFn({q: a * QC(0, 1) * q[mu] for q, a in self.terms.items()})

    def gamma_derivative(self, gamma_vec):
        """sum_mu gamma^mu d/dx^mu for a covector-table entry gamma_vec."""
        out = {}
        for q, a in self.terms.items():
            out[q] = a * QC(0, 1) * pair_covector(q, gamma_vec)
        return PlaneWaveFn(out)

    def conjugate(self):
        """Pointwise complex conjugate: conj(a) at the reflected momentum."""
        return PlaneWaveFn({tuple(-x for x in q): conj(a) for q, a in self.terms.items()})

    def box(self):
        """The wave operator: each term times -<q,q>."""
        from .spin_geometry import minkowski_norm2
        return PlaneWaveFn({q: a * (-minkowski_norm2(q)) for q, a in self.terms.items()})

    def eval_at(self, x):
        """Numeric evaluation at a spacetime point (x0, x1, x2, x3)."""
        import cmath
        s = 0j
        for q, a in self.terms.items():
            phase = sum(float(qm) * float(xm) for qm, xm in zip(q, x))
            s += as_complex(a) * cmath.exp(1j * phase)
        return s

    def momenta(self):
        return set(self.terms)

    def to_json(self):
        out = []
        for q, a in sorted(self.terms.items(), key=lambda kv: str(kv[0])):
            ac = as_complex(a)
            out.append([ac.real, ac.imag, *(float(x) for x in q), 1])
        return out

    @classmethod
    def from_json(cls, rows):
        out = cls.zero()
        for re, im, p0, p1, p2, p3, sign in rows:
            out = out + cls.wave(complex(re, im), (p0, p1, p2, p3), int(sign))
        return out

    def __repr__(self):
        return f"PlaneWaveFn({self.terms!r})"


# -- superfunctions -----------------------------------------------------------

class SuperFunction:
    """16 plane-wave components indexed by Grassmann monomial masks."""

    __slots__ = ("side", "comps")

    def __init__(self, comps=None, side="position"):
        self.side = side
        self.comps = {}
        if comps:
            for m, g in comps.items():
                if isinstance(g, PlaneWaveFn) and not g.is_zero():
                    self.comps[m] = g

    def comp(self, mask):
        return self.comps.get(mask, PlaneWaveFn.zero())

    def __add__(self, other):
        if self.side != other.side:
            raise SideMismatch("cannot add superfunctions on different sides")
        out = dict(self.comps)
        for m, g in other.comps.items():
            out[m] = out.get(m, PlaneWaveFn.zero()) + g
        return SuperFunction(out, self.side)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, s):
        return SuperFunction({m: g * s for m, g in self.comps.items()}, self.side)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SuperFunction):
            return NotImplemented
        if self.side != other.side:
            return False
        keys = set(self.comps) | set(other.comps)
        return all(self.comp(k) == other.comp(k) for k in keys)

    def is_zero(self, tol=0.0):
        return all(g.is_zero(tol) for g in self.comps.values())

    def max_abs(self):
        return max((g.max_abs() for g in self.comps.values()), default=0.0)

    def require_side(self, side):
        if self.side != side:
            raise SideMismatch(f"expected a {side}-side superfunction")

    def at_momentum(self, q):
        """Multivector of coefficients at one momentum key."""
        q = tuple(q)
        return Multivector({m: g.terms[q] for m, g in self.comps.items() if q in g.terms})

    def all_momenta(self):
        out = set()
        for g in self.comps.values():
            out |= g.momenta()
        return out

    def to_json(self):
        return {"side": self.side,
                "components": {mono_key(m): g.to_json()
                               for m, g in sorted(self.comps.items())}}

    @classmethod
    def from_json(cls, data):
        comps = {mask_from_key(k): PlaneWaveFn.from_json(v)
                 for k, v in data.get("components", {}).items()}
        return cls(comps, data.get("side", "position"))


def single_wave(mask, amplitude, momentum, sign=1, side="position"):
    return SuperFunction({mask: PlaneWaveFn.wave(amplitude, momentum, sign)}, side)


# -- Hodge star and the super Fourier transform -------------------------------

def _sigma(idx):
    """Degree complement on one factor's index set: {} <-> {1,2}, {a} -> {a}."""
    if idx == ():
        return (1, 2)
    if idx == (1, 2):
        return ()
    return idx


def _star_factor(ni, nj):
    if (ni + nj) % 2 == 1:
        return QC(0, 1)
    if ni == 1 and nj == 1:
        return QC(-1)
    return QC(1)


STAR_TABLE = {
    m: (mono_mask(_sigma(plus_set(m)), _sigma(minus_set(m))),
        _star_factor(len(plus_set(m)), len(minus_set(m))))
    for m in MONOMIALS
}


def hodge_star(mv):
    """The purely odd super Fourier transform: the symplectic Hodge dual."""
    out = {}
    for m, c in mv.coeffs.items():
        tgt, fac = STAR_TABLE[m]
        out[tgt] = out.get(tgt, QC(0)) + fac * c
    return Multivector(out)


def super_ft(f):
    """Position-side superfunction -> momentum-side (finite-sum surrogate)."""
    f.require_side("position")
    out = {}
    for m, g in f.comps.items():
        tgt, fac = STAR_TABLE[m]
        out[tgt] = out.get(tgt, PlaneWaveFn.zero()) + fac * g
    return SuperFunction(out, side="momentum")


def inverse_super_ft(fhat):
    fhat.require_side("momentum")
    out = {}
    for tgt, g in fhat.comps.items():
        m, fac = _STAR_INVERSE[tgt]
        out[m] = out.get(m, PlaneWaveFn.zero()) + g * (QC(1) / fac)
    return SuperFunction(out, side="position")


_STAR_INVERSE = {tgt: (m, fac) for m, (tgt, fac) in STAR_TABLE.items()}


def berezin_integral(f):
    """Top Grassmann coefficient, sign +1 (ledger L6)."""
    return f.comp(mono_mask((1, 2), (1, 2)))


def body_restriction(f):
    """Set all odd coordinates to zero: the scalar component."""
    return f.comp(0)


# -- odd derivations and the covariant vector fields ---------------------------

def theta_derivative(a, f, barred=False):
    """Left derivative d/d theta^a (or d/d thetabar^a)."""
    gen = (a - 1) + (2 if barred else 0)
    out = {}
    for m, g in f.comps.items():
        sgn, nm = contract_gen(gen, m)
        if nm is None:
            continue
        out[nm] = out.get(nm, PlaneWaveFn.zero()) + sgn * g
    return SuperFunction(out, f.side)


def theta_multiply(a, f, barred=False):
    """Left multiplication by theta^a (or thetabar^a)."""
    gen = (a - 1) + (2 if barred else 0)
    out = {}
    for m, g in f.comps.items():
        sgn, nm = wedge_gen(gen, m)
        if nm is None:
            continue
        out[nm] = out.get(nm, PlaneWaveFn.zero()) + sgn * g
    return SuperFunction(out, f.side)


def apply_P(mu, f):
    """The translation vector field P_mu = d/dx^mu."""
    f.require_side("position")
    return SuperFunction({m: g.derivative(mu) for m, g in f.comps.items()}, f.side)


def _gamma_term(a, f, barred, sign):
    """sign * i * Gamma^mu_{ab} (other theta)^b d/dx^mu f, summed over b."""
    out = SuperFunction({}, f.side)
    for b in (1, 2):
        vec = conventions.GAMMA_LOWER[b - 1][a - 1] if barred \
            else conventions.GAMMA_LOWER[a - 1][b - 1]
        dg = SuperFunction({m: g.gamma_derivative(vec) for m, g in f.comps.items()},
                           f.side)
        out = out + QC(0, sign) * theta_multiply(b, dg, barred=not barred)
    return out


def apply_Q(a, f):
    """Q_a = d/dtheta^a + i Gamma^mu_{ab} thetabar^b d/dx^mu."""
    f.require_side("position")
    return theta_derivative(a, f) + _gamma_term(a, f, barred=False, sign=1)


def apply_Qbar(a, f):
    """Qbar_a = d/dthetabar^a + i Gamma^mu_{ba} theta^b d/dx^mu."""
    f.require_side("position")
    return theta_derivative(a, f, barred=True) + _gamma_term(a, f, barred=True, sign=1)


def apply_D(a, f):
    """D_a = d/dtheta^a - i Gamma^mu_{ab} thetabar^b d/dx^mu."""
    f.require_side("position")
    return theta_derivative(a, f) + _gamma_term(a, f, barred=False, sign=-1)


def apply_Dbar(a, f):
    """Dbar_a = d/dthetabar^a - i Gamma^mu_{ba} theta^b d/dx^mu."""
    f.require_side("position")
    return theta_derivative(a, f, barred=True) + _gamma_term(a, f, barred=True, sign=-1)


def _eps_square(op, f, eps_upper):
    out = SuperFunction({}, f.side)
    for a in (1, 2):
        for b in (1, 2):
            e = eps_upper[a - 1][b - 1]
            if e:
                out = out + e * op(a, op(b, f))
    return out


def apply_D2(f):
    """D^2 = eps^{ab} D_a D_b."""
    return _eps_square(apply_D, f, conventions.EPS_UPPER)


def apply_Dbar2(f):
    """Dbar^2 = eps^{ab} Dbar_a Dbar_b (dotted epsilon = undotted, ledger L2)."""
    return _eps_square(apply_Dbar, f, conventions.EPS_UPPER)


def graded_bracket(op1, op2, f):
    """{op1, op2} f for odd operators given as callables f -> f."""
    return op1(op2(f)) + op2(op1(f))


# -- tau-side operators on momentum superfunctions ------------------------------

def apply_endo_momentum(endo, fhat):
    """Apply a 16x16 EndoW momentum-wise to a momentum-side superfunction."""
    fhat.require_side("momentum")
    out = {}
    for c, g in fhat.comps.items():
        for r in MONOMIALS:
            x = endo.mat[r][c]
            if not scal_is_zero(x):
                out[r] = out.get(r, PlaneWaveFn.zero()) + x * g
    return SuperFunction(out, side="momentum")


def apply_zeta_momentum(zeta_fn, fhat):
    """Apply a momentum-dependent symbol p -> EndoW at each momentum key."""
    fhat.require_side("momentum")
    out = {}
    for q in fhat.all_momenta():
        mv = fhat.at_momentum(q)
        img = zeta_fn(q)(mv)
        for m, c in img.coeffs.items():
            out.setdefault(m, {})[q] = out.get(m, {}).get(q, QC(0)) + c
    return SuperFunction({m: PlaneWaveFn(t) for m, t in out.items()}, side="momentum")


def tau_multiply(b, fhat, barred=False):
    fhat.require_side("momentum")
    g = theta_multiply(b, SuperFunction(fhat.comps, "position"), barred=barred)
    return SuperFunction(g.comps, "momentum")


def tau_derivative(b, fhat, barred=False):
    fhat.require_side("momentum")
    g = theta_derivative(b, SuperFunction(fhat.comps, "position"), barred=barred)
    return SuperFunction(g.comps, "momentum")


def exchange_check(f):
    """Evaluate the four exchange identities of the transform on f.

    star((d f / d theta^a)^)    = i eps_{ab} tau^b (star fhat)
    star((d f / d thetabar^a)^) = i eps_{ab} taubar^b (star fhat)
    star((theta^a f)^)          = -i eps^{ab} d/dtau^b (star fhat)
    star((thetabar^a f)^)       = -i eps^{ab} d/dtaubar^b (star fhat)

    Returns a dict id -> max abs discrepancy (all zero in exact mode).
    """
    f.require_side("position")
    fhat = super_ft(f)
    eps_l = conventions.EPS_LOWER
    eps_u = conventions.EPS_UPPER
    report = {}
    for barred in (False, True):
        tag = "bar" if barred else ""
        for a in (1, 2):
            lhs = super_ft(theta_derivative(a, f, barred=barred))
            rhs = SuperFunction({}, "momentum")
            for b in (1, 2):
                e = eps_l[a - 1][b - 1]
                if e:
                    rhs = rhs + QC(0, e) * tau_multiply(b, fhat, barred=barred)
            report[f"d/dtheta{tag}^{a}"] = (lhs - rhs).max_abs()
            lhs2 = super_ft(theta_multiply(a, f, barred=barred))
            rhs2 = SuperFunction({}, "momentum")
            for b in (1, 2):
                e = eps_u[a - 1][b - 1]
                if e:
                    rhs2 = rhs2 + QC(0, -e) * tau_derivative(b, fhat, barred=barred)
            report[f"theta{tag}^{a}*"] = (lhs2 - rhs2).max_abs()
    return report


# -- auxiliary Grassmann algebras and the group law -----------------------------

class AuxGrassmann:
    """Exterior algebra on N auxiliary odd generators with QC coefficients."""

    def __init__(self, n=4):
        self.n = n

    def element(self, coeffs=None):
        return GrassElt(self, coeffs)

    def scalar(self, c):
        return GrassElt(self, {0: coerce(c)})

    def gen(self, i):
        if not 0 <= i < self.n:
            raise IndexError("generator index out of range")
        return GrassElt(self, {1 << i: QC(1)})

    def basis_masks(self, parity_sel=None):
        masks = range(1 << self.n)
        if parity_sel is None:
            return list(masks)
        return [m for m in masks if bin(m).count("1") % 2 == parity_sel]


class GrassElt:
    """Element of an auxiliary Grassmann algebra Lambda_N."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg, coeffs=None):
        self.alg = alg
        self.coeffs = {}
        if coeffs:
            for m, c in coeffs.items():
                c = coerce(c)
                if not scal_is_zero(c):
                    self.coeffs[m] = c

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, QC(0)) + c
        return GrassElt(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * self._lift(other)

    def __rsub__(self, other):
        return self._lift(other) + (-1) * self

    def __neg__(self):
        return (-1) * self

    def _lift(self, other):
        if isinstance(other, GrassElt):
            return other
        return GrassElt(self.alg, {0: coerce(other)})

    def __mul__(self, other):
        if not isinstance(other, GrassElt):
            return GrassElt(self.alg, {m: c * other for m, c in self.coeffs.items()})
        out = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                if ma & mb:
                    continue
                sgn = _merge_sign(ma, mb)
                key = ma | mb
                out[key] = out.get(key, QC(0)) + ca * cb * sgn
        return GrassElt(self.alg, out)

    def __rmul__(self, other):
        return GrassElt(self.alg, {m: other * c for m, c in self.coeffs.items()})

    def __eq__(self, other):
        other = self._lift(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(scal_is_zero(self.coeffs.get(k, QC(0)) - other.coeffs.get(k, QC(0)))
                   for k in keys)

    def is_zero(self):
        return not self.coeffs

    def parity(self):
        """0, 1, or None for mixed."""
        ps = {bin(m).count("1") % 2 for m in self.coeffs}
        if not ps:
            return 0
        if len(ps) == 1:
            return ps.pop()
        return None

    def conjugate(self):
        """Graded (reversing) conjugation with real generators."""
        out = {}
        for m, c in self.coeffs.items():
            k = bin(m).count("1")
            out[m] = conj(c) * ((-1) ** (k * (k - 1) // 2))
        return GrassElt(self.alg, out)

    def __repr__(self):
        return f"GrassElt({self.coeffs!r})"


def _merge_sign(ma, mb):
    """Koszul sign for merging two disjoint sorted words ma, mb (ma first)."""
    sign = 1
    for i in range(mb.bit_length()):
        if mb & (1 << i):
            above = bin(ma >> (i + 1)).count("1")
            if above & 1:
                sign = -sign
    return sign


class SuperPoint:
    """B-point of superspacetime: 4 even and 2+2 odd Grassmann coordinates."""

    __slots__ = ("y", "xi", "xibar")

    def __init__(self, y, xi, xibar):
        for c in y:
            if c.parity() not in (0,):
                raise GradeMismatch("even coordinates must be even elements")
        for c in list(xi) + list(xibar):
            if c.parity() not in (1, 0) or (c.parity() == 0 and not c.is_zero()):
                raise GradeMismatch("odd coordinates must be odd elements")
        self.y = tuple(y)
        self.xi = tuple(xi)
        self.xibar = tuple(xibar)

    def __eq__(self, other):
        return (all(a == b for a, b in zip(self.y, other.y))
                and all(a == b for a, b in zip(self.xi, other.xi))
                and all(a == b for a, b in zip(self.xibar, other.xibar)))

    def negate(self):
        return SuperPoint([-c for c in self.y], [-c for c in self.xi],
                          [-c for c in self.xibar])


def group_law(u, v):
    """Campbell-Baker-Hausdorff product of two superspacetime B-points.

    (y + y' + i Gamma^mu_{ab} (xi^a xibar'^b - xi'^a xibar^b), xi+xi',
    xibar+xibar').
    """
    y = []
    for mu in range(4):
        shift = None
        for a in (1, 2):
            for b in (1, 2):
                g = QC(0, 1) * conventions.GAMMA_LOWER[a - 1][b - 1][mu]
                if scal_is_zero(g):
                    continue
                term = (u.xi[a - 1] * v.xibar[b - 1] - v.xi[a - 1] * u.xibar[b - 1]) * g
                shift = term if shift is None else shift + term
        tot = u.y[mu] + v.y[mu]
        if shift is not None:
            tot = tot + shift
        y.append(tot)
    xi = [a + b for a, b in zip(u.xi, v.xi)]
    xibar = [a + b for a, b in zip(u.xibar, v.xibar)]
    return SuperPoint(y, xi, xibar)
