"""Minkowski covector geometry, the pairing table, and the SL(2,C) action.

Momenta are 4-tuples of covector components (p0, p1, p2, p3) in an
orthonormal coframe, signature (+,-,-,-).  Components may be exact
(int/Fraction) or floats; exact momenta keep the whole chain exact.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from . import conventions
from .exactnum import QC, as_complex, coerce, conj, is_exact
from .grassmann import EndoW, Multivector, PairingMatrix


class OffOrbit(ValueError):
    pass


class NonPositiveEnergy(ValueError):
    pass


def momentum_is_exact(p):
    return all(isinstance(x, (int, Fraction)) for x in p)


def minkowski_norm2(p):
    p0, p1, p2, p3 = p
    return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3


def pair_covector(p, vec):
    """Contract momentum with a complexified-covector table entry."""
    s = coerce(0)
    for pm, c in zip(p, vec):
        s = s + c * pm
    return s


def gamma_pair(p):
    """B(p)[a][b] = p(Gamma_C(tau^a, taubar^b)); det B(p) = |p|^2."""
    return PairingMatrix([[pair_covector(p, conventions.GAMMA_TABLE[a][b])
                           for b in range(2)] for a in range(2)])


def gamma_lower(p):
    """The vector-field coefficient table Gamma^mu_{ab} contracted with p."""
    return [[pair_covector(p, conventions.GAMMA_LOWER[a][b])
             for b in range(2)] for a in range(2)]


def classify_orbit(p, tol=0.0):
    n2 = minkowski_norm2(p)
    p0 = p[0]
    if abs(n2) <= tol:
        if abs(p0) <= tol and all(abs(x) <= tol for x in p):
            return "Zero"
        return "NullPlus" if p0 > 0 else "NullMinus"
    if n2 > 0:
        return "MassivePlus" if p0 > 0 else "MassiveMinus"
    return "ImaginaryMass"


# -- 2x2 complex matrices ---------------------------------------------------

def m2_mul(a, b):
    return [[a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]]]


def m2_dagger(a):
    return [[conj(a[0][0]), conj(a[1][0])], [conj(a[0][1]), conj(a[1][1])]]


def m2_det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def m2_inv_unimodular(a):
    """Inverse of a det-1 matrix: the adjugate."""
    return [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]


def m2_transpose(a):
    return [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]


class SpinElement:
    """Element of SL(2,C) acting on the spinor spaces."""

    __slots__ = ("a",)

    def __init__(self, a, check=True, tol=1e-9):
        self.a = [list(row) for row in a]
        if check:
            d = as_complex(m2_det(self.a))
            if abs(d - 1.0) > tol:
                raise ValueError(f"det {d} != 1")

    @classmethod
    def identity(cls):
        return cls([[1, 0], [0, 1]], check=False)

    def inverse(self):
        return SpinElement(m2_inv_unimodular(self.a), check=False)

    def __matmul__(self, other):
        return SpinElement(m2_mul(self.a, other.a), check=False)

    def plus_matrix(self):
        """Coefficient action on S_+^* columns: the dual (contragredient) rep."""
        return m2_transpose(m2_inv_unimodular(self.a))

    def minus_matrix(self):
        """Coefficient action on S_-^* columns: (A^dagger)^-1 (ledger L5)."""
        return m2_inv_unimodular(m2_dagger(self.a))


def vector_from_pairing(mat):
    """Invert p -> B(p): B = [[p0+p1, p2-i p3], [p2+i p3, p0-p1]]."""
    b11, b12, b21, b22 = mat[0][0], mat[0][1], mat[1][0], mat[1][1]
    half = Fraction(1, 2)
    p0 = (b11 + b22) * half
    p1 = (b11 - b22) * half
    p2 = (b12 + b21) * half
    p3 = (b21 - b12) * half * QC(0, -1)
    return (p0, p1, p2, p3)


def act_on_momentum(h, p):
    """The Lorentz action through B(h.p) = A B(p) A^dagger; returns floats."""
    B = gamma_pair(p)
    m = [[as_complex(x) for x in row] for row in B.b]
    a = [[as_complex(x) for x in row] for row in h.a]
    out = m2_mul(m2_mul(a, m), m2_dagger(a))
    p0 = (out[0][0] + out[1][1]) / 2
    p1 = (out[0][0] - out[1][1]) / 2
    p2 = (out[0][1] + out[1][0]) / 2
    p3 = (out[1][0] - out[0][1]) / (2j)
    return tuple(x.real for x in (p0, p1, p2, p3))


def rest_boost(p, m, tol=1e-9):
    """Hermitian positive h_p with B(p) = h_p (m Id) h_p^dagger.

    Principal square root of B(p)/m; raises OffOrbit / NonPositiveEnergy
    when p is not numerically on the forward mass shell.
    """
    if m <= 0:
        raise ValueError("mass must be positive")
    pf = tuple(float(x) for x in p)
    if pf[0] <= 0:
        raise NonPositiveEnergy(f"p0 = {pf[0]} <= 0")
    n2 = minkowski_norm2(pf)
    if abs(n2 - m * m) > tol * max(1.0, m * m):
        raise OffOrbit(f"|p|^2 = {n2}, expected {m * m}")
    B = [[as_complex(x) / m for x in row] for row in gamma_pair(pf).b]
    det = B[0][0] * B[1][1] - B[0][1] * B[1][0]
    s = cmath.sqrt(det)
    tr = B[0][0] + B[1][1]
    t = cmath.sqrt(tr + 2 * s)
    h = [[(B[0][0] + s) / t, B[0][1] / t], [B[1][0] / t, (B[1][1] + s) / t]]
    return SpinElement(h, check=True, tol=1e-6)


def boost_x(eta):
    """diag(e^{eta/2}, e^{-eta/2}): pure boost along the x^1 axis."""
    return SpinElement([[math.exp(eta / 2), 0], [0, math.exp(-eta / 2)]], check=False)


def spin_action(h, mv):
    """Algebra automorphism of W induced by the spinor action of h."""
    return spin_action_endo(h)(mv)


def spin_action_endo(h):
    """The induced endomorphism of W as a dense matrix."""
    pm = h.plus_matrix()
    mm = h.minus_matrix()
    # image of generator g (0..3) as a list of (coefficient, generator)
    gen_images = []
    for a in range(2):
        gen_images.append([(pm[c][a], c) for c in range(2)])
    for a in range(2):
        gen_images.append([(mm[c][a], c + 2) for c in range(2)])

    def act(mv):
        out = Multivector({})
        for mask, coef in mv.coeffs.items():
            terms = {0: coef}
            for g in range(4):
                if not mask & (1 << g):
                    continue
                nxt = {}
                for cg, tgt in gen_images[g]:
                    for cur_mask, cur_c in terms.items():
                        sgn, nm = wedge_gen_right(tgt, cur_mask)
                        if nm is None:
                            continue
                        nxt[nm] = nxt.get(nm, coerce(0)) + cur_c * cg * sgn
                terms = nxt
            for mk, c in terms.items():
                out = out + Multivector({mk: c})
        return out

    return EndoW.from_action(act)


def wedge_gen_right(gen, mask):
    """Append generator `gen` on the right of the word `mask`."""
    bit = 1 << gen
    if mask & bit:
        return 0, None
    above = bin(mask & ~((bit << 1) - 1)).count("1")
    return (-1) ** above, mask | bit


def conj_zeta(z):
    """zeta(z1, z2) = (-i conj(z2), i conj(z1)).

    Antilinear and equivariant; its square is -Id (the half-spinor space is
    quaternionic, so no equivariant antilinear square root of +Id exists on
    it -- see decisions ledger).  The involutive real structure lives on the
    four-dimensional sum, via :func:`c1`.
    """
    z1, z2 = z
    return (QC(0, -1) * conj(z2), QC(0, 1) * conj(z1))


def c1(z):
    """Conjugation of S_C^* = S_+^* + S_-^*: antilinear, (c1)^2 = Id.

    The block acting on the minus half carries a compensating sign so that
    the square is +Id; on the plus half this reproduces the basis images
    fbar^1 = (0,0,0,i), fbar^2 = (0,0,-i,0).
    """
    z1, z2, z3, z4 = z
    a, b = conj_zeta((z3, z4))
    c, d = conj_zeta((z1, z2))
    return (-a, -b, c, d)
