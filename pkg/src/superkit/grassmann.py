"""Exact model of the 16-dimensional Grassmann module W.

W is the exterior algebra on four odd generators, grouped as two "plus"
generators tau^1, tau^2 and two "minus" generators taubar^1, taubar^2.  A
monomial is a 4-bit mask (bit 0 = tau^1, bit 1 = tau^2, bit 2 = taubar^1,
bit 3 = taubar^2) read in that canonical order.  All operator signs are
Koszul crossing counts in the flattened word (ledger L1): the exterior
multiplications are left multiplications and the interior products are
graded contractions, which makes the four d/q families genuine Clifford
creation/annihilation operators.
"""

from __future__ import annotations

from .exactnum import QC, coerce, conj, scal_is_zero
from . import linalg

N_GEN = 4
DIM = 16
MONOMIALS = tuple(range(DIM))

_PLUS_BITS = (0, 1)
_MINUS_BITS = (2, 3)


def plus_set(mask):
    return tuple(a + 1 for a in (0, 1) if mask & (1 << a))


def minus_set(mask):
    return tuple(a + 1 for a in (0, 1) if mask & (1 << (a + 2)))


def mono_mask(plus, minus):
    m = 0
    for a in plus:
        m |= 1 << (a - 1)
    for a in minus:
        m |= 1 << (a + 1)
    return m


def degree(mask):
    return bin(mask).count("1")


def parity(mask):
    return degree(mask) & 1


def mono_name(mask):
    ps = "".join(f"t{a}" for a in plus_set(mask))
    ms = "".join(f"b{a}" for a in minus_set(mask))
    return (ps + ms) or "1"


def mono_key(mask):
    """JSON key '<I>|<J>' with I, J in {'', '1', '2', '12'}."""
    return "".join(str(a) for a in plus_set(mask)) + "|" + \
        "".join(str(a) for a in minus_set(mask))


def mask_from_key(key):
    i, j = key.split("|")
    return mono_mask(tuple(int(c) for c in i), tuple(int(c) for c in j))


def wedge_gen(gen, mask):
    """Left multiply by generator `gen` (0..3): (sign, new mask) or (0, None)."""
    bit = 1 << gen
    if mask & bit:
        return 0, None
    below = bin(mask & (bit - 1)).count("1")
    return (-1) ** below, mask | bit


def contract_gen(gen, mask):
    """Remove generator `gen` with its Koszul sign: (sign, new mask) or (0, None)."""
    bit = 1 << gen
    if not mask & bit:
        return 0, None
    below = bin(mask & (bit - 1)).count("1")
    return (-1) ** below, mask & ~bit


class Multivector:
    """Element of W: sparse map monomial mask -> scalar."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for m, c in coeffs.items():
                c = coerce(c)
                if not scal_is_zero(c):
                    self.coeffs[m] = c

    @classmethod
    def basis(cls, mask, scale=1):
        return cls({mask: coerce(scale)})

    @classmethod
    def scalar(cls, value):
        return cls({0: coerce(value)})

    def __getitem__(self, mask):
        return self.coeffs.get(mask, QC(0))

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return Multivector(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, s):
        return Multivector({m: c * s for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(scal_is_zero(self[k] - other[k]) for k in keys)

    def is_zero(self, tol=0.0):
        return all(scal_is_zero(c, tol) for c in self.coeffs.values())

    def max_abs(self):
        from .exactnum import as_complex
        return max((abs(as_complex(c)) for c in self.coeffs.values()), default=0.0)

    def to_vector(self):
        return [self[m] for m in MONOMIALS]

    @classmethod
    def from_vector(cls, vec):
        return cls({m: vec[m] for m in MONOMIALS})

    def parity_parts(self):
        even = Multivector({m: c for m, c in self.coeffs.items() if parity(m) == 0})
        odd = Multivector({m: c for m, c in self.coeffs.items() if parity(m) == 1})
        return even, odd

    def to_json(self):
        from .exactnum import to_pairs
        return {"coeffs": {mono_key(m): to_pairs(c) for m, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, data):
        from .exactnum import from_pairs
        return cls({mask_from_key(k): from_pairs(*v) for k, v in data["coeffs"].items()})

    def __repr__(self):
        if not self.coeffs:
            return "Multivector(0)"
        parts = [f"{c!r}*{mono_name(m)}" for m, c in sorted(self.coeffs.items())]
        return "Multivector(" + " + ".join(parts) + ")"


class PairingMatrix:
    """2x2 matrix b[a][b] pairing tau^a with taubar^b."""

    __slots__ = ("b",)

    def __init__(self, b):
        self.b = tuple(tuple(coerce(x) for x in row) for row in b)

    @classmethod
    def identity(cls):
        return cls(((1, 0), (0, 1)))

    def __getitem__(self, ab):
        a, b = ab
        return self.b[a - 1][b - 1]

    def det(self):
        return self.b[0][0] * self.b[1][1] - self.b[0][1] * self.b[1][0]

    def is_invertible(self):
        return not scal_is_zero(self.det())

    def __repr__(self):
        return f"PairingMatrix({self.b!r})"


class SymplecticForm:
    """eps_lower and its doubled-index partner eps_upper (ledger L2)."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower=None, upper=None):
        from . import conventions
        self.lower = tuple(tuple(coerce(x) for x in r)
                           for r in (lower or conventions.EPS_LOWER))
        self.upper = tuple(tuple(coerce(x) for x in r)
                           for r in (upper or conventions.EPS_UPPER))


EPS = SymplecticForm()


# -- primitive operations -------------------------------------------------

def _apply_linear(terms, mv):
    """terms: list of (scale or None, gen_action); action(mask) -> (sign, mask)."""
    out = {}
    for mask, c in mv.coeffs.items():
        for scale, act in terms:
            sgn, nm = act(mask)
            if nm is None:
                continue
            val = c if scale is None else c * scale
            if sgn < 0:
                val = -val
            prev = out.get(nm)
            out[nm] = val if prev is None else prev + val
    return Multivector(out)


def ext_plus(a, mv):
    """Left exterior multiplication by tau^a on the plus factor."""
    return _apply_linear([(None, lambda m, g=a - 1: wedge_gen(g, m))], mv)


def ext_minus(a, mv):
    """Left exterior multiplication by taubar^a, with the Koszul crossing sign."""
    return _apply_linear([(None, lambda m, g=a + 1: wedge_gen(g, m))], mv)


def int_plus(a, B, mv):
    """Interior product i_{tau^a}: contracts taubar^b with coefficient B[a][b]."""
    terms = [(B[a, b], (lambda m, g=b + 1: contract_gen(g, m)))
             for b in (1, 2) if not scal_is_zero(B[a, b])]
    return _apply_linear(terms, mv)


def int_minus(a, B, mv):
    """Interior product i_{taubar^a}: contracts tau^b with coefficient B[b][a]."""
    terms = [(B[b, a], (lambda m, g=b - 1: contract_gen(g, m)))
             for b in (1, 2) if not scal_is_zero(B[b, a])]
    return _apply_linear(terms, mv)


# -- endomorphisms ---------------------------------------------------------

class EndoW:
    """Dense 16x16 endomorphism of W in the monomial basis (columns = inputs)."""

    __slots__ = ("mat",)

    def __init__(self, mat):
        self.mat = [[coerce(x) for x in row] for row in mat]

    @classmethod
    def from_action(cls, fn):
        cols = [fn(Multivector.basis(m)).to_vector() for m in MONOMIALS]
        return cls([[cols[c][r] for c in MONOMIALS] for r in MONOMIALS])

    @classmethod
    def identity(cls):
        return cls([[QC(1) if i == j else QC(0) for j in MONOMIALS] for i in MONOMIALS])

    @classmethod
    def zero(cls):
        return cls([[QC(0)] * DIM for _ in MONOMIALS])

    def __call__(self, mv):
        out = {}
        for c, coef in mv.coeffs.items():
            for r in MONOMIALS:
                x = self.mat[r][c]
                if not scal_is_zero(x):
                    out[r] = out.get(r, QC(0)) + x * coef
        return Multivector(out)

    def __matmul__(self, other):
        return EndoW(linalg.mat_mul(self.mat, other.mat))

    def __add__(self, other):
        return EndoW([[a + b for a, b in zip(ra, rb)]
                      for ra, rb in zip(self.mat, other.mat)])

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, s):
        return EndoW([[x * s for x in row] for row in self.mat])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, EndoW):
            return NotImplemented
        return all(scal_is_zero(a - b)
                   for ra, rb in zip(self.mat, other.mat)
                   for a, b in zip(ra, rb))

    def is_zero(self, tol=0.0):
        return all(scal_is_zero(x, tol) for row in self.mat for x in row)

    def max_abs(self):
        from .exactnum import as_complex
        return max(abs(as_complex(x)) for row in self.mat for x in row)

    def parity(self):
        """'even', 'odd', or 'mixed' from the sparsity pattern."""
        has_even = has_odd = False
        for r in MONOMIALS:
            for c in MONOMIALS:
                if scal_is_zero(self.mat[r][c]):
                    continue
                if parity(r) == parity(c):
                    has_even = True
                else:
                    has_odd = True
        if has_even and has_odd:
            return "mixed"
        return "odd" if has_odd else "even"

    def to_json(self):
        from .exactnum import to_pairs
        return [[to_pairs(x) for x in row] for row in self.mat]


def anticommutator(a, b):
    return a @ b + b @ a


def commutator(a, b):
    return a @ b - b @ a


# -- the d / q family ------------------------------------------------------
#
# Operators are assembled as sparse actions (closures Multivector ->
# Multivector); build_* wraps them into dense EndoW matrices when a matrix
# is wanted.  Compositions stay sparse, which keeps exact arithmetic cheap.

def d_action(a, B):
    def act(mv):
        return ext_plus(a, mv) + int_plus(a, B, mv)
    return act


def dbar_action(a, B):
    def act(mv):
        return ext_minus(a, mv) + int_minus(a, B, mv)
    return act


def q_action(a, B):
    def act(mv):
        return ext_plus(a, mv) - int_plus(a, B, mv)
    return act


def qbar_action(a, B):
    def act(mv):
        return ext_minus(a, mv) - int_minus(a, B, mv)
    return act


def _eps_compose(acts, eps):
    def act(mv):
        out = Multivector({})
        for a in (1, 2):
            for b in (1, 2):
                e = eps.lower[a - 1][b - 1]
                if not scal_is_zero(e):
                    out = out + e * acts[a - 1](acts[b - 1](mv))
        return out
    return act


def d2_action(B, eps=EPS):
    return _eps_compose([d_action(1, B), d_action(2, B)], eps)


def dbar2_action(B, eps=EPS):
    return _eps_compose([dbar_action(1, B), dbar_action(2, B)], eps)


def e2_action(eps=EPS):
    return _eps_compose([lambda mv: ext_plus(1, mv), lambda mv: ext_plus(2, mv)], eps)


def i2_action(B, eps=EPS):
    from fractions import Fraction
    inner = _eps_compose([lambda mv: int_plus(1, B, mv),
                          lambda mv: int_plus(2, B, mv)], eps)
    half = QC(Fraction(-1, 2))
    return lambda mv: half * inner(mv)


def e2bar_action(eps=EPS):
    return _eps_compose([lambda mv: ext_minus(1, mv), lambda mv: ext_minus(2, mv)], eps)


def i2bar_action(B, eps=EPS):
    from fractions import Fraction
    inner = _eps_compose([lambda mv: int_minus(1, B, mv),
                          lambda mv: int_minus(2, B, mv)], eps)
    half = QC(Fraction(-1, 2))
    return lambda mv: half * inner(mv)


def build_ext_plus(a):
    return EndoW.from_action(lambda mv: ext_plus(a, mv))


def build_ext_minus(a):
    return EndoW.from_action(lambda mv: ext_minus(a, mv))


def build_int_plus(a, B):
    return EndoW.from_action(lambda mv: int_plus(a, B, mv))


def build_int_minus(a, B):
    return EndoW.from_action(lambda mv: int_minus(a, B, mv))


def build_d(a, B):
    """d_{tau^a} = (e_{tau^a} (x) Id) + (Id (x) i_{tau^a})."""
    return EndoW.from_action(d_action(a, B))


def build_dbar(a, B):
    """dbar_{taubar^a} = (Id (x) e_{taubar^a}) + (i_{taubar^a} (x) Id)."""
    return EndoW.from_action(dbar_action(a, B))


def build_q(a, B):
    return EndoW.from_action(q_action(a, B))


def build_qbar(a, B):
    return EndoW.from_action(qbar_action(a, B))


def build_d2(B, eps=EPS):
    """Composed second-order operator eps_{ab} d_a d_b (ledger L7)."""
    return EndoW.from_action(d2_action(B, eps))


def build_dbar2(B, eps=EPS):
    return EndoW.from_action(dbar2_action(B, eps))


def build_e2(eps=EPS):
    """e^2 = eps_{ab} e_a e_b, which maps scalars to eps_{ab} tau^a ^ tau^b."""
    return EndoW.from_action(e2_action(eps))


def build_i2(B, eps=EPS):
    """i^2 = -(1/2) eps_{ab} i_a i_b; sends taubar^1^taubar^2 to det-like pairings."""
    return EndoW.from_action(i2_action(B, eps))


def build_e2bar(eps=EPS):
    return EndoW.from_action(e2bar_action(eps))


def build_i2bar(B, eps=EPS):
    return EndoW.from_action(i2bar_action(B, eps))


def build_d2_factorized(B, eps=EPS):
    """The commonly quoted factorized form (e^2 (x) Id) + (Id (x) i^2).

    NOT equal to build_d2 on all of W (the composed operator carries
    e_a (x) i_b cross terms the factorized form lacks); kept for the
    route-comparison suite.  See ledger L7.
    """
    return build_e2(eps) + build_i2(B, eps)


def build_dbar2_factorized(B, eps=EPS):
    return build_e2bar(eps) + build_i2bar(B, eps)


# -- chiral kernel and conjugation ----------------------------------------

def chiral_kernel(B):
    """Basis of Ker dbar_1 and dbar_2, ordered as (phi, psi1, psi2, F) family.

    Closed form (validated against the exact null space): with b = B[a][b],

      X_phi  = -det(B) * 1
               + b22 t1(x)b1 - b21 t1(x)b2 - b12 t2(x)b1 + b11 t2(x)b2
               + (t1^t2)(x)(b1^b2)
      X_psi1 = b12 b1 - b11 b2 + t1(x)(b1^b2)
      X_psi2 = b22 b1 - b21 b2 + t2(x)(b1^b2)
      X_F    = b1^b2

    The scalar and middle coefficients of X_phi differ in sign from the
    commonly quoted display form; that variant is not annihilated by the
    Koszul-correct dbar operators (see chiral_kernel_display_form).
    """
    b11, b12, b21, b22 = B[1, 1], B[1, 2], B[2, 1], B[2, 2]
    top = mono_mask((1, 2), (1, 2))
    x_phi = Multivector({
        0: -B.det(),
        mono_mask((1,), (1,)): b22,
        mono_mask((1,), (2,)): -b21,
        mono_mask((2,), (1,)): -b12,
        mono_mask((2,), (2,)): b11,
        top: coerce(1),
    })
    x_psi1 = Multivector({
        mono_mask((), (1,)): b12,
        mono_mask((), (2,)): -b11,
        mono_mask((1,), (1, 2)): coerce(1),
    })
    x_psi2 = Multivector({
        mono_mask((), (1,)): b22,
        mono_mask((), (2,)): -b21,
        mono_mask((2,), (1, 2)): coerce(1),
    })
    x_f = Multivector({mono_mask((), (1, 2)): coerce(1)})
    return [x_phi, x_psi1, x_psi2, x_f]


def chiral_kernel_display_form(B):
    """The commonly quoted closed-form variant (positive scalar part,
    negated middle coefficients); kept for the comparison suite -- it is NOT
    annihilated by the dbar operators, unlike chiral_kernel."""
    b11, b12, b21, b22 = B[1, 1], B[1, 2], B[2, 1], B[2, 2]
    top = mono_mask((1, 2), (1, 2))
    x_phi = Multivector({
        0: B.det(),
        mono_mask((1,), (1,)): -b22,
        mono_mask((1,), (2,)): b21,
        mono_mask((2,), (1,)): b12,
        mono_mask((2,), (2,)): -b11,
        top: coerce(1),
    })
    x_psi1 = Multivector({
        mono_mask((), (1,)): b12,
        mono_mask((), (2,)): -b11,
        mono_mask((1,), (1, 2)): coerce(1),
    })
    x_psi2 = Multivector({
        mono_mask((), (1,)): b22,
        mono_mask((), (2,)): -b21,
        mono_mask((2,), (1, 2)): coerce(1),
    })
    x_f = Multivector({mono_mask((), (1, 2)): coerce(1)})
    return [x_phi, x_psi1, x_psi2, x_f]


def chiral_kernel_nullspace(B, tol=0.0):
    """Null space of the stacked dbar operators by Gaussian elimination."""
    d1 = build_dbar(1, B)
    d2 = build_dbar(2, B)
    stacked = d1.mat + d2.mat
    return [Multivector.from_vector(v) for v in linalg.null_space(stacked, tol)]


def conjugate_w(mv):
    """Antilinear involution on W: swap plus and minus index sets, conjugate
    coefficients, all signs +1 (the momentum-space conjugate display)."""
    out = {}
    for mask, c in mv.coeffs.items():
        nm = mono_mask(minus_set(mask), plus_set(mask))
        out[nm] = conj(c)
    return Multivector(out)
