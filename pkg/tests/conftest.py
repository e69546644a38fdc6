import math
import random
from fractions import Fraction

import pytest

from superkit.exactnum import QC
from superkit.grassmann import MONOMIALS, PairingMatrix
from superkit.superfourier import SuperFunction, single_wave


@pytest.fixture
def rng():
    return random.Random(20260808)


def rand_rational(rng, span=5, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_qc(rng, span=5, den=4):
    return QC(rand_rational(rng, span, den), rand_rational(rng, span, den))


def rand_pairing(rng):
    while True:
        B = PairingMatrix([[rand_qc(rng) for _ in range(2)] for _ in range(2)])
        if B.is_invertible():
            return B


def rand_momentum(rng, span=6, den=4):
    return tuple(rand_rational(rng, span, den) for _ in range(4))


def rand_onshell_float(rng, m):
    k = [rng.uniform(-2, 2) for _ in range(3)]
    return (math.sqrt(m * m + sum(x * x for x in k)), *k)


def rand_superfunction(rng, nterms=1, pool=4):
    momenta = [rand_momentum(rng) for _ in range(pool)]
    f = SuperFunction({}, "position")
    for mask in MONOMIALS:
        for _ in range(nterms):
            f = f + single_wave(mask, rand_qc(rng), rng.choice(momenta))
    return f


# exact momenta on the forward mass-1 shell
ONSHELL_EXACT = [
    (Fraction(2), Fraction(1), Fraction(1), Fraction(1)),
    (Fraction(5, 4), Fraction(3, 4), Fraction(0), Fraction(0)),
    (Fraction(5, 3), Fraction(0), Fraction(4, 3), Fraction(0)),
    (Fraction(13, 12), Fraction(0), Fraction(0), Fraction(5, 12)),
    (Fraction(3), Fraction(2), Fraction(2), Fraction(0)),
]


def rand_sl2(rng):
    from superkit.spin_geometry import SpinElement, m2_det
    while True:
        m = [[complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)]
             for _ in range(2)]
        d = m2_det(m)
        if abs(d) > 0.1:
            s = d ** -0.5
            return SpinElement([[x * s for x in row] for row in m])
