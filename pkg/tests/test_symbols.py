import math
from fractions import Fraction
from itertools import product

import pytest

from conftest import ONSHELL_EXACT, rand_momentum, rand_onshell_float

from superkit import linalg
from superkit.exactnum import as_complex, coerce
from superkit.grassmann import (Multivector, build_d2, build_dbar2, build_i2,
                                mono_mask)
from superkit.spin_geometry import gamma_pair, minkowski_norm2
from superkit.symbols import (DegenerateOrder, dirac_kernel_dim,
                              dirac_symbol, divergence_kernel_dim, divergence_symbol,
                              gamma_matrix, multiplicity, propagate,
                              superspin0_constraints, sym_tensor_dim, zeta_d,
                              zeta_d2, zeta_dbar, zeta_dbar2, zeta_i2, zeta_int)

B12 = mono_mask((), (1, 2))
F2 = Fraction


def test_zeta_int_at_rest_equals_rest_operator():
    p = (1, 0, 0, 0)
    from superkit.grassmann import PairingMatrix, build_int_plus
    assert zeta_int(p, "plus", 1) == build_int_plus(1, PairingMatrix.identity())


def test_zeta_int_table_entry():
    # at p = e^2 the (1,1) pairing vanishes
    out = zeta_int((0, 0, 1, 0), "plus", 1)(Multivector.basis(mono_mask((), (1,))))
    assert out.is_zero()
    out2 = zeta_int((0, 0, 1, 0), "plus", 1)(Multivector.basis(mono_mask((), (2,))))
    assert out2 == Multivector.scalar(1)


def test_zeta_i2_top_gives_norm(rng):
    for _ in range(10):
        p = rand_momentum(rng)
        out = zeta_i2(p)(Multivector.basis(B12))
        assert out == Multivector.scalar(minkowski_norm2(p))


def test_zeta_d2_display_on_chiral_element(rng):
    """zeta_d2 applied to the chiral family: the top-slot coefficient of the
    output equals the F parameter scaled by 2 and the tau^a slots carry
    -4 |p|^2 psi_a (the composed operator's exact bookkeeping)."""
    from superkit.grassmann import chiral_kernel
    p = rand_momentum(rng)
    B = gamma_pair(p)
    x_phi, x_psi1, x_psi2, x_f = chiral_kernel(B)
    out = zeta_d2(p)(x_f)
    assert out[mono_mask((1, 2), (1, 2))] == 2
    out_psi = zeta_d2(p)(x_psi1)
    assert out_psi[mono_mask((1,), ())] == -4 * coerce(minkowski_norm2(p))


def test_propagation_route_equivalence(rng):
    for _ in range(30):
        m = rng.uniform(0.3, 4.0)
        p = rand_onshell_float(rng, m)
        rest = (m, 0.0, 0.0, 0.0)
        for closed, restop in ((zeta_d2(p), build_d2(gamma_pair(rest))),
                               (zeta_dbar2(p), build_dbar2(gamma_pair(rest))),
                               (zeta_i2(p), build_i2(gamma_pair(rest)))):
            prop = propagate(restop, p, m)
            assert (closed - prop).max_abs() <= 1e-9 * max(1.0, m * m)


def test_propagate_at_rest_is_identity_map():
    u = build_d2(gamma_pair((2.0, 0.0, 0.0, 0.0)))
    assert (propagate(u, (2.0, 0.0, 0.0, 0.0), 2.0) - u).max_abs() < 1e-12


def test_zeta_equivariance_of_d2(rng):
    """zeta_{d^2}(h.p) = rho(h) zeta_{d^2}(p) rho(h)^-1 for random boosts."""
    from superkit.spin_geometry import act_on_momentum, spin_action_endo
    from conftest import rand_sl2
    for _ in range(10):
        h = rand_sl2(rng)
        p = tuple(rng.uniform(-2, 2) for _ in range(4))
        hp = act_on_momentum(h, p)
        rho = spin_action_endo(h)
        rho_inv = spin_action_endo(h.inverse())
        lhs = zeta_d2(hp)
        rhs = rho @ zeta_d2(p) @ rho_inv
        assert (lhs - rhs).max_abs() < 1e-7 * max(1.0, lhs.max_abs())


def test_gamma_matrix_squares_to_norm(rng):
    for _ in range(10):
        p = rand_momentum(rng)
        g = gamma_matrix(p)
        sq = linalg.mat_mul(g, g)
        n2 = coerce(minkowski_norm2(p))
        for i in range(4):
            for j in range(4):
                assert sq[i][j] == (n2 if i == j else 0)


def test_dirac_kernel_dims():
    assert dirac_kernel_dim((1, 0, 0, 0), 1) == 2
    for p in ONSHELL_EXACT:
        assert dirac_kernel_dim(p, 1) == 2
    assert dirac_kernel_dim((2, 0, 0, 0), 1) == 0  # |p|^2 = 4 m^2


def test_dirac_kernel_dims_float(rng):
    for _ in range(50):
        m = rng.uniform(0.3, 4.0)
        p = rand_onshell_float(rng, m)
        assert dirac_kernel_dim(p, m) == 2
        assert dirac_kernel_dim((2 * p[0], *p[1:]), m) == 0


def test_divergence_rest_trace_pairing():
    # alpha=beta=1/2 at rest: the map S+* (x) S-* -> C is m * trace pairing
    mat = divergence_symbol(F2(1, 2), F2(1, 2), (3, 0, 0, 0))
    assert len(mat) == 1 and len(mat[0]) == 4
    assert [as_complex(x) for x in mat[0]] == [3, 0, 0, 3]
    assert divergence_kernel_dim(F2(1, 2), F2(1, 2), (3, 0, 0, 0)) == 3


def test_divergence_kernel_dims(rng):
    for alpha, beta in ((F2(1, 2), F2(1, 2)), (1, F2(1, 2)), (1, 1),
                        (F2(3, 2), 1), (2, 1)):
        two_s = int(2 * (alpha + beta))
        for p in ONSHELL_EXACT[:2]:
            dim = divergence_kernel_dim(alpha, beta, p)
            assert dim == two_s + 1
            total = sym_tensor_dim(int(2 * alpha), int(2 * beta))
            rank = total - dim
            assert rank == int(2 * alpha) * int(2 * beta)


def test_divergence_polarization_oracle(rng):
    """Brute-force polarization oracle: embed a symmetric monomial as the
    average of its arrangement words, contract the first slot of each tensor
    factor with the pairing, re-collect symmetric monomials.  The result must
    be the derivative-form matrix divided by (2a)(2b)."""
    from math import comb
    for alpha, beta in ((F2(1, 2), F2(1, 2)), (1, F2(1, 2)), (1, 1), (2, F2(1, 2))):
        two_a, two_b = int(2 * alpha), int(2 * beta)
        p = rand_momentum(rng)
        B = gamma_pair(p)
        mat = divergence_symbol(alpha, beta, p)

        def words(two_s, k):
            return [w for w in product((1, 2), repeat=two_s) if w.count(1) == k]

        for k in range(two_a + 1):
            for l in range(two_b + 1):
                col = k * (two_b + 1) + l
                norm = Fraction(1, comb(two_a, k) * comb(two_b, l))
                oracle = {}
                for wa in words(two_a, k):
                    for wb in words(two_b, l):
                        c = B[wa[0], wb[0]] * norm
                        key = (wa[1:].count(1), wb[1:].count(1))
                        oracle[key] = oracle.get(key, coerce(0)) + c
                for nk in range(two_a):
                    for nl in range(two_b):
                        row = nk * two_b + nl
                        got = oracle.get((nk, nl), coerce(0))
                        want = mat[row][col] * Fraction(1, two_a * two_b)
                        assert got == want


def test_divergence_errors():
    with pytest.raises(DegenerateOrder):
        divergence_symbol(0, 1, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        divergence_symbol(0.3, 1, (1, 0, 0, 0))


def test_superspin0_factors(rng):
    for _ in range(10):
        p = rand_momentum(rng)
        m = F2(rng.randint(1, 3))
        rep = superspin0_constraints(p, m)
        n2 = coerce(minkowski_norm2(p))
        assert rep.bosonic_factor == n2 - coerce(m) * coerce(m)
        assert rep.fermionic_factor_paired == coerce(m) * coerce(m) - n2
        assert rep.fermionic_factor_pointwise == coerce(m) * coerce(m) + n2
        # N bar N = -det(B) Id exactly
        comp = rep.fermionic_comp
        assert comp[0][0] == -n2 and comp[1][1] == -n2
        assert comp[0][1] == 0 and comp[1][0] == 0


def test_superspin0_rest_frame_reduction():
    rep = superspin0_constraints((1, 0, 0, 0), 1)
    rf = rep.rest_frame_fermionic()
    assert rf[0][0] == 0 and rf[0][1] == 1
    assert rf[1][0] == -1 and rf[1][1] == 0


def test_superspin0_solution_dims():
    assert superspin0_constraints(ONSHELL_EXACT[0], 1).solution_dims_paired() == (2, 2)
    assert superspin0_constraints((3, 0, 0, 0), 1).solution_dims_paired() == (0, 0)


def test_multiplicity_ladder():
    assert multiplicity(1, F2(1, 2), F2(1, 2)) == 1
    assert multiplicity(0, F2(1, 2), F2(1, 2)) == 1
    assert multiplicity(2, F2(1, 2), F2(1, 2)) == 0
    assert multiplicity(3, 3, 0) == 1
    assert multiplicity(F2(1, 2), 1, F2(1, 2)) == 1
    assert multiplicity(1, 1, F2(1, 2)) == 0
    assert multiplicity(F2(7, 2), 2, F2(3, 2)) == 1
    assert multiplicity(F2(1, 2), 2, F2(3, 2)) == 1
    assert multiplicity(0, 2, F2(3, 2)) == 0


def test_dirac_symbol_propagation_route(rng):
    """gamma(p)/m - Id equals the boost-conjugated rest selector
    S(h_p) (gamma(m e^0)/m - Id) S(h_p)^-1 on Dirac space."""
    from superkit.spin_geometry import rest_boost
    from superkit.symbols import dirac_spin_matrix
    for _ in range(10):
        m = rng.uniform(0.4, 3.0)
        p = rand_onshell_float(rng, m)
        h = rest_boost(p, m)
        s = [[as_complex(x) for x in row] for row in dirac_spin_matrix(h)]
        s_inv = [[as_complex(x) for x in row]
                 for row in dirac_spin_matrix(h.inverse())]
        rest = [[as_complex(x) for x in row]
                for row in dirac_symbol((m, 0.0, 0.0, 0.0), m)]
        prop = linalg.mat_mul(linalg.mat_mul(s, rest), s_inv)
        closed = [[as_complex(x) for x in row] for row in dirac_symbol(p, m)]
        err = max(abs(prop[i][j] - closed[i][j]) for i in range(4) for j in range(4))
        assert err < 1e-9
