import pytest

from knotcover.knotmodel import (
    Genus2,
    b_matrix,
    char_poly_gamma,
    char_poly_gamma_minus_identity,
    gamma_matrix,
)
from knotcover.sequences import (
    InvariantViolation,
    exact_div,
    genus1_alpha_beta,
    recurrence_coeffs,
    seq_values,
    st_sequences,
)
from knotcover.zmat import mat_pow

GRID = [(a, b) for a in range(-3, 4) if a for b in range(-3, 4)]


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


class TestRecurrenceCoeffs:
    def test_6_2(self):
        # P0 * P1 expanded by hand: (x^4 - 1)^2 - (x - 2x^3)^2
        assert recurrence_coeffs(-1, 2).as_tuple() == (1, -1, 2, -4, 1)

    def test_degenerate(self):
        assert recurrence_coeffs(0, 0).as_tuple() == (0, 0, 1, -2, 1)

    @pytest.mark.parametrize("a,b", GRID + [(0, 0), (5, -7)])
    def test_product_of_char_polys(self, a, b):
        prod = poly_mul(char_poly_gamma(a, b), char_poly_gamma_minus_identity(a, b))
        assert prod[1::2] == [0, 0, 0, 0]
        assert tuple(prod[0::2]) == recurrence_coeffs(a, b).as_tuple()

    @pytest.mark.parametrize("a,b", GRID)
    def test_annihilates_b_matrix(self, a, b):
        c = recurrence_coeffs(a, b).as_tuple()
        mats = [b_matrix(Genus2(a, b), m) for m in range(0, 23)]
        for n in range(0, 7):
            combo = mats[n].scale(c[0])
            for i in range(1, 5):
                combo = combo + mats[n + 2 * i].scale(c[i])
            assert all(x == 0 for x in combo.entries)


class TestStSequences:
    def test_6_3_n3(self):
        assert st_sequences(1, -2, 3) == (-1, -3)

    def test_7_7_n5(self):
        assert st_sequences(1, -4, 5) == (2, -10)

    def test_6_2_n4(self):
        assert st_sequences(-1, 2, 4) == (4, -2)

    def test_negative_n(self):
        with pytest.raises(ValueError):
            st_sequences(1, 1, -1)

    @pytest.mark.parametrize("a,b", GRID)
    def test_parity_split_recurrence(self, a, b):
        rc = recurrence_coeffs(a, b)
        for n in range(0, 25):
            assert rc.annihilates(lambda m: st_sequences(a, b, m)[0], n)
            assert rc.annihilates(lambda m: st_sequences(a, b, m)[1], n)

    @pytest.mark.parametrize("a,b", GRID)
    def test_odd_s_is_trace_of_power(self, a, b):
        # for odd n, s(n) is the power sum of the eigenvalues of Gamma
        g = gamma_matrix(Genus2(a, b))
        for n in range(1, 22, 2):
            p = mat_pow(g, n)
            assert st_sequences(a, b, n)[0] == sum(p[i, i] for i in range(4))


class TestSeqValues:
    def test_6_2_n4(self):
        sv = seq_values(-1, 2, 4)
        assert (sv.zeta, sv.mu, sv.k) == (9, -1, -11)

    def test_zero_level(self):
        sv = seq_values(1, -2, 0)
        assert (sv.s, sv.t, sv.zeta, sv.mu) == (0, 0, 0, 0)

    def test_mu_only_for_even(self):
        assert seq_values(1, -2, 3).mu is None

    @pytest.mark.parametrize("a,b", GRID)
    def test_zeta_seeds(self, a, b):
        assert seq_values(a, b, 2).zeta == 1
        assert seq_values(a, b, 4).zeta == 1 - 8 * a
        assert seq_values(a, b, 6).zeta == 1 - 19 * a + 36 * a * a + 12 * a * b

    @pytest.mark.parametrize("a,b", GRID + [(1, -1)])
    def test_integrality_all_levels(self, a, b):
        for n in range(0, 25):
            seq_values(a, b, n)  # raises InvariantViolation on a nonzero remainder

    def test_exact_div_raises(self):
        with pytest.raises(InvariantViolation):
            exact_div(7, 2, "test")


class TestGenus1:
    def test_6_1_alpha(self):
        # alpha(n) = 2^n + (-1)^n for b = -2
        assert genus1_alpha_beta(-2, 5)[0] == 31

    def test_6_1_beta(self):
        assert genus1_alpha_beta(-2, 4)[1] == 5

    @pytest.mark.parametrize("b", [-4, -1, 1, 3, 17])
    def test_seeds(self, b):
        assert genus1_alpha_beta(b, 0) == (2, 0)
        assert genus1_alpha_beta(b, 1) == (1, 1)

    @pytest.mark.parametrize("b", [b for b in range(-4, 5) if b])
    def test_norm_identity(self, b):
        for n in range(0, 21):
            alpha, beta = genus1_alpha_beta(b, n)
            assert alpha * alpha - (1 - 4 * b) * beta * beta == 4 * b**n

    def test_6_1_closed_forms(self):
        for n in range(0, 21):
            alpha, beta = genus1_alpha_beta(-2, n)
            assert alpha == 2**n + (-1) ** n
            assert 3 * beta == 2**n - (-1) ** n
