import math

import pytest
from sympy import factorint

import idealdensity as idd
from idealdensity.errors import (
    DegenerateM,
    NotFundamental,
    NotNegative,
    NotPrime,
    NotSquarefree,
    UnsupportedField,
)


class TestFieldConstruction:
    def test_rational_field(self, Q):
        assert Q.degree == 1
        assert Q.discriminant == 1
        assert Q.is_rational

    def test_gaussian_field(self, Qi):
        # -1 is not 1 mod 4, so D = 4m
        assert Qi.discriminant == -4
        assert Qi.unit_count == 4

    def test_eisenstein_field(self, Q3):
        # -3 = 1 mod 4, so D = m
        assert Q3.discriminant == -3
        assert Q3.unit_count == 6

    def test_real_quadratic(self):
        K = idd.make_quadratic_field(5)
        assert K.discriminant == 5
        assert K.unit_count is None

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree):
            idd.make_quadratic_field(12)

    @pytest.mark.parametrize("m", [0, 1])
    def test_degenerate(self, m):
        with pytest.raises(DegenerateM):
            idd.make_quadratic_field(m)

    def test_parse(self, Q, Qi):
        assert idd.parse_field("Q") == Q
        assert idd.parse_field("Q(sqrt -1)") == Qi
        assert idd.parse_field("Q(sqrt-1)") == Qi
        with pytest.raises(UnsupportedField):
            idd.parse_field("Q[i]")


class TestKronecker:
    def test_values(self):
        # oracle: x^2+1 = (x-2)(x+2) mod 5, irreducible mod 3
        assert idd.kronecker_symbol(-4, 5) == 1
        assert idd.kronecker_symbol(-4, 3) == -1
        assert idd.kronecker_symbol(-4, 1) == 1
        assert idd.kronecker_symbol(-4, 2) == 0

    @pytest.mark.parametrize("D", [-4, -3, -20, 5, 8, 13])
    def test_completely_multiplicative(self, D):
        at_prime = {}
        for n in range(1, 2001):
            expected = 1
            for p, e in factorint(n).items():
                if p not in at_prime:
                    at_prime[p] = idd.kronecker_symbol(D, p)
                expected *= at_prime[p] ** e
            assert idd.kronecker_symbol(D, n) == expected

    @pytest.mark.parametrize("D", [-4, -3, -20, 5, 8])
    def test_periodic_mod_abs_D(self, D):
        for n in range(1, 3 * abs(D)):
            assert idd.kronecker_symbol(D, n) == idd.kronecker_symbol(D, n + abs(D))


class TestSplitting:
    def test_gaussian_split(self, Qi):
        above = idd.split_prime(Qi, 5)
        assert [pr.norm for pr, _ in above] == [5, 5]
        assert [pr.conjugate_index for pr, _ in above] == [0, 1]

    def test_gaussian_inert(self, Qi):
        ((pr, e),) = idd.split_prime(Qi, 3)
        assert pr.norm == 9 and pr.f == 2 and e == 1

    def test_gaussian_ramified(self, Qi):
        ((pr, e),) = idd.split_prime(Qi, 2)
        assert pr.norm == 2 and pr.e == 2 and e == 2

    def test_rational(self, Q):
        ((pr, e),) = idd.split_prime(Q, 7)
        assert pr.norm == 7 and e == 1

    def test_not_prime(self, Qi):
        with pytest.raises(NotPrime):
            idd.split_prime(Qi, 6)

    @pytest.mark.parametrize("m", [-1, -3, -5, 2, 5, 13])
    def test_efg_identity(self, m):
        K = idd.make_quadratic_field(m)
        for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]:
            above = idd.split_prime(K, p)
            assert sum(pr.e * pr.f for pr, _ in above) == K.degree
            # product of the factors has norm p^d
            norm = 1
            for pr, e in above:
                norm *= pr.norm ** e
            assert norm == p ** K.degree

    @pytest.mark.parametrize("m", [-1, -3, -5, 2, 5, 13])
    def test_split_iff_quadratic_residue(self, m):
        # direct root search oracle for odd unramified p
        from sympy import isprime
        K = idd.make_quadratic_field(m)
        for p in range(3, 200):
            if not isprime(p) or K.discriminant % p == 0:
                continue
            has_root = any((r * r - m) % p == 0 for r in range(p))
            split = len(idd.split_prime(K, p)) == 2
            assert split == has_root


class TestPrimeNumbering:
    def test_gaussian_small(self, Qi):
        primes = idd.primes_up_to_norm(Qi, 10)
        assert [pr.norm for pr in primes] == [2, 5, 5, 9]

    def test_empty(self, Qi):
        assert idd.primes_up_to_norm(Qi, 1) == ()

    def test_rational(self, Q):
        assert [pr.norm for pr in idd.primes_up_to_norm(Q, 10)] == [2, 3, 5, 7]

    @pytest.mark.parametrize("m", [-1, -3, 5])
    def test_prefix_consistency(self, m):
        K = idd.make_quadratic_field(m)
        big = idd.primes_up_to_norm(K, 500)
        small = idd.primes_up_to_norm(K, 80)
        assert tuple(pr for pr in big if pr.norm <= 80) == small

    def test_sorted_by_norm(self, Qi):
        primes = idd.primes_up_to_norm(Qi, 1000)
        norms = [pr.norm for pr in primes]
        assert norms == sorted(norms)


class TestClassNumber:
    @pytest.mark.parametrize("D,h", [(-3, 1), (-4, 1), (-8, 1), (-20, 2),
                                     (-23, 3), (-47, 5), (-163, 1)])
    def test_known_values(self, D, h):
        assert idd.class_number_imag_quadratic(D) == h

    def test_not_fundamental(self):
        with pytest.raises(NotFundamental):
            idd.class_number_imag_quadratic(-12)

    def test_not_negative(self):
        with pytest.raises(NotNegative):
            idd.class_number_imag_quadratic(5)


class TestAnalyticResidue:
    def test_gaussian(self, Qi):
        assert idd.analytic_residue_imag_quadratic(Qi) == pytest.approx(math.pi / 4)

    def test_eisenstein(self, Q3):
        assert idd.analytic_residue_imag_quadratic(Q3) == pytest.approx(
            2 * math.pi / (6 * math.sqrt(3)), abs=1e-6)
        assert idd.analytic_residue_imag_quadratic(Q3) == pytest.approx(0.604600, abs=1e-6)

    def test_class_number_two(self):
        K = idd.make_quadratic_field(-5)
        assert idd.analytic_residue_imag_quadratic(K) == pytest.approx(
            2 * math.pi * 2 / (2 * math.sqrt(20)), abs=1e-6)
        assert idd.analytic_residue_imag_quadratic(K) == pytest.approx(1.404963, abs=1e-6)

    def test_unsupported(self, Q):
        with pytest.raises(UnsupportedField):
            idd.analytic_residue_imag_quadratic(Q)
        with pytest.raises(UnsupportedField):
            idd.analytic_residue_imag_quadratic(idd.make_quadratic_field(5))
