#include <doctest.h>

#include "eiscoc/arith.hpp"
#include "helpers.hpp"

using namespace eiscoc;
using testing_util::q;
using testing_util::rats;

TEST_SUITE("arith")
{
    TEST_CASE("cyclotomic polynomials")
    {
        // values from tests/oracles/arith_oracle.py
        CHECK(cyclotomic_polynomial(5) == std::vector<long long>{1, 1, 1, 1, 1});
        CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
        CHECK(cyclotomic_polynomial(15) == std::vector<long long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
        CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    }

    TEST_CASE("units 1 - zeta^a")
    {
        auto F4 = cyc_field(4);
        CHECK(cyc_unit(F4, 2) == CycElt::constant(F4, Rat(2)));
        CHECK_THROWS_AS(cyc_unit(F4, 4), Error);

        auto F5 = cyc_field(5);
        CHECK(cyc_unit(F5, 1).coeffs() == rats({"1", "-1", "0", "0"}));
        CHECK(cyc_unit_inverse(F5, 1).coeffs() == rats({"4/5", "3/5", "2/5", "1/5"}));
        CHECK((cyc_unit_inverse(F5, 1) * cyc_unit(F5, 1)).is_one());

        auto F12 = cyc_field(12);
        CHECK(cyc_unit_inverse(F12, 1).coeffs() == rats({"0", "0", "1", "1"}));
    }

    TEST_CASE("field laws and inverses")
    {
        for (int N : {3, 5, 7, 8, 9, 12, 15}) {
            auto F = cyc_field(N);
            for (int a = 1; a < N; ++a) {
                CycElt x = cyc_unit(F, a) * CycElt::zeta_pow(F, 2) + CycElt::constant(F, q(1, 3));
                if (x.is_zero()) continue;
                CHECK((x * x.inverse()).is_one());
            }
            CycElt z = CycElt::zeta_pow(F, 1);
            CHECK(z.pow(N).is_one());
            CHECK(CycElt(F).is_zero());
            CHECK_THROWS_AS(CycElt(F).inverse(), Error);
        }
    }

    TEST_CASE("galois action")
    {
        auto F = cyc_field(5);
        CycElt z = CycElt::zeta_pow(F, 1);
        CHECK(galois_apply(F, 1, z) == z);
        CHECK(galois_apply(F, 2, z) == CycElt::zeta_pow(F, 2));
        auto F12 = cyc_field(12);
        for (int j : {1, 5, 7, 11})
            for (int a = 1; a < 12; ++a) CHECK(galois_apply(F12, j, cyc_unit(F12, a)) == cyc_unit(F12, (j * a) % 12));
        CHECK_THROWS_AS(galois_apply(F12, 2, cyc_unit(F12, 1)), Error);
    }

    TEST_CASE("steinberg unit identity")
    {
        CHECK(steinberg_unit_identity(cyc_field(5), 1, 2));
        CHECK(steinberg_unit_identity(cyc_field(7), 3, 3));
        CHECK(steinberg_unit_identity(cyc_field(12), 5, 4));
        CHECK_THROWS_AS(steinberg_unit_identity(cyc_field(4), 2, 2), Error);
    }

    TEST_CASE("residue fields")
    {
        // factorisations from tests/oracles/arith_oracle.py
        ResidueField R55(5, 5);
        CHECK(R55.degree() == 1);
        CHECK(R55.modulus() == std::vector<long long>{4, 1});
        CHECK(R55.str(R55.from_int(7)) == R55.str(R55.from_int(2)));
        CHECK(R55.reduce(CycElt::constant(cyc_field(5), Rat(7))) == R55.from_int(2));

        ResidueField R52(5, 2);
        CHECK(R52.degree() == 4);
        CHECK(R52.size() == 16);

        ResidueField R125(12, 5);
        CHECK(R125.modulus() == std::vector<long long>{4, 2, 1});
        ResidueField R72(7, 2);
        CHECK(R72.modulus() == std::vector<long long>{1, 0, 1, 1});

        // 1/(1 - zeta_5) is not integral at the prime over 5
        CHECK_THROWS_AS(R55.reduce(cyc_unit_inverse(cyc_field(5), 1)), Error);
        auto e = R52.reduce(cyc_unit(cyc_field(5), 1));
        CHECK(R52.is_one(R52.mul(e, R52.inv(e))));
        CHECK(R52.is_one(R52.pow(e, R52.size() - 1)));
    }

    TEST_CASE("truncated q-series")
    {
        auto F = cyc_field(3);
        auto one = CycElt::constant(F, Rat(1));
        FracQSeries a(F, 1, 3), b(F, 1, 3);
        a.add_term(0, one);
        a.add_term(1, -one);
        b.add_term(0, one);
        b.add_term(1, one);
        b.add_term(2, one);
        CHECK((a * b).equal_to_prec(FracQSeries::one(F, 1, 3)));
        CHECK(a.inverse().equal_to_prec(b));

        FracQSeries z = FracQSeries::monomial(F, 3, FracQSeries::kExact, 1, CycElt::zeta_pow(F, 1));
        FracQSeries z2 = z * z;
        CHECK(z2.lead_exponent() == 2);
        CHECK(z2.lead_coeff() == CycElt::zeta_pow(F, 2));
        CHECK_THROWS_AS(FracQSeries(F, 1, 3).inverse(), Error);
    }

    TEST_CASE("small number theory")
    {
        CHECK(inv_mod(3, 5) == 2);
        CHECK_THROWS_AS(inv_mod(2, 4), Error);
        CHECK(euler_phi(12) == 4);
        CHECK(mult_order(2, 7) == 3);
        CHECK(is_prime(11));
        CHECK_FALSE(is_prime(9));
        long long x, y;
        CHECK(ext_gcd(2, 3, x, y) == 1);
        CHECK(2 * x + 3 * y == 1);
    }
}
