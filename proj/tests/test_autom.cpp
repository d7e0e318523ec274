#include "doctest.h"
#include "support.hpp"

using namespace darboux;
using testsupport::c;
using testsupport::Gen;
using testsupport::reference_sigma;
using testsupport::zeta;

TEST_SUITE("autom") {
    const auto ctx = testsupport::xyzt();
    const CDerivation d = lift<Cyc8>(reference_derivation());

    TEST_CASE("applying automorphisms") {
        CHECK(apply_auto(reference_sigma(), c("t^2", ctx)) == c("z8^2*t^2", ctx));
        const CPoly f = c("x*y - (2 + z8)*z^3*t + 1/3", ctx);
        CHECK(apply_auto(DiagonalAutomorphism::identity(4), f) == f);
        CHECK(apply_auto(reference_sigma().pow(8), f) == f);
        CHECK(reference_sigma().pow(8).is_identity());
        CHECK_FALSE(reference_sigma().pow(4).is_identity());
        CHECK_THROWS_AS(DiagonalAutomorphism({Cyc8(1), Cyc8(0)}), PreconditionError);
        CHECK_THROWS_AS(apply_auto(DiagonalAutomorphism::identity(2), f), ContextError);
    }

    TEST_CASE("inverse") {
        const DiagonalAutomorphism inv = inverse(reference_sigma());
        CHECK(inv.scalars() ==
              std::vector<Cyc8>{Cyc8::zeta_pow(5), Cyc8::zeta_pow(3), Cyc8::zeta_pow(5), Cyc8::zeta_pow(7)});
        CHECK(inverse(DiagonalAutomorphism::identity(4)).is_identity());
        CHECK(inverse(inv) == reference_sigma());
        CHECK(reference_sigma().compose(inv).is_identity());
        Gen g(0xa070);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Cyc8> s;
            for (int i = 0; i < 4; ++i) s.push_back(g.nonzero_cyc(3));
            const DiagonalAutomorphism a(s);
            REQUIRE(a.compose(inverse(a)).is_identity());
            REQUIRE(inverse(inverse(a)) == a);
        }
    }

    TEST_CASE("weights give the reference automorphism") {
        CHECK(DiagonalAutomorphism::from_weights(WeightVector({3, 5, 3, 1}, 8)) == reference_sigma());
        CHECK_THROWS_AS(DiagonalAutomorphism::from_weights(WeightVector({1, 2, 4}, 7)), PreconditionError);
    }

    TEST_CASE("conjugation scales the derivation by zeta") {
        const CDerivation conj = conjugate(reference_sigma(), d);
        CHECK(conj == d.scaled(zeta()));
        CHECK(conj.image(0) == c("z8*t^2", ctx));
        CHECK(conj.image(1) == c("z8*z*t", ctx));
        CHECK(conj.image(2) == c("z8*y^2", ctx));
        CHECK(conj.image(3) == c("z8*x*y", ctx));
        CHECK(conjugate(DiagonalAutomorphism::identity(4), d) == d);
        for (long i = 0; i <= 7; ++i) {
            CAPTURE(i);
            CHECK(conjugate(reference_sigma().pow(i), d) == d.scaled(Cyc8::zeta_pow(i)));
        }
        // Iterating the conjugation i times agrees with conjugating by s^i.
        CDerivation it = d;
        for (long i = 1; i <= 7; ++i) {
            it = conjugate(reference_sigma(), it);
            CHECK(it == d.scaled(Cyc8::zeta_pow(i)));
        }
    }

    TEST_CASE("orbit product") {
        CHECK(orbit_product(reference_sigma(), c("x", ctx), 8) == c("-x^8", ctx));
        CHECK(orbit_product(reference_sigma(), c("1", ctx), 8) == c("1", ctx));
        CHECK_THROWS_AS(orbit_product(reference_sigma(), c("x", ctx), 4), PreconditionError);
        CHECK_THROWS_AS(orbit_product(reference_sigma(), c("x", ctx), 0), PreconditionError);
        Gen g(0x0b17);
        for (int trial = 0; trial < 30; ++trial) {
            const CPoly f = g.poly<Cyc8>(ctx, 3, 2);
            if (f.is_zero()) continue;
            const CPoly fbar = orbit_product(reference_sigma(), f, 8);
            REQUIRE(fbar.total_degree() == Degree(8 * f.total_degree().value()));
            // The orbit product is invariant under s.
            REQUIRE(apply_auto(reference_sigma(), fbar) == fbar);
        }
    }

    TEST_CASE("averaged cofactor") {
        CHECK(averaged_cofactor(reference_sigma(), zeta(), c("x", ctx), 8).is_zero());
        CHECK(averaged_cofactor(DiagonalAutomorphism::identity(4), Cyc8(1), c("x", ctx), 8) == c("8*x", ctx));
        CHECK(averaged_cofactor(reference_sigma(), zeta(), c("t", ctx), 8).is_zero());
        for (const char* v : {"x", "y", "z", "t"}) CHECK(averaged_cofactor(reference_sigma(), zeta(), c(v, ctx), 8).is_zero());
        // The four per-variable sums are those of z^4, z^6, z^4 and z^2.
        CHECK(root_of_unity_sum(4).is_zero());
        CHECK(root_of_unity_sum(6).is_zero());
        CHECK(root_of_unity_sum(2).is_zero());
    }

    TEST_CASE("generic cofactor") {
        CHECK(generic_cofactor_vanishes(reference_sigma(), zeta(), 8, ctx));
        CHECK_FALSE(generic_cofactor_vanishes(DiagonalAutomorphism::identity(4), Cyc8(1), 1, ctx));
        const DiagonalAutomorphism modified = DiagonalAutomorphism::from_weights(WeightVector({7, 5, 3, 1}, 8));
        CHECK_FALSE(generic_cofactor_vanishes(modified, zeta(), 8, ctx));
        const CPoly avg = averaged_generic_cofactor(modified, zeta(), 8, ctx);
        const auto wide = avg.context();
        REQUIRE(wide->arity() == 8);
        CHECK(wide->name(4) == "k1");
        CHECK(avg == c("8*k1*x", wide));
        // A context that already uses k1 gets fresh names.
        const auto clash = VarContext::make({"k1", "y"});
        const auto avg2 = averaged_generic_cofactor(DiagonalAutomorphism::identity(2), Cyc8(1), 1, clash);
        CHECK(avg2.context()->find("k1") == 0);
        CHECK(avg2.context()->arity() == 4);
    }

    TEST_CASE("product rule on the symmetric control") {
        const auto c2 = testsupport::xy();
        const CDerivation euler = lift<Cyc8>(testsupport::qder(c2, {"x", "y"}));
        const DiagonalAutomorphism s({zeta(), zeta()});
        const ProductRuleResult r =
            product_rule_check(euler, s, Cyc8(1), DarbouxPair<Cyc8>(c("x", c2), c("1", c2)), 8);
        CHECK(r.holds);
        CHECK(r.orbit == c("-x^8", c2));
        CHECK(r.cofactor == c("8", c2));
        CHECK(euler.apply(r.orbit) == r.cofactor * r.orbit);

        const auto one = VarContext::make({"x"});
        const CDerivation e1 = lift<Cyc8>(testsupport::qder(one, {"x"}));
        const auto r1 = product_rule_check(e1, DiagonalAutomorphism::identity(1), Cyc8(1),
                                           DarbouxPair<Cyc8>(c("x", one), c("1", one)), 1);
        CHECK(r1.holds);
        CHECK(r1.orbit == c("x", one));

        CHECK_THROWS_AS(DarbouxPair<Cyc8>(c("1", c2), c("0", c2)), PreconditionError);
        CHECK_THROWS_AS(product_rule_check(euler, s, zeta(), DarbouxPair<Cyc8>(c("x", c2), c("1", c2)), 8),
                        ConjugationMismatch);
        CHECK_THROWS_AS(product_rule_check(euler, s, Cyc8(1), DarbouxPair<Cyc8>(c("x", c2), c("2", c2)), 8),
                        NotDarbouxPair);
    }

    TEST_CASE("product rule for the reference symmetry") {
        // x*z - y*t is a constant of d; its orbit under sigma is a constant too.
        const auto r = product_rule_check(d, reference_sigma(), zeta(), DarbouxPair<Cyc8>(c("x*z - y*t", ctx), c("0", ctx)), 8);
        CHECK(r.holds);
        CHECK(r.cofactor.is_zero());
        CHECK(d.apply(r.orbit).is_zero());
    }
}
