#include <catch2/catch_amalgamated.hpp>

#include "brauerkit/brauer_complete.hpp"

using namespace brauerkit;

namespace {

Poly P(uint64_t p, const std::string& s) { return Poly::parse(PrimeField(p), s); }
RationalFunction R(uint64_t p, const std::string& s) {
    return RationalFunction::parse(PrimeField(p), s);
}
Place FP(uint64_t p, const std::string& s) { return Place::finite(P(p, s)); }

} // namespace

TEST_CASE("completed classes: period and index") {
    PrimeField f2(2);

    // theta of order 9 with local order 3 at two cubic places carrying
    // opposite invariants of order 9
    Place v1 = FP(2, "t^3+t+1"), v2 = FP(2, "t^3+t^2+1");
    auto alpha0 = GlobalBrauerClass::from_invariants(
        f2, {{v1, QmodZ::of(1, 9)}, {v2, QmodZ::of(8, 9)}});
    CyclicCharacter theta = CyclicCharacter::constant(f2, QmodZ::of(1, 9));
    CompletedClass gamma(alpha0, theta);

    CHECK(gamma.period() == 9);
    CHECK(gamma.index() == 27);       // 9 * (residual index 3)
    CHECK(gamma.index(3) == 27);
    CHECK(gamma.index(50) == 27);     // search bound beyond the support changes nothing
    CHECK(gamma.uniformizer_label() == "pi");

    // multiplying by q = 3 drops the index by exactly one factor of 3
    CompletedClass gamma3 = scale_completed(3, gamma);
    CHECK(gamma3.period() == 3);
    CHECK(gamma3.index() == 9);
    CHECK(gamma3.index() * 3 == gamma.index());

    CHECK(scale_completed(9, gamma).index() == 1);
    CHECK(scale_completed(9, gamma).period() == 1);

    // same character but zero ramified part: everything is residual
    CompletedClass unram(alpha0, CyclicCharacter::trivial(f2));
    CHECK(unram.period() == 9);
    CHECK(unram.index() == 9);

    // zero residual part: everything is ramified
    CompletedClass ram(GlobalBrauerClass::zero(f2), theta);
    CHECK(ram.period() == 9);
    CHECK(ram.index() == 9);

    CHECK_THROWS_WITH(CompletedClass(alpha0, CyclicCharacter::trivial(PrimeField(3))),
                      "mixed characteristics");
}

TEST_CASE("completed classes with Kummer ramification") {
    PrimeField f3(3), f5(5);

    // sqrt(t) over F_3(t): its own ramification at (t) and infinity kills the
    // matching residual invariants, so period = index = 2
    auto alpha0 = GlobalBrauerClass::from_invariants(
        f3, {{FP(3, "t"), QmodZ::of(1, 2)}, {Place::infinite(f3), QmodZ::of(1, 2)}});
    CompletedClass gamma(alpha0, CyclicCharacter::kummer(f3, 2, R(3, "t")));
    CHECK(gamma.period() == 2);
    CHECK(gamma.index() == 2);

    // sqrt(t) over F_5(t) against invariants of order 3 at (t+1), (t+2):
    // the residue of t is a square at -1 and not at -2, giving residual
    // index 3 and total index 6
    auto beta0 = GlobalBrauerClass::from_invariants(
        f5, {{FP(5, "t+1"), QmodZ::of(1, 3)}, {FP(5, "t+2"), QmodZ::of(2, 3)}});
    CompletedClass delta(beta0, CyclicCharacter::kummer(f5, 2, R(5, "t")));
    CHECK(delta.period() == 6);
    CHECK(delta.index() == 6);
    CHECK_THROWS_WITH(certify_indecomposable(delta, 2, 1), "period not a q-power");
}

TEST_CASE("indecomposability certificates") {
    PrimeField f2(2);
    Place v1 = FP(2, "t^3+t+1"), v2 = FP(2, "t^3+t^2+1");
    auto alpha0 = GlobalBrauerClass::from_invariants(
        f2, {{v1, QmodZ::of(1, 9)}, {v2, QmodZ::of(8, 9)}});
    CyclicCharacter theta = CyclicCharacter::constant(f2, QmodZ::of(1, 9));
    CompletedClass gamma(alpha0, theta);

    IndecompCertificate cert = certify_indecomposable(gamma, 3, 3);
    CHECK(cert.q == 3);
    CHECK(cert.e == 2);
    CHECK(cert.t == 1);
    CHECK(cert.ind == 27);
    CHECK(cert.ind_q == 9);
    CHECK(cert.verdict == "indecomposable");
    CHECK(cert.branch == "saltman");
    CHECK(certify_indecomposable(gamma, 3) == cert); // default bound covers the support

    SECTION("period = index branch") {
        auto a = GlobalBrauerClass::from_invariants(
            f2, {{Place::infinite(f2), QmodZ::of(1, 3)}, {FP(2, "t"), QmodZ::of(2, 3)}});
        CompletedClass g(a, CyclicCharacter::constant(f2, QmodZ::of(1, 3)));
        IndecompCertificate c = certify_indecomposable(g, 3, 1);
        CHECK(c.e == 1);
        CHECK(c.t == 1);
        CHECK(c.ind == 3);
        CHECK(c.ind_q == 1);
        CHECK(c.verdict == "indecomposable");
        CHECK(c.branch == "period=index");
    }

    SECTION("trivial class is inconclusive") {
        CompletedClass z(GlobalBrauerClass::zero(f2), CyclicCharacter::trivial(f2));
        IndecompCertificate c = certify_indecomposable(z, 3, 1);
        CHECK(c.ind == 1);
        CHECK(c.e == 0);
        CHECK(c.verdict == "inconclusive");
        CHECK(c.branch.empty());
    }

    SECTION("q validation") {
        CHECK_THROWS_WITH(certify_indecomposable(gamma, 4, 3), "q must be prime");
        CHECK_THROWS_WITH(certify_indecomposable(gamma, 1, 3), "q must be prime");
        CHECK_THROWS_WITH(certify_indecomposable(gamma, 2, 3), "period not a q-power");
    }
}

TEST_CASE("completed class metadata") {
    PrimeField f2(2);
    auto alpha0 = GlobalBrauerClass::from_invariants(
        f2, {{FP(2, "t"), QmodZ::of(1, 3)}, {Place::infinite(f2), QmodZ::of(2, 3)}});
    CyclicCharacter chi = CyclicCharacter::constant(f2, QmodZ::of(1, 3));

    CompletedClass gamma(alpha0, chi, "s");
    CHECK(gamma.uniformizer_label() == "s");
    CHECK(gamma.scaled(2).uniformizer_label() == "s");

    CHECK(!gamma.prescribed_local_order().has_value());
    CompletedClass tagged = gamma.with_prescribed_local_order(3);
    REQUIRE(tagged.prescribed_local_order().has_value());
    CHECK(*tagged.prescribed_local_order() == 3);
    CHECK(tagged == gamma);                         // metadata is not part of the class
    CHECK(!tagged.scaled(2).prescribed_local_order().has_value()); // and does not scale

    SECTION("index of the q-multiple divides the index") {
        Place v1 = FP(2, "t^3+t+1"), v2 = FP(2, "t^3+t^2+1");
        for (int64_t a : {1, 2, 4}) {
            auto inv = GlobalBrauerClass::from_invariants(
                f2, {{v1, QmodZ::of(a, 9)}, {v2, QmodZ::of(-a, 9)}});
            for (int64_t c : {1, 2, 3, 4}) {
                CompletedClass g(inv, CyclicCharacter::constant(f2, QmodZ::of(c, 9)));
                uint64_t ind = g.index(3);
                uint64_t ind3 = g.scaled(3).index(3);
                INFO("a=" << a << " c=" << c);
                CHECK(ind % ind3 == 0);
                CHECK(g.period() % g.scaled(3).period() == 0);
                CHECK(g.index(9) == ind);
            }
        }
    }
}
