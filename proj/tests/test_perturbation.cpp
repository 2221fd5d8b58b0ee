#include "jcm/perturbation.hpp"
#include "jcm/spaces.hpp"

#include <doctest.h>

using namespace jcm;

namespace {

void require_pass(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        INFO(c.id << " " << c.counterexample.dump());
        CHECK(c.pass);
    }
}

} // namespace

TEST_CASE("transferred data on the torus") {
    auto s1 = sphere(1);
    EilenbergZilber ez(s1, s1);
    GugenheimMunkholm gm(ez.sdr());
    Bounds b;
    b.max_degree = 3;
    b.max_word_length = 3;
    require_pass(sdr_verify(gm.transferred(), b));
    for (int n = 0; n <= 4; ++n)
        for (const auto& y : ez.product_side()->basis(n, b)) {
            INFO(y.to_string());
            CHECK(twisting_defect(gm.F_cochain(), y).is_zero());
        }
}

TEST_CASE("transferred data on a product of suspensions") {
    auto es1 = named_space("ES1");
    EilenbergZilber ez(es1, es1);
    GugenheimMunkholm gm(ez.sdr());
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 3;
    require_pass(sdr_verify(gm.transferred(), b));
}
