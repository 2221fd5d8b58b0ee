#include "jcm/spaces.hpp"
#include "jcm/szczarba.hpp"

#include <doctest.h>

using namespace jcm;

namespace {

const Check& find(const VerificationReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id)
            return c;
    throw std::logic_error("no check " + id);
}

} // namespace

TEST_CASE("operators of the first levels") {
    CHECK(szczarba_operator(1, 1) == SimplicialOperator::identity(0));
    CHECK(szczarba_operator(2, 1) == SimplicialOperator::identity(1));
    // D^3_{0,2}: i = 1, k = 1 at n = 2, i.e. (D^2_{0,1})' s0 d1 = s0 d1 on 2-simplices
    CHECK(szczarba_operator(3, 2) == SimplicialOperator::face(1, 2).then(SimplicialOperator::degeneracy(0, 1)));
    CHECK_THROWS_AS(szczarba_operator(3, 3), std::out_of_range);
    CHECK_THROWS_AS(szczarba_operator(3, 0), std::out_of_range);
}

TEST_CASE("signs of the first levels") {
    CHECK(szczarba_sign(1, 1) == 0);
    CHECK(szczarba_sign(1, 2) == 1);
    for (int n = 1; n <= 7; ++n)
        CHECK(szczarba_sign(1, n) == (n + 1) % 2);
    // epsilon(2,3) = epsilon(1,2) + 1 + 1
    CHECK(szczarba_sign(2, 3) == 1);
    CHECK_THROWS_AS(szczarba_sign(7, 4), std::out_of_range);
}

TEST_CASE("operator structure up to level 6") {
    for (int n = 2; n <= 6; ++n)
        for (long long i = 2; i <= factorial(n - 1); ++i) {
            SimplicialOperator D = szczarba_operator(n, i);
            INFO(n << " " << i << " " << D.to_string());
            CHECK(D.begins_with_degeneracy());
            auto faces = D.faces();
            CHECK((faces.empty() || faces.front() != 0));
        }
}

TEST_CASE("closed form on the circle") {
    auto J = std::make_shared<JamesModel>(sphere(1));
    SzczarbaModel m(J);
    Simplex c = J->suspension()->suspend(sphere(1)->generator("x"));
    Label l = Label::of_cell(c);
    Chain expected = Chain::of(Label::of_cell(m.group()->tau(c, -1)), -1);
    CHECK(m.t_closed(l) == expected);
    CHECK(m.t_raw(l) == expected);
    CHECK(m.theta(Label::cobar({})) == Chain::of(m.group_chains()->unit()));
    CHECK(m.theta(Label::cobar({l})) == expected);
}

TEST_CASE("theta is comultiplicative") {
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 2;
    for (const char* k : {"S1", "S1vS1", "S2", "S1xS1"}) {
        INFO(k);
        SzczarbaModel m(std::make_shared<JamesModel>(named_space(k)));
        auto r = szczarba_verify(m, b);
        for (const char* id : {"D^n_{0,1}=id", "D^n_{0,i} begins with a degeneracy for i>=2", "D^n_{0,i} has no d_0",
                               "raw t = (-1)^{n+1}τ^{-1}", "θ comultiplicative", "t twisting cochain (t=τ^{-1})",
                               "θ chain map (t=τ^{-1})", "θ comultiplicative (t=τ^{-1})"}) {
            const Check& c = find(r, id);
            INFO(id << " " << c.counterexample.dump());
            CHECK(c.pass);
        }
    }
}

TEST_CASE("the alternating sign is a chain map only when C(K) has zero differential") {
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 2;
    {
        SzczarbaModel m(std::make_shared<JamesModel>(named_space("S1vS1")));
        auto r = szczarba_verify(m, b);
        CHECK(find(r, "θ chain map").pass);
        CHECK(find(r, "t twisting cochain").pass);
    }
    // on the torus d t(c) = t(dc) for the 3-cell c, so dt + td = 2 t(dc)
    auto J = std::make_shared<JamesModel>(named_space("S1xS1"));
    SzczarbaModel m(J);
    for (const auto& c : J->suspension_chains()->basis(3, b)) {
        Chain dc = J->suspension_chains()->differential(c);
        Chain tdc = apply_linear([&](const Label& l) { return m.t(l); }, dc);
        CHECK(twisting_defect(m.cochain(), c) == 2 * tdc);
    }
}

TEST_CASE("non-reduced input is rejected") {
    CHECK_THROWS_AS(SzczarbaModel(std::make_shared<JamesModel>(sphere(0))), std::invalid_argument);
}
