#include "jcm/james.hpp"
#include "jcm/spaces.hpp"

#include <doctest.h>

using namespace jcm;

namespace {

void require_pass(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        if (!c.gated)
            continue;
        INFO(c.id << " " << c.counterexample.dump());
        CHECK(c.pass);
        CHECK(c.cases > 0);
    }
}

const Check& find(const VerificationReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id)
            return c;
    throw std::logic_error("no check " + id);
}

struct Letters {
    const JamesModel& m;
    Label cell(const std::string& name) const {
        const auto& K = dynamic_cast<const FiniteSimplicialSet&>(*m.base());
        return Label::of_cell(m.suspension()->suspend(K.generator(name)));
    }
    Label word(std::vector<std::string> names) const {
        std::vector<Label> ls;
        for (const auto& n : names)
            ls.push_back(cell(n));
        return Label::cobar(std::move(ls));
    }
};

Label none() { return Label::cobar({}); }

} // namespace

TEST_CASE("alpha on the basepoint and on a 1-simplex") {
    JamesModel m(sphere(1));
    Letters L{m};
    auto s1 = sphere(1);
    CHECK(m.alpha(Label::of_cell(s1->generator("k0"))) == Chain::of(none()));
    CHECK(m.alpha(Label::of_cell(s1->generator("x"))) == Chain::of(L.word({"x"})));
}

TEST_CASE("psi is primitive on the generator of the circle") {
    JamesModel m(sphere(1));
    Letters L{m};
    Chain expected;
    expected.add(Label::tensor(L.word({"x"}), none()), 1);
    expected.add(Label::tensor(none(), L.word({"x"})), 1);
    CHECK(m.psi_letter(L.cell("x")) == expected);
    CHECK(m.psi(L.word({"x"})) == expected);
}

TEST_CASE("psi on the second vertex of S0 is the diagonal of 1 + [(1,y)]") {
    // alpha(y) = [] + [(1,y)] must be group-like, so psi[(1,y)] has the cross term
    JamesModel m(sphere(0));
    Letters L{m};
    Chain expected;
    expected.add(Label::tensor(L.word({"y"}), none()), 1);
    expected.add(Label::tensor(none(), L.word({"y"})), 1);
    expected.add(Label::tensor(L.word({"y"}), L.word({"y"})), 1);
    CHECK(m.psi_letter(L.cell("y")) == expected);
}

TEST_CASE("psi and the naive diagonal differ on the interval") {
    JamesModel m(standard_simplex(1));
    Letters L{m};
    Label e = L.word({"v01"});
    Chain expected;
    expected.add(Label::tensor(e, none()), 1);
    expected.add(Label::tensor(none(), e), 1);
    expected.add(Label::tensor(e, L.word({"v1"})), 1);
    CHECK(m.psi(e) == expected);
    CHECK(m.naive_diagonal(e) != m.psi(e));
}

TEST_CASE("psi is multiplicative on a two letter word") {
    JamesModel m(sphere(1));
    Letters L{m};
    Label x = L.word({"x"}), xx = L.word({"x", "x"});
    Chain expected;
    expected.add(Label::tensor(xx, none()), 1);
    expected.add(Label::tensor(none(), xx), 1);
    // ([x] (x) [])([] (x) [x]) and ([] (x) [x])([x] (x) []) cancel: the second
    // picks up (-1)^{|x||x|} with |x| = 1 in the cobar construction on C(ES1)
    CHECK(m.psi(xx).coefficient(Label::tensor(x, x)) == 0);
    CHECK(m.psi(xx) == expected);
}

TEST_CASE("James model identities") {
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 3;
    for (const char* k : {"S0", "S1", "D1", "S2", "S1vS1"}) {
        INFO(k);
        JamesModel m(named_space(k));
        require_pass(james_verify(m, b));
        const Check& differs = find(james_verify(m, b), "ψ differs from q∘Ω(Δ)");
        CHECK(differs.gated == false);
    }
}

TEST_CASE("closed forms on products of suspensions") {
    Bounds b;
    b.max_degree = 5;
    for (const char* k : {"S1", "D1", "S0"}) {
        INFO(k);
        JamesModel m(named_space(k));
        require_pass(suspension_product_verify(m, b));
    }
}
