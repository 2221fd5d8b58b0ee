#include "jcm/milgram.hpp"
#include "jcm/spaces.hpp"

#include <doctest.h>

using namespace jcm;

namespace {

void require_pass(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        INFO(c.id << " " << c.counterexample.dump());
        CHECK(c.pass);
        CHECK(c.cases > 0);
    }
}

Label cell(const SetPtr& K, const std::string& name) {
    return Label::of_cell(dynamic_cast<const FiniteSimplicialSet&>(*K).generator(name));
}

bool same_mod2(const Chain& a, const Chain& b) { return (a - b).reduced_mod(2).is_zero(); }

struct Fixture {
    SetPtr K = sphere(1), L = sphere(2);
    std::shared_ptr<const SimplicialChains> A = std::make_shared<SimplicialChains>(K),
                                            B = std::make_shared<SimplicialChains>(L);
    Milgram m{A, B};
    Label a = cell(K, "x"), b = cell(L, "x");
};

} // namespace

TEST_CASE("q kills mixed letters and is multiplicative") {
    Fixture f;
    const Label none = Label::cobar({});
    CHECK(f.m.q(Label::cobar({Label::tensor(f.a, f.b)})).is_zero());
    CHECK(f.m.q(Label::cobar({f.m.a_letter(f.a)})) == Chain::of(Label::tensor(Label::cobar({f.a}), none)));
    // [a|b] -> [a] (x) [b]; [b|a] -> (-1)^{|[a]||[b]|} [a] (x) [b] with |[a]| = 0, |[b]| = 1
    Label ab = Label::tensor(Label::cobar({f.a}), Label::cobar({f.b}));
    CHECK(f.m.q(Label::cobar({f.m.a_letter(f.a), f.m.b_letter(f.b)})) == Chain::of(ab));
    CHECK(f.m.q(Label::cobar({f.m.b_letter(f.b), f.m.a_letter(f.a)})) == Chain::of(ab));
}

TEST_CASE("sigma puts the A letters first") {
    Fixture f;
    Label uv = Label::tensor(Label::cobar({f.a}), Label::cobar({f.b}));
    CHECK(f.m.sigma(uv) == Chain::of(Label::cobar({f.m.a_letter(f.a), f.m.b_letter(f.b)})));
    CHECK(f.m.sigma(Label::tensor(Label::cobar({f.a}), Label::cobar({}))) ==
          Chain::of(Label::cobar({f.m.a_letter(f.a)})));
}

TEST_CASE("h on the empty word, on words ending in a mixed letter, and on [b|a]") {
    Fixture f;
    Label ba = Label::cobar({f.m.b_letter(f.b), f.m.a_letter(f.a)});
    CHECK(f.m.h(Label::cobar({})).is_zero());
    CHECK(f.m.h(Label::cobar({f.m.b_letter(f.b), Label::tensor(f.a, f.b)})).is_zero());
    // -(-1)^{(|a|+1)|b|} [ab] with |a| = 1, |b| = 2
    CHECK(f.m.h(ba) == Chain::of(Label::cobar({Label::tensor(f.a, f.b)}), -1));
}

TEST_CASE("homotopy identity on [b|a] mod 2") {
    // (dh + hd)[b|a] = [a|b] + [b|a] for cycles a, b with trivial reduced diagonal
    Fixture f;
    const Cobar& Y = *f.m.source();
    Label ba = Label::cobar({f.m.b_letter(f.b), f.m.a_letter(f.a)});
    Label ab = Label::cobar({f.m.a_letter(f.a), f.m.b_letter(f.b)});
    Chain lhs = Y.d(f.m.h(ba)) + apply_linear([&](const Label& w) { return f.m.h(w); }, Y.differential(ba));
    Chain rhs = Chain::of(ab) + Chain::of(ba);
    CHECK(same_mod2(lhs, rhs));
}

TEST_CASE("h[b|a|a'|a''] has the seven expected families of terms mod 2") {
    SetPtr K = sphere(1), L = named_space("S1xS1xS1");
    auto A = std::make_shared<SimplicialChains>(K), B = std::make_shared<SimplicialChains>(L);
    Milgram m(A, B);
    Label a = cell(K, "x");
    auto mixed = [&](const Label& b) { return Label::tensor(a, b); };
    auto plain = m.a_letter(a);
    Bounds bounds;
    int exercised = 0;
    for (const auto& b : B->basis(3, bounds)) {
        Chain expected;
        expected.add(Label::cobar({plain, plain, mixed(b)}), 1);
        expected.add(Label::cobar({plain, mixed(b), plain}), 1);
        expected.add(Label::cobar({mixed(b), plain, plain}), 1);
        for (const auto& [t, c] : B->reduced_diagonal(b)) {
            expected.add(Label::cobar({mixed(t[0]), mixed(t[1]), plain}), c);
            expected.add(Label::cobar({plain, mixed(t[0]), mixed(t[1])}), c);
            expected.add(Label::cobar({mixed(t[0]), plain, mixed(t[1])}), c);
            for (const auto& [u, k] : B->reduced_diagonal(t[0])) {
                expected.add(Label::cobar({mixed(u[0]), mixed(u[1]), mixed(t[1])}), c * k);
                ++exercised;
            }
        }
        Chain got = m.h(Label::cobar({m.b_letter(b), plain, plain, plain}));
        INFO(b.to_string() << ": " << got.to_string() << " vs " << expected.to_string());
        CHECK(same_mod2(got, expected));
    }
    CHECK(exercised > 0);
}

TEST_CASE("Milgram retraction on sphere pairs") {
    Bounds b;
    b.max_degree = 5;
    b.max_word_length = 3;
    for (auto [k, l] : {std::pair{"S1", "S1"}, {"S1", "S2"}, {"S2", "S1"}, {"S2", "S2"}}) {
        INFO(k << ", " << l);
        Milgram m(std::make_shared<SimplicialChains>(named_space(k)), std::make_shared<SimplicialChains>(named_space(l)));
        require_pass(milgram_verify(m, b));
        require_pass(milgram_verify(m, b, 2));
    }
}

TEST_CASE("Milgram retraction with a product factor") {
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 3;
    Milgram m(std::make_shared<SimplicialChains>(named_space("S1")),
              std::make_shared<SimplicialChains>(named_space("S1xS2")));
    require_pass(milgram_verify(m, b));
}

TEST_CASE("h is natural in the first factor") {
    Bounds b;
    b.max_degree = 4;
    b.max_word_length = 3;
    Check c = milgram_naturality(named_space("S1"), named_space("S1xS1"), b);
    INFO(c.counterexample.dump());
    CHECK(c.pass);
    CHECK(c.cases > 0);
}
