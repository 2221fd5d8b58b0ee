#include "jcm/json_io.hpp"
#include "jcm/spaces.hpp"
#include "jcm/suites.hpp"
#include "jcm/szczarba.hpp"

#include <doctest.h>

using namespace jcm;

TEST_CASE("printed labels parse back") {
    JamesModel m(named_space("S1vS1"));
    Bounds b;
    b.max_degree = 3;
    b.max_word_length = 3;
    const auto cobar = LabelShape::cobar(LabelShape::cell(m.suspension()));
    for (int n = 0; n <= 3; ++n)
        for (const auto& w : m.omega()->basis(n, b)) {
            INFO(w.to_string());
            CHECK(parse_label(w.to_string(), cobar) == w);
        }
    const auto free = LabelShape::free_word(m.base());
    for (int n = 0; n <= 2; ++n)
        for (const auto& w : m.tensor_hopf()->basis(n, b))
            CHECK(parse_label(w.to_string(), free) == w);

    SetPtr K = sphere(1), L = named_space("S1xS1");
    Milgram mg(std::make_shared<SimplicialChains>(K), std::make_shared<SimplicialChains>(L));
    const auto mixed = LabelShape::cobar(LabelShape::tensor({LabelShape::cell(K), LabelShape::cell(L)}));
    for (const auto& w : mg.source()->basis(2, b))
        CHECK(parse_label(w.to_string(), mixed) == w);
}

TEST_CASE("label syntax errors") {
    auto s1 = sphere(1);
    CHECK_THROWS_AS(parse_label("[x", LabelShape::cobar(LabelShape::cell(s1))), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("x", LabelShape::cobar(LabelShape::cell(s1))), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("x⊗x⊗x", LabelShape::tensor({LabelShape::cell(s1), LabelShape::cell(s1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_label("s0(x)", LabelShape::cell(s1)), std::invalid_argument);
    CHECK_THROWS(parse_label("w", LabelShape::cell(s1)));
    auto s0 = sphere(0);
    CHECK(parse_label("y-k0", LabelShape::cell(s0, true)).kind == Label::Kind::ReducedVertex);
    CHECK(parse_label("1", LabelShape::cell(s0)) == Label::of_cell(s0->basepoint(0)));
}

TEST_CASE("chain json round trip") {
    auto s2 = sphere(2);
    auto shape = LabelShape::tensor({LabelShape::cell(s2), LabelShape::cell(s2)});
    Chain c;
    c.add(parse_label("x⊗k0", shape), 3);
    c.add(parse_label("k0⊗x", shape), -2);
    auto j = chain_to_json(c);
    CHECK(j["degree"] == 2);
    CHECK(chain_from_json(j, shape) == c);
    CHECK(chain_from_json(nlohmann::json("x⊗k0"), shape) == Chain::of(parse_label("x⊗k0", shape)));
    CHECK_THROWS_AS(chain_from_json(nlohmann::json::object(), shape), std::invalid_argument);
}

TEST_CASE("tensor algebra ranks") {
    // one generator in degree 1: rank 1 everywhere
    CHECK(tensor_algebra_ranks({0, 1}, 4) == std::vector<long long>{1, 1, 1, 1, 1});
    // two generators in degree 1: powers of two
    CHECK(tensor_algebra_ranks({0, 2}, 4) == std::vector<long long>{1, 2, 4, 8, 16});
    // generators in degrees 1 and 2: Fibonacci
    CHECK(tensor_algebra_ranks({0, 1, 1}, 5) == std::vector<long long>{1, 1, 2, 3, 5, 8});
    CHECK_THROWS_AS(tensor_algebra_ranks({1}, 2), std::invalid_argument);
}

TEST_CASE("suites run and are deterministic") {
    SuiteRequest r;
    r.bounds.max_degree = 4;
    r.bounds.max_word_length = 3;
    for (const char* suite : {"simplicial", "chains", "ez-sdr", "gm", "james", "szczarba", "milgram", "homology"}) {
        r.suite = suite;
        r.fixture = "S1";
        INFO(suite);
        auto a = run_suite(r), b = run_suite(r);
        CHECK(a.passed());
        CHECK(a.to_json().dump() == b.to_json().dump());
    }
    r.suite = "homology";
    r.fixture = "S1vS1";
    CHECK(run_suite(r).passed());
}

TEST_CASE("suite errors") {
    SuiteRequest r;
    r.suite = "nope";
    CHECK_THROWS_AS(run_suite(r), std::invalid_argument);
    r.suite = "szczarba";
    r.fixture = "S0";
    CHECK_THROWS_AS(run_suite(r), std::invalid_argument);
    r.suite = "james";
    r.fixture = "S1,S1";
    CHECK_THROWS_AS(run_suite(r), std::invalid_argument);
}

TEST_CASE("the all suite skips what a fixture cannot support") {
    SuiteRequest r;
    r.suite = "all";
    r.fixture = "S0";
    r.bounds.max_degree = 3;
    r.bounds.max_word_length = 2;
    auto rep = run_suite(r);
    CHECK(rep.passed());
    bool skipped = false;
    for (const auto& c : rep.checks)
        skipped |= c.id == "szczarba" && !c.gated;
    CHECK(skipped);
}

TEST_CASE("sampled Milgram checks depend on the seed only") {
    SuiteRequest r;
    r.suite = "milgram";
    r.fixture = "S1,S2";
    r.bounds.max_degree = 4;
    r.bounds.max_word_length = 2;
    r.seed = 7;
    auto a = run_suite(r);
    CHECK(a.passed());
    CHECK(a.to_json() == run_suite(r).to_json());
}
