#include "jcm/homology.hpp"
#include "jcm/spaces.hpp"

#include <doctest.h>

using namespace jcm;

TEST_CASE("boundary of a 1-simplex and d squared") {
    auto d1 = standard_simplex(1);
    SimplicialChains C(d1);
    Chain d = C.differential(Label::of_cell(d1->generator("v01")));
    CHECK(d.coefficient(Label::of_cell(d1->generator("v1"))) == 1);
    CHECK(d.coefficient(Label::of_cell(d1->generator("v0"))) == -1);
    auto s2 = sphere(2);
    SimplicialChains C2(s2);
    CHECK(C2.d(C2.differential(Label::of_cell(s2->generator("x")))).is_zero());
}

TEST_CASE("suspension boundary drops the cone face") {
    auto d2 = standard_simplex(2);
    auto E = std::make_shared<Suspension>(d2);
    SimplicialChains C(E);
    Simplex t = d2->generator("v012");
    Chain expected;
    for (int i = 1; i <= 3; ++i)
        expected.add(Label::of_cell(E->suspend(d2->face(i - 1, t))), i % 2 ? -1 : 1);
    CHECK(C.differential(Label::of_cell(E->suspend(t))) == expected);
}

TEST_CASE("reduced chains of the 0-sphere") {
    auto s0 = sphere(0);
    ReducedChains R(s0);
    auto b = R.basis(0, Bounds{});
    REQUIRE(b.size() == 1);
    CHECK(b[0].to_string() == "y-k0");
    auto d1 = standard_simplex(1);
    ReducedChains R1(d1);
    Chain d = R1.differential(Label::of_cell(d1->generator("v01")));
    CHECK(d == Chain::of(Label::reduced_vertex(d1->generator("v1"), d1->generator("v0"))));
}

TEST_CASE("Alexander-Whitney diagonal in low degrees") {
    auto d1 = standard_simplex(1);
    SimplicialChains C(d1);
    auto cell = [&](const char* n) { return Label::of_cell(d1->generator(n)); };
    Chain expected;
    expected.add(Label::tensor(cell("v0"), cell("v01")), 1);
    expected.add(Label::tensor(cell("v01"), cell("v1")), 1);
    CHECK(C.diagonal(cell("v01")) == expected);

    auto es1 = std::make_shared<Suspension>(sphere(1));
    SimplicialChains E(es1);
    for (const auto& l : E.basis(2, Bounds{}))
        CHECK(E.reduced_diagonal(l).is_zero());
}

TEST_CASE("shuffle counts and signs") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            auto sh = shuffles(p, q);
            long long binom = 1;
            for (int k = 1; k <= p; ++k)
                binom = binom * (q + k) / k;
            CHECK(static_cast<long long>(sh.size()) == binom);
        }
    auto s11 = shuffles(1, 1);
    REQUIRE(s11.size() == 2);
    CHECK(s11[0].mu == std::vector<int>{0});
    CHECK(s11[0].signature() == 0);
    CHECK(s11[1].signature() == 1);
}

TEST_CASE("Smith normal form by hand") {
    // [[2,0],[0,3]] has invariant factors 1, 6
    SparseColumns cols{{{0, 2}}, {{1, 3}}};
    auto inv = smith_invariants(cols, 2);
    CHECK(inv.rank == 2);
    CHECK(inv.divisors == std::vector<std::string>{"1", "6"});
    // rank over Z/2 of [[2]] is 0, over Z/3 is 1
    CHECK(smith_invariants({{{0, 2}}}, 1, 2).rank == 0);
    CHECK(smith_invariants({{{0, 2}}}, 1, 3).rank == 1);
}

TEST_CASE("homology of small complexes") {
    auto h = homology(SimplicialChains(sphere(2)), 0, 2, Bounds{});
    CHECK(h[0].rank == 1);
    CHECK(h[1].rank == 0);
    CHECK(h[2].rank == 1);
    auto t = homology(SimplicialChains(named_space("S1xS1")), 0, 2, Bounds{});
    CHECK(t[0].rank == 1);
    CHECK(t[1].rank == 2);
    CHECK(t[2].rank == 1);
    auto d2 = homology(SimplicialChains(standard_simplex(2)), 0, 2, Bounds{});
    CHECK(d2[0].rank == 1);
    CHECK(d2[1].rank == 0);
}

TEST_CASE("tensor product differential squares to zero") {
    auto a = std::make_shared<SimplicialChains>(standard_simplex(2));
    auto b = std::make_shared<SimplicialChains>(named_space("S1xS1"));
    TensorProduct T(a, b);
    for (int n = 0; n <= 4; ++n)
        for (const auto& l : T.basis(n, Bounds{}))
            CHECK(T.d(T.differential(l)).is_zero());
}

TEST_CASE("chain arithmetic") {
    Label x = Label::of_cell(sphere(1)->generator("x"));
    Chain c = Chain::of(x, 3);
    c -= Chain::of(x, 3);
    CHECK(c.is_zero());
    Chain m = Chain::of(x, 3, 2);
    CHECK(m.coefficient(x) == 1);
    CHECK_THROWS_AS(Chain::of(x, LLONG_MAX) + Chain::of(x, 1), std::overflow_error);
}
