#include "jcm/spaces.hpp"

#include <doctest.h>

using namespace jcm;

namespace {

// All five simplicial identities on one simplex.
void check_identities(const SimplicialSet& K, const Simplex& x) {
    const int n = x.dim();
    for (int j = 0; j <= n; ++j) {
        Simplex sj = K.degeneracy(j, x);
        CHECK(K.face(j, sj) == x);
        CHECK(K.face(j + 1, sj) == x);
        for (int i = 0; i <= n + 1; ++i) {
            if (i < j)
                CHECK(K.face(i, sj) == K.degeneracy(j - 1, K.face(i, x)));
            else if (i > j + 1)
                CHECK(K.face(i, sj) == K.degeneracy(j, K.face(i - 1, x)));
        }
        for (int i = 0; i <= j; ++i)
            CHECK(K.degeneracy(i, sj) == K.degeneracy(j + 1, K.degeneracy(i, x)));
    }
    if (n >= 2)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(K.face(i, K.face(j, x)) == K.face(j - 1, K.face(i, x)));
}

} // namespace

TEST_CASE("simplicial identities on the standard fixtures") {
    for (const char* name : {"S0", "S1", "S2", "D1", "D2", "S1vS1", "ES0", "ES1", "ED1", "S1xS1", "ES1xD1"}) {
        CAPTURE(name);
        auto K = named_space(name);
        for (int n = 0; n <= 4; ++n)
            for (const auto& x : all_simplices(*K, n, std::nullopt)) {
                CAPTURE(x.to_string());
                check_identities(*K, x);
                CHECK(x.is_degenerate() == is_degenerate_by_faces(*K, x));
            }
    }
}

TEST_CASE("the basepoint is fixed by every operator") {
    auto K = named_space("ES1vS1");
    for (int n = 0; n <= 5; ++n) {
        Simplex b = K->basepoint(n);
        for (int i = 0; i <= n && n > 0; ++i)
            CHECK(K->face(i, b) == K->basepoint(n - 1));
        for (int j = 0; j <= n; ++j)
            CHECK(K->degeneracy(j, b) == K->basepoint(n + 1));
    }
}

TEST_CASE("suspension face rules") {
    auto s2 = sphere(2);
    Suspension E(s2);
    Simplex x = s2->generator("x");
    Simplex sx = E.suspend(x);
    CHECK(sx.dim() == 3);
    CHECK(E.face(0, sx) == E.basepoint(2));
    CHECK(E.face(1, sx) == E.suspend(s2->face(0, x)));
    CHECK(E.face(1, sx) == E.basepoint(2));
    CHECK(E.suspend(s2->basepoint(3)) == E.basepoint(4));
    CHECK(E.pair(2, x) == E.degeneracy(0, sx));
    CHECK(E.pair(2, x).is_degenerate());
    CHECK(E.is_reduced());

    auto d2 = standard_simplex(2);
    Suspension ED(d2);
    Simplex t = d2->generator("v012");
    for (int i = 0; i <= 2; ++i)
        CHECK(ED.face(i + 1, ED.suspend(t)) == ED.suspend(d2->face(i, t)));
    CHECK(ED.suspend(d2->degeneracy(1, t)) == ED.degeneracy(2, ED.suspend(t)));
    // nondegenerate (n+1)-simplices are the (1,x) with x nondegenerate
    CHECK(ED.nondegenerate(2)->size() == 3);
    CHECK(ED.nondegenerate(1)->size() == 2);
}

TEST_CASE("loop group face rules") {
    auto es1 = std::make_shared<Suspension>(sphere(1));
    WordComplex G(es1, WordComplex::Kind::Group);
    Simplex z = es1->suspend(sphere(1)->generator("x"));
    Simplex t = G.tau(z);
    CHECK(t.dim() == 1);
    Simplex expected = G.multiply(G.tau(es1->face(0, z), -1), G.tau(es1->face(1, z)));
    CHECK(G.face(0, t) == expected);
    CHECK(G.face(1, t) == G.tau(es1->face(2, z)));
    CHECK(G.tau(es1->degeneracy(0, z)) == G.basepoint(2));
    CHECK(G.multiply(t, G.inverse(t)) == G.basepoint(1));
    CHECK_THROWS_AS(WordComplex(sphere(0), WordComplex::Kind::Group), std::invalid_argument);
}

TEST_CASE("James monoid and the unit") {
    auto d1 = standard_simplex(1);
    auto ek = std::make_shared<Suspension>(d1);
    auto M = std::make_shared<WordComplex>(ek, WordComplex::Kind::Monoid);
    Simplex e = d1->generator("v01");
    Simplex t = james_unit(*ek, *M, e);
    CHECK(M->face(0, t) == M->tau(ek->face(1, ek->suspend(e))));
    CHECK(M->face(0, M->tau(ek->pair(2, d1->generator("v1")))) == M->basepoint(0));
    Simplex lifted = ek->degeneracy(1, ek->suspend(d1->generator("v1")));
    CHECK(M->face(0, M->tau(lifted)) == M->tau(ek->suspend(d1->generator("v1"))));
    for (int i = 0; i <= 1; ++i)
        CHECK(M->face(i, t) == james_unit(*ek, *M, d1->face(i, e)));
    // products are homomorphic under faces and degeneracies
    Simplex u = M->multiply(t, t);
    for (int i = 0; i <= 1; ++i)
        CHECK(M->face(i, u) == M->multiply(M->face(i, t), M->face(i, t)));
    for (int j = 0; j <= 1; ++j)
        CHECK(M->degeneracy(j, u) == M->multiply(M->degeneracy(j, t), M->degeneracy(j, t)));
}

TEST_CASE("word complexes satisfy the identities on bounded words") {
    auto es1 = std::make_shared<Suspension>(sphere(1));
    auto M = std::make_shared<WordComplex>(es1, WordComplex::Kind::Monoid);
    auto G = std::make_shared<WordComplex>(es1, WordComplex::Kind::Group);
    for (const auto& W : {M, G})
        for (int n = 0; n <= 3; ++n)
            for (const auto& x : all_simplices(*W, n, 3)) {
                CAPTURE(x.to_string());
                check_identities(*W, x);
                CHECK(x.is_degenerate() == is_degenerate_by_faces(*W, x));
            }
}

TEST_CASE("product pairs") {
    auto s1 = sphere(1);
    Product P(s1, s1);
    Simplex x = s1->generator("x");
    Simplex a = s1->degeneracy(0, x), b = s1->degeneracy(1, x);
    Simplex z = P.make_pair(a, b);
    CHECK_FALSE(z.is_degenerate());
    for (int i = 0; i <= 2; ++i) {
        auto [l, r] = P.components(P.face(i, z));
        CHECK(l == s1->face(i, a));
        CHECK(r == s1->face(i, b));
    }
    CHECK(P.make_pair(a, a).is_degenerate());
    CHECK(P.diagonal(s1->basepoint(0)) == P.basepoint(0));
    CHECK(P.nondegenerate(2)->size() == 2);
}

TEST_CASE("text syntax round trips") {
    auto es1 = std::make_shared<Suspension>(sphere(1));
    auto M = std::make_shared<WordComplex>(es1, WordComplex::Kind::Group);
    Simplex z = es1->parse("(1,x)");
    CHECK(z == es1->suspend(sphere(1)->generator("x")));
    Simplex w = M->multiply(M->tau(z), M->tau(z, -1));
    CHECK(w == M->basepoint(1));
    auto s = M->degeneracy(1, M->tau(z));
    CHECK(M->parse(s.to_string()) == s);
    CHECK(M->parse("tau((1,x))^-1·tau((1,x))") == M->basepoint(1));
    CHECK_THROWS_AS(es1->parse("(1,q)"), std::invalid_argument);
}

TEST_CASE("fixture json round trip") {
    auto w = wedge(*sphere(1), *standard_simplex(2));
    auto back = fixture_from_json(fixture_to_json(*w));
    CHECK(fixture_to_json(*back) == fixture_to_json(*w));
    auto flat = flatten(Suspension(sphere(1)));
    CHECK(flat->nondegenerate(2)->size() == 1);
    nlohmann::json bad = {{"basepoint", "k"}, {"generators", {{{"id", "x"}, {"dim", 1}, {"faces", {{{"gen", "k"}}}}}}}};
    CHECK_THROWS_AS(fixture_from_json(bad), std::invalid_argument);
}
