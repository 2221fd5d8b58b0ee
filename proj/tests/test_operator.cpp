#include "jcm/operator.hpp"
#include "jcm/spaces.hpp"

#include <doctest.h>

#include <random>

using namespace jcm;

namespace {

// Independent normaliser: rewrite a symbol word with the simplicial
// identities until degeneracies come first (decreasing) and faces last
// (increasing).  Returns nullopt for words that collapse to the identity
// only through d_j s_j; those still appear as an empty word.
std::vector<OpSymbol> rewrite(std::vector<OpSymbol> w) {
    using K = OpSymbol::Kind;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            OpSymbol a = w[k], b = w[k + 1];
            if (a.kind == K::Face && b.kind == K::Face && a.index >= b.index) {
                w[k] = OpSymbol::face(b.index);
                w[k + 1] = OpSymbol::face(a.index + 1);
            } else if (a.kind == K::Degeneracy && b.kind == K::Degeneracy && a.index <= b.index) {
                w[k] = OpSymbol::degeneracy(b.index + 1);
                w[k + 1] = OpSymbol::degeneracy(a.index);
            } else if (a.kind == K::Face && b.kind == K::Degeneracy) {
                int i = a.index, j = b.index;
                if (i < j) {
                    w[k] = OpSymbol::degeneracy(j - 1);
                    w[k + 1] = OpSymbol::face(i);
                } else if (i == j || i == j + 1) {
                    w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
                } else {
                    w[k] = OpSymbol::degeneracy(j);
                    w[k + 1] = OpSymbol::face(i - 1);
                }
            } else {
                continue;
            }
            changed = true;
            break;
        }
    }
    return w;
}

std::string word_text(const std::vector<OpSymbol>& w) {
    std::string s;
    for (const auto& o : w)
        s += (s.empty() ? "" : " ") + std::string(o.kind == OpSymbol::Kind::Face ? "d" : "s") + std::to_string(o.index);
    return s.empty() ? "id" : s;
}

std::vector<OpSymbol> random_word(std::mt19937& rng, int source_dim, int length) {
    std::vector<OpSymbol> rev;
    int dim = source_dim;
    for (int k = 0; k < length; ++k) {
        bool face = dim > 0 && (rng() % 2 == 0);
        if (dim >= 6)
            face = true;
        if (face) {
            rev.push_back(OpSymbol::face(static_cast<int>(rng() % (dim + 1))));
            --dim;
        } else {
            rev.push_back(OpSymbol::degeneracy(static_cast<int>(rng() % (dim + 1))));
            ++dim;
        }
    }
    return {rev.rbegin(), rev.rend()};
}

} // namespace

TEST_CASE("face after degeneracy collapses") {
    auto op = normalize_operator(parse_operator_word("d1 s1"), 2);
    CHECK(op.is_identity());
    CHECK(normalize_operator(parse_operator_word("d2 s1"), 2).is_identity());
}

TEST_CASE("d0 s1 commutes to s0 d0") {
    auto op = normalize_operator(parse_operator_word("d0 s1"), 2);
    CHECK(op.to_string() == "s0 d0");
}

TEST_CASE("derived operators shift every index") {
    auto op = normalize_operator(parse_operator_word("s0 d1"), 2);
    CHECK(op.derived().to_string() == "s1 d2");
    CHECK(SimplicialOperator::identity(3).derived().is_identity());
    CHECK(SimplicialOperator::face(2, 4).derived() == SimplicialOperator::face(3, 5));
    CHECK(SimplicialOperator::degeneracy(1, 4).derived() == SimplicialOperator::degeneracy(2, 5));
}

TEST_CASE("out of range indices are rejected") {
    CHECK_THROWS_AS(normalize_operator(parse_operator_word("d3"), 2), std::invalid_argument);
    CHECK_THROWS_AS(normalize_operator(parse_operator_word("d0 d0 d0"), 1), std::invalid_argument);
    CHECK_THROWS_AS(normalize_operator(parse_operator_word("s2"), 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator_word("x1"), std::invalid_argument);
}

TEST_CASE("canonical form agrees with the rewriting system") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = static_cast<int>(rng() % 6);
        auto w = random_word(rng, n, 1 + static_cast<int>(rng() % 6));
        auto op = normalize_operator(w, n);
        CAPTURE(word_text(w));
        CHECK(op.to_string() == word_text(rewrite(w)));
    }
}

TEST_CASE("evaluation of a word matches its canonical form on simplices") {
    auto d4 = standard_simplex(4);
    auto top = d4->generator("v01234");
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto w = random_word(rng, 4, 1 + static_cast<int>(rng() % 6));
        Simplex stepwise = top;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            stepwise = it->kind == OpSymbol::Kind::Face ? d4->face(it->index, stepwise)
                                                        : d4->degeneracy(it->index, stepwise);
        CHECK(d4->apply(normalize_operator(w, 4), top) == stepwise);
    }
}

TEST_CASE("composition is associative and derived respects it") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = normalize_operator(random_word(rng, 3, 2), 3);
        auto b = normalize_operator(random_word(rng, a.target_dim(), 2), a.target_dim());
        auto c = normalize_operator(random_word(rng, b.target_dim(), 2), b.target_dim());
        CHECK(a.then(b).then(c) == a.then(b.then(c)));
        CHECK(a.then(b).derived() == a.derived().then(b.derived()));
    }
}

TEST_CASE("degeneracy words and epimorphisms round trip") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& d : degeneracy_words(n, k))
                CHECK(degens_from_epi(epi_from_degens(n, d)) == d);
}
