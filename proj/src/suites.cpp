#include "jcm/suites.hpp"

#include "jcm/homology.hpp"
#include "jcm/spaces.hpp"
#include "jcm/szczarba.hpp"

#include <random>
#include <stdexcept>

namespace jcm {

namespace {

std::string degree_range(const Bounds& b) { return "degree <= " + std::to_string(b.max_degree); }

void guarded(CheckBuilder& b, const std::string& where, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        b.fail({{"input", where}, {"error", e.what()}});
    }
}

} // namespace

VerificationReport simplicial_verify(const SimplicialSet& K, const Bounds& bounds) {
    VerificationReport report;
    report.suite = "simplicial";
    const std::string range = degree_range(bounds);
    CheckBuilder dd("d_i d_j = d_{j-1} d_i (i<j)", range), ds_low("d_i s_j = s_{j-1} d_i (i<j)", range),
        ds_id("d_j s_j = d_{j+1} s_j = 1", range), ds_high("d_i s_j = s_j d_{i-1} (i>j+1)", range),
        ss("s_i s_j = s_{j+1} s_i (i<=j)", range), normal("normal form detects degeneracy", range);
    for (int n = 0; n <= bounds.max_degree; ++n)
        for (const auto& x : all_simplices(K, n, bounds.max_word_length)) {
            auto where = [&] { return nlohmann::json{{"simplex", x.to_string()}}; };
            guarded(normal, x.to_string(), [&] { normal.expect(x.is_degenerate() == is_degenerate_by_faces(K, x), where); });
            if (n + 1 > bounds.max_degree)
                continue;
            for (int j = 0; j <= n; ++j) {
                guarded(ds_id, x.to_string(), [&] {
                    Simplex sj = K.degeneracy(j, x);
                    ds_id.expect(K.face(j, sj) == x && K.face(j + 1, sj) == x, where);
                    for (int i = 0; i <= n + 1; ++i) {
                        if (i < j)
                            ds_low.expect(K.face(i, sj) == K.degeneracy(j - 1, K.face(i, x)), where);
                        else if (i > j + 1)
                            ds_high.expect(K.face(i, sj) == K.degeneracy(j, K.face(i - 1, x)), where);
                    }
                    for (int i = 0; i <= j; ++i)
                        ss.expect(K.degeneracy(i, sj) == K.degeneracy(j + 1, K.degeneracy(i, x)), where);
                });
            }
            if (n >= 2)
                guarded(dd, x.to_string(), [&] {
                    for (int j = 1; j <= n; ++j)
                        for (int i = 0; i < j; ++i)
                            dd.expect(K.face(i, K.face(j, x)) == K.face(j - 1, K.face(i, x)), where);
                });
        }
    for (auto* b : {&dd, &ds_low, &ds_id, &ds_high, &ss, &normal})
        report.add(b->done());
    return report;
}

VerificationReport chains_verify(const SetPtr& K, const Bounds& bounds) {
    VerificationReport report;
    report.suite = "chains";
    const std::string range = degree_range(bounds);
    auto C = std::make_shared<SimplicialChains>(K);
    ReducedChains R(K);
    auto E = std::make_shared<Suspension>(K);
    auto CE = std::make_shared<SimplicialChains>(E);
    Cobar omega(CE);
    CheckBuilder dd("∂²=0 on C(K)", range), dd_red("∂²=0 on reduced chains", range),
        dd_cobar("d²=0 on ΩC(EK)", range + ", words <= " + std::to_string(bounds.max_word_length)),
        coassoc("AW coassociative", range), counit("AW counital", range), aw_chain("AW chain map", range);
    auto squared = [](CheckBuilder& b, const ChainComplex& X, const Label& l) {
        guarded(b, l.to_string(), [&] {
            Chain v = X.d(X.differential(l));
            b.expect(v.is_zero(), [&] { return nlohmann::json{{"input", l.to_string()}, {"d2", v.to_string()}}; });
        });
    };
    LinearMap id = [](const Label& l) { return Chain::of(l); };
    LinearMap diag = [&](const Label& l) { return C->diagonal(l); };
    TensorProduct CC(C, C);
    for (int n = 0; n <= bounds.max_degree; ++n) {
        for (const auto& c : C->basis(n, bounds)) {
            squared(dd, *C, c);
            guarded(coassoc, c.to_string(), [&] {
                Chain d = C->diagonal(c);
                Chain l = assoc_left(tensor_maps(diag, 0, id, 0, d)), r = assoc_right(tensor_maps(id, 0, diag, 0, d));
                coassoc.expect(l == r, [&] { return mismatch(c, l, r); });
            });
            guarded(counit, c.to_string(), [&] {
                Chain d = C->diagonal(c), l, r;
                for (const auto& [t, k] : d) {
                    if (long long e = C->counit(t[0]))
                        l.add(t[1], e * k);
                    if (long long e = C->counit(t[1]))
                        r.add(t[0], e * k);
                }
                counit.expect(l == Chain::of(c) && r == Chain::of(c), [&] { return mismatch(c, l, r); });
            });
            guarded(aw_chain, c.to_string(), [&] {
                Chain l = CC.d(C->diagonal(c)), r = static_cast<const Coalgebra&>(*C).diagonal(C->differential(c));
                aw_chain.expect(l == r, [&] { return mismatch(c, l, r); });
            });
        }
        for (const auto& c : R.basis(n, bounds))
            squared(dd_red, R, c);
        for (const auto& w : omega.basis(n, bounds))
            squared(dd_cobar, omega, w);
    }
    for (auto* b : {&dd, &dd_red, &dd_cobar, &coassoc, &counit, &aw_chain})
        report.add(b->done());
    return report;
}

std::vector<long long> tensor_algebra_ranks(const std::vector<long long>& v, int max_degree) {
    if (!v.empty() && v[0] != 0)
        throw std::invalid_argument("the tensor algebra on a module with degree 0 part is infinite in degree 0");
    std::vector<long long> t(static_cast<std::size_t>(max_degree) + 1, 0);
    t[0] = 1;
    for (int n = 1; n <= max_degree; ++n)
        for (int k = 1; k <= n && k < static_cast<int>(v.size()); ++k)
            t[n] = checked_add(t[n], checked_mul(v[k], t[n - k]));
    return t;
}

VerificationReport homology_verify(const SetPtr& X, const Bounds& bounds, long long modulus) {
    VerificationReport report;
    report.suite = "homology";
    SetPtr K = X;
    if (auto s = std::dynamic_pointer_cast<const Suspension>(X))
        K = s->base();
    JamesModel m(K);
    const int top = bounds.max_degree;
    auto ranks = [](const std::vector<HomologyGroup>& h) {
        std::vector<long long> r;
        for (const auto& g : h)
            r.push_back(g.rank);
        return r;
    };
    auto table = [](const std::vector<HomologyGroup>& h) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& g : h)
            j.push_back({{"degree", g.degree}, {"rank", g.rank}, {"torsion", g.torsion}});
        return j;
    };

    CheckBuilder base("H(C(K)) computed", degree_range(bounds), false);
    std::vector<HomologyGroup> hk;
    guarded(base, K->name(), [&] {
        hk = homology(*m.chains(), 0, top, bounds, modulus);
        base.expect(true, [] { return nlohmann::json{}; });
    });
    base.details(table(hk));
    report.add(base.done());

    std::vector<long long> reduced = ranks(hk);
    if (!reduced.empty())
        reduced[0] -= 1;
    std::vector<long long> expected;
    const bool connected = reduced.empty() || reduced[0] == 0;
    if (connected)
        expected = tensor_algebra_ranks(reduced, top);

    auto compare = [&](const std::string& id, const ChainComplex& complex, int hi, const Bounds& b) {
        CheckBuilder check(id, "degree <= " + std::to_string(hi) + ", words <= " + std::to_string(b.max_word_length));
        if (!connected) {
            check.note("skipped: K is not connected, the tensor algebra is infinite in degree 0");
            Check c = check.done();
            c.gated = false;
            report.add(c);
            return;
        }
        guarded(check, complex.name(), [&] {
            auto h = homology(complex, 0, hi, b, modulus);
            auto got = ranks(h);
            std::vector<long long> want(expected.begin(), expected.begin() + hi + 1);
            check.expect(got == want, [&] {
                return nlohmann::json{{"complex", complex.name()}, {"ranks", got}, {"expected", want}};
            });
            check.details(table(h));
        });
        report.add(check.done());
    };
    // Cobar degree k needs words of length up to k + 1 when every letter has degree >= 1.
    Bounds long_words = bounds;
    long_words.max_word_length = std::max(bounds.max_word_length, top + 1);
    compare("H(ΩC(EK)) = T(H~(K))", *m.omega(), top, long_words);
    compare("H(TC~(K)) = T(H~(K))", *m.tensor_hopf(), top, long_words);
    const int monoid_top = std::min(top, bounds.max_word_length);
    compare("H(C(G+EK)) = T(H~(K)) on bounded words", *m.monoid_chains(), monoid_top, bounds);
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"simplicial", "chains", "ez-sdr", "gm", "james",
                                                "szczarba", "milgram", "homology", "all"};
    return names;
}

namespace {

std::pair<SetPtr, SetPtr> pair_fixture(const std::string& fixture) {
    auto comma = fixture.find(',');
    if (comma == std::string::npos) {
        SetPtr K = named_space(fixture);
        return {K, K};
    }
    return {named_space(fixture.substr(0, comma)), named_space(fixture.substr(comma + 1))};
}

SetPtr single_fixture(const std::string& fixture) {
    if (fixture.find(',') != std::string::npos)
        throw std::invalid_argument("this suite takes one fixture, got '" + fixture + "'");
    return named_space(fixture);
}

// Words of random length up to `length` over the letters of Omega(A (x) B)
// in cobar degrees 0..max_degree.
std::vector<Label> random_words(const Cobar& omega, const Bounds& bounds, int length, std::uint64_t seed, int count) {
    std::vector<Label> letters;
    for (int d = 0; d <= bounds.max_degree; ++d)
        for (const auto& l : omega.letters(d, bounds))
            letters.push_back(l);
    std::vector<Label> out;
    if (letters.empty())
        return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> len(1, length);
    for (int k = 0; k < count; ++k) {
        std::vector<Label> w;
        for (int t = len(rng); t > 0; --t)
            w.push_back(letters[pick(rng)]);
        out.push_back(Label::cobar(std::move(w)));
    }
    return out;
}

VerificationReport milgram_suite(const SuiteRequest& r) {
    auto [K, L] = pair_fixture(r.fixture);
    Milgram m(std::make_shared<SimplicialChains>(K), std::make_shared<SimplicialChains>(L));
    VerificationReport report = milgram_verify(m, r.bounds, r.modulus);
    report.add(milgram_naturality(K, L, r.bounds));
    // sampled longer words, beyond the exhaustive range
    const int length = r.bounds.max_word_length + 2;
    CheckBuilder qs("qσ=1 on sampled words", "length <= " + std::to_string(length) + ", seed " + std::to_string(r.seed)),
        hh("h²=0 on sampled words", "length <= " + std::to_string(length) + ", seed " + std::to_string(r.seed));
    LinearMap h = [&](const Label& w) { return m.h(w); };
    LinearMap sigma = [&](const Label& w) { return m.sigma(w); };
    for (const auto& w : random_words(*m.source(), r.bounds, length, r.seed, 64)) {
        guarded(hh, w.to_string(), [&] {
            Chain v = apply_linear(h, m.h(w));
            hh.expect(v.is_zero(), [&] { return mismatch(w, v, Chain{}); });
        });
        guarded(qs, w.to_string(), [&] {
            Chain q = m.q(w);
            Chain back = apply_linear([&](const Label& u) { return m.q(u); }, apply_linear(sigma, q));
            qs.expect(back == q, [&] { return mismatch(w, back, q); });
        });
    }
    report.add(qs.done());
    report.add(hh.done());
    report.suite = "milgram";
    return report;
}

VerificationReport single_suite(const std::string& suite, const SuiteRequest& r) {
    if (suite == "simplicial")
        return simplicial_verify(*single_fixture(r.fixture), r.bounds);
    if (suite == "chains")
        return chains_verify(single_fixture(r.fixture), r.bounds);
    if (suite == "homology")
        return homology_verify(single_fixture(r.fixture), r.bounds, r.modulus);
    if (suite == "ez-sdr") {
        auto [K, L] = pair_fixture(r.fixture);
        EilenbergZilber ez(K, L);
        auto report = sdr_verify(ez.sdr(), r.bounds, true, r.modulus);
        report.suite = "ez-sdr";
        return report;
    }
    if (suite == "gm") {
        auto [K, L] = pair_fixture(r.fixture);
        EilenbergZilber ez(K, L);
        GugenheimMunkholm gm(ez.sdr());
        auto report = sdr_verify(gm.transferred(), r.bounds, false, r.modulus);
        CheckBuilder twist("F twisting cochain", degree_range(r.bounds));
        for (int n = 0; n <= r.bounds.max_degree; ++n)
            for (const auto& y : ez.product_side()->basis(n, r.bounds))
                guarded(twist, y.to_string(), [&] {
                    Chain v = twisting_defect(gm.F_cochain(), y);
                    twist.expect(v.is_zero(), [&] { return mismatch(y, v, Chain{}); });
                });
        report.add(twist.done());
        report.suite = "gm";
        return report;
    }
    if (suite == "james") {
        JamesModel m(single_fixture(r.fixture));
        auto report = james_verify(m, r.bounds);
        report.merge(suspension_product_verify(m, r.bounds));
        report.suite = "james";
        return report;
    }
    if (suite == "szczarba") {
        SetPtr K = single_fixture(r.fixture);
        if (!K->is_reduced())
            throw std::invalid_argument("the szczarba suite needs a reduced fixture, " + K->name() + " is not");
        SzczarbaModel m(std::make_shared<JamesModel>(K));
        return szczarba_verify(m, r.bounds);
    }
    if (suite == "milgram")
        return milgram_suite(r);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

} // namespace

VerificationReport run_suite(const SuiteRequest& request) {
    if (request.suite != "all")
        return single_suite(request.suite, request);
    VerificationReport all;
    all.suite = "all";
    single_fixture(request.fixture);
    for (const auto& name : suite_names()) {
        if (name == "all")
            continue;
        VerificationReport r;
        try {
            r = single_suite(name, request);
        } catch (const std::invalid_argument& e) {
            // suites whose construction needs more than the fixture offers
            all.add(Check{name, "", true, false, 0, {}, std::string("skipped: ") + e.what(), {}});
            continue;
        }
        for (auto c : r.checks) {
            c.id = name + ": " + c.id;
            all.add(std::move(c));
        }
    }
    return all;
}

} // namespace jcm
