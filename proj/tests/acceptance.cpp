// Runs the acceptance criteria at their stated bounds and prints one line per
// criterion.  Exit status is nonzero when any criterion fails.

#include "jcm/homology.hpp"
#include "jcm/spaces.hpp"
#include "jcm/suites.hpp"
#include "jcm/szczarba.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace jcm;

namespace {

struct Outcome {
    bool pass = true;
    long long cases = 0;
    std::string detail;

    void require(const Check& c, const std::string& where) {
        cases += c.cases;
        if (c.cases == 0) {
            fail(where + ": " + c.id + " ran no cases");
        } else if (!c.pass) {
            fail(where + ": " + c.id + " " + c.counterexample.dump());
        }
    }
    void require(const VerificationReport& r, const std::string& where, const std::vector<std::string>& ids) {
        for (const auto& id : ids) {
            auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.id == id; });
            if (it == r.checks.end())
                fail(where + ": missing check " + id);
            else
                require(*it, where);
        }
    }
    void fail(const std::string& why) {
        if (pass)
            detail = why;
        pass = false;
    }
};

Bounds bounds(int degree, int length = 4) {
    Bounds b;
    b.max_degree = degree;
    b.max_word_length = length;
    return b;
}

// Simplicial identities and d^2 = 0.
Outcome criterion1() {
    Outcome o;
    std::vector<std::string> fixtures{"S0", "S1", "S2", "D1", "D2", "S1vS1"};
    for (const auto& f : std::vector<std::string>(fixtures))
        fixtures.push_back("E" + f);
    for (const char* p : {"S1xS1", "S1xD1", "D1xD1", "S2xS1", "S0xS1", "S1vS1xS1"})
        fixtures.push_back(p);
    for (const auto& f : fixtures) {
        SetPtr K = named_space(f);
        for (const auto& c : simplicial_verify(*K, bounds(6)).checks)
            o.require(c, f);
        SimplicialChains C(K);
        CheckBuilder dd("∂²=0", "degree <= 6");
        for (int n = 0; n <= 6; ++n)
            for (const auto& x : C.basis(n, bounds(6)))
                dd.expect(C.d(C.differential(x)).is_zero(), [&] { return nlohmann::json(x.to_string()); });
        o.require(dd.done(), f);
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (const char* k : {"S1", "S2", "D1"})
        for (const char* l : {"S1", "S2", "D1"}) {
            EilenbergZilber ez(named_space(k), named_space(l));
            auto r = sdr_verify(ez.sdr(), bounds(4));
            o.require(r, std::string(k) + "x" + l,
                      {"f∇=1", "dφ+φd=∇f-1", "φ∇=0", "fφ=0", "φφ=0", "∇ comultiplicative"});
        }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const char* k : {"S0", "S1", "S2", "D1", "S1vS1", "D2"}) {
        JamesModel m(named_space(k));
        auto r = suspension_product_verify(m, bounds(5));
        for (const auto& c : r.checks)
            o.require(c, k);
    }
    return o;
}

// James checks shared by criteria 4, 5 and 7.
Outcome james_checks(int degree, int length, const std::vector<std::string>& fixtures,
                     const std::vector<std::string>& ids) {
    Outcome o;
    for (const auto& k : fixtures) {
        JamesModel m(named_space(k));
        o.require(james_verify(m, bounds(degree, length)), k, ids);
    }
    return o;
}

const std::vector<std::string> kJamesFixtures{"S0", "D1", "S1", "S2", "S1vS1", "D2"};

Outcome criterion4() {
    return james_checks(5, 3, kJamesFixtures, {"ξ twisting cochain", "α comultiplicative"});
}

Outcome criterion5() {
    return james_checks(6, 3, {"S1", "S2", "S1vS1", "D1", "S0"},
                        {"α̂ bijection on bases", "α̂ chain map", "α̂ comultiplicative", "ψ coassociative"});
}

Outcome criterion6() {
    Outcome o;
    auto ranks = [](const ChainComplex& C, int hi, const Bounds& b) {
        std::vector<long long> r;
        for (const auto& g : homology(C, 0, hi, b))
            r.push_back(g.rank);
        return r;
    };
    auto expect = [&](const std::string& what, std::vector<long long> got, std::vector<long long> want) {
        ++o.cases;
        if (got != want) {
            std::ostringstream s;
            s << what << ": got";
            for (auto v : got)
                s << " " << v;
            o.fail(s.str());
        }
    };
    JamesModel s1(sphere(1)), s2(sphere(2));
    // degree k needs words of length k + 1 for the boundaries into degree k
    expect("H(ΩC(ES1))", ranks(*s1.omega(), 6, bounds(6, 7)), {1, 1, 1, 1, 1, 1, 1});
    expect("H(ΩC(ES2))", ranks(*s2.omega(), 6, bounds(6, 7)), {1, 0, 1, 0, 1, 0, 1});
    expect("H(C(G+ES1)), words <= 4", ranks(*s1.monoid_chains(), 4, bounds(4, 4)), {1, 1, 1, 1, 1});
    return o;
}

Outcome criterion7() { return james_checks(5, 3, kJamesFixtures, {"γα=C(η)", "γ chain map"}); }

Outcome criterion8() {
    Outcome o;
    for (const char* k : {"S1", "S1vS1"}) {
        SzczarbaModel m(std::make_shared<JamesModel>(named_space(k)));
        auto r = szczarba_verify(m, bounds(4, 2), 6);
        o.require(r, k,
                  {"D^n_{0,1}=id", "D^n_{0,i} begins with a degeneracy for i>=2", "D^n_{0,i} has no d_0",
                   "θ comultiplicative"});
    }
    // the raw sum needs cells (1,x) in every dimension up to 5
    for (const char* k : {"S1", "S1vS1", "S2", "S3", "S4", "S1xS1", "S1xS2"}) {
        SzczarbaModel m(std::make_shared<JamesModel>(named_space(k)));
        const auto& CE = *m.james().suspension_chains();
        CheckBuilder raw("raw t = (-1)^{n+1}τ^{-1}", "n <= 5");
        for (int n = 1; n <= 5; ++n)
            for (const auto& c : CE.basis(n, bounds(5)))
                raw.expect(m.t_raw(c) == m.t_closed(c), [&] { return nlohmann::json(c.to_string()); });
        o.require(raw.done(), k);
    }
    return o;
}

std::string signed_status;

Outcome criterion9() {
    Outcome o;
    long long signed_pass = 0, signed_total = 0;
    for (const char* a : {"S1", "S2"})
        for (const char* b : {"S1", "S2"}) {
            Milgram m(std::make_shared<SimplicialChains>(named_space(a)),
                      std::make_shared<SimplicialChains>(named_space(b)));
            // every word of length <= 3 has degree <= 9 over these pairs
            auto r = milgram_verify(m, bounds(9, 3));
            const std::string where = std::string(a) + "," + b;
            o.require(r, where, {"qσ=1", "qh=0", "hσ=0", "h²=0", "dh+hd=σq-1 mod 2"});
            for (const auto& c : r.checks)
                if (c.id == "dh+hd=σq-1 (signed)") {
                    ++signed_total;
                    signed_pass += c.pass;
                }
        }
    signed_status = "signed identity over Z (reported): " + std::to_string(signed_pass) + "/" +
                    std::to_string(signed_total) + " pairs pass";
    return o;
}

Outcome criterion10() {
    Outcome o;
    JamesModel m(standard_simplex(1));
    Label e = Label::of_cell(m.suspension()->suspend(standard_simplex(1)->generator("v01")));
    Label w = Label::cobar({e});
    ++o.cases;
    if (m.psi(w) == m.naive_diagonal(w))
        o.fail("ψ agrees with q∘Ω(Δ) on " + w.to_string());
    // the difference comes from the second perturbation term
    Label z = Label::of_cell(m.eilenberg_zilber().product()->diagonal(e.cell));
    Chain f2 = apply_linear([&](const Label& u) { return m.milgram().q(u); }, m.perturbation().F(z, 2));
    ++o.cases;
    if (f2.is_zero())
        o.fail("q(F_2) vanishes on Δ" + e.to_string());
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "simplicial identities and d^2 = 0 on the fixtures, degree <= 6", criterion1},
        {2, "Eilenberg-Zilber data on C(KxL), K,L in {S1,S2,D1}, degree <= 4", criterion2},
        {3, "closed forms for the perturbation on (1,x)x(1,y), degree <= 5", criterion3},
        {4, "xi twisting and alpha comultiplicative, degree <= 5, S0 and D1 included", criterion4},
        {5, "Bott-Samelson map and psi coassociativity, degree <= 6, words <= 3", criterion5},
        {6, "homology of Omega C(ES1), Omega C(ES2) and bounded C(G+ES1)", criterion6},
        {7, "gamma alpha = C(eta) and gamma a chain map, degree <= 5", criterion7},
        {8, "Szczarba operators n <= 6, raw sum n <= 5, theta comultiplicative", criterion8},
        {9, "Milgram retraction on sphere pairs, words <= 3, homotopy mod 2", criterion9},
        {10, "psi differs from q Omega(Delta) on the interval", criterion10},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
                  << o.cases << " cases, " << std::fixed << std::setprecision(1) << secs << " s)";
        if (c.number == 9 && !signed_status.empty())
            std::cout << "; " << signed_status;
        if (!o.pass)
            std::cout << "\n    " << o.detail;
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
