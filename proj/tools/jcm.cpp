#include "jcm/json_io.hpp"
#include "jcm/spaces.hpp"
#include "jcm/suites.hpp"
#include "jcm/szczarba.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace jcm;
using json = nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string fixture = "S1";
    std::string input;
    std::string json_out;
    std::vector<std::string> words;
    std::string map;
    std::string suite;
    int max_degree = 6;
    int max_word_length = 4;
    long long modulus = 0;
    std::uint64_t seed = 0;
    int n = -1;
    long long i = -1;
};

Bounds bounds_of(const Options& o) {
    Bounds b;
    b.max_degree = o.max_degree;
    b.max_word_length = o.max_word_length;
    return b;
}

void emit(const json& j, const Options& o) {
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!o.json_out.empty()) {
        std::ofstream out(o.json_out);
        if (!out)
            throw UsageError("cannot write " + o.json_out);
        out << text << "\n";
    }
}

std::pair<SetPtr, SetPtr> two_spaces(const std::string& fixture) {
    auto comma = fixture.find(',');
    if (comma == std::string::npos)
        throw UsageError("this map needs a pair fixture \"K,L\", got '" + fixture + "'");
    return {named_space(fixture.substr(0, comma)), named_space(fixture.substr(comma + 1))};
}

json operator_table(int n, long long only) {
    json rows = json::array();
    for (long long i = 1; i <= factorial(n - 1); ++i) {
        if (only > 0 && i != only)
            continue;
        rows.push_back({{"n", n}, {"i", i}, {"operator", szczarba_operator(n, i).to_string()},
                        {"epsilon", szczarba_sign(i, n)}});
    }
    return rows;
}

int cmd_build(const Options& o) {
    std::string expr;
    for (const auto& w : o.words)
        expr += (expr.empty() ? "" : " ") + w;
    SetPtr K = space_from_expression(expr);
    emit(fixture_to_json(*flatten(*K)), o);
    return kPass;
}

int cmd_eval(const Options& o) {
    const std::string& map = o.map;
    if (map == "d_operator") {
        if (o.n < 1)
            throw UsageError("d_operator needs --n >= 1");
        emit({{"map", map}, {"table", operator_table(o.n, o.i)}}, o);
        return kPass;
    }
    if (o.input.empty())
        throw UsageError("eval " + map + " needs --input");

    LabelShape shape;
    LinearMap f;
    // Everything the map closures refer to lives here.
    std::shared_ptr<void> keep;

    auto read_input = [&](const LabelShape& s) {
        if (o.input.size() > 5 && o.input.substr(o.input.size() - 5) == ".json") {
            std::ifstream in(o.input);
            if (!in)
                throw UsageError("cannot open " + o.input);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw UsageError(std::string("bad JSON in ") + o.input + ": " + e.what());
            }
            return chain_from_json(j, s);
        }
        // a bare letter stands for the one-letter word
        if (s.kind == LabelShape::Kind::Cobar && o.input.find('[') == std::string::npos)
            return Chain::of(parse_label("[" + o.input + "]", s));
        return Chain::of(parse_label(o.input, s));
    };

    if (map == "aw" || map == "ez" || map == "phi" || map == "F_k" || map == "Phi_k") {
        auto [K, L] = o.fixture.find(',') == std::string::npos
                          ? std::pair{named_space(o.fixture), named_space(o.fixture)}
                          : two_spaces(o.fixture);
        auto ez = std::make_shared<EilenbergZilber>(K, L);
        keep = ez;
        if (map == "ez") {
            shape = LabelShape::tensor({LabelShape::cell(K), LabelShape::cell(L)});
            f = [ez](const Label& l) { return ez->shuffle(l); };
        } else {
            shape = LabelShape::cell(ez->product());
            if (map == "aw")
                f = [ez](const Label& l) { return ez->aw(l); };
            else if (map == "phi")
                f = [ez](const Label& l) { return ez->phi(l); };
            else {
                auto gm = std::make_shared<GugenheimMunkholm>(ez->sdr());
                keep = std::make_shared<std::pair<decltype(ez), decltype(gm)>>(ez, gm);
                const int k = o.n;
                if (map == "F_k")
                    f = [gm, k](const Label& l) { return k >= 1 ? gm->F(l, k) : gm->F(l); };
                else
                    f = [gm, k](const Label& l) { return k >= 0 ? gm->Phi(l, k) : gm->Phi(l); };
            }
        }
    } else if (map == "q" || map == "h" || map == "sigma") {
        auto [K, L] = two_spaces(o.fixture);
        auto m = std::make_shared<Milgram>(std::make_shared<SimplicialChains>(K), std::make_shared<SimplicialChains>(L));
        keep = m;
        if (map == "sigma") {
            shape = LabelShape::tensor({LabelShape::cobar(LabelShape::cell(K)), LabelShape::cobar(LabelShape::cell(L))});
            f = [m](const Label& l) { return m->sigma(l); };
        } else {
            shape = LabelShape::cobar(LabelShape::tensor({LabelShape::cell(K), LabelShape::cell(L)}));
            if (map == "q")
                f = [m](const Label& l) { return m->q(l); };
            else
                f = [m](const Label& l) { return m->h(l); };
        }
    } else if (map == "alpha" || map == "alpha_hat" || map == "eta" || map == "psi" || map == "xi" ||
               map == "gamma" || map == "t_EK" || map == "theta") {
        if (o.fixture.find(',') != std::string::npos)
            throw UsageError(map + " takes a single fixture");
        SetPtr K = named_space(o.fixture);
        // maps with inputs in EK accept the suspension itself as the fixture
        const bool on_suspension = map != "alpha" && map != "eta" && map != "alpha_hat";
        if (auto E = std::dynamic_pointer_cast<const Suspension>(K); E && on_suspension)
            K = E->base();
        auto J = std::make_shared<JamesModel>(K);
        keep = J;
        const LabelShape cell_E = LabelShape::cell(J->suspension());
        if (map == "alpha" || map == "eta") {
            shape = LabelShape::cell(J->base(), true);
            f = map == "alpha" ? LinearMap([J](const Label& l) { return J->alpha(l); })
                               : LinearMap([J](const Label& l) { return J->eta(l); });
        } else if (map == "alpha_hat") {
            shape = LabelShape::free_word(J->base());
            f = [J](const Label& l) { return J->alpha_hat(l); };
        } else if (map == "psi" || map == "gamma") {
            shape = LabelShape::cobar(cell_E);
            f = map == "psi" ? LinearMap([J](const Label& l) { return J->psi(l); })
                             : LinearMap([J](const Label& l) { return J->gamma(l); });
        } else if (map == "xi") {
            shape = cell_E;
            f = [J](const Label& l) { return J->xi(l); };
        } else {
            auto S = std::make_shared<SzczarbaModel>(J);
            keep = S;
            if (map == "t_EK") {
                shape = cell_E;
                f = [S](const Label& l) { return S->t(l); };
            } else {
                shape = LabelShape::cobar(cell_E);
                f = [S](const Label& l) { return S->theta(l); };
            }
        }
    } else {
        throw UsageError("unknown map '" + map + "'");
    }

    Chain in = read_input(shape);
    Chain out = apply_linear(f, in);
    if (o.modulus >= 2)
        out = out.reduced_mod(o.modulus);
    emit({{"map", map}, {"fixture", o.fixture}, {"input", chain_to_json(in)}, {"output", chain_to_json(out)}}, o);
    return kPass;
}

int cmd_verify(const Options& o) {
    SuiteRequest r;
    r.suite = o.suite;
    r.fixture = o.fixture;
    r.bounds = bounds_of(o);
    r.modulus = o.modulus;
    r.seed = o.seed;
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = run_suite(r);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report.to_json(), o);
    std::cerr << report.suite << " on " << o.fixture << ": " << (report.passed() ? "pass" : "FAIL") << " in "
              << report.seconds << " s\n";
    return report.passed() ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chain-level models of the James map: build fixtures, evaluate maps, verify identities"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "Write a fixture as JSON from a space expression");
    build->add_option("expression", o.words, "e.g. sphere 2 | delta 1 | wedge (sphere 1) (sphere 1) | "
                                             "suspension (sphere 1) | product (sphere 1) (delta 1)")
        ->required();
    build->add_option("--json-out", o.json_out, "Also write the JSON here");

    auto* eval = app.add_subcommand("eval", "Evaluate one map on a label or a chain JSON file");
    eval->add_option("map", o.map,
                     "aw, ez, phi, F_k, Phi_k, alpha, alpha_hat, eta, psi, xi, gamma, q, sigma, h, t_EK, theta, "
                     "d_operator")
        ->required();
    eval->add_option("--fixture", o.fixture,
                     "Space name K, or \"K,L\" for maps on pairs; maps on EK also accept EK itself")
        ->capture_default_str();
    eval->add_option("--input", o.input, "Label in printed syntax, or a .json chain file");
    eval->add_option("--n", o.n, "Level of d_operator, or k for F_k/Phi_k (all k when omitted)");
    eval->add_option("--i", o.i, "Index of d_operator (whole table when omitted)");
    eval->add_option("--modulus", o.modulus, "Reduce the output mod m");
    eval->add_option("--json-out", o.json_out, "Also write the JSON here");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--fixture", o.fixture, "Space name, or \"K,L\" for ez-sdr, gm and milgram")
        ->capture_default_str();
    verify->add_option("--max-degree", o.max_degree)->capture_default_str()->check(CLI::Range(0, 12));
    verify->add_option("--max-word-length", o.max_word_length)->capture_default_str()->check(CLI::Range(1, 12));
    verify->add_option("--modulus", o.modulus, "0 for Z")->capture_default_str()->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", o.seed, "Seed for the sampled checks")->capture_default_str();
    verify->add_option("--json-out", o.json_out, "Also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    try {
        if (*build)
            return cmd_build(o);
        if (*eval)
            return cmd_eval(o);
        return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: bound exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
