#include "jcm/spaces.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jcm {

using Spec = FiniteSimplicialSet::GeneratorSpec;

namespace {

std::vector<int> collapse_to_vertex(int dim) {
    std::vector<int> d;
    for (int j = dim - 1; j >= 0; --j)
        d.push_back(j);
    return d;
}

} // namespace

std::shared_ptr<const FiniteSimplicialSet> sphere(int n) {
    if (n < 0)
        throw std::invalid_argument("sphere dimension must be non-negative");
    if (n == 0)
        return std::make_shared<FiniteSimplicialSet>("S0", "k0", std::vector<Spec>{{"y", 0, {}}});
    Spec x{"x", n, {}};
    for (int i = 0; i <= n; ++i)
        x.faces.emplace_back("k0", collapse_to_vertex(n - 1));
    return std::make_shared<FiniteSimplicialSet>("S" + std::to_string(n), "k0", std::vector<Spec>{x});
}

std::shared_ptr<const FiniteSimplicialSet> standard_simplex(int n) {
    if (n < 0 || n > 9)
        throw std::invalid_argument("standard simplex dimension must lie in 0..9");
    std::vector<Spec> specs;
    auto label = [](const std::vector<int>& verts) {
        std::string s = "v";
        for (int v : verts)
            s += std::to_string(v);
        return s;
    };
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v <= n; ++v)
            if (mask & (1u << v))
                verts.push_back(v);
        Spec g{label(verts), static_cast<int>(verts.size()) - 1, {}};
        if (verts.size() > 1)
            for (std::size_t i = 0; i < verts.size(); ++i) {
                auto face = verts;
                face.erase(face.begin() + static_cast<long>(i));
                g.faces.emplace_back(label(face), std::vector<int>{});
            }
        specs.push_back(std::move(g));
    }
    return std::make_shared<FiniteSimplicialSet>("D" + std::to_string(n), "v0", std::move(specs));
}

std::shared_ptr<const FiniteSimplicialSet> wedge(const FiniteSimplicialSet& a, const FiniteSimplicialSet& b) {
    std::vector<Spec> specs;
    const std::string base = a.basepoint_id();
    auto rename = [&](const FiniteSimplicialSet& s, const std::string& suffix) {
        for (const auto& g : s.specs()) {
            if (g.id == s.basepoint_id())
                continue;
            Spec h{g.id + suffix, g.dim, {}};
            for (const auto& [ref, degens] : g.faces)
                h.faces.emplace_back(ref == s.basepoint_id() ? base : ref + suffix, degens);
            specs.push_back(std::move(h));
        }
    };
    rename(a, "_1");
    rename(b, "_2");
    return std::make_shared<FiniteSimplicialSet>(a.name() + "v" + b.name(), base, std::move(specs));
}

std::shared_ptr<const FiniteSimplicialSet> flatten(const SimplicialSet& set) {
    auto top = set.top_dimension();
    if (!top)
        throw std::invalid_argument(set.name() + " has no finite generator table");
    const std::string base = set.basepoint(0).to_string();
    std::vector<Spec> specs;
    for (int n = 0; n <= *top; ++n) {
        const auto cells = set.nondegenerate(n).value();
        for (const auto& x : cells) {
            if (set.is_basepoint(x))
                continue;
            Spec g{x.to_string(), n, {}};
            if (n > 0)
                for (int i = 0; i <= n; ++i) {
                    Simplex f = set.face(i, x);
                    g.faces.emplace_back(make_simplex(f.core).to_string(), f.degens);
                }
            specs.push_back(std::move(g));
        }
    }
    return std::make_shared<FiniteSimplicialSet>(set.name(), base, std::move(specs));
}

nlohmann::json fixture_to_json(const FiniteSimplicialSet& set) {
    nlohmann::json gens = nlohmann::json::array();
    gens.push_back({{"id", set.basepoint_id()}, {"dim", 0}, {"faces", nlohmann::json::array()}});
    for (const auto& g : set.specs()) {
        if (g.id == set.basepoint_id())
            continue;
        nlohmann::json faces = nlohmann::json::array();
        for (const auto& [ref, degens] : g.faces) {
            if (ref == set.basepoint_id())
                faces.push_back({{"basepoint", g.dim - 1}});
            else
                faces.push_back({{"gen", ref}, {"degens", degens}});
        }
        gens.push_back({{"id", g.id}, {"dim", g.dim}, {"faces", faces}});
    }
    return {{"name", set.name()}, {"basepoint", set.basepoint_id()}, {"generators", gens}};
}

std::shared_ptr<const FiniteSimplicialSet> fixture_from_json(const nlohmann::json& j) {
    try {
        const std::string base = j.at("basepoint").get<std::string>();
        std::vector<Spec> specs;
        for (const auto& g : j.at("generators")) {
            Spec s{g.at("id").get<std::string>(), g.at("dim").get<int>(), {}};
            if (g.contains("faces"))
                for (const auto& f : g.at("faces")) {
                    if (f.contains("basepoint")) {
                        s.faces.emplace_back(base, collapse_to_vertex(f.at("basepoint").get<int>()));
                    } else {
                        std::vector<int> degens;
                        if (f.contains("degens"))
                            degens = f.at("degens").get<std::vector<int>>();
                        s.faces.emplace_back(f.at("gen").get<std::string>(), degens);
                    }
                }
            specs.push_back(std::move(s));
        }
        return std::make_shared<FiniteSimplicialSet>(j.value("name", std::string("fixture")), base, std::move(specs));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed fixture JSON: ") + e.what());
    }
}

namespace {

std::shared_ptr<const FiniteSimplicialSet> finite_named(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'D') &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(name.substr(1));
        return name[0] == 'S' ? sphere(n) : standard_simplex(n);
    }
    auto v = name.find('v');
    if (v != std::string::npos && v > 0) {
        auto a = finite_named(name.substr(0, v));
        auto b = finite_named(name.substr(v + 1));
        if (a && b)
            return wedge(*a, *b);
    }
    return nullptr;
}

} // namespace

SetPtr named_space(const std::string& name) {
    if (name.empty())
        throw std::invalid_argument("empty fixture name");
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
        std::ifstream in(name);
        if (!in)
            throw std::invalid_argument("cannot open fixture file " + name);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("fixture file " + name + " is not JSON: " + e.what());
        }
        return fixture_from_json(j);
    }
    auto x = name.find('x');
    if (x != std::string::npos && x > 0)
        return std::make_shared<Product>(named_space(name.substr(0, x)), named_space(name.substr(x + 1)));
    if (name[0] == 'E' && name.size() > 1)
        return std::make_shared<Suspension>(named_space(name.substr(1)));
    if (auto f = finite_named(name))
        return f;
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

namespace {

struct ExprParser {
    std::istringstream in;
    std::string token() {
        std::string t;
        char c;
        while (in.get(c)) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!t.empty())
                    break;
                continue;
            }
            if (c == '(' || c == ')') {
                if (t.empty())
                    return std::string(1, c);
                in.unget();
                break;
            }
            t += c;
        }
        return t;
    }
    SetPtr expr() {
        std::string t = token();
        if (t == "(") {
            SetPtr s = expr();
            if (token() != ")")
                throw std::invalid_argument("unbalanced parentheses in space expression");
            return s;
        }
        auto number = [&] {
            std::string n = token();
            try {
                return std::stoi(n);
            } catch (...) {
                throw std::invalid_argument("expected a dimension, got '" + n + "'");
            }
        };
        if (t == "sphere")
            return sphere(number());
        if (t == "delta")
            return standard_simplex(number());
        if (t == "suspension")
            return std::make_shared<Suspension>(expr());
        if (t == "product") {
            SetPtr a = expr();
            return std::make_shared<Product>(a, expr());
        }
        if (t == "wedge") {
            SetPtr a = expr(), b = expr();
            auto fa = std::dynamic_pointer_cast<const FiniteSimplicialSet>(a);
            auto fb = std::dynamic_pointer_cast<const FiniteSimplicialSet>(b);
            return wedge(fa ? *fa : *flatten(*a), fb ? *fb : *flatten(*b));
        }
        if (t.empty())
            throw std::invalid_argument("empty space expression");
        return named_space(t);
    }
};

} // namespace

SetPtr space_from_expression(const std::string& text) {
    ExprParser p{std::istringstream(text)};
    SetPtr s = p.expr();
    if (!p.token().empty())
        throw std::invalid_argument("trailing input in space expression '" + text + "'");
    return s;
}

} // namespace jcm
