#include "jcm/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jcm {

namespace {

std::strong_ordering compare_vec(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string degens_prefix(const std::vector<int>& degens) {
    std::string out;
    for (int j : degens)
        out += "s" + std::to_string(j);
    return out;
}

// Section of the epimorphism with repeat set T: the first preimage of each
// target vertex.
std::vector<int> epi_section(int n, const std::vector<int>& degens) {
    std::vector<int> epi = epi_from_degens(n, degens);
    std::vector<int> section;
    for (int t = 0; t <= n; ++t)
        if (t == 0 || epi[t] != epi[t - 1])
            section.push_back(t);
    return section;
}

std::vector<int> sorted_decreasing(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

int Simplex::dim() const { return core->dim + static_cast<int>(degens.size()); }

std::string Simplex::to_string() const {
    if (degens.empty())
        return core->to_string();
    return degens_prefix(degens) + "(" + core->to_string() + ")";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (a.core != b.core) {
        if (auto c = compare_cores(*a.core, *b.core); c != 0)
            return c;
    }
    return compare_vec(a.degens, b.degens);
}

std::strong_ordering compare_cores(const Core& a, const Core& b) {
    if (&a == &b)
        return std::strong_ordering::equal;
    if (auto c = a.kind <=> b.kind; c != 0)
        return c;
    if (auto c = a.dim <=> b.dim; c != 0)
        return c;
    if (auto c = a.name <=> b.name; c != 0)
        return c;
    if (auto c = a.parts.size() <=> b.parts.size(); c != 0)
        return c;
    for (std::size_t k = 0; k < a.parts.size(); ++k)
        if (auto c = a.parts[k] <=> b.parts[k]; c != 0)
            return c;
    return compare_vec(a.powers, b.powers);
}

std::string Core::to_string() const {
    switch (kind) {
    case CoreKind::Generator:
        return name;
    case CoreKind::SuspensionBase:
        return "*";
    case CoreKind::Suspension:
        return "(1," + parts[0].to_string() + ")";
    case CoreKind::Pair:
        return "(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
    case CoreKind::Word: {
        if (parts.empty())
            return "e";
        std::string out;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (k > 0)
                out += "·";
            out += "tau(" + parts[k].to_string() + ")";
            if (powers[k] < 0)
                out += "^-1";
        }
        return out;
    }
    }
    return "?";
}

Simplex make_simplex(CorePtr core, std::vector<int> degens) {
    return Simplex{std::move(core), std::move(degens)};
}

// ---------------------------------------------------------------------------
// Generic operator evaluation.

std::vector<Simplex> SimplicialSet::nondegenerate_bounded(int n, int) const {
    auto all = nondegenerate(n);
    if (!all)
        throw std::invalid_argument(name() + " has infinitely many simplices in dimension " +
                                    std::to_string(n) + "; a word-length bound is required");
    return *all;
}

Simplex SimplicialSet::basepoint(int n) const {
    std::vector<int> degens;
    for (int j = n - 1; j >= 0; --j)
        degens.push_back(j);
    return make_simplex(base_core(), std::move(degens));
}

bool SimplicialSet::is_basepoint(const Simplex& x) const {
    return compare_cores(*x.core, *base_core()) == 0;
}

bool SimplicialSet::is_reduced() const {
    auto v = nondegenerate(0);
    return v && v->size() == 1;
}

Simplex SimplicialSet::apply(const SimplicialOperator& op, const Simplex& x) const {
    if (op.source_dim() != x.dim())
        throw std::invalid_argument("operator of source dimension " + std::to_string(op.source_dim()) +
                                    " applied to a simplex of dimension " + std::to_string(x.dim()));
    if (op.is_identity())
        return x;
    // x = K(eta)(core); the composite eta o theta factors as mono o epi.
    const std::vector<int> eta = epi_from_degens(x.dim(), x.degens);
    std::vector<int> comp(op.map().size());
    for (std::size_t t = 0; t < comp.size(); ++t)
        comp[t] = eta[op.map()[t]];
    std::vector<int> image = comp;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<int> new_epi(comp.size());
    for (std::size_t t = 0; t < comp.size(); ++t)
        new_epi[t] = static_cast<int>(std::lower_bound(image.begin(), image.end(), comp[t]) - image.begin());

    const int p = x.core->dim;
    std::vector<bool> hit(p + 1, false);
    for (int v : image)
        hit[v] = true;
    Simplex y = make_simplex(x.core);
    for (int i = p; i >= 0; --i) {
        if (hit[i])
            continue;
        if (y.degens.empty()) {
            y = core_face(*y.core, i);
        } else {
            y = apply(SimplicialOperator::face(i, y.dim()), y);
        }
    }
    return degenerate(y, degens_from_epi(new_epi));
}

Simplex SimplicialSet::degenerate(const Simplex& x, const std::vector<int>& degens) const {
    if (degens.empty())
        return x;
    const int m = x.dim() + static_cast<int>(degens.size());
    const std::vector<int> outer = epi_from_degens(m, degens);
    const std::vector<int> inner = epi_from_degens(x.dim(), x.degens);
    std::vector<int> total(outer.size());
    for (std::size_t t = 0; t < outer.size(); ++t)
        total[t] = inner[outer[t]];
    return make_simplex(x.core, degens_from_epi(total));
}

Simplex SimplicialSet::face(int i, const Simplex& x) const {
    return apply(SimplicialOperator::face(i, x.dim()), x);
}

Simplex SimplicialSet::degeneracy(int j, const Simplex& x) const {
    if (j < 0 || j > x.dim())
        throw std::invalid_argument("degeneracy index out of range");
    return degenerate(x, {j});
}

Simplex SimplicialSet::front(int i, const Simplex& x) const {
    std::vector<int> map(i + 1);
    for (int t = 0; t <= i; ++t)
        map[t] = t;
    return apply(SimplicialOperator::from_map(x.dim(), map), x);
}

Simplex SimplicialSet::back(int j, const Simplex& x) const {
    const int n = x.dim();
    std::vector<int> map(j + 1);
    for (int t = 0; t <= j; ++t)
        map[t] = n - j + t;
    return apply(SimplicialOperator::from_map(n, map), x);
}

Simplex SimplicialSet::parse(const std::string& text) const { return resolve(parse_simplex_syntax(text)); }

bool is_degenerate_by_faces(const SimplicialSet& set, const Simplex& x) {
    for (int i = 0; i < x.dim(); ++i)
        if (set.degeneracy(i, set.face(i, x)) == x)
            return true;
    return false;
}

// ---------------------------------------------------------------------------

FiniteSimplicialSet::FiniteSimplicialSet(std::string name, std::string basepoint,
                                         std::vector<GeneratorSpec> generators)
    : name_(std::move(name)), specs_(std::move(generators)) {
    base_ = std::make_shared<Core>(Core{CoreKind::Generator, 0, basepoint, {}, {}});
    entries_[basepoint] = Entry{base_, {}};
    bool saw_base = false;
    for (const auto& g : specs_) {
        if (g.id == basepoint) {
            if (g.dim != 0)
                throw std::invalid_argument("basepoint must be a vertex");
            saw_base = true;
            continue;
        }
        if (g.dim < 0)
            throw std::invalid_argument("generator " + g.id + " has negative dimension");
        if (entries_.count(g.id))
            throw std::invalid_argument("duplicate generator " + g.id);
        entries_[g.id] = Entry{std::make_shared<Core>(Core{CoreKind::Generator, g.dim, g.id, {}, {}}), {}};
    }
    (void)saw_base;
    by_dim_[0].push_back(make_simplex(base_));
    // Faces reference generators by id, so resolve them after all cores exist.
    for (const auto& g : specs_) {
        if (g.id == basepoint)
            continue;
        Entry& e = entries_.at(g.id);
        if (g.dim == 0) {
            if (!g.faces.empty())
                throw std::invalid_argument("vertex " + g.id + " cannot have faces");
        } else if (static_cast<int>(g.faces.size()) != g.dim + 1) {
            throw std::invalid_argument("generator " + g.id + " needs " + std::to_string(g.dim + 1) + " faces");
        }
        for (const auto& [ref, degens] : g.faces) {
            auto it = entries_.find(ref);
            if (it == entries_.end())
                throw std::invalid_argument("face of " + g.id + " references unknown generator " + ref);
            for (std::size_t k = 0; k < degens.size(); ++k)
                if (degens[k] < 0 || (k > 0 && degens[k] >= degens[k - 1]))
                    throw std::invalid_argument("degeneracy word in a face of " + g.id +
                                                " must be strictly decreasing");
            Simplex s = make_simplex(it->second.core, degens);
            if (!degens.empty() && degens.front() >= s.dim())
                throw std::invalid_argument("degeneracy index too large in a face of " + g.id);
            if (s.dim() != g.dim - 1)
                throw std::invalid_argument("face of " + g.id + " has the wrong dimension");
            e.faces.push_back(std::move(s));
        }
        by_dim_[g.dim].push_back(make_simplex(e.core));
        top_ = std::max(top_, g.dim);
    }
    for (auto& [d, v] : by_dim_)
        std::sort(v.begin(), v.end());
    for (const auto& [id, e] : entries_) {
        const Simplex x = make_simplex(e.core);
        const int n = x.dim();
        for (int j = 1; j <= n && n >= 2; ++j)
            for (int i = 0; i < j; ++i)
                if (face(i, face(j, x)) != face(j - 1, face(i, x)))
                    throw std::invalid_argument("face identity d" + std::to_string(i) + "d" + std::to_string(j) +
                                                " fails on " + id);
    }
}

Simplex FiniteSimplicialSet::core_face(const Core& c, int i) const {
    const Entry& e = entries_.at(c.name);
    if (i < 0 || i >= static_cast<int>(e.faces.size()))
        throw std::invalid_argument("face index out of range for " + c.name);
    return e.faces[i];
}

std::optional<std::vector<Simplex>> FiniteSimplicialSet::nondegenerate(int n) const {
    auto it = by_dim_.find(n);
    if (it == by_dim_.end())
        return std::vector<Simplex>{};
    return it->second;
}

Simplex FiniteSimplicialSet::generator(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end())
        throw std::invalid_argument("unknown generator " + id + " in " + name_);
    return make_simplex(it->second.core);
}

Simplex FiniteSimplicialSet::resolve(const SimplexSyntax& s) const {
    switch (s.kind) {
    case SimplexSyntax::Kind::Name:
        return generator(s.name);
    case SimplexSyntax::Kind::Star:
        return basepoint(s.value);
    case SimplexSyntax::Kind::Degenerate:
        return degenerate(resolve(s.items.at(0)), sorted_decreasing(s.degens));
    default:
        throw std::invalid_argument("expression does not denote a simplex of " + name_);
    }
}

// ---------------------------------------------------------------------------

Suspension::Suspension(SetPtr base)
    : base_(std::move(base)), b0_(std::make_shared<Core>(Core{CoreKind::SuspensionBase, 0, "", {}, {}})) {}

Simplex Suspension::suspend(const Simplex& x) const {
    if (base_->is_basepoint(x))
        return basepoint(x.dim() + 1);
    std::vector<int> shifted;
    for (int j : x.degens)
        shifted.push_back(j + 1);
    auto core = std::make_shared<Core>(Core{CoreKind::Suspension, x.core->dim + 1, "", {make_simplex(x.core)}, {}});
    return make_simplex(std::move(core), std::move(shifted));
}

Simplex Suspension::pair(int i, const Simplex& x) const {
    if (i < 1)
        throw std::invalid_argument("suspension pair needs i >= 1");
    Simplex y = suspend(x);
    for (int k = 1; k < i; ++k)
        y = degeneracy(0, y);
    return y;
}

std::optional<Simplex> Suspension::desuspend(const Simplex& x) const {
    if (x.core->kind != CoreKind::Suspension)
        return std::nullopt;
    std::vector<int> shifted;
    for (int j : x.degens) {
        if (j == 0)
            return std::nullopt;
        shifted.push_back(j - 1);
    }
    return base_->degenerate(x.core->parts[0], shifted);
}

Simplex Suspension::core_face(const Core& c, int i) const {
    const Simplex& x = c.parts.at(0);
    const int n = x.dim();
    if (i < 0 || i > n + 1)
        throw std::invalid_argument("face index out of range in suspension");
    if (i == 0)
        return basepoint(n);
    if (n == 0)
        return basepoint(0);
    return suspend(base_->face(i - 1, x));
}

std::optional<std::vector<Simplex>> Suspension::nondegenerate(int n) const {
    if (n == 0)
        return std::vector<Simplex>{make_simplex(b0_)};
    auto below = base_->nondegenerate(n - 1);
    if (!below)
        return std::nullopt;
    std::vector<Simplex> out;
    for (const auto& x : *below)
        if (!base_->is_basepoint(x))
            out.push_back(suspend(x));
    return out;
}

std::optional<int> Suspension::top_dimension() const {
    auto t = base_->top_dimension();
    if (!t)
        return std::nullopt;
    return *t + 1;
}

Simplex Suspension::resolve(const SimplexSyntax& s) const {
    switch (s.kind) {
    case SimplexSyntax::Kind::Star:
        return basepoint(s.value);
    case SimplexSyntax::Kind::Degenerate:
        return degenerate(resolve(s.items.at(0)), sorted_decreasing(s.degens));
    case SimplexSyntax::Kind::Tuple:
        if (s.items.size() == 2 && s.items[0].kind == SimplexSyntax::Kind::Integer)
            return pair(s.items[0].value, base_->resolve(s.items[1]));
        break;
    default:
        break;
    }
    throw std::invalid_argument("expression does not denote a simplex of " + name());
}

// ---------------------------------------------------------------------------

Product::Product(SetPtr left, SetPtr right) : left_(std::move(left)), right_(std::move(right)) {
    base_ = std::make_shared<Core>(
        Core{CoreKind::Pair, 0, "", {left_->basepoint(0), right_->basepoint(0)}, {}});
}

Simplex Product::make_pair(const Simplex& a, const Simplex& b) const {
    if (a.dim() != b.dim())
        throw std::invalid_argument("product pair of simplices of different dimensions");
    const int n = a.dim();
    std::vector<int> common;
    std::set_intersection(a.degens.begin(), a.degens.end(), b.degens.begin(), b.degens.end(),
                          std::back_inserter(common), std::greater<>());
    if (common.empty())
        return make_simplex(std::make_shared<Core>(Core{CoreKind::Pair, n, "", {a, b}, {}}));
    auto iota = SimplicialOperator::from_map(n, epi_section(n, common));
    Simplex ca = left_->apply(iota, a), cb = right_->apply(iota, b);
    auto core = std::make_shared<Core>(Core{CoreKind::Pair, ca.dim(), "", {ca, cb}, {}});
    return make_simplex(std::move(core), std::move(common));
}

std::pair<Simplex, Simplex> Product::components(const Simplex& z) const {
    const Core& c = *z.core;
    return {left_->degenerate(c.parts[0], z.degens), right_->degenerate(c.parts[1], z.degens)};
}

Simplex Product::core_face(const Core& c, int i) const {
    return make_pair(left_->face(i, c.parts[0]), right_->face(i, c.parts[1]));
}

namespace {

void subsets_of_size(int universe, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        std::vector<int> d = cur;
        std::sort(d.begin(), d.end(), std::greater<>());
        out.push_back(std::move(d));
        return;
    }
    for (int t = start; t < universe; ++t) {
        cur.push_back(t);
        subsets_of_size(universe, k, t + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> degeneracy_words(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (k >= 0 && k <= n)
        subsets_of_size(n, k, 0, cur, out);
    return out;
}

std::vector<Simplex> all_simplices(const SimplicialSet& set, int n, std::optional<int> max_word_length) {
    std::vector<Simplex> out;
    for (int d = 0; d <= n; ++d) {
        std::vector<Simplex> base;
        if (max_word_length) {
            base = set.nondegenerate_bounded(d, *max_word_length);
        } else {
            auto v = set.nondegenerate(d);
            if (!v)
                throw std::invalid_argument(set.name() + " needs a word-length bound");
            base = *v;
        }
        for (const auto& words : degeneracy_words(n, n - d))
            for (const auto& x : base)
                out.push_back(make_simplex(x.core, words));
    }
    return out;
}

std::vector<Simplex> Product::enumerate(int n, std::optional<int> bound) const {
    std::vector<Simplex> out;
    auto as = all_simplices(*left_, n, bound);
    auto bs = all_simplices(*right_, n, bound);
    for (const auto& a : as)
        for (const auto& b : bs) {
            std::vector<int> common;
            std::set_intersection(a.degens.begin(), a.degens.end(), b.degens.begin(), b.degens.end(),
                                  std::back_inserter(common), std::greater<>());
            if (common.empty())
                out.push_back(make_pair(a, b));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Simplex>> Product::nondegenerate(int n) const {
    if (!left_->nondegenerate(0) || !right_->nondegenerate(0))
        return std::nullopt;
    try {
        return enumerate(n, std::nullopt);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::vector<Simplex> Product::nondegenerate_bounded(int n, int max_word_length) const {
    return enumerate(n, max_word_length);
}

std::optional<int> Product::top_dimension() const {
    auto a = left_->top_dimension(), b = right_->top_dimension();
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

Simplex Product::resolve(const SimplexSyntax& s) const {
    switch (s.kind) {
    case SimplexSyntax::Kind::Star:
        return basepoint(s.value);
    case SimplexSyntax::Kind::Degenerate:
        return degenerate(resolve(s.items.at(0)), sorted_decreasing(s.degens));
    case SimplexSyntax::Kind::Tuple:
        if (s.items.size() == 2)
            return make_pair(left_->resolve(s.items[0]), right_->resolve(s.items[1]));
        break;
    default:
        break;
    }
    throw std::invalid_argument("expression does not denote a simplex of " + name());
}

// ---------------------------------------------------------------------------

WordComplex::WordComplex(SetPtr letters, Kind kind)
    : letters_(std::move(letters)), kind_(kind),
      identity_(std::make_shared<Core>(Core{CoreKind::Word, 0, "", {}, {}})) {
    if (kind_ == Kind::Group && !letters_->is_reduced())
        throw std::invalid_argument("the loop group needs a reduced simplicial set; " + letters_->name() +
                                    " is not reduced");
}

bool WordComplex::trivial_letter(const Simplex& z) const {
    return std::find(z.degens.begin(), z.degens.end(), 0) != z.degens.end();
}

Simplex WordComplex::make_word(int n, std::vector<Letter> letters) const {
    std::vector<Letter> reduced;
    for (auto& l : letters) {
        if (l.first.dim() != n + 1)
            throw std::invalid_argument("letter of the wrong dimension in a word");
        if (trivial_letter(l.first))
            continue;
        if (!reduced.empty() && reduced.back().second == -l.second && reduced.back().first == l.first) {
            reduced.pop_back();
            continue;
        }
        reduced.push_back(std::move(l));
    }
    if (reduced.empty())
        return basepoint(n);
    if (kind_ == Kind::Monoid)
        for (const auto& l : reduced)
            if (l.second != 1)
                throw std::invalid_argument("inverse letter " + l.first.to_string() + " in the monoid");
    std::vector<int> common;
    for (int t = n - 1; t >= 0; --t) {
        bool all = true;
        for (const auto& l : reduced)
            if (std::find(l.first.degens.begin(), l.first.degens.end(), t + 1) == l.first.degens.end()) {
                all = false;
                break;
            }
        if (all)
            common.push_back(t);
    }
    auto core = std::make_shared<Core>(Core{CoreKind::Word, n - static_cast<int>(common.size()), "", {}, {}});
    if (common.empty()) {
        for (auto& l : reduced) {
            core->parts.push_back(std::move(l.first));
            core->powers.push_back(l.second);
        }
    } else {
        auto iota = SimplicialOperator::from_map(n, epi_section(n, common)).derived();
        for (auto& l : reduced) {
            core->parts.push_back(letters_->apply(iota, l.first));
            core->powers.push_back(l.second);
        }
    }
    return make_simplex(std::move(core), std::move(common));
}

Simplex WordComplex::tau(const Simplex& z, int power) const {
    if (z.dim() < 1)
        throw std::invalid_argument("tau needs a simplex of positive dimension");
    return make_word(z.dim() - 1, {{z, power}});
}

std::vector<WordComplex::Letter> WordComplex::letters_of(const Simplex& w) const {
    std::vector<int> shifted;
    for (int t : w.degens)
        shifted.push_back(t + 1);
    std::vector<Letter> out;
    for (std::size_t k = 0; k < w.core->parts.size(); ++k)
        out.emplace_back(letters_->degenerate(w.core->parts[k], shifted), w.core->powers[k]);
    return out;
}

Simplex WordComplex::multiply(const Simplex& u, const Simplex& v) const {
    if (u.dim() != v.dim())
        throw std::invalid_argument("multiplying words of different dimensions");
    auto letters = letters_of(u);
    auto more = letters_of(v);
    letters.insert(letters.end(), more.begin(), more.end());
    return make_word(u.dim(), std::move(letters));
}

Simplex WordComplex::inverse(const Simplex& w) const {
    if (kind_ == Kind::Monoid && !w.core->parts.empty())
        throw std::invalid_argument("inverse of a nontrivial monoid element");
    auto letters = letters_of(w);
    std::reverse(letters.begin(), letters.end());
    for (auto& l : letters)
        l.second = -l.second;
    return make_word(w.dim(), std::move(letters));
}

std::size_t WordComplex::word_length(const Simplex& w) const { return w.core->parts.size(); }

Simplex WordComplex::core_face(const Core& c, int i) const {
    const int n = c.dim;
    std::vector<Letter> out;
    for (std::size_t k = 0; k < c.parts.size(); ++k) {
        const Simplex& x = c.parts[k];
        const int p = c.powers[k];
        if (i > 0) {
            out.emplace_back(letters_->face(i + 1, x), p);
            continue;
        }
        // d0 tau(x) = tau(d0 x)^-1 tau(d1 x)
        Letter a{letters_->face(0, x), -1}, b{letters_->face(1, x), 1};
        if (p > 0) {
            out.push_back(a);
            out.push_back(b);
        } else {
            out.emplace_back(b.first, -1);
            out.emplace_back(a.first, 1);
        }
    }
    return make_word(n - 1, std::move(out));
}

std::optional<std::vector<Simplex>> WordComplex::nondegenerate(int n) const {
    if (n == 0 && letters_->nondegenerate(1) && letters_->nondegenerate(1)->empty())
        return std::vector<Simplex>{basepoint(0)};
    return std::nullopt;
}

std::vector<Simplex> WordComplex::nondegenerate_bounded(int n, int max_word_length) const {
    std::vector<Simplex> letters;
    for (auto& z : all_simplices(*letters_, n + 1, std::nullopt))
        if (!trivial_letter(z))
            letters.push_back(std::move(z));
    std::vector<Letter> alphabet;
    for (const auto& z : letters) {
        alphabet.emplace_back(z, 1);
        if (kind_ == Kind::Group)
            alphabet.emplace_back(z, -1);
    }
    std::set<Simplex> found;
    if (n == 0)
        found.insert(basepoint(0));
    std::vector<std::vector<Letter>> layer{{}};
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : layer)
            for (const auto& l : alphabet) {
                if (!w.empty() && w.back().first == l.first && w.back().second == -l.second)
                    continue;
                auto v = w;
                v.push_back(l);
                Simplex s = make_word(n, v);
                if (!s.is_degenerate())
                    found.insert(s);
                next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return {found.begin(), found.end()};
}

Simplex WordComplex::resolve(const SimplexSyntax& s) const {
    switch (s.kind) {
    case SimplexSyntax::Kind::Identity:
    case SimplexSyntax::Kind::Star:
        return basepoint(s.value);
    case SimplexSyntax::Kind::Degenerate:
        return degenerate(resolve(s.items.at(0)), sorted_decreasing(s.degens));
    case SimplexSyntax::Kind::Word: {
        std::vector<Letter> letters;
        int n = -1;
        for (std::size_t k = 0; k < s.items.size(); ++k) {
            Simplex z = letters_->resolve(s.items[k]);
            if (n >= 0 && z.dim() - 1 != n)
                throw std::invalid_argument("letters of different dimensions in a word");
            n = z.dim() - 1;
            letters.emplace_back(std::move(z), s.powers[k]);
        }
        return make_word(n, std::move(letters));
    }
    default:
        break;
    }
    throw std::invalid_argument("expression does not denote a simplex of " + name());
}

Simplex james_unit(const Suspension& ek, const WordComplex& monoid, const Simplex& x) {
    return monoid.tau(ek.suspend(x));
}

// ---------------------------------------------------------------------------
// Textual syntax.

namespace {

struct SyntaxParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse simplex '" + text + "' at offset " + std::to_string(pos) + ": " +
                                    what);
    }
    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(const std::string& tok) {
        skip();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok))
            fail("expected '" + tok + "'");
    }
    int integer() {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-')
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos || (pos == start + 1 && text[start] == '-'))
            fail("expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }
    bool at_identifier() {
        skip();
        return pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_');
    }
    std::string identifier() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
            ++pos;
        if (start == pos)
            fail("expected a name");
        return text.substr(start, pos - start);
    }

    // A degeneracy prefix such as "s2s0(" ; returns false without consuming otherwise.
    bool degeneracy_prefix(std::vector<int>& degens) {
        skip();
        std::size_t p = pos;
        std::vector<int> out;
        while (p < text.size() && text[p] == 's') {
            std::size_t q = p + 1;
            if (q < text.size() && text[q] == '_')
                ++q;
            std::size_t start = q;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q])))
                ++q;
            if (q == start)
                return false;
            out.push_back(std::stoi(text.substr(start, q - start)));
            p = q;
        }
        if (out.empty() || p >= text.size() || text[p] != '(')
            return false;
        pos = p + 1;
        degens = std::move(out);
        return true;
    }

    SimplexSyntax word_factor() {
        expect("tau");
        expect("(");
        SimplexSyntax inner = simplex();
        expect(")");
        int power = 1;
        if (eat("^")) {
            power = integer();
            if (power != 1 && power != -1)
                fail("only exponents 1 and -1 are supported");
        }
        SimplexSyntax w;
        w.kind = SimplexSyntax::Kind::Word;
        w.items.push_back(std::move(inner));
        w.powers.push_back(power);
        return w;
    }

    SimplexSyntax simplex() {
        skip();
        std::vector<int> degens;
        if (text.compare(pos, 3, "tau") == 0 && (pos + 3 < text.size()) && text[pos + 3] == '(') {
            SimplexSyntax w = word_factor();
            for (;;) {
                std::size_t save = pos;
                eat("·");
                eat(".");
                skip();
                if (text.compare(pos, 4, "tau(") == 0) {
                    SimplexSyntax more = word_factor();
                    w.items.push_back(std::move(more.items[0]));
                    w.powers.push_back(more.powers[0]);
                } else {
                    pos = save;
                    break;
                }
            }
            return w;
        }
        if (degeneracy_prefix(degens)) {
            SimplexSyntax s;
            s.kind = SimplexSyntax::Kind::Degenerate;
            s.degens = std::move(degens);
            s.items.push_back(simplex());
            expect(")");
            return s;
        }
        if (eat("*")) {
            SimplexSyntax s;
            s.kind = SimplexSyntax::Kind::Star;
            if (eat("_"))
                s.value = integer();
            return s;
        }
        if (eat("(")) {
            SimplexSyntax s;
            s.kind = SimplexSyntax::Kind::Tuple;
            s.items.push_back(simplex_or_integer());
            expect(",");
            s.items.push_back(simplex());
            expect(")");
            return s;
        }
        if (at_identifier()) {
            SimplexSyntax s;
            s.name = identifier();
            if (s.name == "e") {
                s.kind = SimplexSyntax::Kind::Identity;
                if (eat("_"))
                    s.value = integer();
            }
            return s;
        }
        fail("unexpected character");
    }

    SimplexSyntax simplex_or_integer() {
        skip();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            SimplexSyntax s;
            s.kind = SimplexSyntax::Kind::Integer;
            s.value = integer();
            return s;
        }
        return simplex();
    }
};

} // namespace

SimplexSyntax parse_simplex_syntax(const std::string& text) {
    SyntaxParser p{text};
    SimplexSyntax s = p.simplex();
    p.skip();
    if (p.pos != text.size())
        p.fail("trailing characters");
    return s;
}

} // namespace jcm
