#include "jcm/complexes.hpp"

#include <algorithm>
#include <stdexcept>

namespace jcm {

Chain ChainComplex::d(const Chain& c) const {
    return apply_linear([this](const Label& l) { return differential(l); }, c);
}

Chain Coalgebra::diagonal(const Chain& c) const {
    return apply_linear([this](const Label& l) { return diagonal(l); }, c);
}

Chain Coalgebra::reduced_diagonal(const Label& c) const {
    Chain out = diagonal(c);
    const Label one = unit();
    out.add(Label::tensor(c, one), -1);
    out.add(Label::tensor(one, c), -1);
    return out;
}

bool Coalgebra::is_connected(const Bounds& bounds) const {
    auto b = basis(0, bounds);
    return b.size() == 1 && b[0] == unit();
}

Chain Algebra::product(const Chain& a, const Chain& b) const {
    Chain out(a.modulus() ? a.modulus() : b.modulus());
    for (const auto& [x, i] : a)
        for (const auto& [y, j] : b) {
            Chain p = multiply(x, y);
            p *= checked_mul(i, j);
            out += p;
        }
    return out;
}

// ---------------------------------------------------------------------------

int Shuffle::signature() const {
    int s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        s += mu[i] - static_cast<int>(i);
    return s;
}

std::vector<Shuffle> shuffles(int p, int q) {
    std::vector<Shuffle> out;
    const int n = p + q;
    std::vector<int> mu;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(mu.size()) == p) {
            Shuffle s{mu, {}};
            for (int t = 0, k = 0; t < n; ++t) {
                if (k < p && mu[k] == t)
                    ++k;
                else
                    s.nu.push_back(t);
            }
            out.push_back(std::move(s));
            return;
        }
        for (int t = next; t < n; ++t) {
            mu.push_back(t);
            self(self, t + 1);
            mu.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------

Chain SimplicialChains::cell(const Simplex& x, long long coeff) const {
    if (x.is_degenerate())
        return Chain{};
    return Chain::of(Label::of_cell(x), coeff);
}

Chain SimplicialChains::boundary(const Simplex& x) const {
    Chain out;
    if (x.is_degenerate() || x.dim() == 0)
        return out;
    for (int i = 0; i <= x.dim(); ++i) {
        Simplex f = set_->face(i, x);
        if (!f.is_degenerate())
            out.add(Label::of_cell(f), i % 2 ? -1 : 1);
    }
    return out;
}

Chain SimplicialChains::differential(const Label& l) const {
    if (l.kind != Label::Kind::Cell)
        throw std::invalid_argument(name() + " has no basis element " + l.to_string());
    return boundary(l.cell);
}

std::vector<Label> SimplicialChains::basis(int degree, const Bounds& bounds) const {
    std::vector<Label> out;
    if (degree < 0)
        return out;
    for (auto& x : set_->nondegenerate_bounded(degree, bounds.max_word_length)) {
        out.push_back(Label::of_cell(std::move(x)));
        if (out.size() > bounds.basis_cap)
            throw std::length_error("basis of " + name() + " exceeds the configured cap");
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chain SimplicialChains::diagonal(const Label& l) const {
    if (l.kind != Label::Kind::Cell)
        throw std::invalid_argument(name() + " has no basis element " + l.to_string());
    const Simplex& x = l.cell;
    const int n = x.dim();
    Chain out;
    for (int i = 0; i <= n; ++i) {
        Simplex a = set_->front(i, x), b = set_->back(n - i, x);
        if (a.is_degenerate() || b.is_degenerate())
            continue;
        out.add(Label::tensor(Label::of_cell(a), Label::of_cell(b)), 1);
    }
    return out;
}

long long SimplicialChains::counit(const Label& l) const {
    return l.kind == Label::Kind::Cell && l.cell.dim() == 0 ? 1 : 0;
}

MonoidChains::MonoidChains(std::shared_ptr<const WordComplex> words)
    : SimplicialChains(words), words_(std::move(words)) {}

Chain MonoidChains::multiply(const Label& a, const Label& b) const {
    const Simplex &u = a.cell, &v = b.cell;
    const int p = u.dim(), q = v.dim();
    Chain out;
    for (const auto& sh : shuffles(p, q)) {
        std::vector<int> nu(sh.nu.rbegin(), sh.nu.rend()), mu(sh.mu.rbegin(), sh.mu.rend());
        Simplex w = words_->multiply(words_->degenerate(u, nu), words_->degenerate(v, mu));
        if (!w.is_degenerate())
            out.add(Label::of_cell(w), sh.signature() % 2 ? -1 : 1);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::pair<Chain, long long> ReducedChains::split(const Label& l) const {
    if (l.kind == Label::Kind::Cell && l.cell.dim() == 0) {
        if (set_->is_basepoint(l.cell))
            return {Chain{}, 1};
        return {Chain::of(Label::reduced_vertex(l.cell, set_->basepoint(0))), 1};
    }
    return {Chain::of(l), 0};
}

Chain ReducedChains::from_chains(const Chain& c) const {
    Chain out(c.modulus());
    long long aug = 0;
    for (const auto& [l, k] : c) {
        auto [part, u] = split(l);
        part *= k;
        out += part;
        aug = checked_add(aug, checked_mul(u, k));
    }
    if (aug != 0 && (c.modulus() == 0 || aug % c.modulus() != 0))
        throw std::invalid_argument("chain " + c.to_string() + " has nonzero augmentation");
    return out;
}

Chain ReducedChains::to_chains(const Chain& c) const {
    Chain out(c.modulus());
    for (const auto& [l, k] : c) {
        if (l.kind == Label::Kind::ReducedVertex) {
            out.add(Label::of_cell(l.cell), k);
            out.add(Label::of_cell(set_->basepoint(0)), -k);
        } else {
            out.add(l, k);
        }
    }
    return out;
}

Chain ReducedChains::differential(const Label& l) const {
    if (l.kind == Label::Kind::ReducedVertex)
        return Chain{};
    if (l.kind != Label::Kind::Cell || l.cell.dim() == 0)
        throw std::invalid_argument(name() + " has no basis element " + l.to_string());
    return from_chains(SimplicialChains(set_).boundary(l.cell));
}

std::vector<Label> ReducedChains::basis(int degree, const Bounds& bounds) const {
    std::vector<Label> out;
    if (degree < 0)
        return out;
    for (auto& x : set_->nondegenerate_bounded(degree, bounds.max_word_length)) {
        if (degree == 0) {
            if (!set_->is_basepoint(x))
                out.push_back(Label::reduced_vertex(x, set_->basepoint(0)));
        } else {
            out.push_back(Label::of_cell(std::move(x)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

TensorProduct::TensorProduct(ComplexPtr left, ComplexPtr right) : left_(std::move(left)), right_(std::move(right)) {}

namespace {

const Label& factor(const Label& l, std::size_t k) {
    if (l.kind != Label::Kind::Tensor || l.size() != 2)
        throw std::invalid_argument("expected a two-factor tensor, got " + l.to_string());
    return l[k];
}

template <class T> const T& require(const ComplexPtr& p, const char* what) {
    auto q = dynamic_cast<const T*>(p.get());
    if (!q)
        throw std::invalid_argument(p->name() + " is not " + what);
    return *q;
}

} // namespace

Chain TensorProduct::differential(const Label& l) const {
    const Label &a = factor(l, 0), &b = factor(l, 1);
    Chain out = tensor(left_->differential(a), Chain::of(b));
    Chain rest = tensor(Chain::of(a), right_->differential(b));
    if (a.degree() % 2)
        rest *= -1;
    return out += rest;
}

std::vector<Label> TensorProduct::basis(int degree, const Bounds& bounds) const {
    std::vector<Label> out;
    for (int i = 0; i <= degree; ++i) {
        auto as = left_->basis(i, bounds);
        if (as.empty())
            continue;
        auto bs = right_->basis(degree - i, bounds);
        for (const auto& a : as)
            for (const auto& b : bs) {
                out.push_back(Label::tensor(a, b));
                if (out.size() > bounds.basis_cap)
                    throw std::length_error("basis of " + name() + " exceeds the configured cap");
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Chain TensorProduct::diagonal(const Label& l) const {
    const auto& A = require<Coalgebra>(left_, "a coalgebra");
    const auto& B = require<Coalgebra>(right_, "a coalgebra");
    Chain da = A.diagonal(factor(l, 0)), db = B.diagonal(factor(l, 1));
    Chain out;
    for (const auto& [x, i] : da)
        for (const auto& [y, j] : db) {
            const Label &a1 = x[0], &a2 = x[1], &b1 = y[0], &b2 = y[1];
            long long c = checked_mul(i, j);
            if ((a2.degree() * b1.degree()) % 2)
                c = -c;
            out.add(Label::tensor(Label::tensor(a1, b1), Label::tensor(a2, b2)), c);
        }
    return out;
}

long long TensorProduct::counit(const Label& l) const {
    const auto& A = require<Coalgebra>(left_, "a coalgebra");
    const auto& B = require<Coalgebra>(right_, "a coalgebra");
    return checked_mul(A.counit(factor(l, 0)), B.counit(factor(l, 1)));
}

Label TensorProduct::unit() const {
    return Label::tensor(require<Coalgebra>(left_, "a coalgebra").unit(),
                         require<Coalgebra>(right_, "a coalgebra").unit());
}

Chain TensorProduct::multiply(const Label& x, const Label& y) const {
    const auto& A = require<Algebra>(left_, "an algebra");
    const auto& B = require<Algebra>(right_, "an algebra");
    const Label &a = factor(x, 0), &b = factor(x, 1), &c = factor(y, 0), &e = factor(y, 1);
    Chain out = tensor(A.multiply(a, c), B.multiply(b, e));
    if ((b.degree() * c.degree()) % 2)
        out *= -1;
    return out;
}

Label TensorProduct::one() const {
    return Label::tensor(require<Algebra>(left_, "an algebra").one(), require<Algebra>(right_, "an algebra").one());
}

// ---------------------------------------------------------------------------

Label concat_words(const Label& a, const Label& b) {
    if (a.kind != b.kind || (a.kind != Label::Kind::Cobar && a.kind != Label::Kind::Free))
        throw std::invalid_argument("cannot concatenate " + a.to_string() + " and " + b.to_string());
    Label out = a;
    out.items.insert(out.items.end(), b.items.begin(), b.items.end());
    return out;
}

Chain concat_words(const Chain& a, const Chain& b) {
    Chain out(a.modulus() ? a.modulus() : b.modulus());
    for (const auto& [x, i] : a)
        for (const auto& [y, j] : b)
            out.add(concat_words(x, y), checked_mul(i, j));
    return out;
}

std::vector<std::vector<Label>> enumerate_words(int degree, const std::vector<std::vector<Label>>& letters_by_degree,
                                                int max_length, std::size_t cap) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0)
            out.push_back(cur);
        if (static_cast<int>(cur.size()) >= max_length)
            return;
        for (int d = 0; d <= remaining && d < static_cast<int>(letters_by_degree.size()); ++d)
            for (const auto& l : letters_by_degree[d]) {
                cur.push_back(l);
                self(self, remaining - d);
                cur.pop_back();
                if (out.size() > cap)
                    throw std::length_error("word enumeration exceeds the configured cap");
            }
    };
    if (degree >= 0)
        rec(rec, degree);
    return out;
}

Cobar::Cobar(CoalgebraPtr coalgebra) : coalgebra_(std::move(coalgebra)) {
    if (!coalgebra_->is_connected(Bounds{}))
        throw std::invalid_argument("the cobar construction needs a connected coalgebra; " + coalgebra_->name() +
                                    " has degree-0 part larger than its unit");
}

std::vector<Label> Cobar::letters(int cobar_degree, const Bounds& bounds) const {
    return coalgebra_->basis(cobar_degree + 1, bounds);
}

bool Cobar::has_degree_zero_letters(const Bounds& bounds) const { return !letters(0, bounds).empty(); }

std::vector<Label> Cobar::basis(int degree, const Bounds& bounds) const {
    std::vector<std::vector<Label>> by_degree;
    for (int d = 0; d <= degree; ++d)
        by_degree.push_back(letters(d, bounds));
    const int max_len = by_degree.empty() || by_degree[0].empty() ? std::max(degree, 0) : bounds.max_word_length;
    std::vector<Label> out;
    for (auto& w : enumerate_words(degree, by_degree, max_len, bounds.basis_cap))
        out.push_back(Label::cobar(std::move(w)));
    std::sort(out.begin(), out.end());
    return out;
}

Chain Cobar::letter_differential(const Label& c) const {
    Chain out;
    const Label one = coalgebra_->unit();
    for (const auto& [l, k] : coalgebra_->differential(c))
        if (l != one)
            out.add(Label::cobar({l}), -k);
    for (const auto& [t, k] : coalgebra_->reduced_diagonal(c)) {
        const Label &a = t[0], &b = t[1];
        out.add(Label::cobar({a, b}), a.degree() % 2 ? -k : k);
    }
    return out;
}

Chain Cobar::differential(const Label& w) const {
    if (w.kind != Label::Kind::Cobar)
        throw std::invalid_argument(name() + " has no basis element " + w.to_string());
    Chain out;
    int before = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        Chain dk = letter_differential(w[k]);
        if (before % 2)
            dk *= -1;
        Label prefix = Label::cobar({w.items.begin(), w.items.begin() + static_cast<long>(k)});
        Label suffix = Label::cobar({w.items.begin() + static_cast<long>(k) + 1, w.items.end()});
        out += concat_words(concat_words(Chain::of(prefix), dk), Chain::of(suffix));
        before += w[k].degree() - 1;
    }
    return out;
}

Chain Cobar::multiply(const Label& a, const Label& b) const { return Chain::of(concat_words(a, b)); }

// ---------------------------------------------------------------------------

FreeTensorHopf::FreeTensorHopf(SetPtr set) : chains_(set), reduced_(set) {}

Chain FreeTensorHopf::differential(const Label& w) const {
    if (w.kind != Label::Kind::Free)
        throw std::invalid_argument(name() + " has no basis element " + w.to_string());
    Chain out;
    int before = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        Chain dk;
        for (const auto& [l, c] : reduced_.differential(w[k]))
            dk.add(Label::free_word({l}), c);
        if (before % 2)
            dk *= -1;
        Label prefix = Label::free_word({w.items.begin(), w.items.begin() + static_cast<long>(k)});
        Label suffix = Label::free_word({w.items.begin() + static_cast<long>(k) + 1, w.items.end()});
        out += concat_words(concat_words(Chain::of(prefix), dk), Chain::of(suffix));
        before += w[k].degree();
    }
    return out;
}

std::vector<Label> FreeTensorHopf::basis(int degree, const Bounds& bounds) const {
    std::vector<std::vector<Label>> by_degree;
    for (int d = 0; d <= degree; ++d)
        by_degree.push_back(reduced_.basis(d, bounds));
    const int max_len = by_degree.empty() || by_degree[0].empty() ? std::max(degree, 0) : bounds.max_word_length;
    std::vector<Label> out;
    for (auto& w : enumerate_words(degree, by_degree, max_len, bounds.basis_cap))
        out.push_back(Label::free_word(std::move(w)));
    std::sort(out.begin(), out.end());
    return out;
}

Chain FreeTensorHopf::letter_diagonal(const Label& c) const {
    const Label empty = Label::free_word({});
    Chain out;
    if (c.kind == Label::Kind::ReducedVertex) {
        Label y = Label::free_word({c});
        out.add(Label::tensor(y, y), 1);
        out.add(Label::tensor(y, empty), 1);
        out.add(Label::tensor(empty, y), 1);
        return out;
    }
    // Each vertex factor y of Delta_K splits as (y - k0) + k0, with k0 the unit.
    auto lift = [&](const Label& l) {
        auto [part, u] = reduced_.split(l);
        Chain r;
        for (const auto& [m, k] : part)
            r.add(Label::free_word({m}), k);
        if (u)
            r.add(empty, u);
        return r;
    };
    for (const auto& [t, k] : chains_.diagonal(c)) {
        Chain term = tensor(lift(t[0]), lift(t[1]));
        term *= k;
        out += term;
    }
    return out;
}

Chain FreeTensorHopf::diagonal(const Label& w) const {
    if (w.kind != Label::Kind::Free)
        throw std::invalid_argument(name() + " has no basis element " + w.to_string());
    const Label empty = Label::free_word({});
    Chain acc = Chain::of(Label::tensor(empty, empty));
    for (const auto& letter : w.items) {
        Chain next;
        Chain dl = letter_diagonal(letter);
        for (const auto& [x, i] : acc)
            for (const auto& [y, j] : dl) {
                long long c = checked_mul(i, j);
                if ((x[1].degree() * y[0].degree()) % 2)
                    c = -c;
                next.add(Label::tensor(concat_words(x[0], y[0]), concat_words(x[1], y[1])), c);
            }
        acc = std::move(next);
    }
    return acc;
}

long long FreeTensorHopf::counit(const Label& l) const { return l.kind == Label::Kind::Free && l.size() == 0 ? 1 : 0; }

Chain FreeTensorHopf::multiply(const Label& a, const Label& b) const { return Chain::of(concat_words(a, b)); }

// ---------------------------------------------------------------------------

Chain twisting_defect(const TwistingCochain& t, const Label& c) {
    const Label one = t.source->unit();
    auto tm = [&](const Label& l) { return l == one ? Chain{} : t.map(l); };
    Chain lhs = t.target->d(tm(c));
    lhs += apply_linear(tm, t.source->differential(c));
    Chain rhs;
    for (const auto& [x, k] : t.source->diagonal(c)) {
        Chain p = t.target->product(tm(x[0]), tm(x[1]));
        p *= x[0].degree() % 2 ? -k : k;
        rhs += p;
    }
    return lhs - rhs;
}

LinearMap cochain_to_algebra_map(const TwistingCochain& t) {
    return [t](const Label& w) {
        if (w.kind != Label::Kind::Cobar)
            throw std::invalid_argument("expected a cobar word, got " + w.to_string());
        Chain acc = Chain::of(t.target->one());
        for (const auto& c : w.items)
            acc = t.target->product(acc, t.map(c));
        return acc;
    };
}

} // namespace jcm
