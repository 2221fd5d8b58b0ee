#include "jcm/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace jcm {

Label Label::of_cell(Simplex x) { return Label{Kind::Cell, std::move(x), {}}; }

Label Label::reduced_vertex(Simplex y, Simplex base) {
    return Label{Kind::ReducedVertex, std::move(y), {of_cell(std::move(base))}};
}

Label Label::tensor(std::vector<Label> factors) { return Label{Kind::Tensor, {}, std::move(factors)}; }
Label Label::cobar(std::vector<Label> letters) { return Label{Kind::Cobar, {}, std::move(letters)}; }
Label Label::free_word(std::vector<Label> letters) { return Label{Kind::Free, {}, std::move(letters)}; }

int Label::degree() const {
    switch (kind) {
    case Kind::Cell:
        return cell.dim();
    case Kind::ReducedVertex:
        return 0;
    case Kind::Tensor:
    case Kind::Free: {
        int d = 0;
        for (const auto& l : items)
            d += l.degree();
        return d;
    }
    case Kind::Cobar: {
        int d = 0;
        for (const auto& l : items)
            d += l.degree() - 1;
        return d;
    }
    }
    return 0;
}

std::string Label::to_string() const {
    auto join = [&](const char* sep) {
        std::string s;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k > 0)
                s += sep;
            s += items[k].kind == Kind::Tensor ? "(" + items[k].to_string() + ")" : items[k].to_string();
        }
        return s;
    };
    switch (kind) {
    case Kind::Cell:
        return cell.to_string();
    case Kind::ReducedVertex:
        return cell.to_string() + "-" + items.at(0).to_string();
    case Kind::Tensor:
        return join("⊗");
    case Kind::Cobar:
        return "[" + join("|") + "]";
    case Kind::Free:
        return "{" + join("|") + "}";
    }
    return "?";
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind <=> b.kind; c != 0)
        return c;
    if (a.kind == Label::Kind::Cell || a.kind == Label::Kind::ReducedVertex)
        if (auto c = a.cell <=> b.cell; c != 0)
            return c;
    if (auto c = a.items.size() <=> b.items.size(); c != 0)
        return c;
    for (std::size_t k = 0; k < a.items.size(); ++k)
        if (auto c = a.items[k] <=> b.items[k]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in addition");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

Chain Chain::of(const Label& l, long long coeff, long long modulus) {
    Chain c(modulus);
    c.add(l, coeff);
    return c;
}

long long Chain::normal(long long c) const {
    if (modulus_ == 0)
        return c;
    c %= modulus_;
    return c < 0 ? c + modulus_ : c;
}

void Chain::set_modulus(long long m) {
    if (m < 0 || m == 1)
        throw std::invalid_argument("modulus must be 0 or at least 2");
    modulus_ = m;
    if (m == 0)
        return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = normal(it->second);
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

long long Chain::coefficient(const Label& l) const {
    auto it = terms_.find(l);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> Chain::degree() const {
    std::optional<int> d;
    for (const auto& [l, c] : terms_) {
        int e = l.degree();
        if (d && *d != e)
            throw std::logic_error("inhomogeneous chain: " + to_string());
        d = e;
    }
    return d;
}

void Chain::add(const Label& l, long long coeff) {
    coeff = normal(coeff);
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(l, coeff);
    if (!inserted) {
        it->second = normal(checked_add(it->second, coeff));
        if (it->second == 0)
            terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.modulus_ != 0 && other.modulus_ != modulus_) {
        if (modulus_ != 0)
            throw std::invalid_argument("adding chains with different moduli");
        set_modulus(other.modulus_);
    }
    for (const auto& [l, c] : other.terms_)
        add(l, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& other) {
    if (other.modulus_ != 0 && other.modulus_ != modulus_) {
        if (modulus_ != 0)
            throw std::invalid_argument("subtracting chains with different moduli");
        set_modulus(other.modulus_);
    }
    for (const auto& [l, c] : other.terms_)
        add(l, checked_mul(-1, c));
    return *this;
}

Chain& Chain::operator*=(long long s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = normal(checked_mul(it->second, s));
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

bool operator==(const Chain& a, const Chain& b) {
    if (a.modulus_ == b.modulus_)
        return a.terms_ == b.terms_;
    long long m = a.modulus_ ? a.modulus_ : b.modulus_;
    return a.reduced_mod(m).terms_ == b.reduced_mod(m).terms_;
}

Chain Chain::reduced_mod(long long m) const {
    Chain c = *this;
    c.set_modulus(m);
    return c;
}

std::string Chain::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (first) {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << c << "*";
        } else {
            os << (c < 0 ? " - " : " + ");
            long long a = c < 0 ? -c : c;
            if (a != 1)
                os << a << "*";
        }
        os << l.to_string();
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Chain apply_linear(const LinearMap& f, const Chain& c) {
    Chain out(c.modulus());
    for (const auto& [l, k] : c) {
        Chain v = f(l);
        v *= k;
        out += v;
    }
    return out;
}

Chain tensor(const Chain& a, const Chain& b) {
    Chain out(a.modulus() ? a.modulus() : b.modulus());
    for (const auto& [x, i] : a)
        for (const auto& [y, j] : b)
            out.add(Label::tensor(x, y), checked_mul(i, j));
    return out;
}

Chain tensor_maps(const LinearMap& f, int /*deg_f*/, const LinearMap& g, int deg_g, const Label& ab) {
    if (ab.kind != Label::Kind::Tensor || ab.size() != 2)
        throw std::invalid_argument("tensor of maps applied to a non-tensor label " + ab.to_string());
    Chain out = tensor(f(ab[0]), g(ab[1]));
    if ((deg_g * ab[0].degree()) % 2 != 0)
        out *= -1;
    return out;
}

Chain tensor_maps(const LinearMap& f, int deg_f, const LinearMap& g, int deg_g, const Chain& c) {
    return apply_linear([&](const Label& l) { return tensor_maps(f, deg_f, g, deg_g, l); }, c);
}

Chain assoc_left(const Chain& c) {
    Chain out(c.modulus());
    for (const auto& [l, k] : c) {
        if (l.kind != Label::Kind::Tensor || l.size() != 2 || l[0].kind != Label::Kind::Tensor)
            throw std::invalid_argument("assoc_left expects (p⊗q)⊗r, got " + l.to_string());
        std::vector<Label> items = l[0].items;
        items.push_back(l[1]);
        out.add(Label::tensor(std::move(items)), k);
    }
    return out;
}

Chain assoc_right(const Chain& c) {
    Chain out(c.modulus());
    for (const auto& [l, k] : c) {
        if (l.kind != Label::Kind::Tensor || l.size() != 2 || l[1].kind != Label::Kind::Tensor)
            throw std::invalid_argument("assoc_right expects p⊗(q⊗r), got " + l.to_string());
        std::vector<Label> items{l[0]};
        items.insert(items.end(), l[1].items.begin(), l[1].items.end());
        out.add(Label::tensor(std::move(items)), k);
    }
    return out;
}

Chain swap_factors(const Chain& c) {
    Chain out(c.modulus());
    for (const auto& [l, k] : c) {
        if (l.kind != Label::Kind::Tensor || l.size() != 2)
            throw std::invalid_argument("swap expects a two-factor tensor");
        long long s = (l[0].degree() * l[1].degree()) % 2 ? -k : k;
        out.add(Label::tensor(l[1], l[0]), s);
    }
    return out;
}

} // namespace jcm
