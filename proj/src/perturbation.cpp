#include "jcm/perturbation.hpp"

namespace jcm {

namespace {

Chain letter(const Label& x) {
    return Chain::of(Label::cobar({x}));
}

template <class Memo, class Key, class Compute>
Chain memoised(std::mutex& m, Memo& memo, const Key& key, Compute&& compute) {
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    Chain value = compute();
    std::lock_guard<std::mutex> lock(m);
    return memo.try_emplace(key, std::move(value)).first->second;
}

} // namespace

GugenheimMunkholm::GugenheimMunkholm(SdrData data, int nilpotence_bound)
    : data_(std::move(data)),
      cx_(std::dynamic_pointer_cast<const Coalgebra>(data_.X)),
      cy_(std::dynamic_pointer_cast<const Coalgebra>(data_.Y)),
      bound_(nilpotence_bound) {
    if (!cx_ || !cy_)
        throw std::invalid_argument("perturbation needs coalgebras on both sides");
    omega_x_ = std::make_shared<Cobar>(cx_);
    omega_y_ = std::make_shared<Cobar>(cy_);
}

const Chain& GugenheimMunkholm::diagonal_phi(const Label& y) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = diag_phi_memo_.find(y);
        if (it != diag_phi_memo_.end())
            return it->second;
    }
    Chain value = cy_->diagonal(data_.phi(y));
    std::lock_guard<std::mutex> lock(mutex_);
    return diag_phi_memo_.try_emplace(y, std::move(value)).first->second;
}

Chain GugenheimMunkholm::F(const Label& y, int k) const {
    if (k <= 0)
        return Chain{};
    return memoised(mutex_, f_memo_, std::pair{y, k}, [&] {
        Chain out;
        if (k == 1) {
            for (const auto& [x, c] : data_.f(y))
                if (x.degree() > 0)
                    out.add(Label::cobar({x}), c);
            return out;
        }
        for (const auto& [ab, c] : diagonal_phi(y)) {
            const Label &a = ab[0], &b = ab[1];
            const long long s = a.degree() % 2 ? c : -c;
            for (int i = 1; i < k; ++i) {
                Chain fa = F(a, i);
                if (fa.is_zero())
                    continue;
                out += s * concat_words(fa, F(b, k - i));
            }
        }
        return out;
    });
}

Chain GugenheimMunkholm::Phi(const Label& y, int k) const {
    if (k < 0)
        return Chain{};
    return memoised(mutex_, phi_memo_, std::pair{y, k}, [&] {
        Chain out;
        if (k == 0) {
            if (long long e = cy_->counit(y))
                out.add(Label::cobar({}), e);
            return out;
        }
        for (const auto& [ab, c] : diagonal_phi(y)) {
            const Label &a = ab[0], &b = ab[1];
            if (b.degree() > 0)
                out += (a.degree() % 2 ? -c : c) * concat_words(Phi(a, k - 1), letter(b));
            for (int j = 1; j <= k; ++j) {
                Chain fa = F(a, j);
                if (fa.is_zero())
                    continue;
                out += c * concat_words(apply_linear([this](const Label& w) { return omega_nabla(w); }, fa),
                                        Phi(b, k - j));
            }
        }
        return out;
    });
}

Chain GugenheimMunkholm::F(const Label& y) const {
    Chain out;
    for (int k = 1; k <= bound_; ++k)
        out += F(y, k);
    if (!F(y, bound_ + 1).is_zero())
        throw NilpotenceError("F_" + std::to_string(bound_ + 1) + "(" + y.to_string() + ") is nonzero");
    return out;
}

Chain GugenheimMunkholm::Phi(const Label& y) const {
    Chain out;
    for (int k = 0; k <= bound_; ++k)
        out += Phi(y, k);
    if (!Phi(y, bound_ + 1).is_zero())
        throw NilpotenceError("Phi_" + std::to_string(bound_ + 1) + "(" + y.to_string() + ") is nonzero");
    return out;
}

Chain GugenheimMunkholm::omega_nabla(const Label& word) const {
    Chain out = Chain::of(Label::cobar({}));
    for (const auto& x : word.items) {
        Chain image;
        for (const auto& [z, c] : data_.nabla(x))
            image.add(Label::cobar({z}), c);
        out = concat_words(out, image);
    }
    return out;
}

TwistingCochain GugenheimMunkholm::F_cochain() const {
    return TwistingCochain{cy_, omega_x_, [this](const Label& y) { return F(y); }};
}

Chain GugenheimMunkholm::omega_f(const Label& word) const {
    return cochain_to_algebra_map(F_cochain())(word);
}

Chain GugenheimMunkholm::omega_phi(const Label& word) const {
    // phi(uv) = phi(u) v + (-1)^{|u|} g(u) phi(v) with g = Omega(nabla) Omega-tilde(f)
    Chain out;
    Chain prefix_image = Chain::of(Label::cobar({}));
    int prefix_degree = 0;
    for (std::size_t t = 0; t < word.items.size(); ++t) {
        const Label& y = word.items[t];
        Chain head = -Phi(y);
        if (!head.is_zero()) {
            Chain rest = Chain::of(Label::cobar(std::vector<Label>(word.items.begin() + t + 1, word.items.end())));
            out += sign_of_parity(prefix_degree) * concat_words(concat_words(prefix_image, head), rest);
        }
        Chain g = apply_linear([this](const Label& w) { return omega_nabla(w); }, F(y));
        prefix_image = concat_words(prefix_image, g);
        prefix_degree += y.degree() - 1;
    }
    return out;
}

SdrData GugenheimMunkholm::transferred() const {
    return SdrData{omega_x_, omega_y_, [this](const Label& w) { return omega_nabla(w); },
                   [this](const Label& w) { return omega_f(w); }, [this](const Label& w) { return omega_phi(w); }};
}

} // namespace jcm
