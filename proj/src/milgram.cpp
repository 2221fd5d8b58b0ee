#include "jcm/milgram.hpp"

namespace jcm {

namespace {

// Word degrees below are cobar degrees; letter degrees (a, b, b1, b2) are the
// internal degrees of A and B.
int cobar_degree(const std::vector<Label>& letters, std::size_t from = 0, std::size_t to = std::string::npos) {
    int d = 0;
    for (std::size_t t = from; t < std::min(to, letters.size()); ++t)
        d += letters[t].degree() - 1;
    return d;
}

Chain word(std::vector<Label> letters) {
    return Chain::of(Label::cobar(std::move(letters)));
}

std::vector<Label> slice(const std::vector<Label>& v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to)};
}

} // namespace

Milgram::Milgram(CoalgebraPtr A, CoalgebraPtr B)
    : A_(std::move(A)), B_(std::move(B)), tensor_(std::make_shared<TensorProduct>(A_, B_)),
      omega_ab_(std::make_shared<Cobar>(tensor_)), omega_a_(std::make_shared<Cobar>(A_)),
      omega_b_(std::make_shared<Cobar>(B_)), target_(std::make_shared<TensorProduct>(omega_a_, omega_b_)) {}

Milgram::LetterKind Milgram::kind(const Label& letter) const {
    if (letter.kind != Label::Kind::Tensor || letter.size() != 2)
        throw std::invalid_argument("not a letter of " + omega_ab_->name() + ": " + letter.to_string());
    if (letter[0] == A_->unit())
        return LetterKind::B;
    if (letter[1] == B_->unit())
        return LetterKind::A;
    return LetterKind::Mixed;
}

Chain Milgram::q(const Label& w) const {
    Chain out = Chain::of(Label::tensor(Label::cobar({}), Label::cobar({})));
    for (const auto& l : w.items) {
        Label image;
        switch (kind(l)) {
        case LetterKind::A:
            image = Label::tensor(Label::cobar({l[0]}), Label::cobar({}));
            break;
        case LetterKind::B:
            image = Label::tensor(Label::cobar({}), Label::cobar({l[1]}));
            break;
        case LetterKind::Mixed:
            return Chain{};
        }
        out = target_->product(out, Chain::of(image));
    }
    return out;
}

Chain Milgram::sigma(const Label& uv) const {
    std::vector<Label> letters;
    for (const auto& a : uv[0].items)
        letters.push_back(a_letter(a));
    for (const auto& b : uv[1].items)
        letters.push_back(b_letter(b));
    return word(std::move(letters));
}

Chain Milgram::h_block(const Label& b, const std::vector<Label>& alpha) const {
    if (alpha.empty())
        return Chain{};
    const Label& a = alpha.back()[0];
    std::vector<Label> head = slice(alpha, 0, alpha.size() - 1);
    const int da = a.degree(), dh = cobar_degree(head), db = b.degree();

    // -(-1)^{deg b (deg alpha + deg a + 1)} [alpha|ab]
    std::vector<Label> first = head;
    first.push_back(Label::tensor(a, b));
    Chain out = -sign_of_parity(static_cast<long long>(db) * (dh + da + 1)) * word(std::move(first));
    // + (h[b|alpha]) [a]
    out += concat_words(h_block(b, head), word({alpha.back()}));
    // - (-1)^{deg b2 (deg alpha + deg a + 1) + (deg b1 + 1)(deg b2 + 1) + 1} (h[b1|alpha]) [a b2]
    if (!head.empty())
        for (const auto& [t, c] : B_->reduced_diagonal(b)) {
            const Label &b1 = t[0], &b2 = t[1];
            const long long db1 = b1.degree(), db2 = b2.degree();
            const long long e = db2 * (dh + da + 1) + (db1 + 1) * (db2 + 1) + 1;
            out -= (c * sign_of_parity(e)) * concat_words(h_block(b1, head), word({Label::tensor(a, b2)}));
        }
    return out;
}

Chain Milgram::h(const Label& w) const {
    const auto& L = w.items;
    if (L.empty() || kind(L.back()) == LetterKind::Mixed)
        return Chain{};
    // w = [zeta | alpha | beta]: beta the trailing B-run, alpha the A-run before it
    std::size_t e = L.size();
    while (e > 0 && kind(L[e - 1]) == LetterKind::B)
        --e;
    std::size_t s = e;
    while (s > 0 && kind(L[s - 1]) == LetterKind::A)
        --s;
    if (s == 0 || kind(L[s - 1]) == LetterKind::Mixed)
        return Chain{};
    // zeta = [omega | b]
    const std::size_t bpos = s - 1;
    const Label& b = L[bpos];
    std::vector<Label> omega = slice(L, 0, bpos), alpha = slice(L, s, e), beta = slice(L, e, L.size());
    if (alpha.empty())
        return Chain{};

    Chain out = sign_of_parity(cobar_degree(omega)) *
                concat_words(concat_words(word(omega), h_block(b[1], alpha)), word(beta));
    std::vector<Label> moved = omega;
    moved.insert(moved.end(), alpha.begin(), alpha.end());
    moved.push_back(b);
    moved.insert(moved.end(), beta.begin(), beta.end());
    const long long sign = sign_of_parity(static_cast<long long>(cobar_degree(alpha)) * (b.degree() + 1));
    out += sign * h(Label::cobar(std::move(moved)));
    return out;
}

SdrData Milgram::sdr() const {
    return SdrData{target_, omega_ab_, [this](const Label& l) { return sigma(l); },
                   [this](const Label& l) { return q(l); }, [this](const Label& l) { return h(l); }};
}

int Milgram::sharp(const Label& w) const {
    std::size_t e = w.size();
    while (e > 0 && kind(w[e - 1]) == LetterKind::B)
        --e;
    int n = 0;
    for (std::size_t t = 0; t < e; ++t)
        n += kind(w[t]) == LetterKind::B;
    return n;
}

namespace {

// Length of the run of A-letters that ends the word once its trailing
// B-letters are removed.
std::size_t trailing_a_run(const Milgram& m, const Label& w) {
    std::size_t e = w.size();
    while (e > 0 && m.kind(w[e - 1]) == Milgram::LetterKind::B)
        --e;
    std::size_t s = e;
    while (s > 0 && m.kind(w[s - 1]) == Milgram::LetterKind::A)
        --s;
    return e - s;
}

} // namespace

VerificationReport milgram_verify(const Milgram& m, const Bounds& bounds, long long modulus) {
    VerificationReport report;
    report.suite = "milgram";
    SdrData data = m.sdr();
    VerificationReport integral = sdr_verify(data, bounds, false, modulus);
    VerificationReport mod2 = sdr_verify(data, bounds, false, 2);
    for (auto c : integral.checks) {
        if (c.id == "dφ+φd=∇f-1") {
            c.id = "dh+hd=σq-1 (signed)";
            c.gated = false;
            c.note = "reported only; the gate is the mod 2 identity";
        } else if (c.id == "f∇=1") {
            c.id = "qσ=1";
        } else if (c.id == "φ∇=0") {
            c.id = "hσ=0";
        } else if (c.id == "fφ=0") {
            c.id = "qh=0";
        } else if (c.id == "φφ=0") {
            c.id = "h²=0";
        } else if (c.id == "d∇=∇d") {
            c.id = "dσ=σd";
        } else if (c.id == "df=fd") {
            c.id = "dq=qd";
        }
        report.add(std::move(c));
    }
    for (auto c : mod2.checks)
        if (c.id == "dφ+φd=∇f-1") {
            c.id = "dh+hd=σq-1 mod 2";
            report.add(std::move(c));
        }

    const std::string range = "degree <= " + std::to_string(bounds.max_degree);
    CheckBuilder degree("h raises degree by 1", range), filtration("h lowers ♯", range);
    for (int n = 0; n <= bounds.max_degree; ++n)
        for (const auto& w : m.source()->basis(n, bounds)) {
            Chain hw = m.h(w);
            const int sw = m.sharp(w);
            const std::size_t rw = trailing_a_run(m, w);
            for (const auto& [u, c] : hw) {
                degree.expect(u.degree() == n + 1, [&] { return mismatch(w, hw, Chain{}); });
                const int su = m.sharp(u);
                filtration.expect(su < sw || (su == sw && trailing_a_run(m, u) < rw),
                                  [&] { return nlohmann::json{{"input", w.to_string()}, {"term", u.to_string()}}; });
            }
        }
    report.add(degree.done());
    report.add(filtration.done());
    return report;
}

Check milgram_naturality(const SetPtr& K, const SetPtr& L, const Bounds& bounds) {
    auto FK = flatten(*K);
    auto W = wedge(*FK, *FK);
    auto CL = std::make_shared<SimplicialChains>(L);
    Milgram small(std::make_shared<SimplicialChains>(FK), CL), big(std::make_shared<SimplicialChains>(W), CL);
    auto include = [&](const Label& a) {
        const Simplex& x = a.cell;
        return Label::of_cell(FK->is_basepoint(x) ? W->basepoint(x.dim()) : W->generator(x.core->name + "_1"));
    };
    LinearMap G = [&](const Label& w) {
        std::vector<Label> letters;
        for (const auto& l : w.items)
            letters.push_back(Label::tensor(include(l[0]), l[1]));
        return Chain::of(Label::cobar(std::move(letters)));
    };
    CheckBuilder natural("h natural in A (" + FK->name() + " -> " + W->name() + ")",
                         "degree <= " + std::to_string(bounds.max_degree));
    for (int n = 0; n <= bounds.max_degree; ++n)
        for (const auto& w : small.source()->basis(n, bounds)) {
            try {
                Chain l = apply_linear(G, small.h(w));
                Chain r = apply_linear([&](const Label& u) { return big.h(u); }, G(w));
                natural.expect(l == r, [&] { return mismatch(w, l, r); });
            } catch (const std::exception& e) {
                natural.fail({{"input", w.to_string()}, {"error", e.what()}});
            }
        }
    return natural.done();
}

} // namespace jcm
