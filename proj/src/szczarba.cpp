#include "jcm/szczarba.hpp"

namespace jcm {

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k)
        f = checked_mul(f, k);
    return f;
}

namespace {

void check_index(long long i, int n) {
    if (n < 1 || n > 12 || i < 1 || i > factorial(n - 1))
        throw std::out_of_range("Szczarba index " + std::to_string(i) + " out of range at level " + std::to_string(n));
}

} // namespace

SimplicialOperator szczarba_operator(int n, long long i) {
    check_index(i, n);
    if (n == 1)
        return SimplicialOperator::identity(0);
    const long long block = factorial(n - 2);
    const long long k = (i - 1) / block, j = (i - 1) % block + 1;
    SimplicialOperator base = szczarba_operator(n - 1, j).derived();
    if (k == 0)
        return base;
    const int m = n - 1;
    return SimplicialOperator::face(static_cast<int>(k), m).then(SimplicialOperator::degeneracy(0, m - 1)).then(base);
}

int szczarba_sign(long long i, int n) {
    check_index(i, n);
    if (n == 1)
        return 0;
    const long long block = factorial(n - 2);
    const long long k = (i - 1) / block, j = (i - 1) % block + 1;
    return static_cast<int>((szczarba_sign(j, n - 1) + k + 1) % 2);
}

SzczarbaModel::SzczarbaModel(std::shared_ptr<const JamesModel> james, Sign sign)
    : james_(std::move(james)), sign_(sign) {
    if (!james_->base()->is_reduced())
        throw std::invalid_argument("the Szczarba cochain needs a reduced simplicial set, " + james_->base()->name() +
                                    " has several vertices");
    group_ = std::make_shared<WordComplex>(james_->suspension(), WordComplex::Kind::Group);
    group_chains_ = std::make_shared<MonoidChains>(group_);
}

Chain SzczarbaModel::t_raw(const Label& c) const {
    const int n = c.cell.dim();
    Chain out;
    if (n == 0)
        return out;
    Simplex inv = group_->tau(c.cell, -1);
    for (long long i = 1; i <= factorial(n - 1); ++i) {
        Simplex s = group_->apply(szczarba_operator(n, i), inv);
        if (!s.is_degenerate())
            out.add(Label::of_cell(s), szczarba_sign(i, n) ? -1 : 1);
    }
    return out;
}

Chain SzczarbaModel::t_closed(const Label& c) const {
    const int n = c.cell.dim();
    if (n == 0)
        return Chain{};
    return Chain::of(Label::of_cell(group_->tau(c.cell, -1)), n % 2 ? 1 : -1);
}

Chain SzczarbaModel::t(const Label& c) const {
    if (sign_ == Sign::Alternating || c.cell.dim() == 0)
        return t_closed(c);
    return Chain::of(Label::of_cell(group_->tau(c.cell, -1)));
}

TwistingCochain SzczarbaModel::cochain() const {
    return TwistingCochain{james_->suspension_chains(), group_chains_, [this](const Label& c) { return t(c); }};
}

Chain SzczarbaModel::theta(const Label& word) const { return cochain_to_algebra_map(cochain())(word); }

namespace {

void theta_checks(const SzczarbaModel& m, const Bounds& bounds, const std::string& suffix, VerificationReport& report) {
    const std::string range = "degree <= " + std::to_string(bounds.max_degree) + ", words <= " +
                              std::to_string(bounds.max_word_length);
    CheckBuilder twist("t twisting cochain" + suffix, "degree <= " + std::to_string(bounds.max_degree)),
        chain("θ chain map" + suffix, range), comult("θ comultiplicative" + suffix, range);
    const auto& J = m.james();
    const auto& CE = *J.suspension_chains();
    const auto& omega = *J.omega();
    const Coalgebra& G = *m.group_chains();
    LinearMap theta = [&](const Label& w) { return m.theta(w); };
    auto guarded = [](CheckBuilder& b, const Label& l, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            b.fail({{"input", l.to_string()}, {"error", e.what()}});
        }
    };
    for (int n = 0; n <= bounds.max_degree; ++n) {
        for (const auto& c : CE.basis(n, bounds))
            guarded(twist, c, [&] {
                Chain v = twisting_defect(m.cochain(), c);
                twist.expect(v.is_zero(), [&] { return mismatch(c, v, Chain{}); });
            });
        for (const auto& w : omega.basis(n, bounds))
            guarded(chain, w, [&] {
                Chain tw = m.theta(w);
                Chain l = m.group_chains()->d(tw), r = apply_linear(theta, omega.differential(w));
                chain.expect(l == r, [&] { return mismatch(w, l, r); });
                Chain l2 = G.diagonal(tw), r2 = tensor_maps(theta, 0, theta, 0, J.psi(w));
                comult.expect(l2 == r2, [&] { return mismatch(w, l2, r2); });
            });
    }
    for (auto* b : {&twist, &chain, &comult})
        report.add(b->done());
}

} // namespace

VerificationReport szczarba_verify(const SzczarbaModel& m, const Bounds& bounds, int max_n) {
    VerificationReport report;
    report.suite = "szczarba";
    const std::string nrange = "n <= " + std::to_string(max_n);
    CheckBuilder first("D^n_{0,1}=id", nrange), degenerate("D^n_{0,i} begins with a degeneracy for i>=2", nrange),
        no_d0("D^n_{0,i} has no d_0", nrange), covered("ε defined on 1..(n-1)!", nrange),
        raw("raw t = (-1)^{n+1}τ^{-1}", "n <= " + std::to_string(std::min(max_n, bounds.max_degree)));

    for (int n = 1; n <= max_n; ++n)
        for (long long i = 1; i <= factorial(n - 1); ++i) {
            nlohmann::json where = {{"n", n}, {"i", i}};
            try {
                SimplicialOperator D = szczarba_operator(n, i);
                where["operator"] = D.to_string();
                if (i == 1)
                    first.expect(D.is_identity(), [&] { return where; });
                else
                    degenerate.expect(D.begins_with_degeneracy(), [&] { return where; });
                auto faces = D.faces();
                no_d0.expect(faces.empty() || faces.front() != 0, [&] { return where; });
                szczarba_sign(i, n);
                covered.expect(true, [] { return nlohmann::json{}; });
            } catch (const std::exception& e) {
                where["error"] = e.what();
                covered.fail(where);
            }
        }

    const auto& CE = *m.james().suspension_chains();
    for (int n = 1; n <= std::min(max_n, bounds.max_degree); ++n)
        for (const auto& c : CE.basis(n, bounds))
            try {
                Chain l = m.t_raw(c), r = m.t_closed(c);
                raw.expect(l == r, [&] { return mismatch(c, l, r); });
            } catch (const std::exception& e) {
                raw.fail({{"input", c.to_string()}, {"error", e.what()}});
            }
    for (auto* b : {&first, &degenerate, &no_d0, &covered, &raw})
        report.add(b->done());
    theta_checks(SzczarbaModel(m.james_ptr(), SzczarbaModel::Sign::Alternating), bounds, "", report);
    theta_checks(SzczarbaModel(m.james_ptr(), SzczarbaModel::Sign::Constant), bounds, " (t=τ^{-1})", report);
    return report;
}

} // namespace jcm
