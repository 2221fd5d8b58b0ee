#include "jcm/ez.hpp"

#include <stdexcept>

namespace jcm {

nlohmann::json mismatch(const Label& input, const Chain& lhs, const Chain& rhs) {
    return {{"input", input.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
}

namespace {

SimplicialOperator interval(int n, int from, int to) {
    std::vector<int> map;
    for (int t = from; t <= to; ++t)
        map.push_back(t);
    return SimplicialOperator::from_map(n, std::move(map));
}

SimplicialOperator degeneracy_operator(int source, int target, std::vector<int> increasing) {
    std::vector<int> word(increasing.rbegin(), increasing.rend());
    return SimplicialOperator::from_map(source, epi_from_degens(target, word));
}

// Both components share a repeated vertex, so every value is degenerate.
bool always_degenerate(const OperatorPair& p) {
    const auto &a = p.left.map(), &b = p.right.map();
    for (std::size_t t = 0; t + 1 < a.size(); ++t)
        if (a[t] == a[t + 1] && b[t] == b[t + 1])
            return true;
    return false;
}

void accumulate(OperatorFormula& f, OperatorPair p, long long c) {
    if (always_degenerate(p))
        return;
    auto [it, inserted] = f.try_emplace(std::move(p), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            f.erase(it);
    }
}

} // namespace

EilenbergZilber::EilenbergZilber(SetPtr K, SetPtr L)
    : product_(std::make_shared<Product>(K, L)),
      X_(std::make_shared<TensorProduct>(std::make_shared<SimplicialChains>(K), std::make_shared<SimplicialChains>(L))),
      Y_(std::make_shared<SimplicialChains>(product_)) {}

Chain EilenbergZilber::aw(const Label& cell) const {
    const Simplex& z = cell.cell;
    const int n = z.dim();
    auto [a, b] = product_->components(z);
    Chain out;
    for (int i = 0; i <= n; ++i) {
        Simplex fa = product_->left()->front(i, a), bb = product_->right()->back(n - i, b);
        if (!fa.is_degenerate() && !bb.is_degenerate())
            out.add(Label::tensor(Label::of_cell(fa), Label::of_cell(bb)), 1);
    }
    return out;
}

Chain EilenbergZilber::shuffle(const Label& ab) const {
    if (ab.kind != Label::Kind::Tensor || ab.size() != 2)
        throw std::invalid_argument("shuffle map expects a tensor of cells, got " + ab.to_string());
    const Simplex &x = ab[0].cell, &y = ab[1].cell;
    Chain out;
    for (const auto& sh : shuffles(x.dim(), y.dim())) {
        std::vector<int> nu(sh.nu.rbegin(), sh.nu.rend()), mu(sh.mu.rbegin(), sh.mu.rend());
        Simplex z = product_->make_pair(product_->left()->degenerate(x, nu), product_->right()->degenerate(y, mu));
        if (!z.is_degenerate())
            out.add(Label::of_cell(z), sh.signature() % 2 ? -1 : 1);
    }
    return out;
}

OperatorFormula EilenbergZilber::nabla_f_formula(int q) {
    OperatorFormula out;
    for (int i = 0; i <= q; ++i) {
        SimplicialOperator front = interval(q, 0, i), back = interval(q, i, q);
        for (const auto& sh : shuffles(i, q - i)) {
            OperatorPair p{front.then(degeneracy_operator(i, q, sh.nu)),
                           back.then(degeneracy_operator(q - i, q, sh.mu))};
            accumulate(out, std::move(p), sh.signature() % 2 ? -1 : 1);
        }
    }
    return out;
}

const OperatorFormula& EilenbergZilber::phi_formula(int q) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = phi_memo_.find(q);
        if (it != phi_memo_.end())
            return it->second;
    }
    OperatorFormula out;
    if (q > 0) {
        // phi = -phi' + (nabla f)' s_0
        for (const auto& [p, c] : phi_formula(q - 1))
            accumulate(out, {p.left.derived(), p.right.derived()}, -c);
        const SimplicialOperator s0 = SimplicialOperator::degeneracy(0, q);
        for (const auto& [p, c] : nabla_f_formula(q))
            accumulate(out, {s0.then(p.left.derived()), s0.then(p.right.derived())}, c);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return phi_memo_.try_emplace(q, std::move(out)).first->second;
}

Chain evaluate_formula(const Product& P, const OperatorFormula& formula, const Simplex& z) {
    auto [a, b] = P.components(z);
    Chain out;
    for (const auto& [p, c] : formula) {
        Simplex w = P.make_pair(P.left()->apply(p.left, a), P.right()->apply(p.right, b));
        if (!w.is_degenerate())
            out.add(Label::of_cell(w), c);
    }
    return out;
}

Chain EilenbergZilber::phi(const Label& cell) const {
    if (cell.kind != Label::Kind::Cell)
        throw std::invalid_argument("phi expects a cell of the product, got " + cell.to_string());
    return evaluate_formula(*product_, phi_formula(cell.cell.dim()), cell.cell);
}

SdrData EilenbergZilber::sdr() const {
    return SdrData{X_, Y_, [this](const Label& l) { return shuffle(l); }, [this](const Label& l) { return aw(l); },
                   [this](const Label& l) { return phi(l); }};
}

// ---------------------------------------------------------------------------

VerificationReport sdr_verify(const SdrData& data, const Bounds& bounds, bool comultiplicative, long long modulus) {
    VerificationReport report;
    report.suite = "sdr";
    std::string range = "degree <= " + std::to_string(bounds.max_degree);
    if (modulus >= 2)
        range += ", mod " + std::to_string(modulus);
    CheckBuilder f_nabla("f∇=1", range), homotopy("dφ+φd=∇f-1", range), phi_nabla("φ∇=0", range),
        f_phi("fφ=0", range), phi_phi("φφ=0", range), nabla_chain("d∇=∇d", range), f_chain("df=fd", range),
        comult("∇ comultiplicative", range);
    auto lin = [](const LinearMap& m, const Chain& c) { return apply_linear(m, c); };
    auto same = [modulus](const Chain& l, const Chain& r) {
        return modulus >= 2 ? (l - r).reduced_mod(modulus).is_zero() : l == r;
    };
    const auto* CX = dynamic_cast<const Coalgebra*>(data.X.get());
    const auto* CY = dynamic_cast<const Coalgebra*>(data.Y.get());

    auto guarded = [](CheckBuilder& b, const Label& l, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            b.fail({{"input", l.to_string()}, {"error", e.what()}});
        }
    };

    for (int n = 0; n <= bounds.max_degree; ++n) {
        for (const auto& x : data.X->basis(n, bounds)) {
            Chain nx = data.nabla(x);
            guarded(f_nabla, x, [&] {
                Chain v = lin(data.f, nx);
                f_nabla.expect(same(v, Chain::of(x)), [&] { return mismatch(x, v, Chain::of(x)); });
            });
            guarded(phi_nabla, x, [&] {
                Chain v = lin(data.phi, nx);
                phi_nabla.expect(same(v, Chain{}), [&] { return mismatch(x, v, Chain{}); });
            });
            guarded(nabla_chain, x, [&] {
                Chain l = data.Y->d(nx), r = lin(data.nabla, data.X->differential(x));
                nabla_chain.expect(same(l, r), [&] { return mismatch(x, l, r); });
            });
            if (comultiplicative && CX && CY)
                guarded(comult, x, [&] {
                    Chain l = CY->diagonal(nx);
                    Chain r = tensor_maps(data.nabla, 0, data.nabla, 0, CX->diagonal(x));
                    comult.expect(same(l, r), [&] { return mismatch(x, l, r); });
                });
        }
        for (const auto& y : data.Y->basis(n, bounds)) {
            Chain py = data.phi(y);
            guarded(homotopy, y, [&] {
                Chain l = data.Y->d(py) + lin(data.phi, data.Y->differential(y));
                Chain r = lin(data.nabla, data.f(y)) - Chain::of(y);
                homotopy.expect(same(l, r), [&] { return mismatch(y, l, r); });
            });
            guarded(f_phi, y, [&] {
                Chain v = lin(data.f, py);
                f_phi.expect(same(v, Chain{}), [&] { return mismatch(y, v, Chain{}); });
            });
            guarded(phi_phi, y, [&] {
                Chain v = lin(data.phi, py);
                phi_phi.expect(same(v, Chain{}), [&] { return mismatch(y, v, Chain{}); });
            });
            guarded(f_chain, y, [&] {
                Chain l = data.X->d(data.f(y)), r = lin(data.f, data.Y->differential(y));
                f_chain.expect(same(l, r), [&] { return mismatch(y, l, r); });
            });
        }
    }
    for (auto* b : {&f_nabla, &homotopy, &phi_nabla, &f_phi, &phi_phi, &nabla_chain, &f_chain})
        report.add(b->done());
    if (comultiplicative && CX && CY)
        report.add(comult.done());
    return report;
}

} // namespace jcm
