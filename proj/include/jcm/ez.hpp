#pragma once

#include "jcm/complexes.hpp"
#include "jcm/report.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace jcm {

/// A natural operation K x L -> K x L written as a formal sum of pairs of
/// simplicial operators acting on the two components.
struct OperatorPair {
    SimplicialOperator left, right;
    friend auto operator<=>(const OperatorPair&, const OperatorPair&) = default;
    friend bool operator==(const OperatorPair&, const OperatorPair&) = default;
};
using OperatorFormula = std::map<OperatorPair, long long>;

/// Retraction X -> Y (nabla), projection Y -> X (f) and homotopy phi on Y.
struct SdrData {
    ComplexPtr X, Y;
    LinearMap nabla, f, phi;
};

/// Checks f nabla = 1, d phi + phi d = nabla f - 1, phi nabla = 0,
/// f phi = 0, phi^2 = 0, that nabla and f are chain maps and, when both
/// sides are coalgebras and `comultiplicative` is set, that nabla is a
/// coalgebra map.  Exhaustive on bases up to bounds.max_degree.  With a
/// modulus >= 2 both sides of every identity are compared mod m.
VerificationReport sdr_verify(const SdrData& data, const Bounds& bounds, bool comultiplicative = true,
                              long long modulus = 0);

/// Alexander-Whitney map, shuffle map and Eilenberg-MacLane homotopy for
/// C(K) (x) C(L) and C(K x L).
class EilenbergZilber {
  public:
    EilenbergZilber(SetPtr K, SetPtr L);

    const std::shared_ptr<const Product>& product() const { return product_; }
    const std::shared_ptr<const TensorProduct>& tensor_side() const { return X_; }
    const std::shared_ptr<const SimplicialChains>& product_side() const { return Y_; }

    /// f on a cell of K x L.
    Chain aw(const Label& cell) const;
    /// nabla on a tensor of cells.
    Chain shuffle(const Label& ab) const;
    /// phi on a cell of K x L (unnormalized recursion, projected).
    Chain phi(const Label& cell) const;

    /// phi on q-simplices as an operator formula, memoised.
    const OperatorFormula& phi_formula(int q) const;
    /// nabla f on q-simplices as an operator formula.
    static OperatorFormula nabla_f_formula(int q);

    SdrData sdr() const;

  private:
    std::shared_ptr<const Product> product_;
    std::shared_ptr<const TensorProduct> X_;
    std::shared_ptr<const SimplicialChains> Y_;
    mutable std::mutex mutex_;
    mutable std::map<int, OperatorFormula> phi_memo_;
};

/// Evaluate an operator formula on a simplex of a product, dropping
/// degenerate results.
Chain evaluate_formula(const Product& P, const OperatorFormula& formula, const Simplex& z);

/// Compact JSON for a counterexample: the input and the two sides.
nlohmann::json mismatch(const Label& input, const Chain& lhs, const Chain& rhs);

} // namespace jcm
