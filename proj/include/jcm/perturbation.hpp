#pragma once

#include "jcm/ez.hpp"

#include <stdexcept>

namespace jcm {

/// Raised when F_k or Phi_k is still nonzero past the configured bound, i.e.
/// local nilpotence could not be confirmed.
struct NilpotenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Transfer of E-Z data X <-> Y to the cobar constructions:
///   F_1 = s^{-1} (proj to X_+) f,   F_k = - sum_{i+j=k} (F_i (x) F_j) Delta_Y phi
///   Phi_0 = counit,  Phi_k = (Phi_{k-1} (x) rho_Y + sum_{i+j=k} (Omega(nabla) F_j (x) Phi_i)) Delta_Y phi
/// Koszul signs: (F_i (x) F_j)(a (x) b) and (Phi (x) rho)(a (x) b) carry
/// (-1)^{|a|}; the Omega(nabla) F_j (x) Phi_i term carries none since Phi has
/// degree 0.
class GugenheimMunkholm {
  public:
    /// X and Y must be connected coalgebras.  `nilpotence_bound` is the
    /// largest k tried; a nonzero F_{bound+1} or Phi_{bound+1} throws.
    explicit GugenheimMunkholm(SdrData data, int nilpotence_bound = 12);

    const SdrData& data() const { return data_; }
    const std::shared_ptr<const Cobar>& omega_x() const { return omega_x_; }
    const std::shared_ptr<const Cobar>& omega_y() const { return omega_y_; }
    int nilpotence_bound() const { return bound_; }

    /// F_k(y) and Phi_k(y) as words of length k.
    Chain F(const Label& y, int k) const;
    Chain Phi(const Label& y, int k) const;
    /// Sum over all k; throws NilpotenceError past the bound.
    Chain F(const Label& y) const;
    Chain Phi(const Label& y) const;

    /// Omega(nabla) on a word of Omega(X).
    Chain omega_nabla(const Label& word) const;
    /// The algebra map induced by the twisting cochain F.
    Chain omega_f(const Label& word) const;
    /// The (Omega nabla Omega-tilde f, 1)-derivation homotopy with
    /// [y] -> -Phi(y).
    Chain omega_phi(const Label& word) const;

    TwistingCochain F_cochain() const;
    SdrData transferred() const;

  private:
    SdrData data_;
    std::shared_ptr<const Coalgebra> cx_, cy_;
    std::shared_ptr<const Cobar> omega_x_, omega_y_;
    int bound_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Label, int>, Chain> f_memo_, phi_memo_;
    mutable std::map<Label, Chain> diag_phi_memo_;

    const Chain& diagonal_phi(const Label& y) const;
};

} // namespace jcm
