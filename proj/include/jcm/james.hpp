#pragma once

#include "jcm/milgram.hpp"
#include "jcm/perturbation.hpp"

namespace jcm {

/// Chain models around the James map K -> G+(EK): the map alpha into the
/// cobar construction on C(EK), the extended cobar diagonal psi, the
/// Bott-Samelson isomorphism and the comparison map gamma into C(G+(EK)).
class JamesModel {
  public:
    explicit JamesModel(SetPtr K);

    const SetPtr& base() const { return K_; }
    const std::shared_ptr<const Suspension>& suspension() const { return E_; }
    const std::shared_ptr<const SimplicialChains>& chains() const { return CK_; }
    const std::shared_ptr<const SimplicialChains>& suspension_chains() const { return CE_; }
    const std::shared_ptr<const Cobar>& omega() const { return omega_; }
    const std::shared_ptr<const TensorProduct>& omega_squared() const { return omega2_; }
    const std::shared_ptr<const FreeTensorHopf>& tensor_hopf() const { return hopf_; }
    const std::shared_ptr<const WordComplex>& monoid() const { return monoid_; }
    const std::shared_ptr<const MonoidChains>& monoid_chains() const { return monoid_chains_; }
    const EilenbergZilber& eilenberg_zilber() const { return ez_; }
    const GugenheimMunkholm& perturbation() const { return gm_; }
    const Milgram& milgram() const { return milgram_; }

    /// The letter [(1,y)] for a simplex y of K, or zero when (1,y) is
    /// degenerate or the basepoint.
    Chain letter(const Simplex& y) const;

    /// alpha: C(K) -> Omega C(EK); also accepts reduced vertices y - k0.
    Chain alpha(const Label& c) const;
    /// Free extension T C~(K) -> Omega C(EK).
    Chain alpha_hat(const Label& word) const;
    /// C(eta_K): C(K) -> C(G+(EK)); reduced vertices go to tau(1,y) - e.
    Chain eta(const Label& c) const;

    /// Closed form of psi on a letter [(1,x)] and its multiplicative extension.
    Chain psi_letter(const Label& c) const;
    Chain psi(const Label& word) const;
    /// xi = q o F o C(Lambda) on a cell (1,x) of EK, computed through the
    /// perturbation data and the Milgram map.
    Chain xi(const Label& c) const;
    /// Multiplicative extension of q o Omega(Delta_EK).
    Chain naive_diagonal(const Label& word) const;

    /// Twisting cochain (1,x) -> tau(1,x), with tau(1,y) - e on vertices,
    /// and the algebra map gamma it induces.
    TwistingCochain gamma_cochain() const;
    Chain gamma(const Label& word) const;
    TwistingCochain xi_cochain() const;

  private:
    SetPtr K_;
    std::shared_ptr<const Suspension> E_;
    std::shared_ptr<const SimplicialChains> CK_, CE_;
    std::shared_ptr<const Cobar> omega_;
    std::shared_ptr<const TensorProduct> omega2_;
    std::shared_ptr<const FreeTensorHopf> hopf_;
    std::shared_ptr<const WordComplex> monoid_;
    std::shared_ptr<const MonoidChains> monoid_chains_;
    EilenbergZilber ez_;
    GugenheimMunkholm gm_;
    Milgram milgram_;
};

/// Closed forms on cells (1,x) x (1,y) of EK x EK, compared with the generic
/// recursions: the reduced diagonal of phi, the vanishing of F_m on
/// b_n x (1,y) for m >= 2, the value of q o (F_1 + F_2) and the vanishing of
/// F_m for m >= 3.
VerificationReport suspension_product_verify(const JamesModel& m, const Bounds& bounds);

/// alpha chain map and comultiplicative, xi twisting and equal to the closed
/// form of psi, psi coassociative, counital and a chain map, the
/// Bott-Samelson map a bijection, chain map and coalgebra map, and the
/// triangle gamma alpha = C(eta).
VerificationReport james_verify(const JamesModel& m, const Bounds& bounds);

} // namespace jcm
