#pragma once

#include "jcm/ez.hpp"
#include "jcm/spaces.hpp"

namespace jcm {

/// The Milgram map q: Omega(A (x) B) -> Omega A (x) Omega B, its section
/// sigma and the homotopy h with dh + hd = sigma q - 1.
///
/// Letters of Omega(A (x) B) are tensors a (x) b; "[a]" means a (x) 1,
/// "[b]" means 1 (x) b and "[ab]" has both factors reduced.  In the sign
/// exponents of h, words are graded in the cobar construction and the
/// elements a, b inside letters by their degree in A or B.
class Milgram {
  public:
    enum class LetterKind { A, B, Mixed };

    Milgram(CoalgebraPtr A, CoalgebraPtr B);

    const std::shared_ptr<const Cobar>& source() const { return omega_ab_; }
    const std::shared_ptr<const TensorProduct>& target() const { return target_; }

    LetterKind kind(const Label& letter) const;
    Label a_letter(const Label& a) const { return Label::tensor(a, B_->unit()); }
    Label b_letter(const Label& b) const { return Label::tensor(A_->unit(), b); }

    Chain q(const Label& word) const;
    Chain sigma(const Label& uv) const;
    Chain h(const Label& word) const;
    /// h[b|alpha] for alpha a nonempty run of A-letters (A and B elements
    /// given as labels of A and B).
    Chain h_block(const Label& b, const std::vector<Label>& alpha) const;

    /// Number of B-letters before the trailing run of B-letters.
    int sharp(const Label& word) const;

    /// X = Omega A (x) Omega B, Y = Omega(A (x) B), nabla = sigma, f = q, phi = h.
    SdrData sdr() const;

  private:
    CoalgebraPtr A_, B_;
    std::shared_ptr<const TensorProduct> tensor_;
    std::shared_ptr<const Cobar> omega_ab_, omega_a_, omega_b_;
    std::shared_ptr<const TensorProduct> target_;
};

/// q sigma = 1, qh = 0, h sigma = 0, h^2 = 0 and the chain-map conditions;
/// dh + hd = sigma q - 1 gated mod 2 and reported over Z.  When `modulus`
/// >= 2 the Z checks are compared mod that modulus instead.  Also checks that
/// h raises degree by one and lowers the number of B-letters.
VerificationReport milgram_verify(const Milgram& m, const Bounds& bounds, long long modulus = 0);

/// h commutes with the map induced by the inclusion of K as the first summand
/// of K v K, for A = C(K), B = C(L).  K needs a finite generator table.
Check milgram_naturality(const SetPtr& K, const SetPtr& L, const Bounds& bounds);

} // namespace jcm
