#pragma once

#include "jcm/james.hpp"

namespace jcm {

/// D^n_{0,i} acting on (n-1)-simplices, 1 <= i <= (n-1)!:
///   D^1_{0,1} = id,  D^{n+1}_{0,i+k(n-1)!} = (D^n_{0,i})'  (k = 0)
///                                          = (D^n_{0,i})' s_0 d_k  (0 < k < n).
SimplicialOperator szczarba_operator(int n, long long i);
/// Parity epsilon(i,n) with epsilon(1,1) = 0 and
/// epsilon(i+k(n-1)!, n+1) = epsilon(i,n) + k + 1.
int szczarba_sign(long long i, int n);
long long factorial(int n);

/// The suspension twisting cochain t(1,x) = sum_i (-1)^{eps(i,n)} D^n_{0,i} tau(1,x)^{-1}
/// into C(G(EK)) and the algebra map theta it induces on Omega C(EK).
///
/// With the face maps used here d tau^{-1}(c) = -tau^{-1}(dc), so the sign
/// (-1)^{n+1} of the sum only gives a chain map when C(K) has zero
/// differential.  Constant takes t = tau^{-1} instead, which agrees with the
/// sum in odd dimensions.
class SzczarbaModel {
  public:
    enum class Sign { Alternating, Constant };

    /// Throws std::invalid_argument unless K is reduced.
    explicit SzczarbaModel(std::shared_ptr<const JamesModel> james, Sign sign = Sign::Alternating);

    const JamesModel& james() const { return *james_; }
    const std::shared_ptr<const JamesModel>& james_ptr() const { return james_; }
    const std::shared_ptr<const WordComplex>& group() const { return group_; }
    const std::shared_ptr<const MonoidChains>& group_chains() const { return group_chains_; }

    /// The full operator sum, degenerate terms dropped.
    Chain t_raw(const Label& c) const;
    /// (-1)^{n+1} tau(1,x)^{-1} for (1,x) of dimension n.
    Chain t_closed(const Label& c) const;
    /// t_closed or tau^{-1}, depending on the sign convention.
    Chain t(const Label& c) const;
    Sign sign() const { return sign_; }
    TwistingCochain cochain() const;
    Chain theta(const Label& word) const;

  private:
    std::shared_ptr<const JamesModel> james_;
    std::shared_ptr<const WordComplex> group_;
    std::shared_ptr<const MonoidChains> group_chains_;
    Sign sign_;
};

/// Structure of the operators for n <= max_n, raw sum against the closed
/// form, then t twisting, theta a chain map and theta comultiplicative for
/// the alternating sign and again, suffixed " (t=τ^{-1})", for the constant one.
VerificationReport szczarba_verify(const SzczarbaModel& m, const Bounds& bounds, int max_n = 6);

} // namespace jcm
