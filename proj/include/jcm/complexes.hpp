#pragma once

#include "jcm/chain.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jcm {

/// Graded free module with a differential, enumerable degree by degree.
class ChainComplex {
  public:
    virtual ~ChainComplex() = default;
    virtual std::string name() const = 0;
    virtual Chain differential(const Label& l) const = 0;
    /// Basis in one degree, sorted.  Complexes with an infinite basis honour
    /// bounds.max_word_length; throws std::length_error past bounds.basis_cap.
    virtual std::vector<Label> basis(int degree, const Bounds& bounds) const = 0;

    Chain d(const Chain& c) const;
};

/// Coaugmented chain coalgebra.
class Coalgebra : public virtual ChainComplex {
  public:
    virtual Chain diagonal(const Label& l) const = 0;
    virtual long long counit(const Label& l) const = 0;
    /// Basis element spanning the image of the coaugmentation.
    virtual Label unit() const = 0;

    Chain diagonal(const Chain& c) const;
    /// Delta(c) - c (x) 1 - 1 (x) c; only meaningful on the counit kernel.
    Chain reduced_diagonal(const Label& c) const;
    /// Degree 0 is spanned by the unit.
    bool is_connected(const Bounds& bounds) const;
};

/// Graded algebra with unit.
class Algebra : public virtual ChainComplex {
  public:
    virtual Chain multiply(const Label& a, const Label& b) const = 0;
    virtual Label one() const = 0;

    Chain product(const Chain& a, const Chain& b) const;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A (p,q)-shuffle: mu and nu partition {0,...,p+q-1}, each increasing.
struct Shuffle {
    std::vector<int> mu, nu;
    /// sum_i (mu_i - (i-1)) with 1-based i, i.e. the parity of the shuffle.
    int signature() const;
};
std::vector<Shuffle> shuffles(int p, int q);

/// Normalized chains C(K) with the Alexander-Whitney diagonal.
class SimplicialChains : public Coalgebra {
  public:
    explicit SimplicialChains(SetPtr set) : set_(std::move(set)) {}
    std::string name() const override { return "C(" + set_->name() + ")"; }
    Chain differential(const Label& l) const override;
    std::vector<Label> basis(int degree, const Bounds& bounds) const override;
    Chain diagonal(const Label& l) const override;
    long long counit(const Label& l) const override;
    Label unit() const override { return Label::of_cell(set_->basepoint(0)); }

    const SetPtr& set() const { return set_; }
    /// Cell label, or the zero chain for a degenerate simplex.
    Chain cell(const Simplex& x, long long coeff = 1) const;
    /// d(x) = sum (-1)^i d_i x for any simplex (zero when x is degenerate).
    Chain boundary(const Simplex& x) const;

  private:
    SetPtr set_;
};

class WordComplex;

/// Chains on a simplicial monoid or group: AW coalgebra plus the product
/// given by the shuffle map followed by multiplication.
class MonoidChains : public SimplicialChains, public Algebra {
  public:
    explicit MonoidChains(std::shared_ptr<const WordComplex> words);
    std::string name() const override { return SimplicialChains::name(); }
    Chain multiply(const Label& a, const Label& b) const override;
    Label one() const override { return unit(); }
    const WordComplex& words() const { return *words_; }

  private:
    std::shared_ptr<const WordComplex> words_;
};

/// Reduced chains: degree 0 spanned by y - k0; C-tilde_n = C_n for n > 0.
class ReducedChains : public ChainComplex {
  public:
    explicit ReducedChains(SetPtr set) : set_(std::move(set)) {}
    std::string name() const override { return "C~(" + set_->name() + ")"; }
    Chain differential(const Label& l) const override;
    std::vector<Label> basis(int degree, const Bounds& bounds) const override;

    /// Rewrite a chain of C(K) with augmentation zero in the reduced basis.
    Chain from_chains(const Chain& c) const;
    /// Inverse: y - k0 back to the difference of vertices.
    Chain to_chains(const Chain& c) const;
    /// The component of a C(K) label in C-tilde(K) together with its unit
    /// coefficient: y = (y - k0) + k0.
    std::pair<Chain, long long> split(const Label& l) const;
    const SetPtr& set() const { return set_; }

  private:
    SetPtr set_;
};

/// X (x) Y with the Koszul differential; coalgebra and algebra structures are
/// available when both factors carry them.
class TensorProduct : public Coalgebra, public Algebra {
  public:
    TensorProduct(ComplexPtr left, ComplexPtr right);
    std::string name() const override { return left_->name() + "⊗" + right_->name(); }
    Chain differential(const Label& l) const override;
    std::vector<Label> basis(int degree, const Bounds& bounds) const override;
    Chain diagonal(const Label& l) const override;
    long long counit(const Label& l) const override;
    Label unit() const override;
    Chain multiply(const Label& a, const Label& b) const override;
    Label one() const override;

    const ComplexPtr& left() const { return left_; }
    const ComplexPtr& right() const { return right_; }

  private:
    ComplexPtr left_, right_;
};

/// Cobar construction: the free algebra on s^{-1} of the positive part of a
/// connected coalgebra with
///   d[c] = -[dc] + sum (-1)^{|c'|} [c'|c'']   over the reduced diagonal,
/// extended as a derivation with Koszul signs.
class Cobar : public Algebra {
  public:
    /// Throws std::invalid_argument when the coalgebra is not connected.
    explicit Cobar(CoalgebraPtr coalgebra);
    std::string name() const override { return "Ω" + coalgebra_->name(); }
    Chain differential(const Label& l) const override;
    std::vector<Label> basis(int degree, const Bounds& bounds) const override;
    Chain multiply(const Label& a, const Label& b) const override;
    Label one() const override { return Label::cobar({}); }

    const CoalgebraPtr& coalgebra() const { return coalgebra_; }
    /// d_Omega on a single letter [c].
    Chain letter_differential(const Label& c) const;
    /// Letters available in one cobar degree (coalgebra degree + 1).
    std::vector<Label> letters(int cobar_degree, const Bounds& bounds) const;
    /// Whether degree-0 letters exist, in which case enumeration needs the
    /// word-length bound.
    bool has_degree_zero_letters(const Bounds& bounds) const;

  private:
    CoalgebraPtr coalgebra_;
};

/// The concatenation product of Cobar/Free words, with the unit [] or {}.
Label concat_words(const Label& a, const Label& b);
Chain concat_words(const Chain& a, const Chain& b);

/// Words of total degree `degree` over letters graded by `letter_degree`
/// (letters of degree 0 require the length bound).
std::vector<std::vector<Label>> enumerate_words(int degree, const std::vector<std::vector<Label>>& letters_by_degree,
                                                int max_length, std::size_t cap);

/// The tensor Hopf algebra T C-tilde(K): free algebra on reduced chains with
/// the derivation extending d and the algebra map extending Delta_K.
class FreeTensorHopf : public Coalgebra, public Algebra {
  public:
    explicit FreeTensorHopf(SetPtr set);
    std::string name() const override { return "T" + reduced_.name(); }
    Chain differential(const Label& l) const override;
    std::vector<Label> basis(int degree, const Bounds& bounds) const override;
    Chain diagonal(const Label& l) const override;
    long long counit(const Label& l) const override;
    Label unit() const override { return Label::free_word({}); }
    Chain multiply(const Label& a, const Label& b) const override;
    Label one() const override { return unit(); }

    /// Delta on a single reduced-chain letter, landing in T (x) T.
    Chain letter_diagonal(const Label& c) const;
    const ReducedChains& reduced() const { return reduced_; }

  private:
    SimplicialChains chains_;
    ReducedChains reduced_;
};

/// Degree -1 map from a coalgebra into an algebra.
struct TwistingCochain {
    CoalgebraPtr source;
    AlgebraPtr target;
    LinearMap map;
};

/// d t + t d - mu (t (x) t) Delta on one label (zero iff the identity holds
/// there).
Chain twisting_defect(const TwistingCochain& t, const Label& c);
/// Algebra map Omega(C) -> A induced by t: [c1|...|cn] -> t(c1)...t(cn).
LinearMap cochain_to_algebra_map(const TwistingCochain& t);

} // namespace jcm
