#pragma once

#include "jcm/simplicial.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jcm {

/// Basis element of one of the graded modules in the engine.
///
///   Cell           a nondegenerate simplex, degree = dimension
///   ReducedVertex  y - k0 in reduced chains, degree 0
///   Tensor         a (x) b (x) ..., degree = sum
///   Cobar          [c1|...|cn], degree = sum (|ci| - 1)
///   Free           {c1|...|cn} in a tensor algebra, degree = sum |ci|
struct Label {
    enum class Kind : unsigned char { Cell, ReducedVertex, Tensor, Cobar, Free };
    Kind kind = Kind::Cell;
    Simplex cell;
    std::vector<Label> items;

    static Label of_cell(Simplex x);
    /// y - k0; the basepoint is kept so the label prints faithfully.
    static Label reduced_vertex(Simplex y, Simplex base);
    static Label tensor(std::vector<Label> factors);
    static Label tensor(Label a, Label b) { return tensor(std::vector<Label>{std::move(a), std::move(b)}); }
    static Label cobar(std::vector<Label> letters);
    static Label free_word(std::vector<Label> letters);

    int degree() const;
    std::string to_string() const;
    /// Number of letters of a Cobar/Free word, factors of a tensor.
    std::size_t size() const { return items.size(); }
    const Label& operator[](std::size_t k) const { return items[k]; }

    friend std::strong_ordering operator<=>(const Label& a, const Label& b);
    friend bool operator==(const Label& a, const Label& b) { return (a <=> b) == 0; }
};

/// Sparse homogeneous linear combination with int64 coefficients over Z or
/// Z/m.  Arithmetic throws std::overflow_error rather than wrapping.
class Chain {
  public:
    Chain() = default;
    explicit Chain(long long modulus) : modulus_(modulus) {}
    static Chain of(const Label& l, long long coeff = 1, long long modulus = 0);

    long long modulus() const { return modulus_; }
    void set_modulus(long long m);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Label, long long>& terms() const { return terms_; }
    long long coefficient(const Label& l) const;
    /// Degree of the terms; nullopt for the zero chain.  Throws if the terms
    /// are not homogeneous.
    std::optional<int> degree() const;

    void add(const Label& l, long long coeff);
    Chain& operator+=(const Chain& other);
    Chain& operator-=(const Chain& other);
    Chain& operator*=(long long s);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(long long s, Chain a) { return a *= s; }
    friend Chain operator-(Chain a) { return a *= -1; }
    friend bool operator==(const Chain& a, const Chain& b);

    /// Reduce coefficients mod m (m >= 2), used for comparisons in Z/m.
    Chain reduced_mod(long long m) const;
    std::string to_string() const;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

  private:
    long long normal(long long c) const;
    std::map<Label, long long> terms_;
    long long modulus_ = 0;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
inline int sign_of_parity(long long p) { return (p % 2 == 0) ? 1 : -1; }

using LinearMap = std::function<Chain(const Label&)>;

/// Linear extension of a map given on basis labels.
Chain apply_linear(const LinearMap& f, const Chain& c);

/// a (x) b as a two-factor Tensor label chain.
Chain tensor(const Chain& a, const Chain& b);
/// Koszul-signed tensor of maps: (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b).
Chain tensor_maps(const LinearMap& f, int deg_f, const LinearMap& g, int deg_g, const Label& ab);
Chain tensor_maps(const LinearMap& f, int deg_f, const LinearMap& g, int deg_g, const Chain& c);

/// (p (x) q) (x) r -> p (x) q (x) r and p (x) (q (x) r) -> p (x) q (x) r,
/// flattening one level only.
Chain assoc_left(const Chain& c);
Chain assoc_right(const Chain& c);
/// a (x) b -> (-1)^{|a||b|} b (x) a.
Chain swap_factors(const Chain& c);

/// Bounds shared by every enumeration.
struct Bounds {
    int max_degree = 6;
    int max_word_length = 4;
    std::size_t basis_cap = 200000;
};

} // namespace jcm
