#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jcm {

/// One face or degeneracy symbol in an operator word such as `s1 d0`.
struct OpSymbol {
    enum class Kind { Face, Degeneracy };
    Kind kind;
    int index;

    static OpSymbol face(int i) { return {Kind::Face, i}; }
    static OpSymbol degeneracy(int j) { return {Kind::Degeneracy, j}; }
};

/// A composite of faces and degeneracies acting on simplices of a fixed
/// dimension.
///
/// Internally this is the order-preserving map theta: [0,m] -> [0,n] with
/// K(theta): K_n -> K_m.  The canonical word s_{i1}..s_{ik} d_{j1}..d_{jl}
/// (i strictly decreasing, j strictly increasing) is read off from the
/// epi-mono factorisation of theta, so composing and normalising can never
/// disagree with evaluation.
class SimplicialOperator {
  public:
    SimplicialOperator() = default;

    static SimplicialOperator identity(int n);
    /// d_i acting on n-simplices.
    static SimplicialOperator face(int i, int n);
    /// s_j acting on n-simplices.
    static SimplicialOperator degeneracy(int j, int n);
    /// Operator with the given order-preserving map [0,m] -> [0,source_dim].
    static SimplicialOperator from_map(int source_dim, std::vector<int> map);
    /// Canonical operator with the given degeneracy (any order) and face
    /// index sets.
    static SimplicialOperator canonical(int source_dim, std::vector<int> degens,
                                        std::vector<int> faces);

    int source_dim() const { return source_dim_; }
    int target_dim() const { return static_cast<int>(map_.size()) - 1; }
    const std::vector<int>& map() const { return map_; }

    /// Apply `*this` first, then `next`.
    SimplicialOperator then(const SimplicialOperator& next) const;
    /// Eilenberg-MacLane derived operator: every index shifted up by one.
    SimplicialOperator derived() const;

    /// Degeneracy indices of the canonical form, strictly decreasing.
    std::vector<int> degeneracies() const;
    /// Face indices of the canonical form, strictly increasing.
    std::vector<int> faces() const;

    bool is_identity() const;
    /// True when the canonical word starts (leftmost) with a degeneracy.
    bool begins_with_degeneracy() const { return !degeneracies().empty(); }

    /// Canonical word such as "s1 s0 d2", or "id".
    std::string to_string() const;

    friend auto operator<=>(const SimplicialOperator&, const SimplicialOperator&) = default;
    friend bool operator==(const SimplicialOperator&, const SimplicialOperator&) = default;

  private:
    int source_dim_ = 0;
    std::vector<int> map_{0};
};

/// Compose an operator word (written left to right, rightmost applied first)
/// acting on simplices of `source_dim` and return its canonical form.
/// Throws std::invalid_argument when an index is out of range for the
/// dimension reached at that point.
SimplicialOperator normalize_operator(const std::vector<OpSymbol>& word, int source_dim);

/// Parse a word like "s1 d0 d2" (also accepts "∂" for d).  Throws
/// std::invalid_argument on malformed text.
std::vector<OpSymbol> parse_operator_word(const std::string& text);

/// Degeneracy word (strictly decreasing) <-> epimorphism [0,n] -> [0,n-k].
std::vector<int> epi_from_degens(int n, const std::vector<int>& degens);
std::vector<int> degens_from_epi(const std::vector<int>& epi);

} // namespace jcm
