#pragma once

#include "jcm/operator.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jcm {

struct Core;
using CorePtr = std::shared_ptr<const Core>;

/// A simplex in Eilenberg-Zilber normal form: a nondegenerate core together
/// with a strictly decreasing degeneracy word s_{i1} ... s_{ik}.
struct Simplex {
    CorePtr core;
    std::vector<int> degens;

    int dim() const;
    bool is_degenerate() const { return !degens.empty(); }
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) { return (a <=> b) == 0; }
};

enum class CoreKind : unsigned char { Generator, SuspensionBase, Suspension, Pair, Word };

/// Nondegenerate payload of a simplex.  Which fields are used depends on the
/// kind: generators carry a name, (1,x) carries x in parts[0], a product pair
/// carries both components, and a group/monoid word carries its letters
/// (simplices one dimension up) with exponents in `powers`.
struct Core {
    CoreKind kind;
    int dim;
    std::string name;
    std::vector<Simplex> parts;
    std::vector<int> powers;

    std::string to_string() const;
};

std::strong_ordering compare_cores(const Core& a, const Core& b);
Simplex make_simplex(CorePtr core, std::vector<int> degens = {});

/// Untyped parse tree for the textual simplex syntax, resolved against a
/// concrete simplicial set.
struct SimplexSyntax {
    enum class Kind { Name, Star, Identity, Integer, Degenerate, Tuple, Word };
    Kind kind = Kind::Name;
    std::string name;
    int value = 0;
    std::vector<int> degens;
    std::vector<SimplexSyntax> items;
    std::vector<int> powers;
};

/// Pointed simplicial set evaluated on demand.  Subclasses supply the faces of
/// nondegenerate cores; everything else (operator application, degeneracies,
/// normal forms) is generic.
class SimplicialSet {
  public:
    virtual ~SimplicialSet() = default;

    virtual std::string name() const = 0;
    virtual CorePtr base_core() const = 0;
    /// d_i of the nondegenerate core `c` (dim >= 1), in normal form.
    virtual Simplex core_face(const Core& c, int i) const = 0;
    /// Nondegenerate n-simplices, or nullopt when there are infinitely many.
    virtual std::optional<std::vector<Simplex>> nondegenerate(int n) const = 0;
    /// Finite enumeration under a word-length bound; plain sets ignore it.
    virtual std::vector<Simplex> nondegenerate_bounded(int n, int max_word_length) const;
    /// Highest dimension carrying nondegenerate simplices, when finite.
    virtual std::optional<int> top_dimension() const { return std::nullopt; }
    virtual Simplex resolve(const SimplexSyntax& syntax) const = 0;

    Simplex basepoint(int n) const;
    bool is_basepoint(const Simplex& x) const;
    bool is_reduced() const;

    Simplex apply(const SimplicialOperator& op, const Simplex& x) const;
    Simplex face(int i, const Simplex& x) const;
    Simplex degeneracy(int j, const Simplex& x) const;
    /// Apply the degeneracies of a strictly decreasing word to x.
    Simplex degenerate(const Simplex& x, const std::vector<int>& degens) const;
    /// Front face on vertices 0..i and back face on vertices n-j..n.
    Simplex front(int i, const Simplex& x) const;
    Simplex back(int j, const Simplex& x) const;

    Simplex parse(const std::string& text) const;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;

/// Degeneracy test via the identity x = s_i d_i x, independent of the stored
/// normal form.
bool is_degenerate_by_faces(const SimplicialSet& set, const Simplex& x);

/// A finite pointed simplicial set given by generators and their faces.
class FiniteSimplicialSet : public SimplicialSet {
  public:
    struct GeneratorSpec {
        std::string id;
        int dim;
        /// Faces d_0..d_dim as (generator id, degeneracy word).
        std::vector<std::pair<std::string, std::vector<int>>> faces;
    };

    /// Validates dimensions, face references and the face identities
    /// d_i d_j = d_{j-1} d_i; throws std::invalid_argument on failure.
    FiniteSimplicialSet(std::string name, std::string basepoint, std::vector<GeneratorSpec> generators);

    std::string name() const override { return name_; }
    CorePtr base_core() const override { return base_; }
    Simplex core_face(const Core& c, int i) const override;
    std::optional<std::vector<Simplex>> nondegenerate(int n) const override;
    std::optional<int> top_dimension() const override { return top_; }
    Simplex resolve(const SimplexSyntax& syntax) const override;

    Simplex generator(const std::string& id) const;
    const std::vector<GeneratorSpec>& specs() const { return specs_; }
    const std::string& basepoint_id() const { return base_->name; }

  private:
    struct Entry {
        CorePtr core;
        std::vector<Simplex> faces;
    };
    std::string name_;
    CorePtr base_;
    std::vector<GeneratorSpec> specs_;
    std::map<std::string, Entry> entries_;
    std::map<int, std::vector<Simplex>> by_dim_;
    int top_ = 0;
};

/// Simplicial suspension EK: b_0 plus pairs (i,x) with (i,k_n) = b_{n+i}.
class Suspension : public SimplicialSet {
  public:
    explicit Suspension(SetPtr base);

    std::string name() const override { return "E(" + base_->name() + ")"; }
    CorePtr base_core() const override { return b0_; }
    Simplex core_face(const Core& c, int i) const override;
    std::optional<std::vector<Simplex>> nondegenerate(int n) const override;
    std::optional<int> top_dimension() const override;
    Simplex resolve(const SimplexSyntax& syntax) const override;

    const SetPtr& base() const { return base_; }
    /// (1,x) for any simplex x of K, normalised.
    Simplex suspend(const Simplex& x) const;
    /// (i,x) = s_0^{i-1}(1,x), i >= 1.
    Simplex pair(int i, const Simplex& x) const;
    /// For x of the form s_J(1,y), returns y with the degeneracies of x shifted down;
    /// nullopt for basepoint simplices.
    std::optional<Simplex> desuspend(const Simplex& x) const;

  private:
    SetPtr base_;
    CorePtr b0_;
};

/// Cartesian product K x L with componentwise operators.
class Product : public SimplicialSet {
  public:
    Product(SetPtr left, SetPtr right);

    std::string name() const override { return left_->name() + "x" + right_->name(); }
    CorePtr base_core() const override { return base_; }
    Simplex core_face(const Core& c, int i) const override;
    std::optional<std::vector<Simplex>> nondegenerate(int n) const override;
    std::vector<Simplex> nondegenerate_bounded(int n, int max_word_length) const override;
    std::optional<int> top_dimension() const override;
    Simplex resolve(const SimplexSyntax& syntax) const override;

    const SetPtr& left() const { return left_; }
    const SetPtr& right() const { return right_; }
    /// The simplex (a,b) for a, b of equal dimension, with common degeneracies
    /// pulled out.
    Simplex make_pair(const Simplex& a, const Simplex& b) const;
    /// Full (possibly degenerate) components of any simplex of the product.
    std::pair<Simplex, Simplex> components(const Simplex& z) const;
    /// Diagonal x -> (x,x); requires left == right.
    Simplex diagonal(const Simplex& x) const { return make_pair(x, x); }

  private:
    std::vector<Simplex> enumerate(int n, std::optional<int> bound) const;
    SetPtr left_, right_;
    CorePtr base_;
};

/// Free simplicial group G(L) (Kan loop group) or free simplicial monoid
/// G+(L).  Elements of dimension n are reduced words in letters tau(z),
/// z in L_{n+1}, with tau(s_0 y) = e.  The monoid case requires
/// tau(d_0 z) = e for every letter, which holds when L is a suspension.
class WordComplex : public SimplicialSet {
  public:
    enum class Kind { Group, Monoid };
    WordComplex(SetPtr letters, Kind kind);

    std::string name() const override {
        return (kind_ == Kind::Group ? "G(" : "G+(") + letters_->name() + ")";
    }
    CorePtr base_core() const override { return identity_; }
    Simplex core_face(const Core& c, int i) const override;
    std::optional<std::vector<Simplex>> nondegenerate(int n) const override;
    std::vector<Simplex> nondegenerate_bounded(int n, int max_word_length) const override;
    Simplex resolve(const SimplexSyntax& syntax) const override;

    Kind kind() const { return kind_; }
    const SetPtr& letter_set() const { return letters_; }

    using Letter = std::pair<Simplex, int>;
    /// Reduced, normal-form word of group dimension n.
    Simplex make_word(int n, std::vector<Letter> letters) const;
    /// tau(z) for z in L_{n+1}.
    Simplex tau(const Simplex& z, int power = 1) const;
    /// Letters of an arbitrary (possibly degenerate) element, at its own dimension.
    std::vector<Letter> letters_of(const Simplex& w) const;
    Simplex multiply(const Simplex& u, const Simplex& v) const;
    Simplex inverse(const Simplex& w) const;
    std::size_t word_length(const Simplex& w) const;

  private:
    bool trivial_letter(const Simplex& z) const;
    SetPtr letters_;
    Kind kind_;
    CorePtr identity_;
};

/// All strictly decreasing degeneracy words of length k acting on (n-k)-simplices.
std::vector<std::vector<int>> degeneracy_words(int n, int k);
/// Every n-simplex (degenerate or not) of a set; word complexes need a bound.
std::vector<Simplex> all_simplices(const SimplicialSet& set, int n, std::optional<int> max_word_length);

/// The James unit eta_K: K -> G+(EK), x -> tau(1,x).
Simplex james_unit(const Suspension& ek, const WordComplex& monoid, const Simplex& x);

/// Parse the textual simplex syntax (names, "*", "s1s0(...)", "(1,x)",
/// "(a,b)", "tau(z)^-1 tau(w)", "e").
SimplexSyntax parse_simplex_syntax(const std::string& text);

} // namespace jcm
