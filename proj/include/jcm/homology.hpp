#pragma once

#include "jcm/complexes.hpp"

#include <string>
#include <vector>

namespace jcm {

struct HomologyGroup {
    int degree = 0;
    long long rank = 0;
    /// Elementary divisors greater than one, as decimal strings.
    std::vector<std::string> torsion;
};

struct MatrixInvariants {
    long long rank = 0;
    std::vector<std::string> divisors; // all nonzero invariant factors, in order
};

/// Sparse integer matrix given by columns (row index -> entry).
using SparseColumns = std::vector<std::vector<std::pair<std::size_t, long long>>>;

/// Rank and invariant factors of an integer matrix (modulus 0), or its rank
/// over Z/p for a prime modulus p.
MatrixInvariants smith_invariants(const SparseColumns& columns, std::size_t rows, long long modulus = 0);

/// Homology of a complex in degrees lo..hi.  Throws std::domain_error if a
/// boundary leaves the enumerated basis (the truncation is not a subcomplex).
std::vector<HomologyGroup> homology(const ChainComplex& complex, int lo, int hi, const Bounds& bounds,
                                   long long modulus = 0);

} // namespace jcm
