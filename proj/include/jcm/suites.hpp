#pragma once

#include "jcm/report.hpp"
#include "jcm/chain.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jcm {

/// The five simplicial identities on every simplex (degenerate ones
/// included) up to the degree bound, and agreement of the stored normal form
/// with the face test for degeneracy.
VerificationReport simplicial_verify(const SimplicialSet& K, const Bounds& bounds);

/// d^2 = 0 on normalized, reduced and cobar chains, and the coalgebra axioms
/// of the Alexander-Whitney diagonal.
VerificationReport chains_verify(const SetPtr& K, const Bounds& bounds);

/// Homology tables of C(K), Omega C(EK), T C~(K) and the word-bounded
/// C(G+(EK)), compared with the tensor algebra on the reduced homology of K.
/// When K is itself a suspension EK' the comparison is made for K'.
VerificationReport homology_verify(const SetPtr& K, const Bounds& bounds, long long modulus = 0);

/// Ranks of the tensor algebra on a graded module with ranks v[0], v[1], ...
/// in degrees 0..max_degree; v[0] must be zero.
std::vector<long long> tensor_algebra_ranks(const std::vector<long long>& v, int max_degree);

struct SuiteRequest {
    std::string suite = "all";
    /// One space name, or "K,L" for the suites on pairs.
    std::string fixture = "S1";
    Bounds bounds;
    long long modulus = 0;
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or all of them for "all".  Throws std::invalid_argument for
/// an unknown suite or fixture.
VerificationReport run_suite(const SuiteRequest& request);

} // namespace jcm
