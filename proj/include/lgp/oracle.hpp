#pragma once

#include "lgp/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace lgp {

struct OracleOptions {
    /// Maximum number of k-subsets the oracle agrees to enumerate.
    double budget = 1e7;
    unsigned threads = 1;
};

/// C(n, k) as a double (saturates instead of overflowing).
double binomial(std::size_t n, std::size_t k);

/// Exhaustive optimum over all k-subsets; among optimal sets the
/// lexicographically smallest is returned. Throws BudgetExceeded when C(n,k)
/// exceeds the budget and ContractViolation when k > n.
Solution brute_force_opt(const ProblemSpec& spec, const Graph& g, std::size_t k, const OracleOptions& options = {});

/// Answer to a decision query. `witness` is set exactly when `yes`.
struct Decision {
    bool yes = false;
    std::optional<Solution> witness;
    /// Which procedure (or pipeline stage) settled the answer.
    std::string method;
};

/// Is there a k-subset whose value is at least p (max) or at most p (min)?
Decision decide(const ProblemSpec& spec, const Graph& g, std::size_t k, const Rational& p,
                const OracleOptions& options = {});

}  // namespace lgp
