#pragma once

#include "lgp/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lgp {

enum class ApproxMode { greedy_top_k, exact_branching, exhaustive, unsupported };

std::string_view to_string(ApproxMode mode);

struct ApproxResult {
    /// Absent only in unsupported mode.
    std::optional<Solution> solution;
    /// Promised ratio against the optimum: 1 - k²/B in greedy mode, 1 otherwise.
    Rational guarantee{1};
    ApproxMode mode = ApproxMode::unsupported;
    /// Sum of the k largest degrees.
    std::int64_t degree_sum = 0;
    std::string note;
};

/// If ε >= k²/Δ, the k vertices of largest degree (ties to the smallest id);
/// otherwise alg1 on max-cut. Throws ContractViolation when k > n or ε is not
/// in (0, 1).
ApproxResult approx_max_cut(const Graph& g, std::size_t k, const Rational& epsilon);

/// Exhaustive search when 2^k >= n; otherwise an unsupported result without a
/// solution. Throws ContractViolation when k > n.
ApproxResult approx_min_cut(const Graph& g, std::size_t k, const Rational& epsilon,
                            const OracleOptions& options = {});

/// The k vertices of largest degree (ties to the smallest id) as a max-cut
/// solution; `degree_sum` receives B, the sum of their degrees.
Solution top_degree_vertices(const Graph& g, std::size_t k, std::int64_t& degree_sum);

/// Whether approx_max_cut takes the greedy branch: Δ > 0 and ε >= k²/Δ.
bool greedy_applies(const Graph& g, std::size_t k, const Rational& epsilon);

}  // namespace lgp
