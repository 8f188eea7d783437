#pragma once

#include "lgp/graph.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lgp {

using Rational = boost::rational<std::int64_t>;

enum class Goal { min, max };

std::string_view to_string(Goal goal);

/// Objective α1·|E(V')| + α2·|E(V', V \ V')| with an optimization direction.
///
/// All values are kept as integers multiplied by `scale()`, which is twice the
/// lcm of the coefficient denominators: both the coefficients and the ½ in a
/// vertex contribution become integral.
class ProblemSpec {
public:
    ProblemSpec(Goal goal, Rational alpha1, Rational alpha2);

    Goal goal() const noexcept { return goal_; }
    Rational alpha1() const noexcept { return alpha1_; }
    Rational alpha2() const noexcept { return alpha2_; }
    std::int64_t scale() const noexcept { return scale_; }

    /// α1·scale and α2·scale; always even.
    std::int64_t scaled_alpha1() const noexcept { return scaled_alpha1_; }
    std::int64_t scaled_alpha2() const noexcept { return scaled_alpha2_; }

    /// "goal=max,a1=1,a2=1" form, accepted by parse_spec.
    std::string to_string() const;

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        return a.goal_ == b.goal_ && a.alpha1_ == b.alpha1_ && a.alpha2_ == b.alpha2_;
    }

private:
    Goal goal_;
    Rational alpha1_;
    Rational alpha2_;
    std::int64_t scale_;
    std::int64_t scaled_alpha1_;
    std::int64_t scaled_alpha2_;
};

namespace presets {
ProblemSpec densest();   // (max, 1, 0)
ProblemSpec sparsest();  // (min, 1, 0)
ProblemSpec max_cut();   // (max, 0, 1)
ProblemSpec min_cut();   // (min, 0, 1)
ProblemSpec coverage();  // (max, 1, 1)
}  // namespace presets

/// Preset name or "goal=<min|max>,a1=<p[/q]>,a2=<p[/q]>". Throws std::invalid_argument.
ProblemSpec parse_spec(std::string_view text);

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Objective value held as numerator over the spec's scale.
class Value {
public:
    constexpr Value() = default;
    constexpr Value(std::int64_t numerator, std::int64_t scale) : numerator_(numerator), scale_(scale) {}

    static Value zero(const ProblemSpec& spec) { return Value(0, spec.scale()); }

    std::int64_t numerator() const noexcept { return numerator_; }
    std::int64_t scale() const noexcept { return scale_; }
    Rational as_rational() const { return Rational(numerator_, scale_); }

    /// "p" or "p/q" in lowest terms.
    std::string to_string() const { return format_rational(as_rational()); }

    friend Value operator+(Value a, Value b);
    friend Value operator-(Value a, Value b);
    friend bool operator==(Value a, Value b);
    friend std::strong_ordering operator<=>(Value a, Value b);

private:
    std::int64_t numerator_ = 0;
    std::int64_t scale_ = 1;
};

/// scale·(α1·m1 + α2·m2).
Value value_of_counts(const ProblemSpec& spec, std::int64_t m1, std::int64_t m2);

/// val(S) = α1·|E(S)| + α2·|E(S, V \ S)|.
Value value(const ProblemSpec& spec, const Graph& g, const VertexSet& s);

/// δ(v, T) = ½α1·|E({v}, T)| + α2·|E({v}, V \ T)|. Requires v ∈ T.
Value contribution(const ProblemSpec& spec, const Graph& g, Vertex v, const VertexSet& t);

/// α2 >= α1/2 for maximization, α2 <= α1/2 for minimization.
bool is_degrading(const ProblemSpec& spec);

/// Strictly better under the goal.
bool better(Goal goal, Value a, Value b);
bool at_least_as_good(Goal goal, Value a, Value b);

/// Whether `v` meets the decision threshold p (>= p for max, <= p for min).
bool meets_threshold(Goal goal, Value v, const Rational& p);

struct Solution {
    VertexSet vertices;
    Value value;
    std::string method;
};

Solution make_solution(const ProblemSpec& spec, const Graph& g, VertexSet vertices, std::string method);

/// Total order used to reduce solver results: better value first, then the
/// lexicographically smaller vertex set.
bool preferred(Goal goal, const Solution& a, const Solution& b);

}  // namespace lgp
