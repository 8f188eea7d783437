#include "lgp/problem.hpp"

#include "lgp/errors.hpp"

#include <numeric>
#include <optional>

#include <charconv>
#include <stdexcept>
#include <string>

namespace lgp {

std::string_view to_string(Goal goal) { return goal == Goal::min ? "min" : "max"; }

ProblemSpec::ProblemSpec(Goal goal, Rational alpha1, Rational alpha2)
    : goal_(goal), alpha1_(alpha1), alpha2_(alpha2) {
    scale_ = 2 * std::lcm(alpha1_.denominator(), alpha2_.denominator());
    scaled_alpha1_ = alpha1_.numerator() * (scale_ / alpha1_.denominator());
    scaled_alpha2_ = alpha2_.numerator() * (scale_ / alpha2_.denominator());
}

std::string ProblemSpec::to_string() const {
    return "goal=" + std::string(lgp::to_string(goal_)) + ",a1=" + format_rational(alpha1_) +
           ",a2=" + format_rational(alpha2_);
}

namespace presets {
ProblemSpec densest() { return {Goal::max, 1, 0}; }
ProblemSpec sparsest() { return {Goal::min, 1, 0}; }
ProblemSpec max_cut() { return {Goal::max, 0, 1}; }
ProblemSpec min_cut() { return {Goal::min, 0, 1}; }
ProblemSpec coverage() { return {Goal::max, 1, 1}; }
}  // namespace presets

namespace {

std::int64_t parse_int(std::string_view token, std::string_view whole) {
    std::int64_t value = 0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ProblemSpec parse_spec(std::string_view text) {
    text = trim(text);
    if (text == "densest") return presets::densest();
    if (text == "sparsest") return presets::sparsest();
    if (text == "max-cut") return presets::max_cut();
    if (text == "min-cut") return presets::min_cut();
    if (text == "coverage") return presets::coverage();

    std::optional<Goal> goal;
    std::optional<Rational> a1;
    std::optional<Rational> a2;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = trim(text.substr(pos, comma - pos));
        pos = comma + 1;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("unknown spec '" + std::string(text) + "'");
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view val = trim(item.substr(eq + 1));
        if (key == "goal") {
            if (val == "min") goal = Goal::min;
            else if (val == "max") goal = Goal::max;
            else throw std::invalid_argument("goal must be min or max, got '" + std::string(val) + "'");
        } else if (key == "a1") {
            a1 = parse_rational(val);
        } else if (key == "a2") {
            a2 = parse_rational(val);
        } else {
            throw std::invalid_argument("unknown spec key '" + std::string(key) + "'");
        }
    }
    if (!goal || !a1 || !a2) throw std::invalid_argument("spec needs goal, a1 and a2: '" + std::string(text) + "'");
    return ProblemSpec(*goal, *a1, *a2);
}

namespace {
void require_same_scale(Value a, Value b) {
    if (a.scale() != b.scale()) throw ContractViolation("values from different objectives compared");
}
}  // namespace

Value operator+(Value a, Value b) {
    require_same_scale(a, b);
    return Value(a.numerator_ + b.numerator_, a.scale_);
}

Value operator-(Value a, Value b) {
    require_same_scale(a, b);
    return Value(a.numerator_ - b.numerator_, a.scale_);
}

bool operator==(Value a, Value b) {
    require_same_scale(a, b);
    return a.numerator_ == b.numerator_;
}

std::strong_ordering operator<=>(Value a, Value b) {
    require_same_scale(a, b);
    return a.numerator_ <=> b.numerator_;
}

Value value_of_counts(const ProblemSpec& spec, std::int64_t m1, std::int64_t m2) {
    return Value(spec.scaled_alpha1() * m1 + spec.scaled_alpha2() * m2, spec.scale());
}

Value value(const ProblemSpec& spec, const Graph& g, const VertexSet& s) {
    return value_of_counts(spec, static_cast<std::int64_t>(edges_within(g, s)),
                           static_cast<std::int64_t>(edges_crossing(g, s)));
}

Value contribution(const ProblemSpec& spec, const Graph& g, Vertex v, const VertexSet& t) {
    if (!t.contains(v)) throw ContractViolation("contribution requires v in T");
    const auto inside = static_cast<std::int64_t>(edges_to(g, v, t));
    const auto outside = static_cast<std::int64_t>(g.degree(v)) - inside;
    return Value(spec.scaled_alpha1() / 2 * inside + spec.scaled_alpha2() * outside, spec.scale());
}

bool is_degrading(const ProblemSpec& spec) {
    const Rational half_alpha1 = spec.alpha1() / 2;
    return spec.goal() == Goal::max ? spec.alpha2() >= half_alpha1 : spec.alpha2() <= half_alpha1;
}

bool better(Goal goal, Value a, Value b) { return goal == Goal::min ? a < b : a > b; }

bool at_least_as_good(Goal goal, Value a, Value b) { return !better(goal, b, a); }

bool meets_threshold(Goal goal, Value v, const Rational& p) {
    const Rational r = v.as_rational();
    return goal == Goal::max ? r >= p : r <= p;
}

Solution make_solution(const ProblemSpec& spec, const Graph& g, VertexSet vertices, std::string method) {
    const Value v = value(spec, g, vertices);
    return Solution{std::move(vertices), v, std::move(method)};
}

bool preferred(Goal goal, const Solution& a, const Solution& b) {
    if (better(goal, a.value, b.value)) return true;
    if (better(goal, b.value, a.value)) return false;
    return lex_less(a.vertices, b.vertices);
}

}  // namespace lgp
