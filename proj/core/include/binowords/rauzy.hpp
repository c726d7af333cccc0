#pragma once

#include <binowords/complexity.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binowords {

struct RauzyEdge {
    ParikhVector source;
    Letter first = 0; ///< first letter of the length-(n+1) factor
    Letter last = 0;  ///< last letter of the length-(n+1) factor
    ParikhVector target;

    bool is_loop() const noexcept { return first == last; }
    friend bool operator==(const RauzyEdge&, const RauzyEdge&) = default;
    friend auto operator<=>(const RauzyEdge&, const RauzyEdge&) = default;
};

/// Abelian Rauzy graph of order n: Parikh vectors of length-n factors, one labeled edge
/// Psi(au) -> Psi(ub) with label (a,b) for every factor aub of length n+1.
struct AbelianRauzyGraph {
    std::size_t order = 0;
    Alphabet alphabet;
    std::vector<ParikhVector> vertices; ///< sorted
    std::vector<RauzyEdge> edges;       ///< sorted, distinct
    std::size_t prefix_used = 0;

    std::size_t loop_count() const;
    bool has_edge(const ParikhVector& from, Letter a, Letter b, const ParikhVector& to) const;
    bool has_label(Letter a, Letter b) const;
    /// DOT with loops in red; binary vertices are labeled by their number of 1s.
    std::string to_dot() const;
    nlohmann::json to_json() const;
};

AbelianRauzyGraph build_graph(ComplexityEngine& engine, std::size_t n);
AbelianRauzyGraph build_graph(const WordGenerator& gen, std::size_t n, EngineOptions options = {});

/// Sizes of the edge-quotient sets of a binary word at order n, all read off Fac_{n+1}:
/// X = {(a, Psi(u), b) : aub}, Y_L = {(a, Psi(u)) : au}, Y_R = {(Psi(u), a) : ua}.
struct EdgeQuotients {
    std::size_t order = 0;
    std::uint64_t x_count = 0;
    std::uint64_t yl_count = 0;
    std::uint64_t yr_count = 0;
    /// Size of the disjoint union of Y_L and Y_R.
    std::uint64_t y_count = 0;

    nlohmann::json to_json() const;
};

EdgeQuotients edge_quotients(ComplexityEngine& engine, std::size_t n);
EdgeQuotients edge_quotients(const WordGenerator& gen, std::size_t n, EngineOptions options = {});

/// A run length, possibly only a lower bound when the run reached the end of the inspected prefix.
struct RunBound {
    std::uint64_t value = 0;
    bool at_least = false;

    /// Treats a lower bound as larger than anything.
    bool exceeds(std::uint64_t n) const noexcept { return at_least || value > n; }
    bool equals(std::uint64_t n) const noexcept { return !at_least && value == n; }
    std::string str() const;
};

struct RunMaxima {
    RunBound m;       ///< largest n with both 0^n and 1^n factors
    RunBound m_prime; ///< largest n with 0^n or 1^n a factor
    std::size_t prefix_used = 0;
};

RunMaxima run_maxima(const WordGenerator& gen, std::size_t cap = default_prefix_cap);

/// Predicted (k+1)-binomial complexity of phi^k(y) from the abelian Rauzy graphs of y.
class KPlus1Formula {
public:
    KPlus1Formula(const WordGenerator& y, unsigned k, EngineOptions options = {});

    std::uint64_t operator()(std::uint64_t length);
    const RunMaxima& runs() const noexcept { return runs_; }
    /// Set when the inspected prefix of y has a period at most a quarter of its length.
    bool periodicity_warning() const noexcept { return periodic_warning_; }
    std::uint64_t x_count(std::size_t n);
    std::uint64_t y_count(std::size_t n);

private:
    ComplexityEngine engine_;
    unsigned k_;
    RunMaxima runs_;
    bool periodic_warning_ = false;
    std::vector<std::optional<EdgeQuotients>> cache_;
};

std::uint64_t kplus1_formula(const WordGenerator& gen_y, unsigned k, std::uint64_t length, EngineOptions options = {});

/// Smallest period of a finite word.
std::size_t smallest_period(std::span<const Letter> w);

} // namespace binowords
