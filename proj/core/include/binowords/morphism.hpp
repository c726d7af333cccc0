#pragma once

#include <binowords/signature.hpp>
#include <binowords/word.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binowords {

class Morphism {
public:
    Morphism(Alphabet source, Alphabet target, std::vector<FiniteWord> images);

    /// Parses rules of the form `0 -> 01`, one per line, `#` comments. An empty image is allowed.
    /// The target alphabet equals the source alphabet when every image letter is a source letter,
    /// otherwise it is the sorted set of image letters.
    static Morphism parse(std::string_view text);
    /// Same as parse, but with the rules separated by commas or semicolons as well as newlines.
    static Morphism parse_inline(std::string_view text);
    static Morphism from_rules(const std::vector<std::pair<char, std::string>>& rules);
    static Morphism identity(const Alphabet& alphabet);

    /// 0 -> 01, 1 -> 10
    static Morphism thue_morse();

    const Alphabet& source() const noexcept { return source_; }
    const Alphabet& target() const noexcept { return target_; }
    const FiniteWord& image(Letter a) const { return images_.at(a); }
    const FiniteWord& image(char a) const { return images_.at(source_.index(a)); }
    const std::vector<FiniteWord>& images() const noexcept { return images_; }
    bool is_endomorphism() const noexcept { return source_ == target_; }

    /// Column a is the Parikh vector of f(a); rows are indexed by target letters.
    std::vector<std::vector<std::uint64_t>> adjacency_matrix() const;
    std::string to_text() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<FiniteWord> images_;
};

struct MorphismClass {
    std::size_t rank = 0;
    bool is_parikh_constant = false;
    bool is_parikh_collinear = false;
    bool is_totally_erasing = false;
    std::optional<char> is_prolongable_on;
};

FiniteWord apply(const Morphism& f, const FiniteWord& u);

inline constexpr std::size_t default_image_limit = std::size_t{1} << 20;

/// j-fold composition, images materialized; throws when an image exceeds image_limit letters.
Morphism power(const Morphism& f, unsigned j, std::size_t image_limit = default_image_limit);

/// Exact rank of an integer matrix by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<BigInt>> m);

MorphismClass classify(const Morphism& f);

/// binom(f(u), e) evaluated from the subword counts of u alone.
BigInt image_coefficient(const Morphism& f, const BinomialSignature& u_signature, const FiniteWord& e);

/// Product over i of binom(f(w_i), e_i); requires |w| = |e|.
BigInt g_value(const Morphism& f, const FiniteWord& w, const FiniteWord& e);

struct MichelDelta {
    BigInt first;              ///< binom(phi^k(u), 01^k) - binom(phi^k(v), 01^k)
    BigInt second;             ///< the same for 01^(k+1)
    bool second_checked = false; ///< whether u ~_1 v, so the second identity applied
    /// second = 2^((k-1)(k-2)/2) (binom(u,01) - binom(v,01)); true only for k = 1 or equal 01-counts
    bool second_as_stated = false;
};

/// Both differences for the Thue-Morse morphism. Throws IdentityViolation unless the first equals
/// 2^((k-1)(k-2)/2) (|u|_0 - |v|_0) and, when u ~_1 v, the second equals 2^(k(k-1)/2) (binom(u,01) - binom(v,01)).
MichelDelta michel_delta(const FiniteWord& u, const FiniteWord& v, unsigned k);

} // namespace binowords
