#pragma once

#include <binowords/morphism.hpp>
#include <binowords/word.hpp>

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace binowords {

enum class GeneratorKind {
    fixed_point,
    sturmian,
    champernowne,
    g_word,
    tau_g_word,
    h_word,
    grillenberger,
    image_of,
    suffix_of,
};

std::string to_string(GeneratorKind kind);

/// Directive of a characteristic Sturmian word: a finite preperiod followed by a period repeated forever.
struct SturmianSpec {
    std::vector<unsigned> preperiod;
    std::vector<unsigned> period{1};

    unsigned at(std::size_t i) const;
    std::string str() const;
};

namespace detail {

/// Stateful producer of a single infinite word, driven under the generator's lock.
class PrefixSource {
public:
    virtual ~PrefixSource() = default;
    /// Appends letters to buf (which holds everything produced so far) until buf.size() >= n.
    virtual void grow(std::vector<Letter>& buf, std::size_t n) = 0;
};

} // namespace detail

/// Deterministic supplier of prefixes of an infinite word. Copies share one prefix cache.
class WordGenerator {
public:
    WordGenerator(Alphabet alphabet, GeneratorKind kind, std::string id, std::unique_ptr<detail::PrefixSource> source);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    GeneratorKind kind() const noexcept { return kind_; }
    const std::string& id() const noexcept { return id_; }

    FiniteWord prefix(std::size_t n) const;
    std::vector<Letter> prefix_letters(std::size_t n) const;
    /// Letter at position i.
    Letter at(std::size_t i) const;

private:
    struct State {
        std::mutex mutex;
        std::vector<Letter> buffer;
        std::unique_ptr<detail::PrefixSource> source;
    };
    void ensure(std::size_t n) const;

    Alphabet alphabet_;
    GeneratorKind kind_;
    std::string id_;
    std::shared_ptr<State> state_;
};

/// Fixed point of f starting with a; f must be prolongable on a.
WordGenerator fixed_point(const Morphism& f, char a);
WordGenerator sturmian(const SturmianSpec& spec);
WordGenerator champernowne();
/// Fixed point of a -> a0A, 0 -> 01, 1 -> 10, A -> AA (A stands for alpha).
WordGenerator g_word();
/// The same word built as a * prod_j phi^j(0) A^(2^j).
WordGenerator g_word_product_form();
/// Image of the g-word under a -> empty, 0 -> 0, 1 -> 1, A -> 1.
WordGenerator tau_g_word();
/// Fixed point of 0 -> 01, 1 -> 12, 2 -> 2.
WordGenerator h_word();
/// Limit of u_k, where u_k lists D_k in lexicographic order, D_0 = {0,1} and D_{k+1} = u_k D_k^2.
WordGenerator grillenberger_word();
/// f^k applied to the word of inner.
WordGenerator image_of(const Morphism& f, unsigned k, const WordGenerator& inner);
/// The word of inner with its first offset letters removed.
WordGenerator suffix_of(std::size_t offset, const WordGenerator& inner);

WordGenerator thue_morse_word();
WordGenerator fibonacci_word();
/// Fixed point of 0 -> 01, 1 -> 00.
WordGenerator period_doubling_word();

/// Morphisms referenced by name: tm, fib, pd, h, g, tau.
Morphism builtin_morphism(std::string_view name);

/// Parses the generator mini-language:
/// tm, fib, pd, h, g, tau-g, grill, champ, sturmian:<period> or sturmian:<preperiod>;<period>,
/// image(<morphism>^k, <gen>), suffix(<offset>, <gen>), fixed(<morphism>, <letter>).
/// A morphism is a builtin name or a path to a morphism file.
WordGenerator parse_generator(std::string_view spec);

} // namespace binowords
