#pragma once

#include <binowords/morphism.hpp>
#include <binowords/signature.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace binowords {

/// phi^j(a) for the Thue-Morse morphism, memoized per (j, a).
const FiniteWord& tm_block(unsigned j, Letter a);
/// phi^j(w).
FiniteWord tm_image(unsigned j, const FiniteWord& w);

/// u = p . phi^j(core) . s with p a proper suffix of phi^j(a) and s a proper prefix of phi^j(b).
struct PhiFactorization {
    unsigned j = 1;
    FiniteWord p;
    FiniteWord core;
    FiniteWord s;
    std::optional<Letter> a; ///< present iff p is nonempty
    std::optional<Letter> b; ///< present iff s is nonempty
    FiniteWord ancestor;     ///< a.core.b with absent letters omitted

    FiniteWord middle() const { return tm_image(j, core); }
    FiniteWord reconstruct() const { return p + middle() + s; }
    std::string str() const;
};

enum class FactorizationStatus { none, unique, two };

struct PhiFactorizations {
    FactorizationStatus status = FactorizationStatus::none;
    std::vector<PhiFactorization> items; ///< ordered by (p, s)
    /// With two items: ancestors are powers of opposite letters, |p| and |s| differ by 2^(j-1), and (p,s) are ≡_j.
    /// Fails only for 010 and 101 at j = 2.
    bool expected_shape = true;
};

/// All phi^j-factorizations of a binary word with |u| >= 2^j - 1, found by trying every offset.
/// At most two exist; the shape of a pair is reported in expected_shape.
PhiFactorizations phi_factorizations(const FiniteWord& u, unsigned j);

struct PrefixSuffixPair {
    FiniteWord p;
    FiniteWord s;
    unsigned j = 1;
};

/// The relation (p1,s1) =_j (p2,s2) on prefix-suffix pairs.
bool equiv_j(const PrefixSuffixPair& pair1, const PrefixSuffixPair& pair2);

/// S(n) when both letters are absent, otherwise S_{left,right}(n).
struct FactorizationClass {
    std::optional<Letter> left;
    std::optional<Letter> right;
    std::size_t n = 0;

    std::string str() const;
    friend bool operator==(const FactorizationClass&, const FactorizationClass&) = default;
    friend auto operator<=>(const FactorizationClass&, const FactorizationClass&) = default;
};

/// Factorization classes of u from its phi-factorizations (j = 1), sorted.
std::vector<FactorizationClass> classify_factor(const FiniteWord& u);
/// Only factorizations whose ancestor satisfies in_language (a factor of y) contribute a class.
std::vector<FactorizationClass> classify_factor(const FiniteWord& u, const std::function<bool(const FiniteWord&)>& in_language);

/// Whether u lies in (01)* + (10)* + 1(01)* + 0(10)*, i.e. alternates letters.
bool is_alternating(const FiniteWord& u);

struct TmDecoding {
    FiniteWord u;         ///< proper suffix of phi^k(0) or phi^k(1)
    FiniteWord y_prefix;  ///< decoded blocks
    FiniteWord remainder; ///< proper prefix of some phi^k(b)
};

/// Splits x as u . phi^k(y) . r, preferring the shortest u.
TmDecoding tm_decode(const FiniteWord& x_prefix, unsigned k);
/// Every valid split, by increasing |u|.
std::vector<TmDecoding> tm_decode_all(const FiniteWord& x_prefix, unsigned k);

/// phi^{k-1}(u) phi^k(v) ~_k phi^k(v2) phi^{k-1}(u), for nonempty u, v, v2 with |v| = |v2|.
bool transfer_check(const FiniteWord& u, const FiniteWord& v, const FiniteWord& v2, unsigned k);

} // namespace binowords
