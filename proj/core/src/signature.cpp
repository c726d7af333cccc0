#include <binowords/signature.hpp>

#include <binowords/detail/signature_kernel.hpp>

#include <algorithm>

namespace binowords {

std::size_t patterns_of_length(std::size_t alphabet_size, unsigned len) {
    std::size_t w = 1;
    for (unsigned i = 0; i < len; ++i) w *= alphabet_size;
    return w;
}

std::size_t pattern_offset(std::size_t alphabet_size, unsigned len) {
    std::size_t off = 0;
    for (unsigned i = 0; i < len; ++i) off += patterns_of_length(alphabet_size, i);
    return off;
}

std::size_t pattern_index(std::size_t alphabet_size, std::span<const Letter> pattern) {
    std::size_t rank = 0;
    for (Letter a : pattern) rank = rank * alphabet_size + a;
    return pattern_offset(alphabet_size, static_cast<unsigned>(pattern.size())) + rank;
}

std::vector<Letter> pattern_at(std::size_t alphabet_size, std::size_t index) {
    unsigned len = 0;
    while (index >= patterns_of_length(alphabet_size, len)) {
        index -= patterns_of_length(alphabet_size, len);
        ++len;
    }
    std::vector<Letter> out(len);
    for (unsigned i = len; i-- > 0;) {
        out[i] = static_cast<Letter>(index % alphabet_size);
        index /= alphabet_size;
    }
    return out;
}

BinomialSignature::BinomialSignature(Alphabet alphabet, unsigned k, std::size_t word_length, std::vector<BigInt> counts)
    : alphabet_(std::move(alphabet)), k_(k), word_length_(word_length), counts_(std::move(counts)) {
    if (counts_.size() != pattern_offset(alphabet_.size(), k_ + 1))
        throw PreconditionError("signature count vector has the wrong size");
}

const BigInt& BinomialSignature::count(std::span<const Letter> pattern) const {
    if (pattern.size() > k_) throw PreconditionError("pattern longer than signature order");
    return counts_[pattern_index(alphabet_.size(), pattern)];
}

const BigInt& BinomialSignature::count(const FiniteWord& pattern) const {
    if (!(pattern.alphabet() == alphabet_)) throw AlphabetMismatch("signature count: pattern alphabet differs");
    return count(pattern.letters());
}

std::span<const BigInt> BinomialSignature::row(unsigned len) const {
    if (len > k_) throw PreconditionError("row longer than signature order");
    const std::size_t a = alphabet_.size();
    return std::span<const BigInt>(counts_).subspan(pattern_offset(a, len), patterns_of_length(a, len));
}

namespace {

template <class T>
std::vector<T> raw_counts(const FiniteWord& u, unsigned k) {
    detail::SignatureKernel kernel(u.alphabet().size(), k);
    std::vector<T> cnt(kernel.size());
    kernel.reset(cnt.data());
    for (Letter c : u.letters()) kernel.append(cnt.data(), c);
    return cnt;
}

template <class T>
bool rows_equal(const FiniteWord& u, const FiniteWord& v, unsigned k, bool shortcut) {
    const auto cu = raw_counts<T>(u, k);
    const auto cv = raw_counts<T>(v, k);
    if (!shortcut) return cu == cv;
    detail::SignatureKernel kernel(u.alphabet().size(), k);
    const auto first = static_cast<std::ptrdiff_t>(kernel.offset(k));
    return std::equal(cu.begin() + first, cu.end(), cv.begin() + first);
}

bool compare(const FiniteWord& u, const FiniteWord& v, unsigned k, bool allow_shortcut) {
    require_same_alphabet(u, v, "equivalent");
    if (k == 0) return u.size() == v.size();
    if (u.size() != v.size()) return false;
    const bool shortcut = allow_shortcut && u.size() >= k;
    if (detail::SignatureKernel::fits_u64(u.size(), k)) return rows_equal<std::uint64_t>(u, v, k, shortcut);
    return rows_equal<BigInt>(u, v, k, shortcut);
}

} // namespace

BinomialSignature signature(const FiniteWord& u, unsigned k) {
    if (k == 0) throw PreconditionError("signature order k must be positive");
    return BinomialSignature(u.alphabet(), k, u.size(), raw_counts<BigInt>(u, k));
}

bool equivalent(const FiniteWord& u, const FiniteWord& v, unsigned k) { return compare(u, v, k, true); }

bool equivalent_full(const FiniteWord& u, const FiniteWord& v, unsigned k) { return compare(u, v, k, false); }

BigInt power_delta(const FiniteWord& x, const FiniteWord& y, std::uint64_t n, const FiniteWord& e) {
    require_same_alphabet(x, y, "power_delta");
    require_same_alphabet(x, e, "power_delta");
    if (e.empty()) throw PreconditionError("power_delta: pattern must be nonempty");
    const unsigned k = static_cast<unsigned>(e.size() - 1);
    if (!equivalent(x, y, k))
        throw PreconditionError("power_delta: x and y are not " + std::to_string(k) + "-binomially equivalent");
    BigInt delta = binomial_coefficient(x.power(n), e) - binomial_coefficient(y.power(n), e);
    BigInt expected = BigInt(n) * (binomial_coefficient(x, e) - binomial_coefficient(y, e));
    if (delta != expected) throw IdentityViolation("power_delta: difference of powers is not n times the base difference");
    return delta;
}

} // namespace binowords

std::size_t std::hash<binowords::BinomialSignature>::operator()(const binowords::BinomialSignature& s) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ s.k();
    for (const auto& c : s.counts()) h = (h ^ static_cast<std::size_t>(c & 0xffffffffffffffffULL)) * 1099511628211ULL;
    return h;
}
