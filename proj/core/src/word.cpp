#include <binowords/word.hpp>

#include <algorithm>

namespace binowords {

Alphabet::Alphabet() : Alphabet("01") {}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2 || symbols_.size() > max_size)
        throw PreconditionError("alphabet must have between 2 and 16 symbols, got \"" + symbols_ + "\"");
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[i] == symbols_[j])
                throw PreconditionError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
}

char Alphabet::symbol(Letter a) const {
    if (a >= symbols_.size()) throw PreconditionError("letter index out of range");
    return symbols_[a];
}

std::optional<Letter> Alphabet::find(char c) const noexcept {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    return static_cast<Letter>(pos);
}

Letter Alphabet::index(char c) const {
    auto a = find(c);
    if (!a) throw ParseError(std::string("symbol '") + c + "' not in alphabet \"" + symbols_ + "\"");
    return *a;
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (Letter a : letters_)
        if (a >= alphabet_.size()) throw PreconditionError("letter index out of range for alphabet");
}

FiniteWord::FiniteWord(Alphabet alphabet, std::string_view text) : alphabet_(std::move(alphabet)) {
    letters_.reserve(text.size());
    for (char c : text) letters_.push_back(alphabet_.index(c));
}

std::string FiniteWord::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter a : letters_) out.push_back(alphabet_.symbols()[a]);
    return out;
}

FiniteWord FiniteWord::substr(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size()) throw PreconditionError("substr position out of range");
    len = std::min(len, letters_.size() - pos);
    FiniteWord out(alphabet_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return out;
}

FiniteWord FiniteWord::suffix(std::size_t len) const {
    len = std::min(len, letters_.size());
    return substr(letters_.size() - len, len);
}

FiniteWord FiniteWord::power(std::size_t n) const {
    FiniteWord out(alphabet_);
    out.letters_.reserve(letters_.size() * n);
    for (std::size_t i = 0; i < n; ++i) out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    return out;
}

FiniteWord FiniteWord::complement() const {
    if (alphabet_.size() != 2) throw PreconditionError("complement requires a binary alphabet");
    FiniteWord out(alphabet_);
    out.letters_.reserve(letters_.size());
    for (Letter a : letters_) out.letters_.push_back(static_cast<Letter>(1 - a));
    return out;
}

bool FiniteWord::is_prefix_of(const FiniteWord& other) const {
    return size() <= other.size() && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool FiniteWord::is_suffix_of(const FiniteWord& other) const {
    return size() <= other.size() &&
           std::equal(letters_.begin(), letters_.end(), other.letters_.end() - static_cast<std::ptrdiff_t>(size()));
}

std::size_t FiniteWord::count(Letter a) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

FiniteWord operator+(const FiniteWord& a, const FiniteWord& b) {
    require_same_alphabet(a, b, "concatenation");
    FiniteWord out(a.alphabet_);
    out.letters_.reserve(a.size() + b.size());
    out.letters_.insert(out.letters_.end(), a.letters_.begin(), a.letters_.end());
    out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    return out;
}

std::uint64_t ParikhVector::total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::string ParikhVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts[i]);
    }
    return out + ")";
}

void require_same_alphabet(const FiniteWord& u, const FiniteWord& v, const char* what) {
    if (!(u.alphabet() == v.alphabet()))
        throw AlphabetMismatch(std::string(what) + ": alphabets \"" + u.alphabet().symbols() + "\" and \"" +
                               v.alphabet().symbols() + "\" differ");
}

BigInt binomial_coefficient(const FiniteWord& u, const FiniteWord& w) {
    require_same_alphabet(u, w, "binomial_coefficient");
    const std::size_t m = w.size();
    if (m == 0) return 1;
    if (m > u.size()) return 0;
    // dp[j] = occurrences of w[0..j) in the prefix read so far
    std::vector<BigInt> dp(m + 1);
    dp[0] = 1;
    for (Letter c : u.letters())
        for (std::size_t j = m; j >= 1; --j)
            if (w[j - 1] == c) dp[j] += dp[j - 1];
    return dp[m];
}

BigInt choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

ParikhVector parikh(std::span<const Letter> letters, std::size_t alphabet_size) {
    ParikhVector p{std::vector<std::uint64_t>(alphabet_size, 0)};
    for (Letter a : letters) ++p.counts[a];
    return p;
}

ParikhVector parikh(const FiniteWord& u) { return parikh(u.letters(), u.alphabet().size()); }

BigInt abelian_mass(const FiniteWord& u, const ParikhVector& m) {
    if (m.counts.size() != u.alphabet().size())
        throw AlphabetMismatch("abelian_mass: Parikh vector dimension differs from alphabet size");
    const ParikhVector pu = parikh(u);
    BigInt r = 1;
    for (std::size_t a = 0; a < m.counts.size(); ++a) r *= choose(pu[a], m[a]);
    return r;
}

} // namespace binowords

std::size_t std::hash<binowords::FiniteWord>::operator()(const binowords::FiniteWord& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto a : w.letters()) h = (h ^ a) * 1099511628211ULL;
    return h ^ w.size();
}

std::size_t std::hash<binowords::ParikhVector>::operator()(const binowords::ParikhVector& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : p.counts) h = (h ^ std::hash<std::uint64_t>{}(c)) * 1099511628211ULL;
    return h;
}
