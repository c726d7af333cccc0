#include <binowords/tm_structure.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace binowords {

namespace {

void require_binary(const FiniteWord& w, const char* what) {
    if (!(w.alphabet() == Alphabet::binary())) throw AlphabetMismatch(std::string(what) + ": word must be over {0,1}");
}

bool is_letter_power(const FiniteWord& w, Letter a) {
    return std::all_of(w.letters().begin(), w.letters().end(), [&](Letter c) { return c == a; });
}

std::size_t abs_diff(std::size_t x, std::size_t y) { return x > y ? x - y : y - x; }

} // namespace

const FiniteWord& tm_block(unsigned j, Letter a) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, Letter>, FiniteWord> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(j, a);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (j > 24) throw PreconditionError("tm_block: exponent too large");
        std::vector<Letter> w{a};
        for (unsigned i = 0; i < j; ++i) {
            std::vector<Letter> next;
            next.reserve(2 * w.size());
            for (Letter c : w) {
                next.push_back(c);
                next.push_back(static_cast<Letter>(1 - c));
            }
            w = std::move(next);
        }
        it = cache.emplace(key, FiniteWord(Alphabet::binary(), std::move(w))).first;
    }
    return it->second;
}

FiniteWord tm_image(unsigned j, const FiniteWord& w) {
    require_binary(w, "tm_image");
    std::vector<Letter> out;
    out.reserve(w.size() << j);
    for (Letter a : w.letters()) {
        auto b = tm_block(j, a).letters();
        out.insert(out.end(), b.begin(), b.end());
    }
    return FiniteWord(Alphabet::binary(), std::move(out));
}

std::string PhiFactorization::str() const {
    auto show = [](const FiniteWord& w) { return w.empty() ? std::string("e") : w.str(); };
    return "(" + show(p) + ", phi^" + std::to_string(j) + "(" + show(core) + "), " + show(s) + ") ancestor " + show(ancestor);
}

namespace {

// Proper prefix of some phi^j(b): returns b, or nullopt.
std::optional<Letter> prefix_letter(const FiniteWord& s, unsigned j) {
    for (Letter b = 0; b < 2; ++b)
        if (s.size() < tm_block(j, b).size() && s.is_prefix_of(tm_block(j, b))) return b;
    return std::nullopt;
}

std::optional<Letter> suffix_letter(const FiniteWord& p, unsigned j) {
    for (Letter a = 0; a < 2; ++a)
        if (p.size() < tm_block(j, a).size() && p.is_suffix_of(tm_block(j, a))) return a;
    return std::nullopt;
}

// Decodes full phi^j blocks of w starting at from; returns the number of letters consumed.
std::size_t decode_blocks(std::span<const Letter> w, std::size_t from, unsigned j, std::vector<Letter>& out) {
    const std::size_t len = std::size_t{1} << j;
    std::size_t pos = from;
    while (pos + len <= w.size()) {
        const Letter c = w[pos];
        auto block = tm_block(j, c).letters();
        if (!std::equal(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) break;
        out.push_back(c);
        pos += len;
    }
    return pos - from;
}

} // namespace

PhiFactorizations phi_factorizations(const FiniteWord& u, unsigned j) {
    require_binary(u, "phi_factorizations");
    if (j == 0) throw PreconditionError("phi_factorizations: j must be positive");
    const std::size_t len = std::size_t{1} << j;
    if (u.size() + 1 < len)
        throw PreconditionError("phi_factorizations: |u| = " + std::to_string(u.size()) + " is shorter than 2^j - 1 = " +
                                std::to_string(len - 1));
    const Alphabet bin = Alphabet::binary();
    PhiFactorizations result;
    for (std::size_t t = 0; t < len && t <= u.size(); ++t) {
        PhiFactorization f;
        f.j = j;
        f.p = u.prefix(t);
        if (!f.p.empty()) {
            f.a = suffix_letter(f.p, j);
            if (!f.a) continue;
        }
        std::vector<Letter> z;
        const std::size_t used = decode_blocks(u.letters(), t, j, z);
        f.s = u.substr(t + used);
        if (f.s.size() >= len) continue;
        if (!f.s.empty()) {
            f.b = prefix_letter(f.s, j);
            if (!f.b) continue;
        }
        f.core = FiniteWord(bin, z);
        std::vector<Letter> anc;
        if (f.a) anc.push_back(*f.a);
        anc.insert(anc.end(), z.begin(), z.end());
        if (f.b) anc.push_back(*f.b);
        f.ancestor = FiniteWord(bin, std::move(anc));
        result.items.push_back(std::move(f));
    }
    std::sort(result.items.begin(), result.items.end(), [](const PhiFactorization& x, const PhiFactorization& y) {
        return std::tie(x.p, x.s) < std::tie(y.p, y.s);
    });
    if (result.items.size() > 2)
        throw IdentityViolation("phi_factorizations: " + u.str() + " has more than two factorizations");
    result.status = result.items.empty()       ? FactorizationStatus::none
                    : result.items.size() == 1 ? FactorizationStatus::unique
                                               : FactorizationStatus::two;
    if (result.status == FactorizationStatus::two) {
        const auto& f = result.items[0];
        const auto& g = result.items[1];
        const std::size_t half = len / 2;
        const bool opposite_powers = !f.ancestor.empty() && !g.ancestor.empty() && f.ancestor[0] != g.ancestor[0] &&
                                     is_letter_power(f.ancestor, f.ancestor[0]) && is_letter_power(g.ancestor, g.ancestor[0]);
        result.expected_shape = opposite_powers && abs_diff(f.p.size(), g.p.size()) == half && abs_diff(f.s.size(), g.s.size()) == half &&
                                equiv_j({f.p, f.s, j}, {g.p, g.s, j});
    }
    return result;
}

bool equiv_j(const PrefixSuffixPair& x, const PrefixSuffixPair& y) {
    if (x.j != y.j) throw PreconditionError("equiv_j: pairs have different j");
    if (x.j == 0) throw PreconditionError("equiv_j: j must be positive");
    for (const auto* w : {&x.p, &x.s, &y.p, &y.s}) {
        require_binary(*w, "equiv_j");
        if (w->size() >= (std::size_t{1} << x.j)) throw PreconditionError("equiv_j: prefix or suffix too long");
    }
    const unsigned j = x.j;
    const std::size_t sum1 = x.p.size() + x.s.size(), sum2 = y.p.size() + y.s.size();
    if (sum1 == sum2) {
        if (x.p == y.p && x.s == y.s) return true;
        for (Letter a = 0; a < 2; ++a) {
            const FiniteWord& pa = tm_block(j - 1, a);
            const FiniteWord& pb = tm_block(j - 1, static_cast<Letter>(1 - a));
            if (x.p == y.p + pa && pa + x.s == y.s) return true;
            if (y.p == x.p + pa && pa + y.s == x.s) return true;
            if (x.p == pa && x.s == pb && y.s == pa && y.p == pb) return true;
        }
        return false;
    }
    if (abs_diff(sum1, sum2) == (std::size_t{1} << j)) {
        for (Letter a = 0; a < 2; ++a) {
            const FiniteWord& pa = tm_block(j - 1, a);
            const FiniteWord& pb = tm_block(j - 1, static_cast<Letter>(1 - a));
            if (x.p == y.p + pa && x.s == pb + y.s) return true;
            if (y.p == x.p + pa && y.s == pb + x.s) return true;
        }
    }
    return false;
}

std::string FactorizationClass::str() const {
    if (!left && !right) return "S(" + std::to_string(n) + ")";
    auto show = [](const std::optional<Letter>& c) { return c ? std::string(1, static_cast<char>('0' + *c)) : std::string("e"); };
    return "S_{" + show(left) + "," + show(right) + "}(" + std::to_string(n) + ")";
}

std::vector<FactorizationClass> classify_factor(const FiniteWord& u) {
    return classify_factor(u, [](const FiniteWord&) { return true; });
}

std::vector<FactorizationClass> classify_factor(const FiniteWord& u, const std::function<bool(const FiniteWord&)>& in_language) {
    require_binary(u, "classify_factor");
    auto fs = phi_factorizations(u, 1);
    std::vector<FactorizationClass> out;
    for (const auto& f : fs.items)
        if (in_language(f.ancestor)) out.push_back({f.a, f.b, f.core.size()});
    if (out.empty()) throw PreconditionError("classify_factor: " + u.str() + " has no phi-factorization");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_alternating(const FiniteWord& u) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] == u[i - 1]) return false;
    return true;
}

std::vector<TmDecoding> tm_decode_all(const FiniteWord& x, unsigned k) {
    require_binary(x, "tm_decode");
    if (k == 0) throw PreconditionError("tm_decode: k must be positive");
    const std::size_t len = std::size_t{1} << k;
    if (x.size() < 2 * len)
        throw PreconditionError("tm_decode: prefix of length " + std::to_string(x.size()) + " is shorter than 2^(k+1)");
    std::vector<TmDecoding> out;
    for (std::size_t t = 0; t < len; ++t) {
        FiniteWord u = x.prefix(t);
        if (!u.empty() && !suffix_letter(u, k)) continue;
        std::vector<Letter> y;
        const std::size_t used = decode_blocks(x.letters(), t, k, y);
        FiniteWord r = x.substr(t + used);
        if (r.size() >= len) continue;
        if (!r.empty() && !prefix_letter(r, k)) continue;
        if (y.empty()) continue;
        out.push_back({std::move(u), FiniteWord(Alphabet::binary(), std::move(y)), std::move(r)});
    }
    return out;
}

TmDecoding tm_decode(const FiniteWord& x, unsigned k) {
    auto all = tm_decode_all(x, k);
    if (all.empty()) throw DecodeError("not a phi^" + std::to_string(k) + "-image suffix: no offset decodes the prefix");
    return all.front();
}

bool transfer_check(const FiniteWord& u, const FiniteWord& v, const FiniteWord& v2, unsigned k) {
    if (u.empty() || v.empty() || v2.empty()) throw PreconditionError("transfer_check: words must be nonempty");
    if (v.size() != v2.size()) throw PreconditionError("transfer_check: |v| must equal |v2|");
    if (k == 0) throw PreconditionError("transfer_check: k must be positive");
    const FiniteWord lhs = tm_image(k - 1, u) + tm_image(k, v);
    const FiniteWord rhs = tm_image(k, v2) + tm_image(k - 1, u);
    return equivalent(lhs, rhs, k);
}

} // namespace binowords
