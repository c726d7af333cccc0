#include <binowords/complexity.hpp>

#include <binowords/detail/signature_kernel.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <functional>
#include <unordered_set>

namespace binowords {

std::uint64_t ComplexityProfile::at(std::size_t n) const {
    if (!contains(n)) throw PreconditionError("profile has no value at n = " + std::to_string(n));
    return values[n - n_min];
}

std::string ComplexityProfile::kind_name() const {
    switch (kind) {
    case ComplexityKind::factor: return "factor";
    case ComplexityKind::abelian: return "abelian";
    case ComplexityKind::binomial: return "binomial(" + std::to_string(k) + ")";
    }
    return "unknown";
}

std::string ComplexityProfile::to_csv() const {
    std::ostringstream out;
    out << "n,value,prefix_used\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << n_min + i << ',' << values[i] << ',' << prefix_used[i] << '\n';
    return out.str();
}

nlohmann::json ComplexityProfile::to_json() const {
    nlohmann::json j;
    j["kind"] = kind == ComplexityKind::binomial ? "binomial" : kind_name();
    if (kind != ComplexityKind::factor) j["k"] = kind == ComplexityKind::abelian ? 1u : k;
    j["generator_id"] = generator_id;
    j["n_min"] = n_min;
    j["n_max"] = n_max();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
        rows.push_back({{"n", n_min + i}, {"value", values[i]}, {"prefix_used", prefix_used[i]}});
    j["values"] = rows;
    return j;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Set of fixed-width rows of 64-bit counts: open addressing over a flat arena, full compare on collision.
class RowSet {
public:
    explicit RowSet(std::size_t width) : width_(width), table_(64, empty) {}

    void insert(const std::uint64_t* row) {
        if (2 * (size_ + 1) > table_.size()) rehash();
        const std::uint64_t h = hash(row);
        std::size_t slot = h & (table_.size() - 1);
        while (table_[slot] != empty) {
            if (std::memcmp(arena_.data() + table_[slot] * width_, row, width_ * sizeof(std::uint64_t)) == 0) return;
            slot = (slot + 1) & (table_.size() - 1);
        }
        table_[slot] = static_cast<std::uint32_t>(size_++);
        arena_.insert(arena_.end(), row, row + width_);
    }

    std::size_t size() const noexcept { return size_; }

private:
    static constexpr std::uint32_t empty = ~std::uint32_t{0};

    std::uint64_t hash(const std::uint64_t* row) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < width_; ++i) h = mix(h ^ (row[i] + 0x9e3779b97f4a7c15ULL + (h << 6)));
        return h;
    }

    void rehash() {
        std::vector<std::uint32_t> bigger(table_.size() * 2, empty);
        for (std::uint32_t id = 0; id < size_; ++id) {
            std::size_t slot = hash(arena_.data() + std::size_t{id} * width_) & (bigger.size() - 1);
            while (bigger[slot] != empty) slot = (slot + 1) & (bigger.size() - 1);
            bigger[slot] = id;
        }
        table_ = std::move(bigger);
    }

    std::size_t width_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint64_t> arena_;
    std::size_t size_ = 0;
};

struct BigRowHash {
    std::size_t operator()(const std::vector<BigInt>& row) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (const auto& c : row) h = mix(h ^ static_cast<std::uint64_t>(c & 0xffffffffffffffffULL));
        return h;
    }
};

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

ComplexityEngine::ComplexityEngine(WordGenerator gen, EngineOptions options)
    : gen_(gen), options_(options), index_(std::move(gen), options.prefix_cap) {}

FactorIndex::Stabilized ComplexityEngine::stabilize(std::size_t n) {
    std::lock_guard lock(mutex_);
    return index_.stabilize(n);
}

ComplexityEngine::Occurrences ComplexityEngine::occurrences(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto s = index_.stabilize(n);
    return {index_.first_occurrences(n, s.length), s.prefix_used};
}

FactorSet ComplexityEngine::factors(std::size_t n) {
    auto occ = occurrences(n);
    FactorSet out;
    out.prefix_used = occ.prefix_used;
    std::lock_guard lock(mutex_);
    const auto letters = index_.letters();
    for (auto s : occ.starts)
        out.words.emplace_back(gen_.alphabet(), std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(s),
                                                                     letters.begin() + static_cast<std::ptrdiff_t>(s + n)));
    std::sort(out.words.begin(), out.words.end());
    return out;
}

std::uint64_t ComplexityEngine::factor_count(std::size_t n) { return stabilize(n).count; }

std::uint64_t ComplexityEngine::count_classes(unsigned k, std::size_t n, std::size_t length) const {
    if (n == 0) return 1;
    const auto letters = index_.letters();
    const std::size_t a = gen_.alphabet().size();
    detail::SignatureKernel kernel(a, k);
    const std::size_t full = kernel.size();
    const bool shortcut = n >= k;
    const std::size_t key_offset = shortcut ? kernel.offset(k) : 0;
    const std::size_t key_width = full - key_offset;

    std::size_t distinct = 0;
    for (std::size_t e = n - 1; e < length; ++e) distinct += index_.is_first_occurrence(e, n);

    if (detail::SignatureKernel::fits_u64(n, k)) {
        RowSet rows(key_width);
        std::vector<std::uint64_t> cnt(full);
        if (distinct * n <= 2 * length) {
            for (std::size_t e = n - 1; e < length; ++e) {
                if (!index_.is_first_occurrence(e, n)) continue;
                kernel.reset(cnt.data());
                for (std::size_t i = e + 1 - n; i <= e; ++i) kernel.append(cnt.data(), letters[i]);
                rows.insert(cnt.data() + key_offset);
            }
        } else {
            kernel.reset(cnt.data());
            for (std::size_t i = 0; i < n; ++i) kernel.append(cnt.data(), letters[i]);
            for (std::size_t e = n - 1; e < length; ++e) {
                if (e >= n) {
                    kernel.append(cnt.data(), letters[e]);
                    kernel.remove_front(cnt.data(), letters[e - n]);
                }
                if (index_.is_first_occurrence(e, n)) rows.insert(cnt.data() + key_offset);
            }
        }
        return rows.size();
    }

    std::unordered_set<std::vector<BigInt>, BigRowHash> rows;
    std::vector<BigInt> cnt(full);
    for (std::size_t e = n - 1; e < length; ++e) {
        if (!index_.is_first_occurrence(e, n)) continue;
        kernel.reset(cnt.data());
        for (std::size_t i = e + 1 - n; i <= e; ++i) kernel.append(cnt.data(), letters[i]);
        rows.emplace(cnt.begin() + static_cast<std::ptrdiff_t>(key_offset), cnt.end());
    }
    return rows.size();
}

std::uint64_t ComplexityEngine::class_count(unsigned k, std::size_t n) {
    if (k == 0) throw PreconditionError("binomial complexity needs k >= 1");
    auto s = stabilize(n);
    std::lock_guard lock(mutex_);
    return count_classes(k, n, s.length);
}

std::vector<std::vector<FiniteWord>> ComplexityEngine::classes(unsigned k, std::size_t n) {
    if (k == 0) throw PreconditionError("binomial classes need k >= 1");
    auto fs = factors(n);
    std::map<std::vector<BigInt>, std::vector<FiniteWord>> groups;
    for (auto& w : fs.words) groups[signature(w, k).counts()].push_back(w);
    std::vector<std::vector<FiniteWord>> out;
    for (auto& [sig, words] : groups) out.push_back(std::move(words));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

ComplexityProfile ComplexityEngine::factor_complexity(std::size_t n_max, std::size_t n_min) {
    if (n_min > n_max) throw PreconditionError("empty range of lengths");
    ComplexityProfile p;
    p.kind = ComplexityKind::factor;
    p.generator_id = gen_.id();
    p.n_min = n_min;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        auto s = stabilize(n);
        p.values.push_back(s.count);
        p.prefix_used.push_back(s.prefix_used);
    }
    return p;
}

ComplexityProfile ComplexityEngine::binomial_complexity(unsigned k, std::size_t n_max, std::size_t n_min) {
    if (k == 0) throw PreconditionError("binomial complexity needs k >= 1");
    if (n_min > n_max) throw PreconditionError("empty range of lengths");
    ComplexityProfile p;
    p.kind = ComplexityKind::binomial;
    p.k = k;
    p.generator_id = gen_.id();
    p.n_min = n_min;
    std::vector<FactorIndex::Stabilized> stab;
    for (std::size_t n = n_min; n <= n_max; ++n) stab.push_back(stabilize(n));
    p.values.assign(stab.size(), 0);
    std::lock_guard lock(mutex_);
    parallel_for(stab.size(), options_.threads,
                 [&](std::size_t i) { p.values[i] = count_classes(k, n_min + i, stab[i].length); });
    for (const auto& s : stab) p.prefix_used.push_back(s.prefix_used);
    return p;
}

ComplexityProfile factor_complexity(const WordGenerator& gen, std::size_t n_max, EngineOptions options) {
    return ComplexityEngine(gen, options).factor_complexity(n_max);
}

ComplexityProfile binomial_complexity(const WordGenerator& gen, unsigned k, std::size_t n_max, EngineOptions options) {
    return ComplexityEngine(gen, options).binomial_complexity(k, n_max);
}

FactorSet factors(const WordGenerator& gen, std::size_t n, EngineOptions options) {
    return ComplexityEngine(gen, options).factors(n);
}

std::uint64_t count_classes(const std::vector<FiniteWord>& words, unsigned k) {
    std::set<std::vector<BigInt>> seen;
    for (const auto& w : words) seen.insert(signature(w, k).counts());
    return seen.size();
}

std::uint64_t tm_factor_formula(std::uint64_t n) {
    if (n <= 2) return std::uint64_t{1} << n;
    const unsigned m = static_cast<unsigned>(std::bit_width(n - 1) - 1);
    const std::uint64_t p = std::uint64_t{1} << m;
    const std::uint64_t r = n - p;
    if (2 * r <= p) return 3 * p + 4 * (r - 1);
    return 4 * p + 2 * (r - 1);
}

std::uint64_t tm_binomial_formula(unsigned j, std::uint64_t n) {
    if (j == 0) throw PreconditionError("tm_binomial_formula needs j >= 1");
    const std::uint64_t p = std::uint64_t{1} << j;
    if (n < p) return tm_factor_formula(n);
    return n % p == 0 ? 3 * p - 3 : 3 * p - 4;
}

std::uint64_t sturmian_image_formula(unsigned k, std::uint64_t n) {
    if (k == 0) throw PreconditionError("sturmian_image_formula needs k >= 1");
    const std::uint64_t p = std::uint64_t{1} << k;
    const std::uint64_t q = n / p, r = n % p;
    if (q == 0) return tm_factor_formula(r);
    if (q == 1) return r == 0 ? 3 * p - 2 : 3 * p + r - 1;
    return 4 * p - 2;
}

std::uint64_t sturmian_image_factor_formula(unsigned k, std::uint64_t n) {
    const std::uint64_t p = std::uint64_t{1} << k;
    if (n <= p) return tm_factor_formula(n);
    return n + 2 * p - 1;
}

std::string PrecReport::summary() const {
    std::ostringstream out;
    out << strict.size() << " strict, " << equal.size() << " equal, " << greater.size() << " reversed points on ["
        << n_min << ", " << n_max << "]; ";
    if (witnessed())
        out << "strict inequality witnessed at >= " << min_strict << " points up to n = " << n_max;
    else
        out << "fewer than " << min_strict << " strict points up to n = " << n_max;
    return out.str();
}

PrecReport prec_compare(const ComplexityProfile& a, const ComplexityProfile& b, std::size_t min_strict) {
    PrecReport r;
    r.min_strict = min_strict;
    r.n_min = std::max(a.n_min, b.n_min);
    r.n_max = std::min(a.n_max(), b.n_max());
    if (a.values.empty() || b.values.empty() || r.n_min > r.n_max)
        throw PreconditionError("prec_compare: profiles have disjoint ranges");
    for (std::size_t n = r.n_min; n <= r.n_max; ++n) {
        const auto x = a.at(n), y = b.at(n);
        (x < y ? r.strict : x == y ? r.equal : r.greater).push_back(n);
    }
    return r;
}

WeightSpread weight_spread(const WordGenerator& gen, std::size_t n, std::size_t cap) {
    const std::size_t a = gen.alphabet().size();
    if (n == 0) return {0, 0};
    std::vector<std::uint64_t> count(a, 0), lo(a, ~std::uint64_t{0}), hi(a, 0);
    std::vector<std::uint64_t> history;
    std::size_t scanned = 0;
    std::vector<Letter> letters;
    for (std::size_t length = std::max<std::size_t>(4 * n, 1024);; length *= 2) {
        if (length > cap) {
            const std::uint64_t before = history.size() >= 2 ? history[history.size() - 2] : 0;
            const std::uint64_t after = history.empty() ? 0 : history.back();
            throw StabilizationError(n, before, after, cap);
        }
        letters = gen.prefix_letters(length);
        for (std::size_t e = scanned; e < length; ++e) {
            ++count[letters[e]];
            if (e >= n) --count[letters[e - n]];
            if (e + 1 >= n)
                for (std::size_t x = 0; x < a; ++x) {
                    lo[x] = std::min(lo[x], count[x]);
                    hi[x] = std::max(hi[x], count[x]);
                }
        }
        scanned = length;
        std::uint64_t spread = 0;
        for (std::size_t x = 0; x < a; ++x) spread = std::max(spread, hi[x] - lo[x]);
        history.push_back(spread);
        const std::size_t c = history.size();
        if (c >= 3 && history[c - 1] == history[c - 2] && history[c - 2] == history[c - 3]) return {spread, length};
    }
}

} // namespace binowords
