#include <binowords/factor_index.hpp>

#include <algorithm>

namespace binowords {

FactorIndex::FactorIndex(WordGenerator gen, std::size_t cap)
    : gen_(std::move(gen)), cap_(cap), alphabet_size_(gen_.alphabet().size()) {
    next_.assign(alphabet_size_, -1);
    link_.push_back(-1);
    len_.push_back(0);
}

void FactorIndex::push(Letter c) {
    const std::size_t a = alphabet_size_;
    const auto cur = static_cast<std::int32_t>(len_.size());
    len_.push_back(len_[static_cast<std::size_t>(last_)] + 1);
    link_.push_back(0);
    next_.resize(next_.size() + a, -1);
    std::int32_t p = last_;
    while (p != -1 && next_[static_cast<std::size_t>(p) * a + c] == -1) {
        next_[static_cast<std::size_t>(p) * a + c] = cur;
        p = link_[static_cast<std::size_t>(p)];
    }
    if (p != -1) {
        const std::int32_t q = next_[static_cast<std::size_t>(p) * a + c];
        if (len_[static_cast<std::size_t>(p)] + 1 == len_[static_cast<std::size_t>(q)]) {
            link_[static_cast<std::size_t>(cur)] = q;
        } else {
            const auto clone = static_cast<std::int32_t>(len_.size());
            len_.push_back(len_[static_cast<std::size_t>(p)] + 1);
            link_.push_back(link_[static_cast<std::size_t>(q)]);
            const std::size_t base = next_.size();
            next_.resize(base + a);
            std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(q) * a), a,
                        next_.begin() + static_cast<std::ptrdiff_t>(base));
            while (p != -1 && next_[static_cast<std::size_t>(p) * a + c] == q) {
                next_[static_cast<std::size_t>(p) * a + c] = clone;
                p = link_[static_cast<std::size_t>(p)];
            }
            link_[static_cast<std::size_t>(q)] = clone;
            link_[static_cast<std::size_t>(cur)] = clone;
        }
    }
    last_ = cur;
    letters_.push_back(c);
    repeat_.push_back(len_[static_cast<std::size_t>(link_[static_cast<std::size_t>(cur)])]);
}

void FactorIndex::ensure(std::size_t length) {
    if (letters_.size() >= length) return;
    if (length > cap_)
        throw PreconditionError("requested prefix of " + std::to_string(length) + " symbols exceeds the cap of " +
                                std::to_string(cap_));
    const auto fresh = gen_.prefix_letters(length);
    letters_.reserve(length);
    repeat_.reserve(length);
    len_.reserve(2 * length);
    link_.reserve(2 * length);
    next_.reserve(2 * length * alphabet_size_);
    for (std::size_t i = letters_.size(); i < length; ++i) push(fresh[i]);
}

std::uint64_t FactorIndex::distinct_count(std::size_t n, std::size_t length) {
    if (n == 0) return 1;
    if (n > length) return 0;
    ensure(length);
    auto& cum = cumulative_[length];
    if (cum.size() < n + 1) {
        // cum[v] = #{e < length : repeat[e] < v}, for v up to a comfortable bound
        const std::size_t bound = std::max<std::size_t>(n + 1, 2 * cum.size());
        std::vector<std::uint64_t> hist(bound, 0);
        for (std::size_t e = 0; e < length; ++e)
            if (repeat_[e] + 1 < bound) ++hist[repeat_[e] + 1];
        for (std::size_t v = 1; v < bound; ++v) hist[v] += hist[v - 1];
        cum = std::move(hist);
    }
    return cum[n] - (n - 1);
}

FactorIndex::Stabilized FactorIndex::stabilize(std::size_t n) {
    if (auto it = stabilized_.find(n); it != stabilized_.end()) return it->second;
    std::size_t start = std::max<std::size_t>(4 * n, 1024);
    // small caps still get three doubling samples
    if (start > cap_) start = std::max<std::size_t>(cap_ / 4, n + 1);
    std::vector<std::uint64_t> counts;
    for (std::size_t length = start;; length *= 2) {
        if (length > cap_) {
            std::uint64_t before = 0, after = 0;
            if (counts.size() >= 2) {
                before = counts[counts.size() - 2];
                after = counts.back();
                if (before == after && counts.size() >= 3) before = counts[counts.size() - 3];
            } else if (!counts.empty()) {
                before = after = counts.back();
            }
            throw StabilizationError(n, before, after, cap_);
        }
        counts.push_back(distinct_count(n, length));
        const std::size_t c = counts.size();
        if (c >= 3 && counts[c - 1] == counts[c - 2] && counts[c - 2] == counts[c - 3]) {
            Stabilized s{length / 4, length, counts.back()};
            stabilized_.emplace(n, s);
            return s;
        }
    }
}

std::vector<std::size_t> FactorIndex::first_occurrences(std::size_t n, std::size_t length) const {
    std::vector<std::size_t> out;
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    length = std::min(length, letters_.size());
    for (std::size_t e = n - 1; e < length; ++e)
        if (repeat_[e] < n) out.push_back(e + 1 - n);
    return out;
}

} // namespace binowords
