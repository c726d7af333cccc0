#pragma once

// Brute-force reference implementations over std::string, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

/// Number of index subsets of u spelling w, by recursion over subsets.
inline std::uint64_t binom(const std::string& u, const std::string& w, std::size_t i = 0, std::size_t j = 0) {
    if (j == w.size()) return 1;
    if (u.size() - i < w.size() - j) return 0;
    std::uint64_t total = binom(u, w, i + 1, j);
    if (u[i] == w[j]) total += binom(u, w, i + 1, j + 1);
    return total;
}

inline std::vector<std::string> words_over(const std::string& alphabet, std::size_t len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : alphabet) next.push_back(w + c);
        out.swap(next);
    }
    return out;
}

/// Vector of binom(u, e) over every e of length 1..k.
inline std::vector<std::uint64_t> signature(const std::string& u, const std::string& alphabet, unsigned k) {
    std::vector<std::uint64_t> sig;
    for (unsigned len = 1; len <= k; ++len)
        for (const auto& e : words_over(alphabet, len)) sig.push_back(binom(u, e));
    return sig;
}

inline bool equivalent(const std::string& u, const std::string& v, const std::string& alphabet, unsigned k) {
    return u.size() == v.size() && signature(u, alphabet, k) == signature(v, alphabet, k);
}

inline std::size_t count_classes(const std::set<std::string>& words, const std::string& alphabet, unsigned k) {
    std::set<std::vector<std::uint64_t>> sigs;
    for (const auto& w : words) sigs.insert(signature(w, alphabet, k));
    return sigs.size();
}

inline std::string apply(const std::map<char, std::string>& f, const std::string& u) {
    std::string out;
    for (char c : u) out += f.at(c);
    return out;
}

inline std::string iterate(const std::map<char, std::string>& f, std::string w, std::size_t len) {
    while (w.size() < len) {
        auto next = oracle::apply(f, w);
        if (next.size() <= w.size()) break;
        w = next;
    }
    return w.substr(0, std::min(len, w.size()));
}

inline std::string phi_k(const std::string& u, unsigned k) {
    std::string w = u;
    for (unsigned i = 0; i < k; ++i) w = oracle::apply({{'0', "01"}, {'1', "10"}}, w);
    return w;
}

/// t[i] = parity of the binary digit sum of i.
inline std::string thue_morse(std::size_t len) {
    std::string out;
    for (std::size_t i = 0; i < len; ++i) out += static_cast<char>('0' + __builtin_popcountll(i) % 2);
    return out;
}

/// Fibonacci word by the recurrence f_{n+1} = f_n f_{n-1}.
inline std::string fibonacci(std::size_t len) {
    std::string a = "0", b = "01";
    while (b.size() < len) {
        std::string c = b + a;
        a = b;
        b = c;
    }
    return b.substr(0, len);
}

/// Period-doubling word: d[i] = 1 iff the 2-adic valuation of i+1 is odd.
inline std::string period_doubling(std::size_t len) {
    std::string out;
    for (std::size_t i = 1; i <= len; ++i) out += static_cast<char>('0' + __builtin_ctzll(i) % 2);
    return out;
}

inline std::set<std::string> factors(const std::string& prefix, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t i = 0; i + n <= prefix.size(); ++i) out.insert(prefix.substr(i, n));
    return out;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle
