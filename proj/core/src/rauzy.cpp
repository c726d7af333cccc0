#include <binowords/rauzy.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <tuple>

namespace binowords {

std::size_t AbelianRauzyGraph::loop_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const RauzyEdge& e) { return e.is_loop(); }));
}

bool AbelianRauzyGraph::has_edge(const ParikhVector& from, Letter a, Letter b, const ParikhVector& to) const {
    return std::binary_search(edges.begin(), edges.end(), RauzyEdge{from, a, b, to});
}

bool AbelianRauzyGraph::has_label(Letter a, Letter b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const RauzyEdge& e) { return e.first == a && e.last == b; });
}

namespace {

std::string vertex_name(const AbelianRauzyGraph& g, const ParikhVector& p) {
    if (g.alphabet.size() == 2) return std::to_string(p[1]);
    return p.str();
}

} // namespace

std::string AbelianRauzyGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph G" << order << " {\n  rankdir=LR;\n";
    for (const auto& v : vertices) out << "  \"" << vertex_name(*this, v) << "\";\n";
    for (const auto& e : edges) {
        out << "  \"" << vertex_name(*this, e.source) << "\" -> \"" << vertex_name(*this, e.target) << "\" [label=\"("
            << alphabet.symbol(e.first) << ',' << alphabet.symbol(e.last) << ")\"";
        if (e.is_loop()) out << ", color=red, fontcolor=red";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json AbelianRauzyGraph::to_json() const {
    nlohmann::json j;
    j["order"] = order;
    j["alphabet"] = alphabet.symbols();
    j["prefix_used"] = prefix_used;
    auto vs = nlohmann::json::array();
    for (const auto& v : vertices) vs.push_back(v.counts);
    j["vertices"] = vs;
    auto es = nlohmann::json::array();
    for (const auto& e : edges)
        es.push_back({{"source", e.source.counts},
                      {"label", std::string{alphabet.symbol(e.first), alphabet.symbol(e.last)}},
                      {"target", e.target.counts}});
    j["edges"] = es;
    j["vertex_count"] = vertices.size();
    j["edge_count"] = edges.size();
    j["loop_count"] = loop_count();
    return j;
}

AbelianRauzyGraph build_graph(ComplexityEngine& engine, std::size_t n) {
    if (n == 0) throw PreconditionError("abelian Rauzy graphs need order n >= 1");
    const auto longer = engine.occurrences(n + 1);
    const auto shorter = engine.occurrences(n);
    const auto letters = engine.letters();
    const std::size_t a = engine.generator().alphabet().size();

    AbelianRauzyGraph g;
    g.order = n;
    g.alphabet = engine.generator().alphabet();
    g.prefix_used = longer.prefix_used;
    std::set<ParikhVector> vertices;
    for (auto s : shorter.starts) vertices.insert(parikh(letters.subspan(s, n), a));
    std::set<RauzyEdge> edges;
    for (auto s : longer.starts) {
        auto w = letters.subspan(s, n + 1);
        edges.insert(RauzyEdge{parikh(w.first(n), a), w.front(), w.back(), parikh(w.last(n), a)});
    }
    g.vertices.assign(vertices.begin(), vertices.end());
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

AbelianRauzyGraph build_graph(const WordGenerator& gen, std::size_t n, EngineOptions options) {
    ComplexityEngine engine(gen, options);
    return build_graph(engine, n);
}

nlohmann::json EdgeQuotients::to_json() const {
    return {{"order", order}, {"x_count", x_count}, {"yl_count", yl_count}, {"yr_count", yr_count}, {"y_count", y_count}};
}

EdgeQuotients edge_quotients(ComplexityEngine& engine, std::size_t n) {
    if (engine.generator().alphabet().size() != 2) throw PreconditionError("edge_quotients needs a binary word");
    if (n == 0) throw PreconditionError("edge_quotients needs order n >= 1");
    const auto occ = engine.occurrences(n + 1);
    const auto letters = engine.letters();
    std::set<std::tuple<Letter, std::size_t, Letter>> x;
    std::set<std::pair<Letter, std::size_t>> yl;
    std::set<std::pair<std::size_t, Letter>> yr;
    for (auto s : occ.starts) {
        auto w = letters.subspan(s, n + 1);
        std::size_t inner = 0;
        for (std::size_t i = 1; i < n; ++i) inner += w[i];
        x.emplace(w.front(), inner, w.back());
        yl.emplace(w.front(), inner + w.back());
        yr.emplace(w.front() + inner, w.back());
    }
    EdgeQuotients q;
    q.order = n;
    q.x_count = x.size();
    q.yl_count = yl.size();
    q.yr_count = yr.size();
    q.y_count = q.yl_count + q.yr_count;
    return q;
}

EdgeQuotients edge_quotients(const WordGenerator& gen, std::size_t n, EngineOptions options) {
    ComplexityEngine engine(gen, options);
    return edge_quotients(engine, n);
}

std::string RunBound::str() const { return (at_least ? ">=" : "") + std::to_string(value); }

RunMaxima run_maxima(const WordGenerator& gen, std::size_t cap) {
    if (gen.alphabet().size() != 2) throw PreconditionError("run_maxima needs a binary word");
    std::uint64_t best[2] = {0, 0};
    std::vector<std::array<std::uint64_t, 2>> history;
    std::uint64_t run = 0;
    Letter prev = 2;
    std::size_t scanned = 0;
    std::size_t length = 1024;
    for (;; length *= 2) {
        const std::size_t upto = std::min(length, cap);
        const auto letters = gen.prefix_letters(upto);
        for (std::size_t i = scanned; i < upto; ++i) {
            run = letters[i] == prev ? run + 1 : 1;
            prev = letters[i];
            best[prev] = std::max(best[prev], run);
        }
        scanned = upto;
        history.push_back({best[0], best[1]});
        const std::size_t c = history.size();
        if (c >= 3 && history[c - 1] == history[c - 2] && history[c - 2] == history[c - 3]) break;
        if (length >= cap) break;
    }
    const std::size_t c = history.size();
    RunBound r[2];
    for (int x = 0; x < 2; ++x) {
        r[x].value = best[x];
        r[x].at_least = !(c >= 3 && history[c - 1][x] == history[c - 2][x] && history[c - 2][x] == history[c - 3][x]);
    }
    RunMaxima out;
    out.prefix_used = scanned;
    const int lo = r[0].value < r[1].value || (r[0].value == r[1].value && !r[0].at_least) ? 0 : 1;
    out.m = r[lo];
    out.m_prime = RunBound{std::max(r[0].value, r[1].value), r[0].at_least || r[1].at_least};
    return out;
}

std::size_t smallest_period(std::span<const Letter> w) {
    if (w.empty()) return 0;
    std::vector<std::size_t> fail(w.size() + 1, 0);
    for (std::size_t i = 1, j = 0; i < w.size(); ++i) {
        while (j > 0 && w[i] != w[j]) j = fail[j];
        if (w[i] == w[j]) ++j;
        fail[i + 1] = j;
    }
    return w.size() - fail[w.size()];
}

KPlus1Formula::KPlus1Formula(const WordGenerator& y, unsigned k, EngineOptions options)
    : engine_(y, options), k_(k) {
    if (k == 0) throw PreconditionError("kplus1_formula needs k >= 1");
    if (y.alphabet().size() != 2) throw PreconditionError("kplus1_formula needs a binary word");
    bool varied = false;
    for (std::size_t n = 1; n <= 16 && !varied; ++n) varied = engine_.class_count(1, n) >= 2;
    if (!varied) throw PreconditionError("kplus1_formula: abelian complexity is 1 on every tested length; the word is periodic");
    const auto sample = y.prefix_letters(4096);
    periodic_warning_ = smallest_period(sample) <= sample.size() / 4;
    runs_ = run_maxima(y, options.prefix_cap);
}

std::uint64_t KPlus1Formula::x_count(std::size_t n) {
    if (cache_.size() <= n) cache_.resize(n + 1);
    if (!cache_[n]) cache_[n] = edge_quotients(engine_, n);
    return cache_[n]->x_count;
}

std::uint64_t KPlus1Formula::y_count(std::size_t n) {
    x_count(n);
    return cache_[n]->y_count;
}

std::uint64_t KPlus1Formula::operator()(std::uint64_t length) {
    const std::uint64_t big = std::uint64_t{1} << k_;
    const std::uint64_t n = length / big, r = length % big;
    if (n == 0) return tm_factor_formula(r);
    const RunBound& m = runs_.m;
    const RunBound& mp = runs_.m_prime;
    // n = m < m' reads: m is exactly n and m' exceeds it
    if (r == 0) {
        const std::uint64_t z = (big - 1) * x_count(n) + engine_.class_count(1, n);
        std::uint64_t c = 0;
        if (m.exceeds(n))
            c = big;
        else if (m.equals(n) && mp.exceeds(n))
            c = 1;
        return z - c;
    }
    const std::uint64_t z = (r - 1) * x_count(n + 1) + (big - r - 1) * x_count(n) + y_count(n);
    std::uint64_t c = 0;
    if (m.exceeds(n + 1))
        c = big;
    else if (m.equals(n + 1) && mp.exceeds(n + 1))
        c = big - r + 1;
    else if (m.equals(n + 1) && mp.equals(n + 1) && 2 * r <= big)
        c = big - 2 * (r - 1);
    return z - c;
}

std::uint64_t kplus1_formula(const WordGenerator& gen_y, unsigned k, std::uint64_t length, EngineOptions options) {
    KPlus1Formula f(gen_y, k, options);
    return f(length);
}

} // namespace binowords
