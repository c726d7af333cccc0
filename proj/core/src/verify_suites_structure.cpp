#include "verify_detail.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace binowords::detail {

namespace {

bool contains_sorted(const std::vector<FiniteWord>& sorted, const FiniteWord& w) {
    return std::binary_search(sorted.begin(), sorted.end(), w);
}

bool occurs_in(const FiniteWord& needle, const FiniteWord& hay) {
    auto h = hay.letters();
    auto n = needle.letters();
    return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

/// 0101... of the given length.
FiniteWord alternating(std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += i % 2 ? '1' : '0';
    return FiniteWord::binary(s);
}

ParikhVector weight_vector(std::size_t ones, std::size_t n) { return ParikhVector{{n - ones, ones}}; }

// --- generators --------------------------------------------------------------

void prefix_monotonicity(SuiteContext& ctx) {
    const std::vector<std::string> specs = {"tm", "fib", "pd", "h", "g", "tau-g", "grill", "champ", "sturmian:1,2",
                                            "sturmian:2;1", "image(tm^2, fib)", "suffix(5, pd)"};
    std::mt19937_64 rng(31);
    for (const auto& spec : specs) {
        auto gen = parse_generator(spec);
        const std::size_t big = ctx.pick<std::size_t>(1 << 12, 1 << 15);
        auto full = gen.prefix(big);
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            const std::size_t n = rng() % big;
            ok = gen.prefix(n) == full.prefix(n);
        }
        // a fresh generator must reproduce the same prefix
        auto again = parse_generator(spec).prefix(big);
        ctx.check("prefix monotone and deterministic: " + spec, ok && again == full);
    }

    const std::vector<std::pair<std::string, std::string>> known = {
        {"tm", "01101001"},
        {"fib", "0100101001001010010"},
        {"pd", "01000101010001"},
        {"h", "0112122122212222122222"},
        {"grill", "0100010101100111"},
        {"champ", "011011100"},
        {"sturmian:2,1", "001"},
    };
    for (const auto& [spec, text] : known) {
        auto got = parse_generator(spec).prefix(text.size()).str();
        ctx.check("prefix of " + spec, got == text, got);
    }
}

void g_word_derivations(SuiteContext& ctx) {
    const std::size_t n = ctx.pick<std::size_t>(1 << 14, 1 << 18);
    auto a = g_word().prefix(n);
    auto b = g_word_product_form().prefix(n);
    ctx.check("fixed point of g equals a prod phi^j(0) A^(2^j)", a == b, "compared " + std::to_string(n) + " letters");

    // tau deletes a and sends A to 1
    const auto& symbols = a.alphabet().symbols();
    std::string coded;
    for (Letter c : a.letters()) {
        char s = symbols[c];
        if (s == 'a') continue;
        coded += s == 'A' ? '1' : s;
    }
    auto t = tau_g_word().prefix(coded.size()).str();
    ctx.check("tau(g) prefix equals the coding of the g prefix", t == coded);
}

void short_factors(SuiteContext& ctx) {
    ComplexityEngine tm(thue_morse_word(), ctx.options);
    const unsigned top = ctx.pick(4u, 5u);
    for (const auto& [name, inner] : std::vector<std::pair<std::string, WordGenerator>>{{"fib", fibonacci_word()}, {"pd", period_doubling_word()}}) {
        for (unsigned k = 1; k <= top; ++k) {
            ComplexityEngine img(image_of(Morphism::thue_morse(), k, inner), ctx.options);
            std::string bad;
            for (std::size_t n = 1; n <= (std::size_t{1} << k) && bad.empty(); ++n)
                if (img.factors(n).words != tm.factors(n).words) bad = "n=" + std::to_string(n);
            ctx.check("Fac_n(phi^" + std::to_string(k) + "(" + name + ")) = Fac_n(t) for n <= 2^" + std::to_string(k), bad.empty(), bad);
        }
    }
}

void walnut_facts(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(32, 64);
    auto gen = thue_morse_word();
    auto t = gen.prefix(std::size_t{1} << 16);
    std::vector<std::size_t> first, second;
    std::string missing1, missing2;
    for (std::size_t m = 0; m <= top; ++m) {
        // T[2j] = 1 and T[2j+2m+1] = 1
        if (m >= 1) {
            bool found = false;
            for (std::size_t j = 0; 2 * j + 2 * m + 1 < t.size() && !found; ++j)
                if (t[2 * j] == 1 && t[2 * j + 2 * m + 1] == 1) {
                    found = true;
                    first.push_back(2 * j);
                }
            if (!found) missing1 += std::to_string(m) + " ";
        }
        // j > 0, T[2j-1] = 0 and T[2j+2m] = 0
        bool found = false;
        for (std::size_t j = 1; 2 * j + 2 * m < t.size() && !found; ++j)
            if (t[2 * j - 1] == 0 && t[2 * j + 2 * m] == 0) {
                found = true;
                second.push_back(2 * j - 1);
            }
        if (!found) missing2 += std::to_string(m) + " ";
    }
    ctx.check("1 <= m <= " + std::to_string(top) + ": a length-(2m+2) factor at an even index begins and ends with 1",
              missing1.empty(), missing1.empty() ? "first indices " + join_values(first, 8) : "missing m = " + missing1);
    ctx.check("0 <= m <= " + std::to_string(top) + ": a length-(2m+2) factor at an odd index begins and ends with 0",
              missing2.empty(), missing2.empty() ? "first indices " + join_values(second, 8) : "missing m = " + missing2);

    // the loops these facts give in G_{2m+1}
    ComplexityEngine engine(gen, ctx.options);
    Tally loops(ctx, "G_{2m+1} of t has loops (1,1) and (0,0) at weight m");
    for (std::size_t m = 1; m <= std::min<std::size_t>(top, 32); ++m) {
        auto g = build_graph(engine, 2 * m + 1);
        const auto v = weight_vector(m, 2 * m + 1);
        loops.expect(g.has_edge(v, 1, 1, v) && g.has_edge(v, 0, 0, v), [&] { return "m=" + std::to_string(m); });
    }
}

void boundaries(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(32, 64);
    for (const auto& spec : {"fib", "pd", "tau-g", "tm", "sturmian:1,2"}) {
        ComplexityEngine engine(parse_generator(spec), ctx.options);
        std::vector<AbelianRauzyGraph> graphs;
        for (std::size_t n = 1; n <= top + 1; ++n) graphs.push_back(build_graph(engine, n));
        Tally labels(ctx, std::string(spec) + ": labels (0,1), (1,0), and (0,0) or (1,1) for n <= " + std::to_string(top));
        Tally loops(ctx, std::string(spec) + ": no (a,a) loop in G_n gives an (a',a') loop in G_{n+1}");
        for (std::size_t n = 1; n <= top; ++n) {
            const auto& g = graphs[n - 1];
            labels.expect(g.has_label(0, 1) && g.has_label(1, 0) && (g.has_label(0, 0) || g.has_label(1, 1)), [&] { return "n=" + std::to_string(n); });
            for (Letter a = 0; a < 2; ++a) {
                const bool loop = std::any_of(g.edges.begin(), g.edges.end(), [&](const RauzyEdge& e) { return e.first == a && e.last == a && e.source == e.target; });
                if (loop) continue;
                const Letter b = 1 - a;
                const auto& next = graphs[n];
                const bool other = std::any_of(next.edges.begin(), next.edges.end(), [&](const RauzyEdge& e) { return e.first == b && e.last == b && e.source == e.target; });
                loops.expect(other, [&] { return "n=" + std::to_string(n) + " a=" + std::to_string(a); });
            }
        }
    }
}

// --- rauzy -------------------------------------------------------------------

void rauzy_tm(SuiteContext& ctx) {
    ComplexityEngine engine(thue_morse_word(), ctx.options);
    Tally even(ctx, "G_{2m} of t: vertices m-1, m, m+1, 6 edges, loops (0,0) and (1,1) at m");
    Tally odd(ctx, "G_{2m+1} of t: vertices m, m+1, 6 edges, two loops at each vertex");
    for (std::size_t m = 1; m <= 16; ++m) {
        auto g = build_graph(engine, 2 * m);
        const std::size_t n = 2 * m;
        std::vector<ParikhVector> want = {weight_vector(m + 1, n), weight_vector(m, n), weight_vector(m - 1, n)};
        std::sort(want.begin(), want.end());
        const auto mid = weight_vector(m, n);
        even.expect(g.vertices == want && g.edges.size() == 6 && g.loop_count() == 2 && g.has_edge(mid, 0, 0, mid) && g.has_edge(mid, 1, 1, mid),
                    [&] { return "m=" + std::to_string(m) + " " + g.to_json().dump(); });

        auto h = build_graph(engine, 2 * m + 1);
        const auto lo = weight_vector(m, 2 * m + 1), hi = weight_vector(m + 1, 2 * m + 1);
        std::vector<ParikhVector> want2 = {lo, hi};
        std::sort(want2.begin(), want2.end());
        odd.expect(h.vertices == want2 && h.edges.size() == 6 && h.loop_count() == 4 && h.has_edge(lo, 0, 0, lo) && h.has_edge(lo, 1, 1, lo) &&
                       h.has_edge(hi, 0, 0, hi) && h.has_edge(hi, 1, 1, hi),
                   [&] { return "m=" + std::to_string(m) + " " + h.to_json().dump(); });
    }
}

void rauzy_sturmian(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(32, 64);
    for (const auto& spec : {"fib", "sturmian:1,2", "sturmian:3,1"}) {
        ComplexityEngine engine(parse_generator(spec), ctx.options);
        auto g1 = build_graph(engine, 1);
        ctx.check(std::string(spec) + ": G_1 has 2 vertices and 3 edges", g1.vertices.size() == 2 && g1.edges.size() == 3);
        Tally shape(ctx, std::string(spec) + ": G_n has 2 vertices, edges x->y (0,1), y->x (1,0) and two loops, n <= " + std::to_string(top));
        Tally forbid(ctx, std::string(spec) + ": never a (0,0) loop at the light vertex with a (1,1) loop at the heavy one");
        Tally ys(ctx, std::string(spec) + ": #Y(n) = 6 for n <= " + std::to_string(top));
        for (std::size_t n = 2; n <= top; ++n) {
            auto g = build_graph(engine, n);
            bool ok = g.vertices.size() == 2 && g.edges.size() == 4 && g.loop_count() == 2;
            if (ok) {
                // vertices are sorted by Parikh vector; the one with more 0s sorts last
                const auto& heavy = g.vertices[0];
                const auto& light = g.vertices[1];
                ok = g.has_edge(light, 0, 1, heavy) && g.has_edge(heavy, 1, 0, light);
                forbid.expect(!(g.has_edge(light, 0, 0, light) && g.has_edge(heavy, 1, 1, heavy)), [&] { return "n=" + std::to_string(n); });
            }
            shape.expect(ok, [&] { return "n=" + std::to_string(n) + " " + g.to_json().dump(); });
        }
        for (std::size_t n = 1; n <= top; ++n) {
            auto q = edge_quotients(engine, n);
            ys.expect(q.y_count == 6, [&] { return "n=" + std::to_string(n) + " Y=" + std::to_string(q.y_count); });
        }
    }
}

/// X, Y_L, Y_R counted straight from the definitions.
EdgeQuotients brute_quotients(const std::vector<FiniteWord>& fac_n1, std::size_t n) {
    std::set<std::tuple<Letter, std::size_t, Letter>> x;
    std::set<std::pair<Letter, std::size_t>> yl, yr;
    for (const auto& w : fac_n1) {
        x.insert({w[0], w.substr(1, n - 1).count(1), w[n]});
        yl.insert({w[0], w.suffix(n).count(1)});
        yr.insert({w[n], w.prefix(n).count(1)});
    }
    EdgeQuotients q;
    q.order = n;
    q.x_count = x.size();
    q.yl_count = yl.size();
    q.yr_count = yr.size();
    q.y_count = yl.size() + yr.size();
    return q;
}

void graph_invariants(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(20, 40);
    struct Case {
        std::string name;
        WordGenerator gen;
        bool aperiodic;
    };
    std::vector<Case> cases = {
        {"tm", thue_morse_word(), true},
        {"fib", fibonacci_word(), true},
        {"pd", period_doubling_word(), true},
        {"tau-g", tau_g_word(), true},
        {"h", h_word(), true},
        {"g", g_word(), true},
        {"(01)^w", fixed_point(Morphism::parse_inline("0->01, 1->01"), '0'), false},
    };
    for (auto& c : cases) {
        ComplexityEngine engine(c.gen, ctx.options);
        const bool binary = c.gen.alphabet().size() == 2;
        Tally t(ctx, c.name + ": graph invariants and the factor-to-edge map, n <= " + std::to_string(top));
        for (std::size_t n = 1; n <= top; ++n) {
            auto g = build_graph(engine, n);
            const auto b1 = engine.class_count(1, n);
            bool ok = g.vertices.size() == b1;
            for (const auto& e : g.edges) {
                auto expect = e.source;
                --expect.counts[e.first];
                ++expect.counts[e.last];
                ok = ok && expect == e.target && (e.source == e.target) == e.is_loop();
                ok = ok && std::binary_search(g.vertices.begin(), g.vertices.end(), e.source) && std::binary_search(g.vertices.begin(), g.vertices.end(), e.target);
            }
            if (c.aperiodic) ok = ok && g.edges.size() >= g.vertices.size() + 1;
            // each length-(n+1) factor maps to one edge, and these cover the edge set
            std::set<RauzyEdge> induced;
            for (const auto& w : engine.factors(n + 1).words)
                induced.insert({parikh(w.prefix(n)), w[0], w[n], parikh(w.suffix(n))});
            ok = ok && std::vector<RauzyEdge>(induced.begin(), induced.end()) == g.edges;
            if (binary) {
                auto q = edge_quotients(engine, n);
                auto brute = brute_quotients(engine.factors(n + 1).words, n);
                ok = ok && q.x_count == g.edges.size() && q.yl_count <= q.x_count && q.yr_count <= q.x_count && q.y_count <= q.yl_count + q.yr_count;
                ok = ok && q.x_count == brute.x_count && q.yl_count == brute.yl_count && q.yr_count == brute.yr_count && q.y_count == brute.y_count;
            }
            t.expect(ok, [&] { return "n=" + std::to_string(n); });
        }
    }
}

/// Longest runs of each letter in a prefix, by a plain scan.
std::pair<std::size_t, std::size_t> scan_runs(const FiniteWord& w) {
    std::size_t best[2] = {0, 0};
    std::size_t cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        cur = i > 0 && w[i] == w[i - 1] ? cur + 1 : 1;
        best[w[i]] = std::max(best[w[i]], cur);
    }
    return {best[0], best[1]};
}

void run_maxima_suite(SuiteContext& ctx) {
    for (const auto& [spec, m, mp] : std::vector<std::tuple<std::string, std::uint64_t, std::uint64_t>>{
             {"fib", 1, 2}, {"tm", 2, 2}, {"pd", 1, 3}, {"sturmian:1,2", 1, 2}, {"sturmian:3,1", 1, 4}}) {
        auto gen = parse_generator(spec);
        auto r = run_maxima(gen);
        auto [z, o] = scan_runs(gen.prefix(1 << 16));
        const bool ok = r.m.equals(m) && r.m_prime.equals(mp) && std::min(z, o) == m && std::max(z, o) == mp;
        ctx.check("run maxima of " + spec, ok, "m=" + r.m.str() + " m'=" + r.m_prime.str());
    }
    auto zeros = fixed_point(Morphism::parse_inline("0->00, 1->1"), '0');
    auto r = run_maxima(zeros, std::size_t{1} << 16);
    ctx.check("run maxima of 0^w: m = 0 and m' unbounded", r.m.equals(0) && r.m_prime.at_least, "m=" + r.m.str() + " m'=" + r.m_prime.str());
    auto tg = run_maxima(tau_g_word());
    ctx.check("run maxima of tau(g): m = 2 and m' unbounded", tg.m.equals(2) && tg.m_prime.at_least, "m=" + tg.m.str() + " m'=" + tg.m_prime.str());
}

void kplus1_formula_suite(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(48, 96);
    for (const auto& spec : {"fib", "pd", "tau-g"}) {
        auto y = parse_generator(spec);
        for (unsigned k = 1; k <= 2; ++k) {
            KPlus1Formula formula(y, k, ctx.options);
            auto brute = binomial_complexity(image_of(Morphism::thue_morse(), k, y), k + 1, top, ctx.options);
            auto bad = profile_mismatch(brute, [&](std::size_t n) { return formula(n); });
            ctx.check("formula = b^(" + std::to_string(k + 1) + ") of phi^" + std::to_string(k) + "(" + spec + "), n <= " + std::to_string(top), bad.empty(), bad);
        }
    }
}

// --- tm-structure --------------------------------------------------------------

/// Distinct factors of phi^k(y) with lengths in [lo, hi].
std::map<std::size_t, std::vector<FiniteWord>> image_factors(const WordGenerator& y, unsigned k, std::size_t lo, std::size_t hi, const EngineOptions& options) {
    ComplexityEngine engine(image_of(Morphism::thue_morse(), k, y), options);
    std::map<std::size_t, std::vector<FiniteWord>> out;
    for (std::size_t n = lo; n <= hi; ++n) out[n] = engine.factors(n).words;
    return out;
}

void unique_image(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(24, 40);
    for (const auto& spec : {"fib", "pd", "tm", "tau-g"}) {
        auto y = parse_generator(spec);
        ComplexityEngine ylang(y, ctx.options);
        for (unsigned j = 1; j <= 3; ++j) {
            const std::size_t block = std::size_t{1} << j;
            // stated for |u| >= 2^j - 1; the |u| >= 2^j part is tallied on its own
            Tally stated(ctx, std::string(spec) + ", j=" + std::to_string(j) + ": phi^j-factorizations of factors of phi^j(y), |u| >= 2^j - 1");
            Tally longer(ctx, std::string(spec) + ", j=" + std::to_string(j) + ": phi^j-factorizations of factors of phi^j(y), |u| >= 2^j");
            for (const auto& [n, words] : image_factors(y, j, block - 1, top, ctx.options)) {
                // factors of phi^(j-1) of an alternating word
                const auto alt = tm_image(j - 1, alternating(n + 4));
                for (const auto& u : words) {
                    auto fs = phi_factorizations(u, j);
                    bool ok = !fs.items.empty() && fs.items.size() <= 2;
                    bool some_in_language = false;
                    for (const auto& f : fs.items) {
                        ok = ok && f.reconstruct() == u && f.p.size() < block && f.s.size() < block;
                        ok = ok && f.a.has_value() == !f.p.empty() && f.b.has_value() == !f.s.empty();
                        if (f.a) ok = ok && f.p.is_suffix_of(tm_block(j, *f.a)) && !f.p.is_suffix_of(tm_block(j, 1 - *f.a));
                        if (f.b) ok = ok && f.s.is_prefix_of(tm_block(j, *f.b)) && !f.s.is_prefix_of(tm_block(j, 1 - *f.b));
                        some_in_language = some_in_language || contains_sorted(ylang.factors(f.ancestor.size()).words, f.ancestor);
                    }
                    ok = ok && some_in_language;
                    const bool two = fs.items.size() == 2;
                    if (fs.items.size() == 1) {
                        const auto& anc = fs.items[0].ancestor;
                        ok = ok && anc.count(0) > 0 && anc.count(1) > 0;
                    }
                    if (two) {
                        const auto& f = fs.items[0];
                        const auto& g = fs.items[1];
                        const std::size_t half = block / 2;
                        auto absdiff = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
                        const bool powers = (f.ancestor.count(0) == 0 && g.ancestor.count(1) == 0) || (f.ancestor.count(1) == 0 && g.ancestor.count(0) == 0);
                        const bool shape = powers && absdiff(f.p.size(), g.p.size()) == half && absdiff(f.s.size(), g.s.size()) == half &&
                                           equiv_j({f.p, f.s, j}, {g.p, g.s, j});
                        ok = ok && shape && fs.expected_shape;
                    }
                    // two factorizations exactly for factors of phi^(j-1) of an alternating word
                    ok = ok && two == occurs_in(u, alt);
                    auto describe = [&] {
                        std::string d = "u=" + u.str();
                        for (const auto& f : fs.items) d += " (" + f.p.str() + "|" + f.core.str() + "|" + f.s.str() + ", ancestor " + f.ancestor.str() + ")";
                        return d;
                    };
                    stated.expect(ok, describe);
                    if (n >= block) longer.expect(ok, describe);
                }
            }
        }
    }

    // worked examples
    auto one = phi_factorizations(FiniteWord::binary("0110"), 1);
    ctx.check("0110 has one phi-factorization (e, phi(01), e)", one.items.size() == 1 && one.items[0].ancestor.str() == "01" && one.items[0].p.empty() && one.items[0].s.empty());
    auto two = phi_factorizations(FiniteWord::binary("0101"), 1);
    std::set<std::string> ancestors;
    for (const auto& f : two.items) ancestors.insert(f.ancestor.str());
    ctx.check("0101 has factorizations with ancestors 00 and 111", two.status == FactorizationStatus::two && ancestors == std::set<std::string>{"00", "111"});
    auto exact = phi_factorizations(tm_block(3, 0), 3);
    std::set<std::string> exact_anc;
    for (const auto& f : exact.items) exact_anc.insert(f.ancestor.str());
    ctx.check("phi^3(0) factors as (e, phi^3(0), e) and as (0110, e, 1001) with ancestor 11",
              exact.items.size() == 2 && exact_anc == std::set<std::string>{"0", "11"} && exact.expected_shape);
}

/// All factorization choices of u as prefix-suffix pairs and cores.
struct Factored {
    FiniteWord word;
    std::vector<PhiFactorization> fs;
};

std::vector<Factored> factored(const std::vector<FiniteWord>& words, unsigned j) {
    std::vector<Factored> out;
    for (const auto& w : words) out.push_back({w, phi_factorizations(w, j).items});
    return out;
}

void prefix_suffix_relation(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(20, 40);
    const unsigned kmax = ctx.pick(2u, 3u);
    for (const auto& spec : {"fib", "pd"}) {
        auto y = parse_generator(spec);
        for (unsigned k = 1; k <= kmax; ++k) {
            for (unsigned j = 1; j <= k; ++j) {
                Tally t(ctx, std::string(spec) + ", k=" + std::to_string(k) + ", j=" + std::to_string(j) + ": u ~_j v iff (p1,s1) =_j (p2,s2)");
                for (const auto& [n, words] : image_factors(y, k, (std::size_t{1} << j) - 1, top, ctx.options)) {
                    auto fw = factored(words, j);
                    std::vector<BinomialSignature> sigs;
                    for (const auto& w : words) sigs.push_back(signature(w, j));
                    for (std::size_t a = 0; a < fw.size(); ++a)
                        for (std::size_t b = a; b < fw.size(); ++b) {
                            const bool eq = sigs[a] == sigs[b];
                            bool rel = false;
                            for (const auto& f : fw[a].fs)
                                for (const auto& g : fw[b].fs) rel = rel || equiv_j({f.p, f.s, j}, {g.p, g.s, j});
                            t.expect(eq == rel, [&] { return "u=" + fw[a].word.str() + " v=" + fw[b].word.str(); });
                        }
                }
            }
        }
    }

    // worked examples
    auto e = FiniteWord::binary("");
    ctx.check("equiv_j reflexive example", equiv_j({FiniteWord::binary("1"), FiniteWord::binary("0"), 2}, {FiniteWord::binary("1"), FiniteWord::binary("0"), 2}));
    ctx.check("equiv_2: (01,10) =_2 (10,01)", equiv_j({FiniteWord::binary("01"), FiniteWord::binary("10"), 2}, {FiniteWord::binary("10"), FiniteWord::binary("01"), 2}));
    ctx.check("equiv_2: (e,e) =_2 (01,10)", equiv_j({e, e, 2}, {FiniteWord::binary("01"), FiniteWord::binary("10"), 2}));
}

void kplus1_prefix_suffix(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(24, 40);
    for (const auto& spec : {"fib", "pd"}) {
        auto y = parse_generator(spec);
        for (unsigned k = 1; k <= 2; ++k) {
            Tally t(ctx, std::string(spec) + ", k=" + std::to_string(k) + ": u ~_{k+1} v, u != v iff z ~_1 z', z != z', same (p,s)");
            std::size_t positives = 0;
            for (const auto& [n, words] : image_factors(y, k, (std::size_t{1} << k) - 1, top, ctx.options)) {
                auto fw = factored(words, k);
                std::vector<BinomialSignature> sigs;
                for (const auto& w : words) sigs.push_back(signature(w, k + 1));
                for (std::size_t a = 0; a < fw.size(); ++a)
                    for (std::size_t b = a + 1; b < fw.size(); ++b) {
                        const bool eq = sigs[a] == sigs[b];
                        positives += eq;
                        bool rel = false;
                        for (const auto& f : fw[a].fs)
                            for (const auto& g : fw[b].fs)
                                rel = rel || (f.p == g.p && f.s == g.s && f.core != g.core && equivalent(f.core, g.core, 1));
                        t.expect(eq == rel, [&] { return "u=" + fw[a].word.str() + " v=" + fw[b].word.str(); });
                    }
            }
            t.finish();
            ctx.check(std::string(spec) + ", k=" + std::to_string(k) + ": equivalent distinct pairs exist", positives > 0, std::to_string(positives) + " pairs");
        }
    }
}

void coefficients_of_images(SuiteContext& ctx) {
    std::mt19937_64 rng(41);
    Tally t(ctx, "binom(phi(u),0) = |u|, binom(phi(u),01) = |u|_0 + C(|u|,2), binom(phi(u),011) = binom(u,01) + C(|u|_0,2) + C(|u|,3)");
    for (int i = 0; i < ctx.pick(150, 300); ++i) {
        auto u = random_word(rng, rng() % 25);
        auto pu = tm_image(1, u);
        bool ok = binomial_coefficient(pu, FiniteWord::binary("0")) == u.size();
        ok = ok && binomial_coefficient(pu, FiniteWord::binary("01")) == BigInt(u.count(0)) + choose(u.size(), 2);
        ok = ok && binomial_coefficient(pu, FiniteWord::binary("011")) ==
                       binomial_coefficient(u, FiniteWord::binary("01")) + choose(u.count(0), 2) + choose(u.size(), 3);
        t.expect(ok, [&] { return "u=" + u.str(); });
    }
}

void two_bin_same_class(SuiteContext& ctx) {
    const std::size_t top = ctx.pick<std::size_t>(20, 30);
    for (const auto& spec : {"fib", "pd"}) {
        auto y = parse_generator(spec);
        ComplexityEngine ylang(y, ctx.options);
        auto in_y = [&](const FiniteWord& w) { return contains_sorted(ylang.factors(w.size()).words, w); };
        Tally t(ctx, std::string(spec) + ": u ~_2 v gives the same factorization classes, |u| <= " + std::to_string(top));
        for (const auto& [n, words] : image_factors(y, 1, 1, top, ctx.options)) {
            std::vector<std::vector<FactorizationClass>> classes;
            std::vector<BinomialSignature> sigs;
            for (const auto& w : words) {
                classes.push_back(classify_factor(w, in_y));
                sigs.push_back(signature(w, 2));
            }
            for (std::size_t a = 0; a < words.size(); ++a)
                for (std::size_t b = a + 1; b < words.size(); ++b)
                    if (sigs[a] == sigs[b]) t.expect(classes[a] == classes[b], [&] { return "u=" + words[a].str() + " v=" + words[b].str(); });
        }
    }

    Tally alt(ctx, "a word has two factorization classes iff it alternates, |u| <= 14");
    for (std::size_t len = 1; len <= ctx.pick<std::size_t>(12, 14); ++len)
        for (const auto& u : all_words(len)) {
            if (phi_factorizations(u, 1).items.empty()) continue;
            alt.expect((classify_factor(u).size() == 2) == is_alternating(u), [&] { return "u=" + u.str(); });
        }
    alt.finish();

    for (std::size_t l = 1; l <= 4; ++l) {
        std::string s10, s01;
        for (std::size_t i = 0; i < l; ++i) s10 += "10";
        for (std::size_t i = 0; i <= l; ++i) s01 += "01";
        auto c1 = classify_factor(FiniteWord::binary(s10 + "1"));
        std::vector<FactorizationClass> want1 = {{std::nullopt, Letter{1}, l}, {Letter{0}, std::nullopt, l}};
        std::sort(want1.begin(), want1.end());
        auto c2 = classify_factor(FiniteWord::binary(s01));
        std::vector<FactorizationClass> want2 = {{std::nullopt, std::nullopt, l + 1}, {Letter{1}, Letter{1}, l}};
        std::sort(want2.begin(), want2.end());
        ctx.check("(10)^" + std::to_string(l) + "1 and (01)^" + std::to_string(l + 1) + " classes", c1 == want1 && c2 == want2,
                  c1[0].str() + " " + (c1.size() > 1 ? c1[1].str() : "") + " / " + c2[0].str() + " " + (c2.size() > 1 ? c2[1].str() : ""));
    }
}

void transfer(SuiteContext& ctx) {
    ctx.check("transfer example (0, 1, 0, 2)", transfer_check(FiniteWord::binary("0"), FiniteWord::binary("1"), FiniteWord::binary("0"), 2));
    ctx.check("transfer example (01, 10, 11, 3)", transfer_check(FiniteWord::binary("01"), FiniteWord::binary("10"), FiniteWord::binary("11"), 3));
    ctx.check("transfer example (1, 0, 0, 1)", transfer_check(FiniteWord::binary("1"), FiniteWord::binary("0"), FiniteWord::binary("0"), 1));
    std::mt19937_64 rng(42);
    Tally t(ctx, "phi^{k-1}(u) phi^k(v) ~_k phi^k(v') phi^{k-1}(u)");
    const unsigned kmax = ctx.pick(3u, 4u);
    for (int i = 0; i < ctx.pick(150, 400); ++i) {
        const unsigned k = 1 + rng() % kmax;
        auto u = random_word(rng, 1 + rng() % 6);
        const std::size_t len = 1 + rng() % 5;
        auto v = random_word(rng, len);
        auto v2 = random_word(rng, len);
        t.expect(transfer_check(u, v, v2, k), [&] { return "u=" + u.str() + " v=" + v.str() + " v'=" + v2.str() + " k=" + std::to_string(k); });
    }
}

void decode_roundtrip(SuiteContext& ctx) {
    std::mt19937_64 rng(43);
    const std::vector<WordGenerator> sources = {fibonacci_word(), period_doubling_word(), sturmian(SturmianSpec{{}, {1, 2}})};
    Tally aperiodic(ctx, "decoding u phi^k(y) r recovers the construction for aperiodic y");
    Tally random(ctx, "decoding random constructions: the construction is among the decodings");
    const int count = ctx.pick(100, 200);
    for (int i = 0; i < count; ++i) {
        const unsigned k = 1 + rng() % 3;
        const std::size_t block = std::size_t{1} << k;
        const bool from_word = i % 2 == 0;
        FiniteWord y = from_word ? [&] {
            const auto& src = sources[rng() % sources.size()];
            const std::size_t off = rng() % 500;
            return src.prefix(off + 24).suffix(24);
        }()
                                 : random_word(rng, 4 + rng() % 12);
        const Letter a = rng() % 2;
        auto u = tm_block(k, a).suffix(rng() % block);
        auto r = tm_block(k, rng() % 2).prefix(rng() % block);
        auto x = u + tm_image(k, y) + r;
        if (x.size() < 2 * block) continue;
        auto all = tm_decode_all(x, k);
        const bool listed = std::any_of(all.begin(), all.end(), [&](const TmDecoding& d) { return d.u == u && d.y_prefix == y && d.remainder == r; });
        auto best = tm_decode(x, k);
        const bool rebuilt = best.u + tm_image(k, best.y_prefix) + best.remainder == x;
        if (from_word)
            aperiodic.expect(rebuilt && best.u == u && best.y_prefix == y && best.remainder == r, [&] { return "x=" + x.str() + " k=" + std::to_string(k); });
        else
            random.expect(rebuilt && listed, [&] { return "x=" + x.str() + " k=" + std::to_string(k); });
    }
    aperiodic.finish();
    random.finish();

    auto fib2 = image_of(Morphism::thue_morse(), 2, fibonacci_word()).prefix(64);
    auto d = tm_decode(fib2, 2);
    ctx.check("prefix of phi^2(fib) decodes with empty u to a prefix of fib", d.u.empty() && d.y_prefix.is_prefix_of(fibonacci_word().prefix(64)));
    bool rejected = false;
    try {
        tm_decode(champernowne().prefix(64), 2);
    } catch (const DecodeError&) {
        rejected = true;
    }
    ctx.check("Champernowne prefix is not a phi^2-image suffix", rejected);
}

} // namespace

void register_structure_suites(std::vector<SuiteEntry>& out) {
    out.push_back({{"prefix-monotonicity", "generator prefixes are consistent, deterministic and match known prefixes"}, prefix_monotonicity});
    out.push_back({{"g-word-derivations", "the g-word by iteration and by its product form; tau(g) coding"}, g_word_derivations});
    out.push_back({{"short-factors", "phi^k(y) has the short factors of the Thue-Morse word"}, short_factors});
    out.push_back({{"walnut-facts", "Thue-Morse factors beginning and ending with equal letters at both parities"}, walnut_facts});
    out.push_back({{"boundaries", "edge labels and loops of abelian Rauzy graphs of aperiodic binary words"}, boundaries});
    out.push_back({{"rauzy-tm", "abelian Rauzy graphs of the Thue-Morse word"}, rauzy_tm});
    out.push_back({{"rauzy-sturmian", "abelian Rauzy graphs and Y sets of Sturmian words"}, rauzy_sturmian});
    out.push_back({{"graph-invariants", "vertex counts, edge arithmetic, factor-to-edge map and edge quotients"}, graph_invariants});
    out.push_back({{"run-maxima", "maximal letter runs"}, run_maxima_suite});
    out.push_back({{"kplus1-formula", "the (k+1)-binomial formula from abelian Rauzy graphs against brute force"}, kplus1_formula_suite});
    out.push_back({{"unique-image", "phi^j-factorizations: count, shape and ancestors"}, unique_image});
    out.push_back({{"prefix-suffix-relation", "j-binomial equivalence in phi^k(y) through prefix-suffix pairs"}, prefix_suffix_relation});
    out.push_back({{"kplus1-prefix-suffix", "(k+1)-binomial equivalence in phi^k(y) through cores"}, kplus1_prefix_suffix});
    out.push_back({{"coefficients-of-images", "subword counts of phi(u) for 0, 01, 011"}, coefficients_of_images});
    out.push_back({{"2bin-same-class", "2-binomially equivalent factors share factorization classes"}, two_bin_same_class});
    out.push_back({{"transfer", "moving phi^{k-1}(u) across phi^k(v) preserves ~_k"}, transfer});
    out.push_back({{"decode-roundtrip", "phi^k decoding of constructed words"}, decode_roundtrip});
}

} // namespace binowords::detail
