#include <binowords/morphism.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace binowords {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<FiniteWord> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size()) throw PreconditionError("morphism needs exactly one image per source letter");
    for (const auto& w : images_)
        if (!(w.alphabet() == target_)) throw AlphabetMismatch("morphism image not over the target alphabet");
}

Morphism Morphism::from_rules(const std::vector<std::pair<char, std::string>>& rules) {
    std::string src;
    std::set<char> image_letters;
    for (const auto& [a, img] : rules) {
        if (src.find(a) != std::string::npos) throw ParseError(std::string("duplicate rule for letter '") + a + "'");
        src.push_back(a);
        image_letters.insert(img.begin(), img.end());
    }
    std::sort(src.begin(), src.end());
    bool closed = std::all_of(image_letters.begin(), image_letters.end(),
                              [&](char c) { return src.find(c) != std::string::npos; });
    Alphabet source(src);
    Alphabet target = closed ? source : Alphabet(std::string(image_letters.begin(), image_letters.end()));
    std::vector<FiniteWord> images(source.size(), FiniteWord(target));
    for (const auto& [a, img] : rules) images[source.index(a)] = FiniteWord(target, img);
    return Morphism(source, target, std::move(images));
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

Morphism parse_lines(const std::vector<std::string>& lines) {
    std::vector<std::pair<char, std::string>> rules;
    for (const auto& raw : lines) {
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("morphism rule without '->': \"" + line + "\"");
        std::string lhs = trim(std::string_view(line).substr(0, arrow));
        std::string rhs;
        for (char c : std::string_view(line).substr(arrow + 2))
            if (c != ' ' && c != '\t') rhs.push_back(c);
        if (lhs.size() != 1) throw ParseError("morphism rule must map a single letter: \"" + line + "\"");
        rules.emplace_back(lhs[0], rhs);
    }
    if (rules.empty()) throw ParseError("morphism text contains no rules");
    return Morphism::from_rules(rules);
}

std::vector<std::string> split_any(std::string_view text, std::string_view seps) {
    std::vector<std::string> out(1);
    for (char c : text) {
        if (seps.find(c) != std::string_view::npos)
            out.emplace_back();
        else
            out.back().push_back(c);
    }
    return out;
}

} // namespace

Morphism Morphism::parse(std::string_view text) { return parse_lines(split_any(text, "\n")); }

Morphism Morphism::parse_inline(std::string_view text) { return parse_lines(split_any(text, "\n,;")); }

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<FiniteWord> images;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        images.emplace_back(alphabet, std::vector<Letter>{static_cast<Letter>(a)});
    return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::thue_morse() { return from_rules({{'0', "01"}, {'1', "10"}}); }

std::vector<std::vector<std::uint64_t>> Morphism::adjacency_matrix() const {
    std::vector<std::vector<std::uint64_t>> m(target_.size(), std::vector<std::uint64_t>(source_.size(), 0));
    for (std::size_t a = 0; a < source_.size(); ++a) {
        auto p = parikh(images_[a]);
        for (std::size_t b = 0; b < target_.size(); ++b) m[b][a] = p[b];
    }
    return m;
}

std::string Morphism::to_text() const {
    std::ostringstream out;
    for (std::size_t a = 0; a < source_.size(); ++a)
        out << source_.symbols()[a] << " -> " << images_[a].str() << '\n';
    return out.str();
}

FiniteWord apply(const Morphism& f, const FiniteWord& u) {
    if (!(u.alphabet() == f.source())) throw AlphabetMismatch("apply: word is not over the morphism's source alphabet");
    std::vector<Letter> out;
    for (Letter a : u.letters()) {
        auto img = f.image(a).letters();
        out.insert(out.end(), img.begin(), img.end());
    }
    return FiniteWord(f.target(), std::move(out));
}

Morphism power(const Morphism& f, unsigned j, std::size_t image_limit) {
    if (!f.is_endomorphism()) throw PreconditionError("power: morphism is not an endomorphism");
    Morphism result = Morphism::identity(f.source());
    for (unsigned step = 0; step < j; ++step) {
        std::vector<FiniteWord> images;
        for (const auto& w : result.images()) {
            std::size_t len = 0;
            for (Letter a : w.letters()) len += f.image(a).size();
            if (len > image_limit)
                throw PreconditionError("power: image length " + std::to_string(len) + " exceeds the limit of " +
                                        std::to_string(image_limit));
            images.push_back(apply(f, w));
        }
        result = Morphism(f.source(), f.target(), std::move(images));
    }
    return result;
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

MorphismClass classify(const Morphism& f) {
    MorphismClass cls;
    const auto adj = f.adjacency_matrix();
    std::vector<std::vector<BigInt>> m(adj.size());
    for (std::size_t r = 0; r < adj.size(); ++r)
        for (auto v : adj[r]) m[r].emplace_back(v);
    cls.rank = integer_rank(m);

    std::vector<ParikhVector> cols;
    for (const auto& w : f.images()) cols.push_back(parikh(w));
    cls.is_totally_erasing = std::all_of(f.images().begin(), f.images().end(), [](const FiniteWord& w) { return w.empty(); });
    cls.is_parikh_constant = std::all_of(cols.begin(), cols.end(), [&](const ParikhVector& p) { return p == cols[0]; });
    // pairwise proportional: every 2x2 minor of every pair of columns vanishes
    bool collinear = true;
    for (std::size_t a = 0; a < cols.size() && collinear; ++a)
        for (std::size_t b = a + 1; b < cols.size() && collinear; ++b)
            for (std::size_t x = 0; x < adj.size() && collinear; ++x)
                for (std::size_t y = x + 1; y < adj.size() && collinear; ++y)
                    if (BigInt(cols[a][x]) * cols[b][y] != BigInt(cols[a][y]) * cols[b][x]) collinear = false;
    cls.is_parikh_collinear = collinear;

    if (f.is_endomorphism())
        for (std::size_t a = 0; a < f.source().size(); ++a) {
            const auto& img = f.image(static_cast<Letter>(a));
            if (img.size() >= 2 && img[0] == a) {
                cls.is_prolongable_on = f.source().symbols()[a];
                break;
            }
        }
    return cls;
}

namespace {

// Sum over letter tuples t of length l of binom(u, t) * prod_i binom(f(t_i), block_i).
BigInt tuple_sum(const Morphism& f, const BinomialSignature& sig, const std::vector<FiniteWord>& blocks) {
    const std::size_t a = f.source().size();
    const std::size_t l = blocks.size();
    // per-letter, per-block coefficient table
    std::vector<std::vector<BigInt>> coef(l, std::vector<BigInt>(a));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t x = 0; x < a; ++x) coef[i][x] = binomial_coefficient(f.image(static_cast<Letter>(x)), blocks[i]);
    BigInt total = 0;
    std::vector<Letter> tuple(l, 0);
    while (true) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < l && prod != 0; ++i) prod *= coef[i][tuple[i]];
        if (prod != 0) total += prod * sig.count(std::span<const Letter>(tuple));
        std::size_t i = l;
        while (i > 0 && tuple[i - 1] + 1u == a) tuple[--i] = 0;
        if (i == 0) break;
        ++tuple[i - 1];
    }
    return total;
}

} // namespace

BigInt image_coefficient(const Morphism& f, const BinomialSignature& u_signature, const FiniteWord& e) {
    if (!(u_signature.alphabet() == f.source()))
        throw AlphabetMismatch("image_coefficient: signature alphabet differs from the morphism's source");
    if (!(e.alphabet() == f.target())) throw AlphabetMismatch("image_coefficient: pattern not over the target alphabet");
    if (u_signature.k() < e.size())
        throw PreconditionError("image_coefficient: signature order " + std::to_string(u_signature.k()) +
                                " is smaller than the pattern length " + std::to_string(e.size()));
    if (e.empty()) return 1;
    const std::size_t n = e.size();
    BigInt total = 0;
    // each mask over the n-1 gaps of e picks the cut points of a composition into nonempty blocks
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<FiniteWord> blocks;
        std::size_t start = 0;
        for (std::size_t gap = 0; gap < n - 1; ++gap)
            if (mask >> gap & 1) {
                blocks.push_back(e.substr(start, gap + 1 - start));
                start = gap + 1;
            }
        blocks.push_back(e.substr(start));
        total += tuple_sum(f, u_signature, blocks);
    }
    return total;
}

BigInt g_value(const Morphism& f, const FiniteWord& w, const FiniteWord& e) {
    if (w.size() != e.size()) throw PreconditionError("g_value: |w| must equal |e|");
    if (!(w.alphabet() == f.source())) throw AlphabetMismatch("g_value: w not over the source alphabet");
    if (!(e.alphabet() == f.target())) throw AlphabetMismatch("g_value: e not over the target alphabet");
    BigInt prod = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<Letter> single{e[i]};
        prod *= binomial_coefficient(f.image(w[i]), FiniteWord(f.target(), single));
    }
    return prod;
}

MichelDelta michel_delta(const FiniteWord& u, const FiniteWord& v, unsigned k) {
    if (u.alphabet().size() != 2 || !(u.alphabet() == v.alphabet()))
        throw AlphabetMismatch("michel_delta: both words must be binary");
    if (u.size() != v.size()) throw PreconditionError("michel_delta: |u| must equal |v|");
    if (k == 0) throw PreconditionError("michel_delta: k must be positive");
    const Morphism phik = power(Morphism::thue_morse(), k);
    const FiniteWord iu = apply(phik, u);
    const FiniteWord iv = apply(phik, v);
    const Alphabet& bin = u.alphabet();
    const FiniteWord e1 = FiniteWord(bin, "0") + FiniteWord(bin, "1").power(k);
    const FiniteWord e2 = e1 + FiniteWord(bin, "1");

    MichelDelta d;
    d.first = binomial_coefficient(iu, e1) - binomial_coefficient(iv, e1);
    d.second = binomial_coefficient(iu, e2) - binomial_coefficient(iv, e2);

    // 2^((k-1)(k-2)/2)
    const BigInt scale = BigInt(1) << static_cast<unsigned>((static_cast<long>(k) - 1) * (static_cast<long>(k) - 2) / 2);
    const BigInt zeros_u = u.count(0), zeros_v = v.count(0);
    if (d.first != scale * (zeros_u - zeros_v)) throw IdentityViolation("michel_delta: first identity violated");
    if (equivalent(u, v, 1)) {
        d.second_checked = true;
        const FiniteWord p01(bin, "01");
        const BigInt diff01 = binomial_coefficient(u, p01) - binomial_coefficient(v, p01);
        d.second_as_stated = d.second == scale * diff01;
        const BigInt scale2 = BigInt(1) << static_cast<unsigned>(k * (k - 1) / 2);
        if (d.second != scale2 * diff01)
            throw IdentityViolation("michel_delta: second identity violated");
    }
    return d;
}

} // namespace binowords
