#include <binowords/generators.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace binowords {

std::string to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::fixed_point: return "fixed-point";
    case GeneratorKind::sturmian: return "sturmian";
    case GeneratorKind::champernowne: return "champernowne";
    case GeneratorKind::g_word: return "g-word";
    case GeneratorKind::tau_g_word: return "tau-g-word";
    case GeneratorKind::h_word: return "h-word";
    case GeneratorKind::grillenberger: return "grillenberger";
    case GeneratorKind::image_of: return "image-of";
    case GeneratorKind::suffix_of: return "suffix-of";
    }
    return "unknown";
}

unsigned SturmianSpec::at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty()) throw PreconditionError("sturmian directive needs a nonempty period");
    return period[(i - preperiod.size()) % period.size()];
}

std::string SturmianSpec::str() const {
    auto join = [](const std::vector<unsigned>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return preperiod.empty() ? join(period) : join(preperiod) + ";" + join(period);
}

WordGenerator::WordGenerator(Alphabet alphabet, GeneratorKind kind, std::string id,
                             std::unique_ptr<detail::PrefixSource> source)
    : alphabet_(std::move(alphabet)), kind_(kind), id_(std::move(id)), state_(std::make_shared<State>()) {
    state_->source = std::move(source);
}

void WordGenerator::ensure(std::size_t n) const {
    if (state_->buffer.size() >= n) return;
    state_->source->grow(state_->buffer, std::max(n, state_->buffer.size() * 3 / 2));
}

FiniteWord WordGenerator::prefix(std::size_t n) const { return FiniteWord(alphabet_, prefix_letters(n)); }

std::vector<Letter> WordGenerator::prefix_letters(std::size_t n) const {
    std::lock_guard lock(state_->mutex);
    ensure(n);
    return std::vector<Letter>(state_->buffer.begin(), state_->buffer.begin() + static_cast<std::ptrdiff_t>(n));
}

Letter WordGenerator::at(std::size_t i) const {
    std::lock_guard lock(state_->mutex);
    ensure(i + 1);
    return state_->buffer[i];
}

namespace {

void append(std::vector<Letter>& buf, std::span<const Letter> w) { buf.insert(buf.end(), w.begin(), w.end()); }

class FixedPointSource : public detail::PrefixSource {
public:
    FixedPointSource(Morphism f, Letter a) : f_(std::move(f)), a_(a) {}
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        if (buf.empty()) {
            append(buf, f_.image(a_).letters());
            read_ = 1;
        }
        while (buf.size() < n) {
            if (read_ >= buf.size()) throw PreconditionError("fixed point is a finite word");
            append(buf, f_.image(buf[read_++]).letters());
        }
    }

private:
    Morphism f_;
    Letter a_;
    std::size_t read_ = 0;
};

class SturmianSource : public detail::PrefixSource {
public:
    explicit SturmianSource(SturmianSpec spec) : spec_(std::move(spec)) {}
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        while (cur_.size() < n) {
            std::vector<Letter> next;
            for (unsigned r = 0; r < spec_.at(step_); ++r) append(next, cur_);
            append(next, prev_);
            prev_ = std::move(cur_);
            cur_ = std::move(next);
            ++step_;
        }
        buf = cur_;
    }

private:
    SturmianSpec spec_;
    std::vector<Letter> prev_{1};
    std::vector<Letter> cur_{0};
    std::size_t step_ = 0;
};

class ChampernowneSource : public detail::PrefixSource {
public:
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        while (buf.size() < n) {
            std::uint64_t v = next_++;
            std::vector<Letter> bits;
            do {
                bits.push_back(static_cast<Letter>(v & 1));
                v >>= 1;
            } while (v);
            buf.insert(buf.end(), bits.rbegin(), bits.rend());
        }
    }

private:
    std::uint64_t next_ = 0;
};

// a * prod_j phi^j(0) A^(2^j); letters 0 and 1 keep indices 0 and 1 in the g alphabet
class GProductSource : public detail::PrefixSource {
public:
    GProductSource(Letter a, Letter alpha) : a_(a), alpha_(alpha) {}
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        if (buf.empty()) buf.push_back(a_);
        while (buf.size() < n) {
            append(buf, block_);
            buf.insert(buf.end(), block_.size(), alpha_);
            std::vector<Letter> next;
            next.reserve(2 * block_.size());
            for (Letter c : block_) {
                next.push_back(c);
                next.push_back(static_cast<Letter>(1 - c));
            }
            block_ = std::move(next);
        }
    }

private:
    Letter a_;
    Letter alpha_;
    std::vector<Letter> block_{0};
};

// Element i of D_k is u_{k-1} D_{k-1}[i / |D_{k-1}|] D_{k-1}[i % |D_{k-1}|]; D_0 = {0, 1}.
class GrillenbergerSource : public detail::PrefixSource {
public:
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        std::size_t level = 0;
        while (u_length(level) < n) ++level;
        buf.clear();
        buf.reserve(n);
        for (std::uint64_t i = 0; buf.size() < n; ++i) emit(level, i, buf);
    }

private:
    // u_5 would have more than 10^16 letters
    static constexpr std::size_t max_level = 5;

    // |D_k| and the common length of its elements
    std::uint64_t count(std::size_t k) const {
        std::uint64_t m = 2;
        for (std::size_t i = 0; i < k; ++i) m = m * m;
        return m;
    }
    std::uint64_t element_length(std::size_t k) const {
        return k == 0 ? 1 : u_length(k - 1) + 2 * element_length(k - 1);
    }
    std::uint64_t u_length(std::size_t k) const {
        if (k > max_level) return ~std::uint64_t{0};
        return count(k) * element_length(k);
    }

    const std::vector<Letter>& u(std::size_t k) {
        if (u_.size() <= k) {
            if (k >= max_level) throw PreconditionError("grillenberger word requested beyond its supported length");
            while (u_.size() <= k) {
                const std::size_t level = u_.size();
                std::vector<Letter> w;
                w.reserve(u_length(level));
                for (std::uint64_t i = 0; i < count(level); ++i) emit(level, i, w);
                u_.push_back(std::move(w));
            }
        }
        return u_[k];
    }

    void emit(std::size_t k, std::uint64_t i, std::vector<Letter>& out) {
        if (k == 0) {
            out.push_back(static_cast<Letter>(i));
            return;
        }
        const std::uint64_t m = count(k - 1);
        const auto& prefix = u(k - 1);
        out.insert(out.end(), prefix.begin(), prefix.end());
        emit(k - 1, i / m, out);
        emit(k - 1, i % m, out);
    }

    std::vector<std::vector<Letter>> u_;
};

class ImageSource : public detail::PrefixSource {
public:
    ImageSource(Morphism fk, WordGenerator inner) : fk_(std::move(fk)), inner_(std::move(inner)) {}
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        std::size_t idle = 0;
        while (buf.size() < n) {
            if (read_ >= chunk_.size()) chunk_ = inner_.prefix_letters(std::max<std::size_t>(1024, 2 * chunk_.size()));
            const auto& img = fk_.image(chunk_[read_++]).letters();
            append(buf, img);
            idle = img.empty() ? idle + 1 : 0;
            if (idle > (std::size_t{1} << 26)) throw PreconditionError("morphic image appears to be finite");
        }
    }

private:
    Morphism fk_;
    WordGenerator inner_;
    std::vector<Letter> chunk_;
    std::size_t read_ = 0;
};

class SuffixSource : public detail::PrefixSource {
public:
    SuffixSource(std::size_t offset, WordGenerator inner) : offset_(offset), inner_(std::move(inner)) {}
    void grow(std::vector<Letter>& buf, std::size_t n) override {
        auto all = inner_.prefix_letters(offset_ + std::max(n, 2 * buf.size()));
        buf.assign(all.begin() + static_cast<std::ptrdiff_t>(offset_), all.end());
    }

private:
    std::size_t offset_;
    WordGenerator inner_;
};

Morphism g_morphism() { return Morphism::from_rules({{'a', "a0A"}, {'0', "01"}, {'1', "10"}, {'A', "AA"}}); }

Morphism tau_morphism() {
    const Alphabet src = g_morphism().source();
    const Alphabet bin = Alphabet::binary();
    std::vector<FiniteWord> images(src.size(), FiniteWord(bin));
    images[src.index('0')] = FiniteWord(bin, "0");
    images[src.index('1')] = FiniteWord(bin, "1");
    images[src.index('A')] = FiniteWord(bin, "1");
    return Morphism(src, bin, std::move(images));
}

WordGenerator make_fixed_point(const Morphism& f, char a, GeneratorKind kind, std::string id) {
    const auto la = f.source().find(a);
    if (!la) throw PreconditionError(std::string("fixed_point: letter '") + a + "' not in the source alphabet");
    const auto& img = f.image(*la);
    if (!f.is_endomorphism() || img.size() < 2 || img[0] != *la)
        throw PreconditionError(std::string("fixed_point: morphism is not prolongable on '") + a + "'");
    return WordGenerator(f.source(), kind, std::move(id), std::make_unique<FixedPointSource>(f, *la));
}

} // namespace

WordGenerator fixed_point(const Morphism& f, char a) {
    std::string id = "fixed(";
    for (std::size_t i = 0; i < f.source().size(); ++i)
        id += (i ? "," : "") + std::string(1, f.source().symbols()[i]) + "->" + f.images()[i].str();
    id += ";" + std::string(1, a) + ")";
    return make_fixed_point(f, a, GeneratorKind::fixed_point, std::move(id));
}

WordGenerator sturmian(const SturmianSpec& spec) {
    for (auto d : spec.preperiod)
        if (d == 0) throw PreconditionError("sturmian directive entries must be positive");
    if (spec.period.empty()) throw PreconditionError("sturmian directive needs a nonempty period");
    for (auto d : spec.period)
        if (d == 0) throw PreconditionError("sturmian directive entries must be positive");
    return WordGenerator(Alphabet::binary(), GeneratorKind::sturmian, "sturmian:" + spec.str(),
                         std::make_unique<SturmianSource>(spec));
}

WordGenerator champernowne() {
    return WordGenerator(Alphabet::binary(), GeneratorKind::champernowne, "champ", std::make_unique<ChampernowneSource>());
}

WordGenerator g_word() { return make_fixed_point(g_morphism(), 'a', GeneratorKind::g_word, "g"); }

WordGenerator g_word_product_form() {
    const Alphabet alphabet = g_morphism().source();
    return WordGenerator(alphabet, GeneratorKind::g_word, "g-product",
                         std::make_unique<GProductSource>(alphabet.index('a'), alphabet.index('A')));
}

WordGenerator tau_g_word() {
    return WordGenerator(Alphabet::binary(), GeneratorKind::tau_g_word, "tau-g",
                         std::make_unique<ImageSource>(tau_morphism(), g_word()));
}

WordGenerator h_word() { return make_fixed_point(builtin_morphism("h"), '0', GeneratorKind::h_word, "h"); }

WordGenerator grillenberger_word() {
    return WordGenerator(Alphabet::binary(), GeneratorKind::grillenberger, "grill",
                         std::make_unique<GrillenbergerSource>());
}

WordGenerator image_of(const Morphism& f, unsigned k, const WordGenerator& inner) {
    if (!(f.source() == inner.alphabet())) throw AlphabetMismatch("image_of: morphism source differs from the word's alphabet");
    Morphism fk = k == 1 ? f : power(f, k);
    std::string name = f == Morphism::thue_morse() ? "tm" : "f";
    return WordGenerator(f.target(), GeneratorKind::image_of,
                         "image(" + name + "^" + std::to_string(k) + "," + inner.id() + ")",
                         std::make_unique<ImageSource>(std::move(fk), inner));
}

WordGenerator suffix_of(std::size_t offset, const WordGenerator& inner) {
    return WordGenerator(inner.alphabet(), GeneratorKind::suffix_of,
                         "suffix(" + std::to_string(offset) + "," + inner.id() + ")",
                         std::make_unique<SuffixSource>(offset, inner));
}

WordGenerator thue_morse_word() { return make_fixed_point(Morphism::thue_morse(), '0', GeneratorKind::fixed_point, "tm"); }

WordGenerator fibonacci_word() { return make_fixed_point(builtin_morphism("fib"), '0', GeneratorKind::fixed_point, "fib"); }

WordGenerator period_doubling_word() {
    return make_fixed_point(builtin_morphism("pd"), '0', GeneratorKind::fixed_point, "pd");
}

Morphism builtin_morphism(std::string_view name) {
    if (name == "tm") return Morphism::thue_morse();
    if (name == "fib") return Morphism::from_rules({{'0', "01"}, {'1', "0"}});
    if (name == "pd") return Morphism::from_rules({{'0', "01"}, {'1', "00"}});
    if (name == "h") return Morphism::from_rules({{'0', "01"}, {'1', "12"}, {'2', "2"}});
    if (name == "g") return g_morphism();
    if (name == "tau") return tau_morphism();
    throw ParseError("unknown morphism name \"" + std::string(name) + "\"");
}

namespace {

std::string strip(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(std::string_view token, const char* what) {
    std::uint64_t v = 0;
    auto t = strip(token);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError(std::string("expected ") + what + ", got \"" + std::string(token) + "\"");
    return v;
}

std::vector<unsigned> parse_list(std::string_view text) {
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(static_cast<unsigned>(parse_uint(tok, "a directive entry")));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// Splits "a, b" at the first comma outside parentheses.
std::pair<std::string, std::string> split_args(std::string_view body, std::string_view whole) {
    int depth = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '(') ++depth;
        else if (body[i] == ')') --depth;
        else if (body[i] == ',' && depth == 0) return {strip(body.substr(0, i)), strip(body.substr(i + 1))};
    }
    throw ParseError("expected two arguments in \"" + std::string(whole) + "\"");
}

Morphism load_morphism(const std::string& ref) {
    try {
        return builtin_morphism(ref);
    } catch (const ParseError&) {
    }
    std::ifstream in(ref);
    if (!in) throw ParseError("unknown morphism \"" + ref + "\" (neither a builtin name nor a readable file)");
    std::stringstream ss;
    ss << in.rdbuf();
    return Morphism::parse(ss.str());
}

} // namespace

namespace {

WordGenerator parse_spec(std::string_view spec_text) {
    const std::string spec = strip(spec_text);
    if (spec == "tm") return thue_morse_word();
    if (spec == "fib") return fibonacci_word();
    if (spec == "pd") return period_doubling_word();
    if (spec == "h") return h_word();
    if (spec == "g") return g_word();
    if (spec == "tau-g") return tau_g_word();
    if (spec == "grill") return grillenberger_word();
    if (spec == "champ") return champernowne();
    if (spec.rfind("sturmian:", 0) == 0) {
        std::string_view rest = std::string_view(spec).substr(9);
        SturmianSpec s;
        auto semi = rest.find(';');
        if (semi != std::string_view::npos) {
            s.preperiod = parse_list(rest.substr(0, semi));
            s.period = parse_list(rest.substr(semi + 1));
        } else {
            s.period = parse_list(rest);
        }
        return sturmian(s);
    }
    auto open = spec.find('(');
    if (open != std::string::npos && spec.back() == ')') {
        const std::string head = strip(std::string_view(spec).substr(0, open));
        const std::string_view body = std::string_view(spec).substr(open + 1, spec.size() - open - 2);
        auto [first, second] = split_args(body, spec);
        if (head == "image") {
            auto caret = first.rfind('^');
            unsigned k = 1;
            std::string ref = first;
            if (caret != std::string::npos) {
                k = static_cast<unsigned>(parse_uint(std::string_view(first).substr(caret + 1), "an exponent"));
                ref = strip(std::string_view(first).substr(0, caret));
            }
            return image_of(load_morphism(ref), k, parse_generator(second));
        }
        if (head == "suffix") return suffix_of(parse_uint(first, "an offset"), parse_generator(second));
        if (head == "fixed") {
            if (second.size() != 1) throw ParseError("fixed(...) needs a single starting letter, got \"" + second + "\"");
            return fixed_point(load_morphism(first), second[0]);
        }
        throw ParseError("unknown generator \"" + head + "\"");
    }
    throw ParseError("unknown generator \"" + spec + "\"");
}

} // namespace

WordGenerator parse_generator(std::string_view spec) {
    try {
        return parse_spec(spec);
    } catch (const PreconditionError& e) {
        throw ParseError("invalid generator \"" + strip(spec) + "\": " + e.what());
    }
}

} // namespace binowords
