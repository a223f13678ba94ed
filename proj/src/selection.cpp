#include "switchdim/selection.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace switchdim {

namespace {

long parse_int(const std::string& text, const char* what) {
    long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
    return v;
}

std::vector<long> parse_list(const std::string& text) {
    std::vector<long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_int(item, "list entry"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    // Unbiased draw in [0, bound) by rejecting the top partial block.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

}  // namespace

VertexSet random_subset(std::size_t n, std::uint64_t seed, std::optional<std::size_t> size) {
    std::mt19937_64 rng(seed);
    VertexSet u(n);
    if (!size) {
        for (std::size_t v = 0; v < n; ++v)
            if (rng() >> 63) u.insert(v);
        return u;
    }
    if (*size > n) throw std::invalid_argument("random subset larger than the vertex set");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = 0; i < *size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(rng, n - i));
        std::swap(perm[i], perm[j]);
        u.insert(perm[i]);
    }
    return u;
}

VertexSet parse_switch_spec(const std::string& spec, const Graph& g, std::optional<Family> family, int m) {
    const std::size_t n = g.order();
    if (spec.empty() || spec == "empty") return VertexSet(n);
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto in_range = [&](long v, long hi, const char* what) {
        if (v < 0 || v >= hi) throw std::invalid_argument(std::string(what) + " " + std::to_string(v) + " out of range");
        return static_cast<int>(v);
    };
    if (kind == "clique") {
        if (!family) throw std::invalid_argument("clique:i needs a named family");
        const int i = in_range(parse_int(arg, "clique index"), m, "clique index");
        return *family == Family::johnson ? johnson_clique(m, i) : hamming_rows(m, {i});
    }
    if (kind == "rows" || kind == "cols") {
        if (family != Family::hamming) throw std::invalid_argument(kind + ":I applies to the hamming family");
        std::vector<int> idx;
        for (long v : parse_list(arg)) idx.push_back(in_range(v, m, "index"));
        return kind == "rows" ? hamming_rows(m, idx) : hamming_cols(m, idx);
    }
    if (kind == "verts") {
        VertexSet u(n);
        for (long v : parse_list(arg)) u.insert(static_cast<std::size_t>(in_range(v, static_cast<long>(n), "vertex")));
        return u;
    }
    if (kind == "random") {
        const std::size_t c2 = arg.find(':');
        const std::string seed_text = arg.substr(0, c2);
        std::optional<std::size_t> size;
        if (c2 != std::string::npos) size = static_cast<std::size_t>(parse_int(arg.substr(c2 + 1), "size"));
        const long seed = parse_int(seed_text, "seed");
        if (seed < 0) throw std::invalid_argument("seed must be non-negative");
        return random_subset(n, static_cast<std::uint64_t>(seed), size);
    }
    throw std::invalid_argument("unknown switching spec '" + spec + "'");
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = static_cast<int>(parse_int(text, "m"));
        return {v, v};
    }
    const int lo = static_cast<int>(parse_int(text.substr(0, dots), "range start"));
    const int hi = static_cast<int>(parse_int(text.substr(dots + 2), "range end"));
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

}  // namespace switchdim
