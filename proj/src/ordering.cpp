#include "treespan/ordering.hpp"

#include "treespan/graph.hpp"  // parse_error

#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace treespan {

namespace {

std::vector<int> inverse_of(const std::vector<int>& map, const char* what) {
    const int n = static_cast<int>(map.size());
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = map[i];
        if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": value out of range");
        if (inv[v] != -1) throw std::invalid_argument(std::string(what) + ": not a bijection");
        inv[v] = i;
    }
    return inv;
}

}  // namespace

Ordering Ordering::natural(int n) {
    if (n < 0) throw std::invalid_argument("Ordering: negative size");
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    Ordering l;
    l.rank_ = id;
    l.position_ = std::move(id);
    return l;
}

Ordering Ordering::from_positions(std::vector<int> position) {
    Ordering l;
    l.rank_ = inverse_of(position, "Ordering::from_positions");
    l.position_ = std::move(position);
    return l;
}

Ordering Ordering::from_ranks(std::vector<int> rank) {
    Ordering l;
    l.position_ = inverse_of(rank, "Ordering::from_ranks");
    l.rank_ = std::move(rank);
    return l;
}

Ordering Ordering::random(int n, std::uint64_t seed) {
    Ordering l = natural(n);
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {  // Fisher-Yates, stable across platforms
        const int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(l.position_[i], l.position_[j]);
    }
    for (int i = 0; i < n; ++i) l.rank_[l.position_[i]] = i;
    return l;
}

Ordering parse_ordering(std::string_view text, int n) {
    std::vector<int> position;
    position.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(n, 0);
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::string token;
        while (in >> token) {
            long long v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw parse_error("expected vertex id, got '" + token + "'", line_no);
            if (v < 0 || v >= n)
                throw parse_error("vertex " + std::to_string(v) + " outside [0, " +
                                      std::to_string(n) + ")",
                                  line_no);
            if (seen[v])
                throw parse_error("vertex " + std::to_string(v) + " listed twice", line_no);
            seen[v] = 1;
            position.push_back(static_cast<int>(v));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (static_cast<int>(position.size()) != n)
        throw parse_error("expected " + std::to_string(n) + " vertices, found " +
                              std::to_string(position.size()),
                          line_no);
    return Ordering::from_positions(std::move(position));
}

Ordering load_ordering_file(const std::string& path, int n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open ordering file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ordering(buffer.str(), n);
}

std::string write_ordering(const Ordering& ordering) {
    std::ostringstream out;
    for (int i = 0; i < ordering.size(); ++i) out << ordering.vertex_at(i) << '\n';
    return out.str();
}

}  // namespace treespan
