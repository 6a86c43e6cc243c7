#include "circumlab/graph6.hpp"

#include <string>
#include <vector>

namespace circumlab {

namespace {
bool printable(char c) { return c >= 63 && c <= 126; }
} // namespace

Graph parse_graph6(std::string_view token) {
    if (token.empty()) fail(errc::malformed_token, "empty token");
    for (char c : token)
        if (!printable(c))
            fail(errc::malformed_token, "byte outside printable range 63..126");
    if (token[0] == 126)
        fail(errc::malformed_token, "extended size encoding (n > 62) not supported");
    const int n = token[0] - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t want = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (token.size() != want)
        fail(errc::malformed_token, "token length " + std::to_string(token.size()) +
                                        ", expected " + std::to_string(want) + " for n = " +
                                        std::to_string(n));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int group = 1 + k / 6;
            const int shift = 5 - k % 6;
            if ((token[static_cast<std::size_t>(group)] - 63) >> shift & 1) {
                adj[static_cast<std::size_t>(i)] |= bit(j);
                adj[static_cast<std::size_t>(j)] |= bit(i);
            }
        }
    // trailing pad bits must be zero
    for (; k < 6 * ((nbits + 5) / 6); ++k) {
        const int group = 1 + k / 6;
        const int shift = 5 - k % 6;
        if ((token[static_cast<std::size_t>(group)] - 63) >> shift & 1)
            fail(errc::malformed_token, "nonzero padding bit");
    }
    return detail::make_graph(n, std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::max_order) fail(errc::too_large, "graph too large for short-form graph6");
    const int nbits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((nbits + 5) / 6), char(63));
    out[0] = static_cast<char>(63 + n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j))
                out[static_cast<std::size_t>(1 + k / 6)] += char(1 << (5 - k % 6));
    return out;
}

} // namespace circumlab
