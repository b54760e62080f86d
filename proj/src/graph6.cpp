#include "geb/graph6.hpp"

#include "geb/error.hpp"

namespace geb {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim_right(std::string_view s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                          s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

Graph decode(std::string_view body)
{
    if (body.empty())
        throw Error(Errc::BadSizeByte, "missing size byte");
    const int size_byte = static_cast<unsigned char>(body[0]) - kBias;
    if (size_byte == 63)
        throw Error(Errc::BadSizeByte, "multi-byte size field (n >= 63) is not supported");
    if (size_byte < 0 || size_byte > 62)
        throw Error(Errc::BadSizeByte,
                    "size byte " + std::to_string(static_cast<unsigned char>(body[0])) +
                        " out of range");
    if (size_byte == 0)
        throw Error(Errc::BadSizeByte, "graph with zero vertices");

    const auto n = static_cast<std::size_t>(size_byte);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t need = (pairs + 5) / 6;
    const std::string_view payload = body.substr(1);
    if (payload.size() < need)
        throw Error(Errc::TruncatedBits, "expected " + std::to_string(need) +
                                             " payload bytes, found " +
                                             std::to_string(payload.size()));
    if (payload.size() > need)
        throw Error(Errc::TruncatedBits, "expected " + std::to_string(need) +
                                             " payload bytes, found " +
                                             std::to_string(payload.size()) + " (trailing data)");

    Graph::EdgeBits bits;
    for (std::size_t b = 0; b < need; ++b) {
        const int v = static_cast<unsigned char>(payload[b]) - kBias;
        if (v < 0 || v > 63)
            throw Error(Errc::ByteOutOfRange, "payload byte " + std::to_string(b + 1) +
                                                  " out of range");
        for (int k = 0; k < 6; ++k) {
            const std::size_t idx = b * 6 + static_cast<std::size_t>(k);
            if (!((v >> (5 - k)) & 1))
                continue;
            if (idx >= pairs)
                throw Error(Errc::TruncatedBits, "nonzero padding bit");
            bits.set(idx);
        }
    }
    return Graph(n, bits);
}

}  // namespace

Graph parse_graph6(std::string_view line)
{
    line = trim_right(line);
    if (line.starts_with(kHeader))
        line.remove_prefix(kHeader.size());
    else if (line.starts_with(">>"))
        throw Error(Errc::HeaderMismatch, "unrecognised header (expected >>graph6<<)");
    return decode(line);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kMaxGraph6Order)
        throw Error(Errc::NTooLargeForSizeByte,
                    "graph6 short form holds at most 62 vertices, got " + std::to_string(n));
    const std::size_t pairs = n * (n - 1) / 2;
    std::string out;
    out.reserve(1 + (pairs + 5) / 6);
    out.push_back(static_cast<char>(kBias + static_cast<int>(n)));
    const auto& bits = g.edge_bits();
    for (std::size_t b = 0; b * 6 < pairs; ++b) {
        int v = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            const std::size_t idx = b * 6 + k;
            v = (v << 1) | ((idx < pairs && bits[idx]) ? 1 : 0);
        }
        out.push_back(static_cast<char>(kBias + v));
    }
    return out;
}

std::optional<CorpusEntry> CorpusStream::next()
{
    std::string raw;
    while (std::getline(*in_, raw)) {
        ++line_;
        std::string_view text = trim_right(raw);
        if (text.empty())
            continue;
        if (line_ > 1 && text.starts_with(">>"))
            throw LineError(Errc::HeaderMismatch, line_, "header allowed on the first line only");
        try {
            Graph g = parse_graph6(text);
            ++count_;
            return CorpusEntry{line_, std::move(g)};
        } catch (const LineError&) {
            throw;
        } catch (const Error& e) {
            throw LineError(e.code(), line_, e.what());
        }
    }
    return std::nullopt;
}

}  // namespace geb
