#include "soc/codefile.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace soc {

namespace {

// Stream tokens with '#'-to-end-of-line comments stripped.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

long parse_long(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos, 10);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("code file: bad ") + what + " '" + tok + "'");
    }
}

}  // namespace

LinearCode read_code_file(std::istream& in) {
    std::vector<std::string> tokens = tokenize(in);
    if (tokens.size() < 3) throw std::runtime_error("code file: missing q n k header");
    long q = parse_long(tokens[0], "q");
    long n = parse_long(tokens[1], "n");
    long k = parse_long(tokens[2], "k");
    if (q < 2 || std::popcount(static_cast<uint64_t>(q)) != 1)
        throw std::runtime_error("code file: q must be a power of two >= 2");
    int m = std::countr_zero(static_cast<uint64_t>(q));
    if (m > 24) throw std::runtime_error("code file: q exceeds 2^24");
    if (n < 1 || k < 0 || k > n)
        throw std::runtime_error("code file: need 1 <= n and 0 <= k <= n");
    size_t need = 3 + static_cast<size_t>(k) * static_cast<size_t>(n);
    if (tokens.size() != need) {
        std::ostringstream msg;
        msg << "code file: expected " << (need - 3) << " symbols, found "
            << (tokens.size() - 3);
        throw std::runtime_error(msg.str());
    }

    Field f(m);
    auto symbol = [&](size_t idx) {
        uint32_t v = element_from_hex(tokens[3 + idx]);
        if (v >= f.q())
            throw std::runtime_error("code file: symbol '" + tokens[3 + idx] +
                                     "' out of range for q=" + std::to_string(q));
        return v;
    };

    if (m == 1) {
        BitMatrix gen(static_cast<int>(k), static_cast<int>(n));
        for (long r = 0; r < k; ++r)
            for (long c = 0; c < n; ++c)
                gen.set(static_cast<int>(r), static_cast<int>(c),
                        symbol(static_cast<size_t>(r * n + c)) != 0);
        if (rref(gen).rank != k) throw std::runtime_error("code file: rows have rank < k");
        return make_binary_code(std::move(gen));
    }
    FqMatrix gen(f, static_cast<int>(k), static_cast<int>(n));
    for (long r = 0; r < k; ++r)
        for (long c = 0; c < n; ++c)
            gen.set(static_cast<int>(r), static_cast<int>(c),
                    symbol(static_cast<size_t>(r * n + c)));
    if (rref(gen).rank != k) throw std::runtime_error("code file: rows have rank < k");
    return make_fq_code(std::move(gen));
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("code file: cannot open '" + path + "'");
    return read_code_file(in);
}

void write_code_file(std::ostream& out, const LinearCode& c) {
    out << c.field.q() << ' ' << c.n << ' ' << c.k << '\n';
    for (int r = 0; r < c.k; ++r) {
        for (int col = 0; col < c.n; ++col) {
            if (col) out << ' ';
            uint32_t v = c.binary() ? (c.bits().get(r, col) ? 1u : 0u)
                                    : c.symbols().get(r, col);
            out << element_to_hex(v);
        }
        out << '\n';
    }
}

std::string code_file_string(const LinearCode& c) {
    std::ostringstream out;
    write_code_file(out, c);
    return out.str();
}

}  // namespace soc
