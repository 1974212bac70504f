#include "bel/codebook.hpp"

#include <cmath>
#include <stdexcept>

namespace bel {

std::string kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::Unary: return "unary";
        case CodeKind::Johnson: return "johnson";
        case CodeKind::B1JDJ: return "b1jdj";
        case CodeKind::B2JDJ: return "b2jdj";
        case CodeKind::HEXJ: return "hexj";
        case CodeKind::Hadamard: return "hadamard";
    }
    throw std::logic_error("unreachable code kind");
}

CodeKind kind_from_name(const std::string& name) {
    if (name == "unary") return CodeKind::Unary;
    if (name == "johnson") return CodeKind::Johnson;
    if (name == "b1jdj") return CodeKind::B1JDJ;
    if (name == "b2jdj") return CodeKind::B2JDJ;
    if (name == "hexj") return CodeKind::HEXJ;
    if (name == "hadamard") return CodeKind::Hadamard;
    throw std::invalid_argument("unknown code kind: " + name);
}

namespace {

void require_levels(int levels, int minimum) {
    if (levels < minimum) {
        throw std::invalid_argument("invalid-levels: need at least " +
                                    std::to_string(minimum) + " levels, got " +
                                    std::to_string(levels));
    }
}

// Johnson word over `levels` levels, phased so level 1 has a single one in
// the last position: with M = ceil(levels/2) and N = 2M, bit k of level q
// is 1 iff M - q < k <= N - q.
std::vector<std::uint8_t> johnson_row(int levels, int q) {
    const int m = (levels + 1) / 2;
    std::vector<std::uint8_t> row(m, 0);
    for (int k = 1; k <= m; ++k) {
        if (m - q < k && k <= 2 * m - q) row[k - 1] = 1;
    }
    return row;
}

// Same ring counter, rotated so level 1 is all-zero and ones fill from the
// left. The base+displacement constructions use this phase; it is what makes
// their first codeword all-zero.
std::vector<std::uint8_t> johnson_row_zero_first(int levels, int q) {
    const int m = (levels + 1) / 2;
    std::vector<std::uint8_t> row(m, 0);
    for (int k = 1; k <= m; ++k) {
        if (q - 1 - m < k && k <= q - 1) row[k - 1] = 1;
    }
    return row;
}

}  // namespace

CodeMatrix gen_unary(int levels) {
    require_levels(levels, 2);
    CodeMatrix code;
    code.kind = CodeKind::Unary;
    code.levels = levels;
    code.bits = levels - 1;
    code.rows.assign(levels, std::vector<std::uint8_t>(code.bits, 0));
    for (int q = 1; q <= levels; ++q) {
        for (int k = 1; k < q; ++k) code.rows[q - 1][k - 1] = 1;
    }
    return code;
}

CodeMatrix gen_johnson(int levels) {
    require_levels(levels, 2);
    CodeMatrix code;
    code.kind = CodeKind::Johnson;
    code.levels = levels;
    code.bits = (levels + 1) / 2;
    code.rows.reserve(levels);
    for (int q = 1; q <= levels; ++q) code.rows.push_back(johnson_row(levels, q));
    return code;
}

CodeMatrix gen_base_johnson(int levels, int base, bool reflect) {
    if (base != 2 && base != 4) {
        throw std::invalid_argument("base must be 2 or 4, got " + std::to_string(base));
    }
    require_levels(levels, base);
    const int base_levels = (levels + base - 1) / base;
    CodeMatrix code;
    code.kind = base == 2 ? CodeKind::B1JDJ : CodeKind::B2JDJ;
    code.levels = levels;
    code.rows.reserve(levels);
    for (int q = 1; q <= levels; ++q) {
        const int v = q - 1;
        const int b = v / base;
        int d = v % base;
        if (reflect && b % 2 == 1) d = base - 1 - d;
        auto row = johnson_row_zero_first(base_levels, b + 1);
        auto disp = johnson_row_zero_first(base, d + 1);
        row.insert(row.end(), disp.begin(), disp.end());
        code.rows.push_back(std::move(row));
    }
    code.bits = static_cast<int>(code.rows.front().size());
    return code;
}

CodeMatrix gen_hexj(int levels) {
    require_levels(levels, 2);
    int digits = 1;
    long long span = 16;
    while (span < levels) {
        span *= 16;
        ++digits;
    }
    CodeMatrix code;
    code.kind = CodeKind::HEXJ;
    code.levels = levels;
    code.bits = 8 * digits;
    code.rows.reserve(levels);
    for (int q = 1; q <= levels; ++q) {
        std::vector<std::uint8_t> row;
        row.reserve(code.bits);
        for (int pos = digits - 1; pos >= 0; --pos) {
            const int digit = (q - 1) >> (4 * pos) & 0xF;
            auto part = johnson_row(16, digit + 1);
            row.insert(row.end(), part.begin(), part.end());
        }
        code.rows.push_back(std::move(row));
    }
    return code;
}

CodeMatrix gen_hadamard(int levels) {
    require_levels(levels, 2);
    int m = 1;
    while (m < levels) m *= 2;
    CodeMatrix code;
    code.kind = CodeKind::Hadamard;
    code.levels = levels;
    code.bits = m;
    code.rows.assign(levels, std::vector<std::uint8_t>(m, 0));
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < m; ++j) {
            // Sylvester sign at (i, j) is (-1)^popcount(i & j).
            const int parity = __builtin_popcount(static_cast<unsigned>(i & j)) & 1;
            code.rows[i][j] = parity == 0 ? 1 : 0;
        }
    }
    return code;
}

CodeMatrix make_code(CodeKind kind, int levels) {
    switch (kind) {
        case CodeKind::Unary: return gen_unary(levels);
        case CodeKind::Johnson: return gen_johnson(levels);
        case CodeKind::B1JDJ: return gen_base_johnson(levels, 2);
        case CodeKind::B2JDJ: return gen_base_johnson(levels, 4);
        case CodeKind::HEXJ: return gen_hexj(levels);
        case CodeKind::Hadamard: return gen_hadamard(levels);
    }
    throw std::logic_error("unreachable code kind");
}

int hamming(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

CodeMetrics metrics(const CodeMatrix& code) {
    CodeMetrics out;
    out.transitions_per_classifier.assign(code.bits, 0);
    for (int k = 0; k < code.bits; ++k) {
        for (int q = 0; q + 1 < code.levels; ++q) {
            if (code.rows[q][k] != code.rows[q + 1][k]) ++out.transitions_per_classifier[k];
        }
    }
    out.adjacent_hamming.reserve(code.levels - 1);
    for (int q = 0; q + 1 < code.levels; ++q) {
        out.adjacent_hamming.push_back(hamming(code.rows[q], code.rows[q + 1]));
    }
    out.pairwise_hamming.assign(code.levels, std::vector<int>(code.levels, 0));
    for (int i = 0; i < code.levels; ++i) {
        for (int j = i + 1; j < code.levels; ++j) {
            const int d = hamming(code.rows[i], code.rows[j]);
            out.pairwise_hamming[i][j] = d;
            out.pairwise_hamming[j][i] = d;
        }
    }
    return out;
}

}  // namespace bel
