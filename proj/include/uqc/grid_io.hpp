#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uqc/gates.hpp"

namespace uqc {

/// Parse failure with a 1-based line/column locus.
class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + what),
          line(line),
          column(column) {}
    size_t line;
    size_t column;
};

namespace detail {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        if (line[i] == '#') break;  // comment to end of line
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline uint32_t parse_index(const Token& tok, size_t line_no) {
    uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError(line_no, tok.column, "expected a non-negative integer, got '" +
                                                  std::string(tok.text) + "'");
    return value;
}

inline bool kind_from_name(std::string_view name, GateKind& out) {
    static constexpr std::pair<std::string_view, GateKind> table[] = {
        {"h", GateKind::H},           {"t", GateKind::T},
        {"tdag", GateKind::Tdag},     {"s", GateKind::S},
        {"sdag", GateKind::Sdag},     {"x", GateKind::X},
        {"z", GateKind::Z},           {"cnot", GateKind::Cnot},
        {"toffoli", GateKind::Toffoli}, {"fanout", GateKind::Fanout},
        {"zfanout", GateKind::ZFanout}, {"gz", GateKind::GeneralizedZ},
    };
    for (auto [n, k] : table)
        if (n == name) {
            out = k;
            return true;
        }
    return false;
}

}  // namespace detail

/// Parses the grid circuit format: one row per qubit, one column per layer.
///
///   qubits <N>
///   layer
///   <kind> <idx> ...
///   ...
///
/// Indices are 0-based; '#' starts a comment.  Layer-disjointness and index
/// ranges are enforced with a line/column locus on failure.
inline Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::vector<uint32_t> used;   // per-qubit stamp for the open layer
    uint32_t stamp = 0;
    bool in_layer = false;

    size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        auto tokens = detail::tokenize_line(line);
        pos = eol + 1;
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        const auto& head = tokens[0];
        if (!have_header) {
            if (head.text != "qubits")
                throw ParseError(line_no, head.column, "expected 'qubits <N>' header");
            if (tokens.size() != 2)
                throw ParseError(line_no, head.column, "'qubits' takes exactly one count");
            c.n_qubits = detail::parse_index(tokens[1], line_no);
            used.assign(c.n_qubits, 0);
            have_header = true;
        } else if (head.text == "layer") {
            if (tokens.size() != 1)
                throw ParseError(line_no, tokens[1].column, "unexpected token after 'layer'");
            c.append_layer();
            in_layer = true;
            ++stamp;
        } else {
            GateKind kind;
            if (!detail::kind_from_name(head.text, kind))
                throw ParseError(line_no, head.column,
                                 "unknown gate kind '" + std::string(head.text) + "'");
            if (!in_layer)
                throw ParseError(line_no, head.column, "gate before the first 'layer'");
            Gate g{kind, {}, nullptr};
            for (size_t i = 1; i < tokens.size(); ++i)
                g.qubits.push_back(detail::parse_index(tokens[i], line_no));
            try {
                check_gate_shape(g);
            } catch (const CircuitError& e) {
                throw ParseError(line_no, head.column, e.what());
            }
            for (size_t i = 1; i < tokens.size(); ++i) {
                uint32_t q = g.qubits[i - 1];
                if (q >= c.n_qubits)
                    throw ParseError(line_no, tokens[i].column,
                                     "qubit " + std::to_string(q) + " out of range (register has " +
                                         std::to_string(c.n_qubits) + ")");
                if (used[q] == stamp)
                    throw ParseError(line_no, tokens[i].column,
                                     "qubit " + std::to_string(q) + " used twice in one layer");
                used[q] = stamp;
            }
            c.layers.back().gates.push_back(std::move(g));
        }
        if (eol == text.size()) break;
    }
    if (!have_header) throw ParseError(1, 1, "empty document: missing 'qubits <N>' header");
    c.family = infer_family(c);
    return c;
}

/// Inverse of parse_circuit; parse(serialize(c)) is structurally equal to c.
/// GadgetRef gates are synthetic and must be expanded before serialization.
inline std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_qubits << "\n";
    for (const auto& layer : c.layers) {
        out << "layer\n";
        for (const Gate& g : layer.gates) {
            if (g.kind == GateKind::GadgetRef)
                throw CircuitError("cannot serialize a synthetic gadget ref");
            out << kind_name(g.kind);
            for (uint32_t q : g.qubits) out << ' ' << q;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace uqc
