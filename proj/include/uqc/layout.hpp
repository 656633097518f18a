#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "uqc/gates.hpp"

namespace uqc {

/// Partition of a template register: the data qubits (a contiguous range by
/// convention, starting at 0), the classical encoding qubits, and the
/// workspace ancillas.
struct RegisterLayout {
    uint32_t n_total = 0;
    uint32_t data_begin = 0;
    uint32_t data_count = 0;
    std::vector<uint32_t> encoding;
    std::vector<uint32_t> ancilla;

    void check_partition() const {
        std::vector<uint8_t> seen(n_total, 0);
        auto mark = [&](uint32_t q) {
            if (q >= n_total) throw CircuitError("layout: index out of range");
            if (seen[q]) throw CircuitError("layout: index assigned twice");
            seen[q] = 1;
        };
        for (uint32_t i = 0; i < data_count; ++i) mark(data_begin + i);
        for (uint32_t q : encoding) mark(q);
        for (uint32_t q : ancilla) mark(q);
        for (uint32_t q = 0; q < n_total; ++q)
            if (!seen[q]) throw CircuitError("layout: index " + std::to_string(q) + " unassigned");
    }
};

/// Classical bitstring addressed by slot index; slot i rides encoding qubit
/// layout.encoding[i].
struct Encoding {
    std::vector<uint8_t> bits;

    size_t size() const { return bits.size(); }
    static Encoding zeros(size_t m) {
        Encoding e;
        e.bits.assign(m, 0);
        return e;
    }
};

inline std::string serialize_layout(const RegisterLayout& l) {
    std::ostringstream out;
    out << "qubits " << l.n_total << "\n";
    out << "data " << l.data_begin << " " << l.data_count << "\n";
    auto dump_set = [&](const char* name, const std::vector<uint32_t>& set) {
        for (size_t i = 0; i < set.size(); i += 16) {
            out << name;
            for (size_t j = i; j < std::min(set.size(), i + 16); ++j) out << ' ' << set[j];
            out << "\n";
        }
        if (set.empty()) out << name << "\n";
    };
    dump_set("encoding", l.encoding);
    dump_set("ancilla", l.ancilla);
    return out.str();
}

inline RegisterLayout parse_layout(const std::string& text) {
    RegisterLayout l;
    std::istringstream in(text);
    std::string line;
    bool have_qubits = false, have_data = false;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "qubits") {
            if (!(ls >> l.n_total)) throw CircuitError("layout: bad qubits line");
            have_qubits = true;
        } else if (head == "data") {
            if (!(ls >> l.data_begin >> l.data_count)) throw CircuitError("layout: bad data line");
            have_data = true;
        } else if (head == "encoding" || head == "ancilla") {
            auto& set = head == "encoding" ? l.encoding : l.ancilla;
            uint32_t q;
            while (ls >> q) set.push_back(q);
        } else {
            throw CircuitError("layout: unknown directive '" + head + "' on line " +
                               std::to_string(line_no));
        }
    }
    if (!have_qubits || !have_data) throw CircuitError("layout: missing qubits/data lines");
    l.check_partition();
    return l;
}

inline std::string serialize_encoding(const Encoding& e) {
    std::string out = "slots " + std::to_string(e.size()) + "\n";
    out.reserve(out.size() + e.size() + 1);
    for (uint8_t b : e.bits) out.push_back(b ? '1' : '0');
    out.push_back('\n');
    return out;
}

inline Encoding parse_encoding(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    size_t m = 0;
    if (!(in >> head >> m) || head != "slots")
        throw CircuitError("encoding: expected 'slots <m>' header");
    std::string bits;
    if (!(in >> bits)) {
        if (m == 0) return Encoding::zeros(0);
        throw CircuitError("encoding: missing bitstring");
    }
    if (bits.size() != m) throw CircuitError("encoding: bitstring length does not match header");
    Encoding e;
    e.bits.reserve(m);
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw CircuitError("encoding: bits must be 0/1");
        e.bits.push_back(ch == '1');
    }
    return e;
}

}  // namespace uqc
