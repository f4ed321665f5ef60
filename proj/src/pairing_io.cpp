#include "foxcalc/pairing_io.hpp"

#include "foxcalc/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace fox {

namespace {

constexpr std::string_view kMagic = "foxpairing v1";
constexpr std::string_view kMetaPrefix = "# metadata: ";

std::vector<std::string> split_ws(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what, 0, line);
}

}  // namespace

std::string serialize_pairing(const FoxPairing& p) {
    const Alphabet& alpha = *p.ring().alphabet;
    std::string out(kMagic);
    out += "\nalphabet " + std::to_string(alpha.rank());
    for (const auto& n : alpha.names()) out += " " + n;
    out += "\ncoeff " + std::string(coeff_tag(p.ring().coeff)) + "\n";
    for (int i = 0; i < p.rank(); ++i)
        for (int j = 0; j < p.rank(); ++j)
            out += "eta " + alpha.name(i) + " " + alpha.name(j) + " = " + p.entry(i, j).str() + "\n";
    if (!p.metadata().empty()) {
        std::istringstream meta(p.metadata());
        for (std::string line; std::getline(meta, line);) out += std::string(kMetaPrefix) + line + "\n";
    }
    return out;
}

FoxPairing deserialize_pairing(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::istringstream in{std::string(text)};
        for (std::string line; std::getline(in, line);) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }
    if (lines.empty() || lines[0] != kMagic) fail(1, "expected header 'foxpairing v1'");

    if (lines.size() < 2) fail(2, "missing alphabet line");
    const auto alpha_tok = split_ws(lines[1]);
    if (alpha_tok.size() < 2 || alpha_tok[0] != "alphabet") fail(2, "expected 'alphabet <r> <names...>'");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(alpha_tok[1], &used);
        if (used != alpha_tok[1].size()) throw std::invalid_argument("rank");
    } catch (const std::exception&) {
        fail(2, "invalid rank '" + alpha_tok[1] + "'");
    }
    if (rank < 1 || static_cast<std::size_t>(rank) + 2 != alpha_tok.size())
        fail(2, "alphabet rank does not match the number of names");
    AlphabetPtr alphabet;
    try {
        alphabet = Alphabet::named(std::vector<std::string>(alpha_tok.begin() + 2, alpha_tok.end()));
    } catch (const DomainError& e) {
        fail(2, e.what());
    }

    if (lines.size() < 3) fail(3, "missing coeff line");
    const auto coeff_tok = split_ws(lines[2]);
    if (coeff_tok.size() != 2 || coeff_tok[0] != "coeff") fail(3, "expected 'coeff <Q|Z|F2>'");
    CoeffRing coeff{};
    try {
        coeff = parse_coeff_ring(coeff_tok[1]);
    } catch (const DomainError& e) {
        fail(3, e.what());
    }
    const Ring ring{alphabet, coeff};

    const auto r = static_cast<std::size_t>(rank);
    std::vector<std::optional<RingElem>> entries(r * r);
    std::size_t n = 3;
    for (std::size_t k = 0; k < r * r; ++k, ++n) {
        const std::size_t lineno = n + 1;
        if (n >= lines.size()) fail(lineno, "expected " + std::to_string(r * r) + " eta lines");
        const std::string& line = lines[n];
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'eta <name> <name> = <element>'");
        const auto head = split_ws(std::string_view(line).substr(0, eq));
        if (head.size() != 3 || head[0] != "eta") fail(lineno, "expected 'eta <name> <name> = <element>'");
        const std::size_t i = k / r, j = k % r;
        if (head[1] != alphabet->name(static_cast<int>(i)) || head[2] != alphabet->name(static_cast<int>(j)))
            fail(lineno, "expected entry 'eta " + alphabet->name(static_cast<int>(i)) + " " +
                             alphabet->name(static_cast<int>(j)) + "'");
        try {
            entries[k] = parse_ring_elem(std::string_view(line).substr(eq + 1), ring);
        } catch (const ParseError& e) {
            fail(lineno, std::string(e.what()) + " at column " + std::to_string(eq + 2 + e.offset()));
        } catch (const Error& e) {
            fail(lineno, e.what());
        }
    }

    std::string metadata;
    for (; n < lines.size(); ++n) {
        const std::string& line = lines[n];
        if (line.empty() && n + 1 == lines.size()) break;
        if (line.rfind(kMetaPrefix, 0) != 0) fail(n + 1, "unexpected content after eta lines");
        if (!metadata.empty()) metadata += "\n";
        metadata += line.substr(kMetaPrefix.size());
    }

    std::vector<RingElem> values;
    for (auto& e : entries) values.push_back(std::move(*e));
    return FoxPairing(ring, std::move(values), std::move(metadata));
}

FoxPairing read_pairing_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_pairing(buf.str());
}

void write_pairing_file(const std::string& path, const FoxPairing& p) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize_pairing(p);
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace fox
