#include "lowaccess/code_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lowaccess/errors.hpp"

namespace lowaccess {

namespace {

std::string strip(const std::string& line) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

}  // namespace

CoveringCode parse_code(std::istream& in) {
    std::string line;
    unsigned p = 0;
    std::size_t m = 0;
    bool header_seen = false;
    std::vector<FpVector> words;

    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip(line);
        if (body.empty() || body[0] == '#') continue;
        if (!header_seen) {
            std::istringstream hs(body);
            if (!(hs >> p >> m) || p < 2 || m == 0) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header \"p m\"");
            }
            if (p > 9) {
                throw ParseError("digit format supports p <= 9, got p = " + std::to_string(p));
            }
            header_seen = true;
            continue;
        }
        if (body.size() != m) {
            throw ParseError("line " + std::to_string(lineno) + ": codeword has " +
                             std::to_string(body.size()) + " digits, expected " +
                             std::to_string(m));
        }
        try {
            words.push_back(FpVector::parse(p, body));
        } catch (const DimensionError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!header_seen) throw ParseError("missing \"p m\" header line");
    if (words.empty()) throw ParseError("code file lists no codewords");
    try {
        return CoveringCode(p, m, std::move(words));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

CoveringCode parse_code(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_code(in);
}

CoveringCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open code file: " + path);
    return parse_code(in);
}

std::string serialize_code(const CoveringCode& code) {
    std::string out = std::to_string(code.modulus()) + " " + std::to_string(code.length()) + "\n";
    for (const FpVector& w : code.codewords()) {
        out += w.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace lowaccess
