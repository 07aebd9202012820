#include "iso/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace iso {

namespace {

std::uint64_t parse_set_line(const std::string& line, int n, int lineno) {
    std::uint64_t mask = 0;
    if (line.empty()) return 0;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int e = 0;
        try {
            e = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || pos == 0)
            throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                        ": bad element '" + tok + "'");
        if (e < 1 || e > n)
            throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                        ": element " + std::to_string(e) + " out of range");
        std::uint64_t bit = std::uint64_t(1) << (e - 1);
        if (mask & bit)
            throw std::invalid_argument("family file line " + std::to_string(lineno) +
                                        ": duplicate element " + std::to_string(e));
        mask |= bit;
    }
    return mask;
}

std::string set_line(std::uint64_t mask) {
    std::string s;
    bool first = true;
    for (int e = 1; mask; ++e, mask >>= 1)
        if (mask & 1) {
            if (!first) s.push_back(',');
            s += std::to_string(e);
            first = false;
        }
    return s;
}

}  // namespace

AnyFamily read_family(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw std::invalid_argument("family file: first line must be n=<n>");
    int n = std::stoi(line.substr(2));
    int lineno = 1;
    bool uniform = false;
    int k = 0;
    std::vector<std::uint64_t> masks;
    bool first_body = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (first_body && line.rfind("k=", 0) == 0) {
            uniform = true;
            k = std::stoi(line.substr(2));
            first_body = false;
            continue;
        }
        first_body = false;
        masks.push_back(parse_set_line(line, n, lineno));
    }
    {
        std::vector<std::uint64_t> sorted(masks);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("family file: duplicate set");
    }
    if (uniform) return UniformFamily::from_members(n, k, std::move(masks));
    CubeFamily f(n);
    for (auto m : masks) f.add(std::uint32_t(m));
    return f;
}

AnyFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_family(in);
}

void write_family(std::ostream& out, const CubeFamily& f) {
    out << "n=" << f.n << "\n";
    f.bits.for_each([&](std::uint32_t m) { out << set_line(m) << "\n"; });
}

void write_family(std::ostream& out, const UniformFamily& f) {
    out << "n=" << f.n << "\n";
    out << "k=" << f.k << "\n";
    for (auto m : f.members) out << set_line(m) << "\n";
}

void write_family_file(const std::string& path, const AnyFamily& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    std::visit([&](const auto& fam) { write_family(out, fam); }, f);
}

UniformFamily as_uniform(const AnyFamily& f) {
    if (std::holds_alternative<UniformFamily>(f)) return std::get<UniformFamily>(f);
    return cube_to_uniform(std::get<CubeFamily>(f));
}

CubeFamily as_cube(const AnyFamily& f) {
    if (std::holds_alternative<CubeFamily>(f)) return std::get<CubeFamily>(f);
    return uniform_to_cube(std::get<UniformFamily>(f));
}

}  // namespace iso
