#include "ortho/matrix_io.hpp"

#include <istream>
#include <sstream>

namespace ortho {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_integer(const std::string& s) {
    if (!valid_integer_token(s)) throw ParseError("bad integer token '" + s + "'");
    return Int(s);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Rat parse_rational(const std::string& token) {
    const size_t slash = token.find('/');
    if (slash == std::string::npos) return Rat(parse_integer(token));
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("bad rational token '" + token + "'");
    Int d = parse_integer(den);
    if (sgn(d) <= 0) throw ParseError("denominator must be positive in '" + token + "'");
    Rat r(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& x) {
    return x.get_str();
}

MatrixFile parse_matrix_file(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (tokens_of(line).empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty input");

    const auto header = tokens_of(lines[0]);
    if (header.size() != 2) throw ParseError("header must be 'q n'");
    if (header[0] != "2" && header[0] != "3") throw ParseError("q must be 2 or 3");
    const int q = header[0][0] - '0';
    Int nz = parse_integer(header[1]);
    if (nz < 1 || nz > 4096) throw ParseError("bad dimension n");
    const int n = static_cast<int>(nz.get_si());

    if (static_cast<int>(lines.size()) < 1 + n) throw ParseError("missing basis rows");
    MatrixFile f;
    f.q = q;
    f.n = n;
    f.basis = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        const auto toks = tokens_of(lines[1 + i]);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                             " entries");
        for (int j = 0; j < n; ++j) f.basis.at(i, j) = parse_integer(toks[j]);
    }

    size_t next = 1 + static_cast<size_t>(n);
    if (next < lines.size()) {
        auto toks = tokens_of(lines[next]);
        if (toks.empty() || toks[0] != "target:")
            throw ParseError("unexpected line after basis rows");
        if (static_cast<int>(toks.size()) != n + 1)
            throw ParseError("target must have " + std::to_string(n) + " entries");
        std::vector<Rat> target(n);
        for (int j = 0; j < n; ++j) target[j] = parse_rational(toks[j + 1]);
        f.target = std::move(target);
        ++next;
    }
    if (next != lines.size()) throw ParseError("trailing content after matrix file");
    return f;
}

MatrixFile parse_matrix_file(const std::string& text) {
    std::istringstream iss(text);
    return parse_matrix_file(iss);
}

std::string format_matrix_file(const MatrixFile& f) {
    std::ostringstream out;
    out << f.q << ' ' << f.n << '\n';
    for (int i = 0; i < f.n; ++i) {
        for (int j = 0; j < f.n; ++j) {
            if (j) out << ' ';
            out << f.basis.at(i, j).get_str();
        }
        out << '\n';
    }
    if (f.target) {
        out << "target:";
        for (const Rat& x : *f.target) out << ' ' << format_rational(x);
        out << '\n';
    }
    return out.str();
}

}  // namespace ortho
