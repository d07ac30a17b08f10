#include "pelp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pelp {

namespace {

std::invalid_argument parse_error(const std::string& what) { return std::invalid_argument("parse: " + what); }

std::uint64_t to_u64(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw parse_error("trailing characters in " + what + " '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw parse_error("expected a number for " + what + ", got '" + s + "'");
    }
}

bool next_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
    }
    return false;
}

// "key=value" tokens after a leading keyword.
std::map<std::string, std::string> keyed_tokens(const std::string& line, const std::string& keyword) {
    std::istringstream ss(line);
    std::string word;
    ss >> word;
    if (word != keyword) throw parse_error("expected '" + keyword + "' line, got '" + line + "'");
    std::map<std::string, std::string> out;
    while (ss >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value, got '" + word + "'");
        out[word.substr(0, eq)] = word.substr(eq + 1);
    }
    return out;
}

std::string required(const std::map<std::string, std::string>& kv, const std::string& key, const std::string& ctx) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw parse_error(ctx + " line lacks " + key + "=");
    return it->second;
}

}  // namespace

std::string format_element(const Field& f, FieldElem a) {
    if (f.degree() == 1) return std::to_string(a.value);
    std::string s;
    const auto c = f.coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
    return s;
}

FieldElem parse_element(const Field& f, const std::string& text) {
    std::vector<std::uint64_t> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) c.push_back(to_u64(tok, "element coefficient"));
    if (f.degree() == 1 && c.size() == 1) {
        if (c[0] >= f.order()) throw parse_error("residue " + text + " out of range");
        return FieldElem{c[0]};
    }
    if (c.size() != f.degree()) throw parse_error("element '" + text + "' needs " + std::to_string(f.degree()) + " coefficients");
    return f.from_coeffs(c);
}

void write_matrix(std::ostream& os, const Matrix& m) {
    const Field& f = m.field();
    os << f.characteristic() << ' ' << f.degree() << ' ';
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
    os << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << format_element(f, m.at(r, c));
        os << '\n';
    }
}

Matrix read_matrix(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) throw parse_error("missing matrix header");
    std::istringstream hs(line);
    std::string p, m, mod, rows, cols, extra;
    if (!(hs >> p >> m >> mod >> rows >> cols) || (hs >> extra)) {
        throw parse_error("matrix header must be 'p m c0,...,cm rows cols', got '" + line + "'");
    }
    const Field f = Field::parse_descriptor("GF(" + p + "^" + m + ";" + mod + ")");
    const std::size_t nr = to_u64(rows, "row count"), nc = to_u64(cols, "column count");
    Matrix out(f, 0, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        if (!next_content_line(is, line)) throw parse_error("matrix ends after " + std::to_string(r) + " rows");
        std::istringstream rs(line);
        Word row;
        std::string tok;
        while (rs >> tok) row.push_back(parse_element(f, tok));
        if (row.size() != nc) throw parse_error("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries");
        out.append_row(row);
    }
    return out;
}

void write_word(std::ostream& os, const Field& f, const Word& w) { write_matrix(os, Matrix::from_rows(f, w.size(), {w})); }

Word read_word(std::istream& is, const Field* expect) {
    const Matrix m = read_matrix(is);
    if (m.rows() != 1) throw parse_error("a word file holds exactly one row");
    if (expect && !(m.field() == *expect)) throw parse_error("word is over " + m.field().descriptor());
    return m.row_word(0);
}

void write_code(std::ostream& os, const LinearCode& c, const std::map<std::string, std::string>& meta) {
    for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
    os << "code n=" << c.length() << " k=" << c.dim() << '\n';
    write_matrix(os, c.generator());
}

CodeFile read_code(std::istream& is) {
    std::map<std::string, std::string> meta;
    std::string line;
    for (;;) {
        if (!next_content_line(is, line)) throw parse_error("missing 'code' line");
        const auto first = line.find_first_not_of(" \t");
        if (line[first] != '#') break;
        const std::string body = line.substr(first + 1);
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;  // plain comment
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
    }
    const auto kv = keyed_tokens(line, "code");
    const std::size_t n = to_u64(required(kv, "n", "code"), "n"), k = to_u64(required(kv, "k", "code"), "k");
    const Matrix g = read_matrix(is);
    if (g.cols() != n) throw parse_error("code n=" + std::to_string(n) + " but matrix has " + std::to_string(g.cols()) + " columns");
    CodeFile out{LinearCode::from_generator(g), std::move(meta)};
    if (out.code.dim() != k) throw parse_error("code k=" + std::to_string(k) + " but generator has rank " + std::to_string(out.code.dim()));
    return out;
}

void write_pair(std::ostream& os, const LinearCode& a, const LinearCode& b, unsigned ell, std::size_t t) {
    os << "pair ell=" << ell << " t=" << t << '\n';
    write_code(os, a);
    write_code(os, b);
}

PairFile read_pair(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) throw parse_error("missing 'pair' line");
    const auto kv = keyed_tokens(line, "pair");
    const unsigned ell = static_cast<unsigned>(to_u64(required(kv, "ell", "pair"), "ell"));
    const std::size_t t = to_u64(required(kv, "t", "pair"), "t");
    CodeFile a = read_code(is);
    CodeFile b = read_code(is);
    return PairFile{std::move(a.code), std::move(b.code), ell, t};
}

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}
}  // namespace

CodeFile load_code(const std::string& path) {
    auto in = open_in(path);
    return read_code(in);
}

PairFile load_pair(const std::string& path) {
    auto in = open_in(path);
    return read_pair(in);
}

Word load_word(const std::string& path, const Field* expect) {
    auto in = open_in(path);
    return read_word(in, expect);
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace pelp
