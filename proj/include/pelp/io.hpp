#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "pelp/codes.hpp"

namespace pelp {

// Element text: coefficient tuple "c0:c1:...:c_{m-1}", or a single residue over a prime field.
std::string format_element(const Field& f, FieldElem a);
FieldElem parse_element(const Field& f, const std::string& text);

/*
 * Matrix text format. Header line "p m c0,...,cm rows cols" (modulus low to high),
 * then one line per row with space-separated elements.
 */
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

// A word is stored as a 1-row matrix.
void write_word(std::ostream& os, const Field& f, const Word& w);
Word read_word(std::istream& is, const Field* expect = nullptr);

/*
 * Code file: optional "# key=value" metadata lines, a line "code n=<n> k=<k>", then the
 * RREF generator in matrix format. Metadata records how the code was built so that
 * family-specific decoders can rebuild their structure.
 */
struct CodeFile {
    LinearCode code;
    std::map<std::string, std::string> meta;
};
void write_code(std::ostream& os, const LinearCode& c, const std::map<std::string, std::string>& meta = {});
CodeFile read_code(std::istream& is);

// Pair file: "pair ell=<ell> t=<t>" followed by the code blocks of A and B.
struct PairFile {
    LinearCode a, b;
    unsigned ell = 1;
    std::size_t t = 0;
};
void write_pair(std::ostream& os, const LinearCode& a, const LinearCode& b, unsigned ell, std::size_t t);
PairFile read_pair(std::istream& is);

// Helpers for files on disk; throw std::runtime_error when a file cannot be opened.
CodeFile load_code(const std::string& path);
PairFile load_pair(const std::string& path);
Word load_word(const std::string& path, const Field* expect = nullptr);
void save_text(const std::string& path, const std::string& content);

}  // namespace pelp
