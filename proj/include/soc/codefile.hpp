#pragma once

#include <iosfwd>
#include <string>

#include "soc/codes.hpp"

namespace soc {

// Code file format: optional '#' comment lines anywhere before or between
// tokens, a header line "q n k" (decimal), then k rows of n
// whitespace-separated lowercase-hex symbols in [0, q). q must be a power
// of two; the field is GF(q) with the default modulus for its degree.
// Parsing verifies that the rows have rank k.
LinearCode read_code_file(std::istream& in);
LinearCode read_code_file(const std::string& path);

void write_code_file(std::ostream& out, const LinearCode& c);
std::string code_file_string(const LinearCode& c);

}  // namespace soc
