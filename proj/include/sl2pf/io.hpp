#pragma once

#include <iosfwd>
#include <string>

#include "sl2pf/certificate.hpp"

namespace sl2pf {

// Versioned JSON formats ("v": 1).
//
// matrix:      {"v":1, "field":{"p":3,"n":1}, "matrix":[["a","b"],["c","d"]]}
// certificate: {"v":1, "field":{...}, "slots":[{"family":"G9","params":[...]},
//              {"family":"LambdaT","quintuple":[...]}, ...]}
//
// Extension fields carry "modulus": a polynomial string over F_p; polynomial
// coefficients then use the bracketed form, e.g. "[0,1]*T^2+[2,0]".

std::string field_to_json(const Field& f);
FieldPtr field_from_json_text(const std::string& text);

std::string matrix_to_json(const Mat2& m);
Mat2 matrix_from_json_text(const std::string& text);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json_text(const std::string& text);

std::string read_stream(std::istream& in);
std::string read_input(const std::string& path);  // "-" or empty = stdin
void write_output(const std::string& path, const std::string& data);  // "-" or empty = stdout

}  // namespace sl2pf
