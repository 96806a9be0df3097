#pragma once

#include <string>
#include <vector>

#include "depol/algebras.hpp"
#include "depol/homlie.hpp"
#include "depol/super.hpp"

namespace depol {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& what);
};

// Identity file: two lines, "left: a1 .. a6" and "right: b1 .. b6".
Identity parse_identity(const std::string& text);
std::string format_identity(const Identity& id);

// Twelve whitespace-separated rationals; an optional leading "lambda:" token is accepted.
Lambda12 parse_lambda(const std::string& text);
std::string format_lambda(const Lambda12& l);

// Law file: "alpha: a1 a2 a3" and "beta: b1 b2 b3".
DistributiveLaw parse_law(const std::string& text);
std::string format_law(const DistributiveLaw& d);

// Algebra file: "dim n"; optional "deg d1 .. dn"; lines "e i j = c1 .. cn"
// (1-based i, j); missing products are zero.
StructureAlgebra parse_algebra(const std::string& text);
std::string format_algebra(const StructureAlgebra& alg);

// Signed identity file: 12 lines "term <index> coeff <p/q> signs <subset>",
// where <subset> is "-" or a comma-separated subset of {xy,xz,yz}.
SignedIdentity parse_signed_identity(const std::string& text);
std::string format_signed_identity(const SignedIdentity& sid);

bool looks_like_signed_identity(const std::string& text);

// Endomorphism file: n lines of n rationals.
Endomorphism parse_endomorphism(const std::string& text);
std::string format_endomorphism(const Endomorphism& f);

std::string format_vec(const Vec& v);
std::string format_vec6(const Vec6& v);
std::vector<std::string> split_tokens(const std::string& line);

std::string read_file(const std::string& path);

}  // namespace depol
