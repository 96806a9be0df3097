#include "depol/io.hpp"

#include <fstream>
#include <sstream>

namespace depol {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line(line),
      column(column) {}

namespace {
struct Token {
  std::string text;
  int line;
  int column;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
      if (raw[i] == '#') break;  // comment to end of line
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      toks.push_back({raw.substr(start, i - start), lineno, static_cast<int>(start + 1)});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

Rational parse_rational_token(const Token& t) {
  try {
    return Rational::parse(t.text);
  } catch (const std::exception& e) {
    throw ParseError(t.line, t.column, e.what());
  }
}

// "key: v1 v2 ..." line with an exact count of rational values.
std::vector<Rational> keyed_values(const std::vector<Token>& line, const std::string& key, int count) {
  if (line.empty() || line[0].text != key + ":")
    throw ParseError(line.empty() ? 0 : line[0].line, line.empty() ? 0 : line[0].column,
                     "expected '" + key + ":'");
  if (static_cast<int>(line.size()) != count + 1)
    throw ParseError(line[0].line, line[0].column,
                     "expected " + std::to_string(count) + " values after '" + key + ":'");
  std::vector<Rational> vals;
  for (int i = 1; i <= count; ++i) vals.push_back(parse_rational_token(line[i]));
  return vals;
}
}  // namespace

Identity parse_identity(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.size() != 2) throw ParseError(1, 1, "identity file needs 'left:' and 'right:' lines");
  Identity id;
  auto l = keyed_values(lines[0], "left", 6);
  auto r = keyed_values(lines[1], "right", 6);
  for (int i = 0; i < 6; ++i) {
    id.left(i) = l[i];
    id.right(i) = r[i];
  }
  return id;
}

std::string format_identity(const Identity& id) {
  std::ostringstream os;
  os << "left:";
  for (int i = 0; i < 6; ++i) os << " " << id.left(i).str();
  os << "\nright:";
  for (int i = 0; i < 6; ++i) os << " " << id.right(i).str();
  os << "\n";
  return os.str();
}

Lambda12 parse_lambda(const std::string& text) {
  auto lines = tokenize_lines(text);
  std::vector<Token> toks;
  for (auto& l : lines) toks.insert(toks.end(), l.begin(), l.end());
  if (!toks.empty() && toks[0].text == "lambda:") toks.erase(toks.begin());
  if (toks.size() != 12)
    throw ParseError(toks.empty() ? 1 : toks[0].line, 1, "expected 12 rational values");
  Lambda12 l;
  for (int i = 0; i < 12; ++i) l(i) = parse_rational_token(toks[i]);
  return l;
}

std::string format_lambda(const Lambda12& l) {
  std::ostringstream os;
  for (int i = 0; i < 12; ++i) os << (i ? " " : "") << l(i).str();
  return os.str();
}

DistributiveLaw parse_law(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.size() != 2) throw ParseError(1, 1, "law file needs 'alpha:' and 'beta:' lines");
  auto a = keyed_values(lines[0], "alpha", 3);
  auto b = keyed_values(lines[1], "beta", 3);
  DistributiveLaw d;
  for (int i = 0; i < 3; ++i) {
    d.alpha[i] = a[i];
    d.beta[i] = b[i];
  }
  return d;
}

std::string format_law(const DistributiveLaw& d) {
  std::ostringstream os;
  os << "alpha:";
  for (int i = 0; i < 3; ++i) os << " " << d.alpha[i].str();
  os << "\nbeta:";
  for (int i = 0; i < 3; ++i) os << " " << d.beta[i].str();
  os << "\n";
  return os.str();
}

StructureAlgebra parse_algebra(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty algebra file");
  const auto& head = lines[0];
  if (head.size() != 2 || head[0].text != "dim")
    throw ParseError(head[0].line, head[0].column, "expected 'dim n'");
  int dim = 0;
  try {
    dim = std::stoi(head[1].text);
  } catch (...) {
    throw ParseError(head[1].line, head[1].column, "bad dimension");
  }
  if (dim < 1 || dim > 16) throw ParseError(head[1].line, head[1].column, "dimension out of range");

  StructureAlgebra alg = StructureAlgebra::zero(dim);
  size_t next = 1;
  if (lines.size() > 1 && lines[1][0].text == "deg") {
    const auto& dl = lines[1];
    if (static_cast<int>(dl.size()) != dim + 1)
      throw ParseError(dl[0].line, dl[0].column, "deg line needs one value per basis vector");
    alg.grading.resize(dim);
    for (int i = 0; i < dim; ++i) {
      if (dl[i + 1].text != "0" && dl[i + 1].text != "1")
        throw ParseError(dl[i + 1].line, dl[i + 1].column, "degrees must be 0 or 1");
      alg.grading[i] = dl[i + 1].text == "1" ? 1 : 0;
    }
    next = 2;
  }

  for (; next < lines.size(); ++next) {
    const auto& pl = lines[next];
    if (static_cast<int>(pl.size()) != 4 + dim || pl[0].text != "e" || pl[3].text != "=")
      throw ParseError(pl[0].line, pl[0].column, "expected 'e i j = c1 .. cn'");
    int i = 0, j = 0;
    try {
      i = std::stoi(pl[1].text);
      j = std::stoi(pl[2].text);
    } catch (...) {
      throw ParseError(pl[1].line, pl[1].column, "bad basis index");
    }
    if (i < 1 || i > dim || j < 1 || j > dim)
      throw ParseError(pl[1].line, pl[1].column, "basis index out of range");
    for (int k = 0; k < dim; ++k) alg.at(i - 1, j - 1, k) = parse_rational_token(pl[4 + k]);
  }
  if (!alg.grading_consistent())
    throw ParseError(1, 1, "structure constants violate the grading");
  return alg;
}

std::string format_algebra(const StructureAlgebra& alg) {
  std::ostringstream os;
  os << "dim " << alg.dim << "\n";
  if (alg.graded()) {
    os << "deg";
    for (int d : alg.grading) os << " " << d;
    os << "\n";
  }
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      bool nonzero = false;
      for (int k = 0; k < alg.dim; ++k)
        if (!alg.at(i, j, k).is_zero()) nonzero = true;
      if (!nonzero) continue;
      os << "e " << (i + 1) << " " << (j + 1) << " =";
      for (int k = 0; k < alg.dim; ++k) os << " " << alg.at(i, j, k).str();
      os << "\n";
    }
  }
  return os.str();
}

namespace {
unsigned parse_sign_set(const Token& t) {
  if (t.text == "-") return 0;
  unsigned mask = 0;
  size_t i = 0;
  while (i < t.text.size()) {
    size_t j = t.text.find(',', i);
    std::string part = t.text.substr(i, j == std::string::npos ? std::string::npos : j - i);
    if (part == "xy") mask |= kSignXY;
    else if (part == "xz") mask |= kSignXZ;
    else if (part == "yz") mask |= kSignYZ;
    else throw ParseError(t.line, t.column, "bad sign pair '" + part + "'");
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return mask;
}

std::string format_sign_set(unsigned mask) {
  if (mask == 0) return "-";
  std::string out;
  if (mask & kSignXY) out += "xy";
  if (mask & kSignXZ) out += out.empty() ? "xz" : ",xz";
  if (mask & kSignYZ) out += out.empty() ? "yz" : ",yz";
  return out;
}
}  // namespace

SignedIdentity parse_signed_identity(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.size() != 12) throw ParseError(1, 1, "signed identity file needs 12 term lines");
  SignedIdentity sid;
  std::array<bool, 12> seen{};
  for (const auto& line : lines) {
    if (line.size() != 6 || line[0].text != "term" || line[2].text != "coeff" ||
        line[4].text != "signs")
      throw ParseError(line[0].line, line[0].column,
                       "expected 'term <index> coeff <p/q> signs <subset>'");
    int idx = 0;
    try {
      idx = std::stoi(line[1].text);
    } catch (...) {
      throw ParseError(line[1].line, line[1].column, "bad term index");
    }
    if (idx < 1 || idx > 12) throw ParseError(line[1].line, line[1].column, "term index out of range");
    if (seen[idx - 1]) throw ParseError(line[1].line, line[1].column, "duplicate term index");
    seen[idx - 1] = true;
    sid.terms[idx - 1] = {parse_rational_token(line[3]), parse_sign_set(line[5])};
  }
  return sid;
}

std::string format_signed_identity(const SignedIdentity& sid) {
  std::ostringstream os;
  for (int i = 0; i < 12; ++i) {
    os << "term " << (i + 1) << " coeff " << sid.terms[i].coeff.str() << " signs "
       << format_sign_set(sid.terms[i].signs) << "\n";
  }
  return os.str();
}

bool looks_like_signed_identity(const std::string& text) {
  auto lines = tokenize_lines(text);
  return !lines.empty() && !lines[0].empty() && lines[0][0].text == "term";
}

Endomorphism parse_endomorphism(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty endomorphism file");
  const int n = static_cast<int>(lines.size());
  Endomorphism f(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(lines[r].size()) != n)
      throw ParseError(lines[r][0].line, lines[r][0].column,
                       "expected " + std::to_string(n) + " values per row");
    for (int c = 0; c < n; ++c) f(r, c) = parse_rational_token(lines[r][c]);
  }
  return f;
}

std::string format_endomorphism(const Endomorphism& f) {
  std::ostringstream os;
  for (int r = 0; r < f.rows(); ++r) {
    for (int c = 0; c < f.cols(); ++c) os << (c ? " " : "") << f(r, c).str();
    os << "\n";
  }
  return os.str();
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  for (int i = 0; i < v.rows(); ++i) os << (i ? " " : "") << v(i).str();
  return os.str();
}

std::string format_vec6(const Vec6& v) {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i) os << (i ? " " : "") << v(i).str();
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace depol
