#include "cychom/algebra_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cychom/errors.hpp"

namespace cychom {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Scalar parse_number(const std::string& token, int line) {
  try {
    return Scalar::parse(token);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + token + "'", line);
  }
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
}

// "2*x - y + 1/2*z", "0", "-x"
std::vector<Scalar> parse_combination(const std::string& text, const std::map<std::string, std::size_t>& index,
                                      std::size_t dim, int line) {
  std::vector<Scalar> out(dim);
  std::string s;
  for (char c : text) {
    if (c == '+' || c == '-') {
      s += ' ';
      s += c;
      s += ' ';
    } else {
      s += c;
    }
  }
  auto tokens = words(s);
  if (tokens.empty()) throw ParseError("empty linear combination", line);
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  int sign = 1;
  bool expect_term = true;
  for (const auto& tok : tokens) {
    if (tok == "+" || tok == "-") {
      if (tok == "-") sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw ParseError("missing '+' or '-' before '" + tok + "'", line);
    Scalar coeff(1);
    std::string name = tok;
    if (const auto star = tok.find('*'); star != std::string::npos) {
      coeff = parse_number(tok.substr(0, star), line);
      name = tok.substr(star + 1);
    }
    auto it = index.find(name);
    if (it == index.end()) {
      if (looks_numeric(name)) throw ParseError("bare constant '" + name + "'; write it as a multiple of the unit basis element", line);
      throw ParseError("unknown basis element '" + name + "'", line);
    }
    out[it->second] = out[it->second] + (sign < 0 ? -coeff : coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw ParseError("linear combination ends with a sign", line);
  return out;
}

}  // namespace

AlgebraPresentation parse_algebra(const std::string& text, std::optional<RingSpec> ring_override) {
  std::optional<RingSpec> ring;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  std::optional<std::pair<std::vector<Scalar>, int>> unit;
  struct Mul {
    std::string left, right, rhs;
    int line;
  };
  std::vector<Mul> muls;

  std::istringstream in(text);
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'field: value'", line_no);
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "ring") {
      try {
        ring = RingSpec::parse(value);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
      }
    } else if (key == "dim") {
      const auto w = words(value);
      if (w.size() != 1 || !std::all_of(w[0].begin(), w[0].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          w[0].size() > 6 || std::stoul(w[0]) == 0) {
        throw ParseError("dim must be a positive integer", line_no);
      }
      dim = std::stoul(w[0]);
    } else if (key == "basis") {
      basis = words(value);
      std::set<std::string> seen(basis.begin(), basis.end());
      if (seen.size() != basis.size()) throw ParseError("repeated basis name", line_no);
      for (const auto& b : basis) {
        if (b.find_first_of("*+-") != std::string::npos) throw ParseError("basis name '" + b + "' contains '*', '+' or '-'", line_no);
      }
    } else if (key == "unit") {
      std::vector<Scalar> u;
      for (const auto& w : words(value)) u.push_back(parse_number(w, line_no));
      unit = std::make_pair(u, line_no);
    } else if (key == "mul") {
      const auto arrow = value.find("->");
      if (arrow == std::string::npos) throw ParseError("mul needs 'a b -> combination'", line_no);
      const auto lhs = words(value.substr(0, arrow));
      if (lhs.size() != 2) throw ParseError("mul needs exactly two factors before '->'", line_no);
      muls.push_back({lhs[0], lhs[1], value.substr(arrow + 2), line_no});
    } else {
      throw ParseError("unknown field '" + key + "'", line_no);
    }
  }
  if (ring_override) ring = ring_override;
  if (!ring) throw ParseError("missing 'ring'");
  if (!dim) throw ParseError("missing 'dim'");
  if (basis.empty()) {
    for (std::size_t i = 0; i < *dim; ++i) basis.push_back("e" + std::to_string(i));
  }
  if (basis.size() != *dim) throw ParseError("basis has " + std::to_string(basis.size()) + " names, dim is " + std::to_string(*dim));
  if (!unit) throw ParseError("missing 'unit'");
  if (unit->first.size() != *dim) throw ParseError("unit needs " + std::to_string(*dim) + " coordinates", unit->second);

  AlgebraPresentation a(*ring, *dim);
  a.set_labels(basis);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  try {
    a.set_unit(unit->first);
  } catch (const RingError& e) {
    throw ParseError(e.what(), unit->second);
  }
  // unit-law defaults when the unit is a basis element
  std::optional<std::size_t> unit_slot;
  for (std::size_t i = 0; i < *dim; ++i) {
    if (a.unit()[i].is_zero()) continue;
    if (unit_slot || !a.unit()[i].is_one()) {
      unit_slot.reset();
      break;
    }
    unit_slot = i;
  }
  if (unit_slot) {
    for (std::size_t i = 0; i < *dim; ++i) {
      a.set_mu(*unit_slot, i, i, Scalar(1));
      a.set_mu(i, *unit_slot, i, Scalar(1));
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const auto& m : muls) {
    auto li = index.find(m.left);
    auto ri = index.find(m.right);
    if (li == index.end()) throw ParseError("unknown basis element '" + m.left + "'", m.line);
    if (ri == index.end()) throw ParseError("unknown basis element '" + m.right + "'", m.line);
    if (!given.insert({li->second, ri->second}).second) throw ParseError("product " + m.left + " " + m.right + " given twice", m.line);
    try {
      a.set_product(li->second, ri->second, parse_combination(m.rhs, index, *dim, m.line));
    } catch (const RingError& e) {
      throw ParseError(e.what(), m.line);
    }
  }
  const auto problems = validate_algebra(a);
  if (!problems.empty()) throw AlgebraError(problems.front());
  return a;
}

AlgebraPresentation parse_algebra_file(const std::string& path, std::optional<RingSpec> ring) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str(), ring);
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  }
}

std::string format_algebra(const AlgebraPresentation& a) {
  std::ostringstream os;
  os << "ring: " << a.ring().name() << "\n";
  os << "dim: " << a.dim() << "\n";
  os << "basis:";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\nunit:";
  for (const auto& x : a.unit()) os << " " << x.to_string();
  os << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      os << "mul: " << a.labels()[i] << " " << a.labels()[j] << " ->";
      const auto& col = a.product(i, j);
      if (col.empty()) os << " 0";
      bool first = true;
      for (const auto& e : col) {
        const bool neg = e.value.sign() < 0;
        const Scalar mag = neg ? -e.value : e.value;
        os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
        if (!mag.is_one()) os << mag.to_string() << "*";
        os << a.labels()[e.row];
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cychom
