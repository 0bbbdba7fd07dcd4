#include "prohecke/emit.hpp"

#include <json.hpp>
#include <sstream>

#include "prohecke/errors.hpp"

namespace prohecke {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string coeff_text(const Poly& c) {
  std::string s = c.to_string();
  if (c.terms().size() > 1) return "(" + s + ")";
  return s;
}

// c0_1 -> c_{0,1}; x^2 -> x^{2}
std::string latex_poly(const Poly& p) {
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '*') {
      out += ' ';
    } else if (ch == 'c' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) &&
               (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string idx = s.substr(i + 1, j - i - 1);
      for (auto& x : idx)
        if (x == '_') x = ',';
      out += "c_{" + idx + "}";
      i = j - 1;
    } else if (ch == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += ch;
    }
  }
  return out;
}

}  // namespace

std::string emit_text(const HeckeAlgebra& H, const HeckeElement& h) {
  if (h.is_zero()) return "0\n";
  const Extension& ext = H.extension();
  std::ostringstream os;
  for (const auto& [a, c] : H.sorted_terms(h)) os << coeff_text(c) << " * T[" << ext.format(a) << "]\n";
  return os.str();
}

HeckeElement parse_text(const HeckeAlgebra& H, std::string_view text) {
  const Extension& ext = H.extension();
  HeckeElement out = H.zero();
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "0") continue;
    auto open = line.rfind("T[");
    if (open == std::string::npos || line.back() != ']') throw ParseError("expected 'coeff * T[...]'", line_no, 1);
    Poly coeff = H.ring().one();
    std::string head = trim(std::string_view(line).substr(0, open));
    if (!head.empty()) {
      if (head.back() != '*') throw ParseError("expected '*' before T[...]", line_no, static_cast<int>(open) + 1);
      head.pop_back();
      try {
        coeff = parse_poly(trim(head), H.ring().modulus);
        H.ring().check(coeff);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad coefficient: ") + e.what(), line_no, std::max(1, e.column()));
      } catch (const ConfigError& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    }
    std::string inner = line.substr(open + 2, line.size() - open - 3);
    try {
      out.add_term(ext.parse(inner), coeff);
    } catch (const ConfigError& e) {
      throw ParseError(std::string("bad basis element: ") + e.what(), line_no, static_cast<int>(open) + 3);
    }
  }
  return out;
}

std::string emit_json(const HeckeAlgebra& H, const HeckeElement& h, const std::map<std::string, std::string>& metadata) {
  const Extension& ext = H.extension();
  const RootDatum& rd = ext.root_datum();
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metadata) doc["metadata"][k] = v;
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [a, c] : H.sorted_terms(h)) {
    ReducedWord word = rd.canonical_reduced_word(a.w);
    std::vector<std::int64_t> z(a.z.e.begin(), a.z.e.begin() + static_cast<long>(ext.z().rank()));
    doc["terms"].push_back({{"coeff", c.to_string()}, {"z", z}, {"word", word.letters}, {"omega", word.omega}});
  }
  return doc.dump(2) + "\n";
}

HeckeElement parse_json(const HeckeAlgebra& H, std::string_view text) {
  const Extension& ext = H.extension();
  const RootDatum& rd = ext.root_datum();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  HeckeElement out = H.zero();
  try {
    for (const auto& t : doc.at("terms")) {
      Poly c = parse_poly(t.at("coeff").get<std::string>(), H.ring().modulus);
      H.ring().check(c);
      auto zs = t.at("z").get<std::vector<std::int64_t>>();
      if (zs.size() != ext.z().rank()) throw ConfigError("term has the wrong number of Z exponents");
      ZElem z = ext.z().make(zs);
      WeylElement w = rd.identity();
      for (int i : t.at("word").get<std::vector<int>>()) {
        if (i < 0 || i >= rd.num_affine()) throw ConfigError("generator index out of range in JSON term");
        w = rd.multiply(w, rd.simple(i));
      }
      w = rd.multiply(w, rd.omega_power(t.at("omega").get<std::int64_t>()));
      // The word is the canonical reduced word, so (z, w) is the normal form.
      out.add_term(W1Element{z, w}, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed term: ") + e.what(), 1, 1);
  }
  return out;
}

std::string emit_latex(const HeckeAlgebra& H, const HeckeElement& h) {
  if (h.is_zero()) return "0\n";
  const Extension& ext = H.extension();
  const RootDatum& rd = ext.root_datum();
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : H.sorted_terms(h)) {
    std::string coeff = latex_poly(c);
    bool negative = c.uniform_sign() < 0;
    if (negative) coeff = latex_poly(-c);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    if (c.terms().size() > 1) os << '(' << coeff << ") ";
    else if (coeff != "1") os << coeff << ' ';
    os << "T_{";
    if (a.z != ZElem{}) os << "t_{" << ext.z().format(a.z) << "}";
    ReducedWord word = rd.canonical_reduced_word(a.w);
    for (int i : word.letters) os << "\\tilde{s}_{" << i << "}";
    if (word.omega != 0) {
      os << "\\tilde{\\" << rd.spec().omega_name << "}";
      if (word.omega != 1) os << "^{" << word.omega << "}";
    }
    if (a.z == ZElem{} && word.letters.empty() && word.omega == 0) os << "1";
    os << "}\n";
  }
  return os.str();
}

}  // namespace prohecke
