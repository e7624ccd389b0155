#pragma once

// Plain-text form files:
//
//   # comment
//   dim 7
//   deg 3
//   +1 1 2 7
//   -1 1 3 6
//
// Indices are strictly increasing and 1-based. Serialization emits components
// in tuple order so equal forms produce identical files.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "matryoshka/exterior.hpp"

namespace matryoshka {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

}  // namespace detail

inline Form parse_form(std::istream& in) {
  std::optional<int> dim, deg;
  std::optional<Form> form;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = detail::trim(raw);
    if (text.empty()) continue;
    std::istringstream ss(text);
    std::string head;
    ss >> head;
    if (head == "dim" || head == "deg") {
      if (form) throw ParseError("header '" + head + "' after components", line);
      std::string value, extra;
      if (!(ss >> value) || (ss >> extra)) throw ParseError("malformed '" + head + "' line", line);
      auto& slot = head == "dim" ? dim : deg;
      if (slot) throw ParseError("duplicate '" + head + "' line", line);
      slot = detail::parse_int(value, line);
      continue;
    }
    if (!dim || !deg) throw ParseError("component before 'dim' and 'deg' headers", line);
    if (!form) {
      if (*dim < 1) throw ParseError("dimension must be >= 1", line);
      if (*deg < 0 || *deg > *dim) throw ParseError("degree outside [0, dim]", line);
      form.emplace(*dim, *deg);
    }
    if (head.size() < 2 || (head[0] != '+' && head[0] != '-'))
      throw ParseError("coefficient must carry an explicit sign, got '" + head + "'", line);
    mpz_class coeff;
    if (coeff.set_str(head.substr(1), 10) != 0 || head.substr(1).find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad coefficient '" + head + "'", line);
    if (head[0] == '-') coeff = -coeff;
    if (coeff == 0) throw ParseError("zero coefficient", line);
    std::vector<int> idx;
    std::string tok;
    while (ss >> tok) idx.push_back(detail::parse_int(tok, line));
    if (static_cast<int>(idx.size()) != *deg)
      throw ParseError("expected " + std::to_string(*deg) + " indices, got " + std::to_string(idx.size()), line);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1 || idx[k] > *dim) throw ParseError("index " + std::to_string(idx[k]) + " out of range", line);
      if (k && idx[k - 1] >= idx[k]) throw ParseError("indices must be strictly increasing", line);
    }
    IndexTuple t(std::move(idx));
    if (form->coefficient(t) != 0) throw ParseError("duplicate component " + t.to_string(), line);
    form->set(t, coeff);
  }
  if (!dim || !deg) throw ParseError("missing 'dim' or 'deg' header", 0);
  if (!form) {
    if (*deg < 0 || *deg > *dim || *dim < 1) throw ParseError("bad header values", 0);
    form.emplace(*dim, *deg);
  }
  return *form;
}

inline Form parse_form(const std::string& text) {
  std::istringstream in(text);
  return parse_form(in);
}

inline Form read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_form(in);
}

inline std::string coefficient_string(const mpz_class& c) {
  return (c < 0 ? "-" : "+") + mpz_class(abs(c)).get_str();
}

/// Canonical text. With `zero_ten` the index 10 is printed as 0; that output
/// is for display only and is not read back by parse_form.
inline std::string serialize_form(const Form& f, bool zero_ten = false) {
  std::string out = "dim " + std::to_string(f.dim()) + "\ndeg " + std::to_string(f.degree()) + "\n";
  for (const auto& [t, c] : f.components()) {
    out += coefficient_string(c);
    for (int i : t) {
      out += ' ';
      out += (zero_ten && i == 10) ? std::string("0") : std::to_string(i);
    }
    out += '\n';
  }
  return out;
}

inline void write_form_file(const Form& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << serialize_form(f);
}

}  // namespace matryoshka
