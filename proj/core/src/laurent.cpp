#include "vsasm/laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace vsasm {

namespace {

std::string var_name(int slot, std::span<const std::string> names) {
  if (static_cast<std::size_t>(slot) < names.size()) return names[static_cast<std::size_t>(slot)];
  return "z" + std::to_string(slot + 1);
}

std::string monomial_text(const ExponentVector& e, int nvars, std::span<const std::string> names) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(i, names);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_text(t.exp, p.nvars(), names);
    std::string mag = t.coeff.abs().to_string();
    out += t.coeff.sign() < 0 ? "-" : (out.empty() ? "" : "+");
    if (mono.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += mono;
    }
  }
  return out;
}

std::string to_string(const XLaurent& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono = monomial_text(t.exp, p.nvars(), names);
    if (!out.empty()) out += "+";
    out += "(" + t.coeff.to_string() + ")";
    if (!mono.empty()) out += "*" + mono;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, int nvars) {
  std::vector<Term<Rational>> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("parse_polynomial: expected integer at offset " + std::to_string(pos));
    }
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  };

  skip_ws();
  if (text.substr(pos) == "0") return Polynomial(nvars);
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') sign = text[pos++] == '-' ? -1 : 1;
    skip_ws();
    Rational coeff(1);
    ExponentVector e;
    bool have_factor = false;
    while (pos < text.size()) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        coeff *= Rational::parse(text.substr(start, pos - start));
      } else if (pos < text.size() && text[pos] == 'z') {
        ++pos;
        long long slot = read_int() - 1;
        long long power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = read_int();
        }
        if (slot < 0 || slot >= nvars) throw std::invalid_argument("parse_polynomial: variable out of range");
        e.add(static_cast<int>(slot), power);
      } else {
        throw std::invalid_argument("parse_polynomial: unexpected character at offset " + std::to_string(pos));
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw std::invalid_argument("parse_polynomial: empty term");
    terms.push_back({e, sign < 0 ? -coeff : coeff});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace vsasm
