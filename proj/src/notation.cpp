#include "tb/notation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tb {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string piece;
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

long parse_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": '" + s + "'");
  }
}

long parse_index(const std::string& s) {
  long a = parse_long(s, "theta index must be an integer");
  if (a < 1) throw std::invalid_argument("theta index must be >= 1: '" + s + "'");
  return a;
}

// "eta:-6 1:3 2:3 ..." -- exponents accumulate across repeated keys
ThetaQuotient parse_pairs(const std::string& text) {
  ThetaQuotient tq;
  std::istringstream in(text);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected key:exponent, got '" + tok + "'");
    std::string key = tok.substr(0, colon), val = tok.substr(colon + 1);
    if (key == "eta")
      tq.eta_exp += parse_rational(val);
    else
      tq.mul_theta(parse_index(key), parse_long(val, "theta exponent must be an integer"));
  }
  if (!any) throw std::invalid_argument("empty block description");
  return tq;
}

// "1,1,2/eta:1" -- theta indices with multiplicity over eta^d
ThetaQuotient parse_comma_list(const std::string& text) {
  std::string list = text;
  Q eta_div = 0;
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    list = text.substr(0, slash);
    std::string tail = trim(text.substr(slash + 1));
    if (tail.rfind("eta:", 0) != 0)
      throw std::invalid_argument("expected /eta:<power> after the index list: '" + tail + "'");
    eta_div = parse_rational(tail.substr(4));
  }
  ThetaQuotient tq = ThetaQuotient::eta(-eta_div);
  for (const std::string& piece : split(list, ',')) tq.mul_theta(parse_index(trim(piece)), 1);
  return tq;
}

// "ϑ[-6; 1^3,2^3,3^2,4,5]" or "theta[...]"; the first slot is the eta power
ThetaQuotient parse_bracket(const std::string& body) {
  size_t semi = body.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("bracket form needs 'eta-power; index list'");
  ThetaQuotient tq = ThetaQuotient::eta(parse_rational(trim(body.substr(0, semi))));
  std::string list = trim(body.substr(semi + 1));
  if (list.empty()) return tq;
  for (const std::string& piece : split(list, ',')) {
    std::string item = trim(piece);
    size_t caret = item.find('^');
    long c = 1;
    if (caret != std::string::npos) {
      c = parse_long(item.substr(caret + 1), "theta exponent must be an integer");
      item = item.substr(0, caret);
    }
    tq.mul_theta(parse_index(trim(item)), c);
  }
  return tq;
}

}  // namespace

ThetaQuotient parse_block(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty block description");
  for (const std::string& prefix : {std::string("ϑ["), std::string("theta[")}) {
    if (s.rfind(prefix, 0) == 0) {
      if (s.back() != ']') throw std::invalid_argument("unterminated bracket form: '" + s + "'");
      return parse_bracket(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    }
  }
  if (s.find(':') == std::string::npos || s.find(',') != std::string::npos)
    return parse_comma_list(s);
  return parse_pairs(s);
}

std::string format_block(const ThetaQuotient& tq) {
  std::ostringstream out;
  out << "eta:" << rational_str(tq.eta_exp);
  for (const auto& [a, c] : tq.theta_exps) out << ' ' << a << ':' << c;
  return out.str();
}

std::string shorthand(const ThetaQuotient& tq) {
  std::ostringstream out;
  out << "ϑ[" << rational_str(tq.eta_exp) << ";";
  bool first = true;
  for (const auto& [a, c] : tq.theta_exps) {
    out << (first ? " " : ",") << a;
    if (c != 1) out << '^' << c;
    first = false;
  }
  out << ']';
  return out.str();
}

}  // namespace tb
