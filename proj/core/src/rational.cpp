#include "ramiq/rational.hpp"

#include <cctype>

namespace ramiq {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> Rational {
    fail(ErrorKind::ParseError, "not a rational: '" + s + "'");
  };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    return bad();
  }
}

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::ConductorOverflow: return "ConductorOverflow";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::NotRationalMultiplicity: return "NotRationalMultiplicity";
    case ErrorKind::TableRequired: return "TableRequired";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidStratum: return "InvalidStratum";
    case ErrorKind::EmptyHZ: return "EmptyHZ";
    case ErrorKind::MissingAmbientChi: return "MissingAmbientChi";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalCheck: return "InternalCheck";
  }
  return "Error";
}

bool debug_asserts_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("RAMIQ_DEBUG_ASSERT");
    return v != nullptr && v[0] == '1';
  }();
  return on;
}

}  // namespace ramiq
