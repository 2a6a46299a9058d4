#include <fstream>
#include <set>
#include <map>
#include <sstream>

#include "holoreduce/error.hpp"
#include "holoreduce/exprio.hpp"
#include "holoreduce/verify.hpp"

namespace holoreduce {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidFixture, what); }

std::int64_t parse_int(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string s(value);
    const long long v = std::stoll(s, &used);
    if (used != s.size()) invalid(std::string(key) + ": trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    invalid(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
  }
}

using Entries = std::map<std::string, std::string, std::less<>>;

const std::string& require(const Entries& e, std::string_view key) {
  const auto it = e.find(key);
  if (it == e.end()) invalid("missing key '" + std::string(key) + "'");
  return it->second;
}

std::optional<std::string> optional_entry(const Entries& e, std::string_view key) {
  const auto it = e.find(key);
  if (it == e.end()) return std::nullopt;
  return it->second;
}

/// "a mod m".
std::pair<long, long> parse_filter(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto at = s.find("mod");
  if (at == std::string::npos) invalid("prime_filter: expected 'r mod m'");
  const auto r = parse_int("prime_filter", s.substr(0, at));
  const auto m = parse_int("prime_filter", s.substr(at + 3));
  if (m <= 0 || r < 0 || r >= m) invalid("prime_filter: residue out of range");
  return {static_cast<long>(r), static_cast<long>(m)};
}

/// "p^k" (or "p").
unsigned parse_modulus(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "p") return 1;
  if (s.rfind("p^", 0) != 0) invalid("modulus: expected 'p^k'");
  const auto k = parse_int("modulus", s.substr(2));
  if (k < 1 || k > 64) invalid("modulus: exponent out of range");
  return static_cast<unsigned>(k);
}

std::string format_rational_plain(const Rational& r) { return r.get_str(); }

}  // namespace

PiLinear parse_pi_linear(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) invalid("empty constant");
  PiLinear out;
  bool seen_rational = false;
  bool seen_pi = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string piece = s.substr(pos, end - pos);
    pos = end;

    bool negative = false;
    std::size_t lead = 0;
    while (lead < piece.size() && (piece[lead] == '+' || piece[lead] == '-')) {
      if (piece[lead] == '-') negative = !negative;
      ++lead;
    }
    piece.erase(0, lead);
    if (piece.empty()) invalid("dangling sign in '" + std::string(text) + "'");

    const bool is_pi = piece.size() >= 3 && piece.compare(piece.size() - 3, 3, "/pi") == 0;
    if (is_pi) piece.erase(piece.size() - 3);
    Rational value;
    try {
      value = parse_rational(piece);
    } catch (const Error&) {
      invalid("bad constant term '" + piece + "'");
    }
    if (negative) value = -value;
    if (is_pi) {
      if (seen_pi) invalid("repeated 1/pi term");
      out.pi_part = value;
      seen_pi = true;
    } else {
      if (seen_rational) invalid("repeated rational term");
      out.rational_part = value;
      seen_rational = true;
    }
  }
  return out;
}

Fixture parse_fixture(std::string_view text) {
  static const std::set<std::string, std::less<>> kKnown = {
      "kind",   "sequence", "numerator", "denominator", "start", "target", "prime_filter",
      "modulus", "source",  "factor",    "side",        "order", "scale"};

  Entries entries;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) invalid("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!kKnown.contains(key)) invalid("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!entries.emplace(key, value).second) {
      invalid("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }

  const std::string kind = optional_entry(entries, "kind").value_or("identity");
  const std::string sequence = require(entries, "sequence");
  const Polynomial numer = parse_polynomial(require(entries, "numerator"));
  const auto denom_text = optional_entry(entries, "denominator");
  const Polynomial denom = denom_text ? parse_polynomial(*denom_text) : Polynomial(1);
  if (denom.is_zero()) invalid("denominator is the zero polynomial");
  const std::int64_t start = parse_int("start", require(entries, "start"));
  const std::string target = require(entries, "target");

  if (kind == "identity") {
    for (const char* k : {"prime_filter", "modulus"}) {
      if (entries.contains(k)) invalid(std::string("key '") + k + "' is only valid for congruences");
    }
    IdentityFixture fix;
    fix.sequence = sequence;
    fix.numer = numer;
    fix.denom = denom;
    fix.start = start;
    fix.target_text = target;
    fix.target = parse_pi_linear(target);
    if (entries.contains("source")) {
      IdentityDerivation d;
      d.source = entries["source"];
      d.factor = parse_polynomial(require(entries, "factor"));
      const std::string side = require(entries, "side");
      if (side == "upper") {
        d.side = Side::Upper;
      } else if (side == "lower") {
        d.side = Side::Lower;
      } else {
        invalid("side: expected 'lower' or 'upper'");
      }
      const auto order = parse_int("order", require(entries, "order"));
      if (order < 0) invalid("order must be nonnegative");
      d.order = static_cast<std::size_t>(order);
      const auto scale_text = optional_entry(entries, "scale");
      d.scale = scale_text ? parse_rational(*scale_text) : Rational(1);
      if (d.scale == 0) invalid("scale must be nonzero");
      fix.derivation = std::move(d);
    } else {
      for (const char* k : {"factor", "side", "order", "scale"}) {
        if (entries.contains(k)) invalid(std::string("key '") + k + "' requires 'source'");
      }
    }
    return fix;
  }

  if (kind == "congruence") {
    for (const char* k : {"source", "factor", "side", "order", "scale"}) {
      if (entries.contains(k)) invalid(std::string("key '") + k + "' is only valid for identities");
    }
    CongruenceFixture fix;
    fix.sequence = sequence;
    fix.numer = numer;
    fix.denom = denom;
    fix.start = start;
    fix.target_text = target;
    const std::string compact = strip_spaces(target);
    const auto at = compact.find("mod");
    if (at == std::string::npos) invalid("target: expected 'a/b mod p^k'");
    try {
      fix.target = parse_rational(compact.substr(0, at));
    } catch (const Error&) {
      invalid("target: bad residue '" + compact.substr(0, at) + "'");
    }
    fix.modulus_power = parse_modulus(compact.substr(at + 3));
    if (const auto m = optional_entry(entries, "modulus"); m && parse_modulus(*m) != fix.modulus_power) {
      invalid("modulus disagrees with the target");
    }
    if (const auto f = optional_entry(entries, "prime_filter")) {
      std::tie(fix.filter_residue, fix.filter_modulus) = parse_filter(*f);
    }
    return fix;
  }

  invalid("kind: expected 'identity' or 'congruence', got '" + kind + "'");
}

std::string format_pi_linear(const PiLinear& v) {
  if (v.pi_part == 0) return format_rational_plain(v.rational_part);
  const std::string pi_term = format_rational_plain(abs(v.pi_part)) + "/pi";
  if (v.rational_part == 0) return (v.pi_part < 0 ? "-" : "") + pi_term;
  return format_rational_plain(v.rational_part) + (v.pi_part < 0 ? " - " : " + ") + pi_term;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open fixture '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::string format_fixture(const Fixture& fixture) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& fix) {
        using T = std::decay_t<decltype(fix)>;
        const bool identity = std::is_same_v<T, IdentityFixture>;
        out << "kind = " << (identity ? "identity" : "congruence") << '\n';
        out << "sequence = " << fix.sequence << '\n';
        out << "numerator = " << print(fix.numer) << '\n';
        out << "denominator = " << print(fix.denom) << '\n';
        out << "start = " << fix.start << '\n';
        if constexpr (std::is_same_v<T, IdentityFixture>) {
          out << "target = " << format_pi_linear(fix.target) << '\n';
          if (fix.derivation) {
            const auto& d = *fix.derivation;
            out << "source = " << d.source << '\n';
            out << "factor = " << print(d.factor) << '\n';
            out << "side = " << (d.side == Side::Upper ? "upper" : "lower") << '\n';
            out << "order = " << d.order << '\n';
            out << "scale = " << format_rational_plain(d.scale) << '\n';
          }
        } else {
          out << "target = " << format_rational_plain(fix.target) << " mod p^" << fix.modulus_power << '\n';
          out << "prime_filter = " << fix.filter_residue << " mod " << fix.filter_modulus << '\n';
        }
      },
      fixture);
  return out.str();
}

}  // namespace holoreduce
