#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holoreduce/exprio.hpp"

namespace holoreduce::cli {

/// Ordered key/value output rendered as "key: value" lines, LaTeX lines, or
/// one JSON object.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  /// First line of text and LaTeX output; not part of the JSON object.
  void headline(std::string text) { headline_ = std::move(text); }

  void add(const std::string& key, const Rational& v);
  void add(const std::string& key, const Polynomial& v);
  void add(const std::string& key, const RationalFunction& v);
  void add(const std::string& key, const ShiftOperator& v);
  void add(const std::string& key, const std::string& v);
  void add(const std::string& key, const char* v) { add(key, std::string(v)); }
  void add_integer(const std::string& key, long long v);
  void add_flag(const std::string& key, bool v);
  void add_raw(const std::string& key, std::string text, std::string latex, nlohmann::json value);

  void write(std::ostream& out, Format format) const;

 private:
  struct Field {
    std::string key;
    std::string text;
    std::string latex;
    nlohmann::json value;
  };

  std::string command_;
  std::string headline_;
  std::vector<Field> fields_;
};

}  // namespace holoreduce::cli
