#include "report.hpp"

namespace holoreduce::cli {

void Report::add(const std::string& key, const Rational& v) {
  add_raw(key, print(v), "$" + print(v, Format::Latex) + "$", to_json(v));
}

void Report::add(const std::string& key, const Polynomial& v) {
  add_raw(key, print(v), "$" + print(v, Format::Latex) + "$", to_json(v));
}

void Report::add(const std::string& key, const RationalFunction& v) {
  add_raw(key, print(v), "$" + print(v, Format::Latex) + "$", to_json(v));
}

void Report::add(const std::string& key, const ShiftOperator& v) {
  add_raw(key, print(v), "$" + print(v, Format::Latex) + "$", to_json(v));
}

void Report::add(const std::string& key, const std::string& v) { add_raw(key, v, v, v); }

void Report::add_integer(const std::string& key, long long v) {
  add_raw(key, std::to_string(v), std::to_string(v), v);
}

void Report::add_flag(const std::string& key, bool v) {
  add_raw(key, v ? "yes" : "no", v ? "yes" : "no", v);
}

void Report::add_raw(const std::string& key, std::string text, std::string latex, nlohmann::json value) {
  fields_.push_back(Field{key, std::move(text), std::move(latex), std::move(value)});
}

void Report::write(std::ostream& out, Format format) const {
  if (format == Format::Structured) {
    nlohmann::json obj = {{"schema", kSchemaVersion}, {"command", command_}};
    for (const auto& f : fields_) obj[f.key] = f.value;
    out << obj.dump(2) << '\n';
    return;
  }
  if (!headline_.empty()) out << headline_ << '\n';
  for (const auto& f : fields_) {
    const std::string& value = format == Format::Latex ? f.latex : f.text;
    out << f.key << (!value.empty() && value.front() == '\n' ? ":" : ": ") << value << '\n';
  }
}

}  // namespace holoreduce::cli
