#include "secmin/record.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace secmin {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(const std::string& text) {
  // JSON has no inf/nan literals.
  if (text.find_first_of("in") != std::string::npos) return quote(text);
  return text;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

Record& Record::add(const std::string& key, const std::string& v) {
  const bool bare = !v.empty() && v.find_first_of(" \t\"=") == std::string::npos;
  fields_.push_back({key, bare ? v : quote(v), quote(v)});
  return *this;
}

Record& Record::add(const std::string& key, std::int64_t v) {
  const auto s = std::to_string(v);
  fields_.push_back({key, s, s});
  return *this;
}

Record& Record::add(const std::string& key, std::uint64_t v) {
  const auto s = std::to_string(v);
  fields_.push_back({key, s, s});
  return *this;
}

Record& Record::add(const std::string& key, double v) {
  const auto s = format_double(v);
  fields_.push_back({key, s, json_number(s)});
  return *this;
}

Record& Record::add(const std::string& key, Real v) {
  const auto s = format_real(v);
  fields_.push_back({key, s, json_number(s)});
  return *this;
}

Record& Record::add(const std::string& key, const BigInt& v) {
  const auto s = v.get_str();
  fields_.push_back({key, s, s});
  return *this;
}

Record& Record::add(const std::string& key, bool v) {
  const std::string s = v ? "true" : "false";
  fields_.push_back({key, s, s});
  return *this;
}

Record& Record::add_list(const std::string& key, const std::vector<std::string>& items, bool numeric) {
  std::string text, json = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    text += (i ? "," : "") + items[i];
    json += (i ? "," : "") + (numeric ? json_number(items[i]) : quote(items[i]));
  }
  json += "]";
  fields_.push_back({key, text.empty() ? "[]" : text, json});
  return *this;
}

std::string Record::text() const {
  std::string out = tag_;
  for (const auto& f : fields_) out += " " + f.key + "=" + f.text;
  return out;
}

std::string Record::json() const {
  std::string out = "{\"record\":" + quote(tag_);
  for (const auto& f : fields_) out += "," + quote(f.key) + ":" + f.json;
  return out + "}";
}

}  // namespace secmin
