#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "secmin/arith.hpp"
#include "secmin/bounds.hpp"

namespace secmin {

enum class OutputFormat { text, json };

/// One output record: a tag followed by key=value fields in insertion order.
/// Text form is a single line; JSON form is one object per line.
class Record {
 public:
  explicit Record(std::string tag) : tag_(std::move(tag)) {}

  Record& add(const std::string& key, const std::string& v);
  Record& add(const std::string& key, const char* v) { return add(key, std::string(v)); }
  Record& add(const std::string& key, std::int64_t v);
  Record& add(const std::string& key, std::uint64_t v);
  Record& add(const std::string& key, int v) { return add(key, static_cast<std::int64_t>(v)); }
  Record& add(const std::string& key, unsigned v) { return add(key, static_cast<std::uint64_t>(v)); }
  Record& add(const std::string& key, double v);
  Record& add(const std::string& key, Real v);
  Record& add(const std::string& key, const BigInt& v);
  Record& add(const std::string& key, bool v);
  /// Comma-separated list in text, array in JSON.
  Record& add_list(const std::string& key, const std::vector<std::string>& items, bool numeric);

  const std::string& tag() const { return tag_; }
  std::string text() const;
  std::string json() const;
  std::string render(OutputFormat f) const { return f == OutputFormat::json ? json() : text(); }

 private:
  struct Field {
    std::string key;
    std::string text;  // value as printed in text form
    std::string json;  // value as a JSON literal
  };
  std::string tag_;
  std::vector<Field> fields_;
};

/// Shortest round-trip decimal for a double.
std::string format_double(double x);

}  // namespace secmin
