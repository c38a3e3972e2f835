#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace blendflow::toml_lite {

/// Small TOML reader covering the subset used by scenario files: bare keys,
/// strings, booleans, integers, floats, (possibly multi-line) arrays,
/// [dotted.tables] and [[arrays.of.tables]]. No inline tables or dates.
class Value {
  public:
    using Array = std::vector<Value>;
    using Data = std::variant<bool, std::int64_t, double, std::string, Array>;

    Value() : data_(std::int64_t{0}) {}
    explicit Value(Data d) : data_(std::move(d)) {}

    bool is_bool() const { return std::holds_alternative<bool>(data_); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
    bool is_float() const { return std::holds_alternative<double>(data_); }
    bool is_number() const { return is_int() || is_float(); }
    bool is_string() const { return std::holds_alternative<std::string>(data_); }
    bool is_array() const { return std::holds_alternative<Array>(data_); }

    bool as_bool() const;
    std::int64_t as_int() const;
    double as_double() const;  // accepts integers
    const std::string& as_string() const;
    const Array& as_array() const;
    std::vector<double> as_doubles() const;

  private:
    Data data_;
};

struct Table {
    std::map<std::string, Value> values;
    std::map<std::string, Table> tables;
    std::map<std::string, std::vector<Table>> table_arrays;

    const Value* find(const std::string& key) const;
    const Table* find_table(const std::string& dotted_path) const;
    const std::vector<Table>* find_array(const std::string& key) const;

    // Checked accessors; all throw ConfigError with the key name.
    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    std::int64_t integer(const std::string& key) const;
    std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
    std::string text(const std::string& key) const;
    std::string text_or(const std::string& key, std::string fallback) const;
    bool flag_or(const std::string& key, bool fallback) const;
    std::vector<double> numbers(const std::string& key) const;
};

/// Parses a document; throws ConfigError with a line reference on malformed
/// input.
Table parse(const std::string& text);

/// Formats a double so that it reparses to the identical bits.
std::string format_double(double x);

}  // namespace blendflow::toml_lite
