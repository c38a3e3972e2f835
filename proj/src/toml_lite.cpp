#include "blendflow/toml_lite.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "blendflow/errors.hpp"

namespace blendflow::toml_lite {

bool Value::as_bool() const {
    if (!is_bool()) throw ConfigError("toml: expected a boolean");
    return std::get<bool>(data_);
}

std::int64_t Value::as_int() const {
    if (!is_int()) throw ConfigError("toml: expected an integer");
    return std::get<std::int64_t>(data_);
}

double Value::as_double() const {
    if (is_int()) return static_cast<double>(std::get<std::int64_t>(data_));
    if (!is_float()) throw ConfigError("toml: expected a number");
    return std::get<double>(data_);
}

const std::string& Value::as_string() const {
    if (!is_string()) throw ConfigError("toml: expected a string");
    return std::get<std::string>(data_);
}

const Value::Array& Value::as_array() const {
    if (!is_array()) throw ConfigError("toml: expected an array");
    return std::get<Array>(data_);
}

std::vector<double> Value::as_doubles() const {
    std::vector<double> out;
    for (const auto& v : as_array()) out.push_back(v.as_double());
    return out;
}

const Value* Table::find(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
}

const Table* Table::find_table(const std::string& dotted_path) const {
    const Table* cur = this;
    std::size_t pos = 0;
    while (pos <= dotted_path.size()) {
        const std::size_t dot = dotted_path.find('.', pos);
        const std::string seg =
            dotted_path.substr(pos, dot == std::string::npos ? dot : dot - pos);
        auto it = cur->tables.find(seg);
        if (it == cur->tables.end()) return nullptr;
        cur = &it->second;
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return cur;
}

const std::vector<Table>* Table::find_array(const std::string& key) const {
    auto it = table_arrays.find(key);
    return it == table_arrays.end() ? nullptr : &it->second;
}

double Table::number(const std::string& key) const {
    const Value* v = find(key);
    if (!v) throw ConfigError("scenario: missing key '" + key + "'");
    return v->as_double();
}

double Table::number_or(const std::string& key, double fallback) const {
    const Value* v = find(key);
    return v ? v->as_double() : fallback;
}

std::int64_t Table::integer(const std::string& key) const {
    const Value* v = find(key);
    if (!v) throw ConfigError("scenario: missing key '" + key + "'");
    return v->as_int();
}

std::int64_t Table::integer_or(const std::string& key,
                               std::int64_t fallback) const {
    const Value* v = find(key);
    return v ? v->as_int() : fallback;
}

std::string Table::text(const std::string& key) const {
    const Value* v = find(key);
    if (!v) throw ConfigError("scenario: missing key '" + key + "'");
    return v->as_string();
}

std::string Table::text_or(const std::string& key, std::string fallback) const {
    const Value* v = find(key);
    return v ? v->as_string() : std::move(fallback);
}

bool Table::flag_or(const std::string& key, bool fallback) const {
    const Value* v = find(key);
    return v ? v->as_bool() : fallback;
}

std::vector<double> Table::numbers(const std::string& key) const {
    const Value* v = find(key);
    if (!v) throw ConfigError("scenario: missing key '" + key + "'");
    return v->as_doubles();
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        const char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError("toml line " + std::to_string(line) + ": " + what);
    }
};

void skip_blank(Cursor& c, bool cross_lines) {
    while (!c.done()) {
        const char ch = c.peek();
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.take();
        } else if (ch == ' ' || ch == '\t' || ch == '\r' ||
                   (cross_lines && ch == '\n')) {
            c.take();
        } else {
            break;
        }
    }
}

bool key_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
           ch == '-';
}

std::string parse_key_segment(Cursor& c) {
    std::string key;
    while (!c.done() && key_char(c.peek())) key += c.take();
    if (key.empty()) c.fail("expected a key");
    return key;
}

std::string parse_string(Cursor& c) {
    c.take();  // opening quote
    std::string out;
    while (true) {
        if (c.done()) c.fail("unterminated string");
        const char ch = c.take();
        if (ch == '"') break;
        if (ch == '\n') c.fail("newline inside string");
        if (ch == '\\') {
            if (c.done()) c.fail("dangling escape");
            const char esc = c.take();
            switch (esc) {
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case 'r': out += '\r'; break;
                default: c.fail("unsupported escape sequence");
            }
        } else {
            out += ch;
        }
    }
    return out;
}

Value parse_value(Cursor& c);

Value parse_array(Cursor& c) {
    c.take();  // '['
    Value::Array items;
    while (true) {
        skip_blank(c, true);
        if (c.done()) c.fail("unterminated array");
        if (c.peek() == ']') {
            c.take();
            break;
        }
        items.push_back(parse_value(c));
        skip_blank(c, true);
        if (c.done()) c.fail("unterminated array");
        if (c.peek() == ',') {
            c.take();
        } else if (c.peek() != ']') {
            c.fail("expected ',' or ']' in array");
        }
    }
    return Value(std::move(items));
}

Value parse_scalar(Cursor& c) {
    std::string tok;
    while (!c.done()) {
        const char ch = c.peek();
        if (ch == ',' || ch == ']' || ch == '\n' || ch == '#' || ch == ' ' ||
            ch == '\t' || ch == '\r') {
            break;
        }
        tok += c.take();
    }
    if (tok.empty()) c.fail("expected a value");
    if (tok == "true") return Value(true);
    if (tok == "false") return Value(false);
    char* end = nullptr;
    if (tok.find_first_of(".eE") == std::string::npos) {
        errno = 0;
        const long long i = std::strtoll(tok.c_str(), &end, 10);
        if (end == tok.c_str() + tok.size() && errno == 0) {
            return Value(static_cast<std::int64_t>(i));
        }
    }
    errno = 0;
    const double d = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) {
        c.fail("malformed value '" + tok + "'");
    }
    return Value(d);
}

Value parse_value(Cursor& c) {
    skip_blank(c, true);
    if (c.done()) c.fail("expected a value");
    const char ch = c.peek();
    if (ch == '"') return Value(parse_string(c));
    if (ch == '[') return parse_array(c);
    return parse_scalar(c);
}

// Walks/creates a dotted path; a segment naming an array of tables resolves
// to its last element, matching how [[x]] followed by [x.y] composes.
Table* navigate(Table* root, const std::vector<std::string>& path,
                std::size_t count) {
    Table* cur = root;
    for (std::size_t j = 0; j < count; ++j) {
        const std::string& seg = path[j];
        if (auto ita = cur->table_arrays.find(seg);
            ita != cur->table_arrays.end()) {
            cur = &ita->second.back();
        } else {
            cur = &cur->tables[seg];
        }
    }
    return cur;
}

std::vector<std::string> parse_header_path(Cursor& c) {
    std::vector<std::string> path;
    while (true) {
        skip_blank(c, false);
        path.push_back(parse_key_segment(c));
        skip_blank(c, false);
        if (c.done()) c.fail("unterminated table header");
        if (c.peek() == '.') {
            c.take();
            continue;
        }
        break;
    }
    return path;
}

void expect_line_end(Cursor& c) {
    skip_blank(c, false);
    if (!c.done() && c.peek() != '\n') {
        c.fail("trailing characters after statement");
    }
}

}  // namespace

Table parse(const std::string& text) {
    Table root;
    Table* current = &root;
    Cursor c{text};
    while (true) {
        skip_blank(c, true);
        if (c.done()) break;
        if (c.peek() == '[') {
            c.take();
            const bool is_array = !c.done() && c.peek() == '[';
            if (is_array) c.take();
            const auto path = parse_header_path(c);
            if (c.done() || c.take() != ']') c.fail("expected ']'");
            if (is_array && (c.done() || c.take() != ']')) c.fail("expected ']]'");
            expect_line_end(c);
            Table* parent = navigate(&root, path, path.size() - 1);
            if (is_array) {
                parent->table_arrays[path.back()].emplace_back();
                current = &parent->table_arrays[path.back()].back();
            } else {
                current = &parent->tables[path.back()];
            }
        } else {
            const std::string key = parse_key_segment(c);
            skip_blank(c, false);
            if (c.done() || c.take() != '=') c.fail("expected '='");
            Value v = parse_value(c);
            expect_line_end(c);
            if (current->values.count(key)) {
                c.fail("duplicate key '" + key + "'");
            }
            current->values.emplace(key, std::move(v));
        }
    }
    return root;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // Ensure the token reparses as a float, not an integer.
    if (!std::strpbrk(buf, ".eEnN")) {
        std::strcat(buf, ".0");
    }
    return buf;
}

}  // namespace blendflow::toml_lite
