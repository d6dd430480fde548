#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fsdet {

/// Small deterministic JSON document builder. Objects keep insertion
/// order and doubles are printed with 17 significant digits, so repeated
/// runs with the same inputs serialize byte-identically.
class Json {
  public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : value_(nullptr) {}
    Json(std::nullptr_t) : value_(nullptr) {}
    Json(bool v) : value_(v) {}
    Json(int v) : value_(static_cast<long long>(v)) {}
    Json(long long v) : value_(v) {}
    Json(std::uint64_t v) : value_(v) {}
    Json(double v) : value_(v) {}
    Json(const char* v) : value_(std::string(v)) {}
    Json(std::string v) : value_(std::move(v)) {}
    Json(Array v) : value_(std::move(v)) {}
    Json(Object v) : value_(std::move(v)) {}

    static Json object() { return Json(Object{}); }
    static Json array() { return Json(Array{}); }

    Json& set(const std::string& key, Json v);
    Json& push(Json v);

    std::string dump(int indent = 2) const;

  private:
    std::variant<std::nullptr_t, bool, long long, std::uint64_t, double, std::string,
                 Array, Object>
        value_;

    void write(std::string& out, int indent, int depth) const;
};

/// "%.17g" — enough digits to round-trip a double exactly.
std::string format_full(double v);

/// "%.6g" — the readable form used in markdown tables.
std::string format_short(double v);

std::string json_escape(const std::string& s);

/// One tabular view of a report, rendered as CSV (17 significant digits
/// already baked into the cells) or as a markdown pipe table.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string table_to_csv(const Table& t);
std::string table_to_md(const Table& t);

}  // namespace fsdet
