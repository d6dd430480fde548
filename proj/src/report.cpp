#include "fsdet/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fsdet {

namespace {

std::string format_with(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::string format_full(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in report");
    return format_with("%.17g", v);
}

std::string format_short(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value in report");
    return format_with("%.6g", v);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

Json& Json::set(const std::string& key, Json v) {
    auto* obj = std::get_if<Object>(&value_);
    if (!obj) throw std::logic_error("set() on non-object json value");
    obj->emplace_back(key, std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    auto* arr = std::get_if<Array>(&value_);
    if (!arr) throw std::logic_error("push() on non-array json value");
    arr->push_back(std::move(v));
    return *this;
}

void Json::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const long long* i = std::get_if<long long>(&value_)) {
        out += std::to_string(*i);
    } else if (const std::uint64_t* u = std::get_if<std::uint64_t>(&value_)) {
        out += std::to_string(*u);
    } else if (const double* d = std::get_if<double>(&value_)) {
        out += format_full(*d);
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        out += '"';
        out += json_escape(*s);
        out += '"';
    } else if (const Array* arr = std::get_if<Array>(&value_)) {
        if (arr->empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < arr->size(); ++i) {
            out += pad;
            (*arr)[i].write(out, indent, depth + 1);
            if (i + 1 < arr->size()) out += ',';
            out += '\n';
        }
        out += close_pad;
        out += ']';
    } else if (const Object* obj = std::get_if<Object>(&value_)) {
        if (obj->empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < obj->size(); ++i) {
            out += pad;
            out += '"';
            out += json_escape((*obj)[i].first);
            out += "\": ";
            (*obj)[i].second.write(out, indent, depth + 1);
            if (i + 1 < obj->size()) out += ',';
            out += '\n';
        }
        out += close_pad;
        out += '}';
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

std::string table_to_csv(const Table& t) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    emit_row(t.header);
    for (const auto& row : t.rows) emit_row(row);
    return out;
}

std::string table_to_md(const Table& t) {
    std::string out = "|";
    for (const std::string& h : t.header) {
        out += ' ';
        out += h;
        out += " |";
    }
    out += "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
    out += '\n';
    for (const auto& row : t.rows) {
        out += '|';
        for (const std::string& cell : row) {
            out += ' ';
            out += cell;
            out += " |";
        }
        out += '\n';
    }
    return out;
}

}  // namespace fsdet
