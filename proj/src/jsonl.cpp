#include "dunkl/jsonl.hpp"

#include <cmath>
#include <cstdio>

namespace dunkl {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e9999" : "-1e9999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

void append_key(std::string& body, const std::string& key) {
    if (!body.empty()) body += ',';
    body += '"';
    body += json_escape(key);
    body += "\":";
}

} // namespace

JsonObject& JsonObject::field(const std::string& key, double v) {
    append_key(body_, key);
    body_ += fmt_double(v);
    return *this;
}

JsonObject& JsonObject::field(const std::string& key, int v) {
    append_key(body_, key);
    body_ += std::to_string(v);
    return *this;
}

JsonObject& JsonObject::field(const std::string& key, long long v) {
    append_key(body_, key);
    body_ += std::to_string(v);
    return *this;
}

JsonObject& JsonObject::field(const std::string& key, bool v) {
    append_key(body_, key);
    body_ += v ? "true" : "false";
    return *this;
}

JsonObject& JsonObject::field(const std::string& key, const std::string& v) {
    append_key(body_, key);
    body_ += '"';
    body_ += json_escape(v);
    body_ += '"';
    return *this;
}

JsonObject& JsonObject::field(const std::string& key, const std::vector<double>& v) {
    append_key(body_, key);
    body_ += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) body_ += ',';
        body_ += fmt_double(v[i]);
    }
    body_ += ']';
    return *this;
}

JsonObject& JsonObject::field_raw(const std::string& key, const std::string& raw_json) {
    append_key(body_, key);
    body_ += raw_json;
    return *this;
}

std::string JsonObject::str() const { return "{" + body_ + "}"; }

} // namespace dunkl
