#ifndef DUNKL_JSONL_HPP
#define DUNKL_JSONL_HPP

#include <string>
#include <vector>

namespace dunkl {

// Fixed 17-significant-digit float formatting so identical runs emit
// byte-identical JSON lines.
std::string fmt_double(double v);

std::string json_escape(const std::string& s);

// Minimal ordered-field JSON object builder for flat records.
class JsonObject {
  public:
    JsonObject& field(const std::string& key, double v);
    JsonObject& field(const std::string& key, int v);
    JsonObject& field(const std::string& key, long long v);
    JsonObject& field(const std::string& key, bool v);
    JsonObject& field(const std::string& key, const std::string& v);
    JsonObject& field(const std::string& key, const std::vector<double>& v);
    JsonObject& field_raw(const std::string& key, const std::string& raw_json);
    std::string str() const;

  private:
    std::string body_;
};

} // namespace dunkl

#endif
