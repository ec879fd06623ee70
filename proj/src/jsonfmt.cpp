#include "decarb/jsonfmt.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "decarb/error.hpp"

namespace decarb {

namespace {

using nlohmann::json;

bool is_scalar_array(const json& arr) {
  for (const auto& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void dump_value(const json& v, std::string& out, int depth);

void indent(std::string& out, int depth) { out.append(2 * std::size_t(depth), ' '); }

void dump_object(const json& v, std::string& out, int depth) {
  if (v.empty()) {
    out += "{}";
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (auto it = v.cbegin(); it != v.cend(); ++it, ++i) {
    indent(out, depth + 1);
    out += json(it.key()).dump();
    out += ": ";
    dump_value(it.value(), out, depth + 1);
    if (i + 1 < v.size()) out += ',';
    out += '\n';
  }
  indent(out, depth);
  out += '}';
}

void dump_array(const json& v, std::string& out, int depth) {
  if (v.empty()) {
    out += "[]";
    return;
  }
  if (is_scalar_array(v)) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ", ";
      dump_value(v[i], out, depth);
    }
    out += ']';
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    indent(out, depth + 1);
    dump_value(v[i], out, depth + 1);
    if (i + 1 < v.size()) out += ',';
    out += '\n';
  }
  indent(out, depth);
  out += ']';
}

void dump_value(const json& v, std::string& out, int depth) {
  switch (v.type()) {
    case json::value_t::object:
      dump_object(v, out, depth);
      break;
    case json::value_t::array:
      dump_array(v, out, depth);
      break;
    case json::value_t::number_float:
      out += format_double(v.get<double>());
      break;
    default:
      out += v.dump();  // strings (escaped), ints, bools, null
      break;
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string dump_json(const nlohmann::json& doc) {
  std::string out;
  dump_value(doc, out, 0);
  out += '\n';
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Errc::io_error, "cannot open for writing: " + path.string());
  os.write(text.data(), std::streamsize(text.size()));
  if (!os) fail(Errc::io_error, "write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(Errc::io_error, "cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) fail(Errc::io_error, "read failed: " + path.string());
  return std::move(ss).str();
}

}  // namespace decarb
