#include "toda/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace toda {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out += pad_in;
        out += Json(it.key()).dump();
        out += ": ";
        emit(it.value(), out, indent, depth + 1);
        if (k + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        out += pad_in;
        emit(j[k], out, indent, depth + 1);
        if (k + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  emit(j, out, indent, 0);
  out += "\n";
  return out;
}

void write_json_file(const Json& j, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path);
  const std::string text = dump_deterministic(j);
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json state_to_json(const TodaPhasePoint& s) {
  Json j;
  j["n"] = s.n();
  j["a"] = vector_to_json(s.a());
  j["b"] = vector_to_json(s.b());
  return j;
}

TodaPhasePoint state_from_json(const Json& j) {
  const auto& ja = j.at("a");
  const auto& jb = j.at("b");
  Vector a(ja.size()), b(jb.size());
  for (std::size_t i = 0; i < ja.size(); ++i) a[i] = ja[i].get<double>();
  for (std::size_t i = 0; i < jb.size(); ++i) b[i] = jb[i].get<double>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(b.size()))
    throw DimensionMismatch("n field disagrees with b length");
  return TodaPhasePoint(a, b);
}

CsvWriter::CsvWriter(const std::string& path) {
  f_ = std::fopen(path.c_str(), "wb");
  if (!f_) throw std::runtime_error("cannot open " + path);
}

CsvWriter::~CsvWriter() {
  if (f_) std::fclose(f_);
}

void CsvWriter::comment(const std::string& text) {
  std::fprintf(f_, "# %s\n", text.c_str());
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    std::fprintf(f_, "%s%s", names[i].c_str(), i + 1 < names.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    std::fprintf(f_, "%.17g%s", values[i], i + 1 < values.size() ? "," : "\n");
}

}  // namespace toda
