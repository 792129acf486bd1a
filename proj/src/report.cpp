#include "dbarg/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace dbarg {

Json& Json::operator[](const std::string& key) {
  if (type_ == Type::Null) type_ = Type::Obj;
  if (type_ != Type::Obj) throw Error("Json: not an object");
  for (auto& kv : obj_) {
    if (kv.first == key) return kv.second;
  }
  obj_.emplace_back(key, Json());
  return obj_.back().second;
}

void Json::push(Json v) {
  if (type_ == Type::Null) type_ = Type::Arr;
  if (type_ != Type::Arr) throw Error("Json: not an array");
  arr_.push_back(std::move(v));
}

std::string Json::format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
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
  out += '"';
  return out;
}

}  // namespace

void Json::render(std::string* out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent) * depth, ' ');
  switch (type_) {
    case Type::Null: *out += "null"; break;
    case Type::Bool: *out += bool_ ? "true" : "false"; break;
    case Type::Int: {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%ld", int_);
      *out += buf;
      break;
    }
    case Type::Real: *out += format_double(real_); break;
    case Type::Str: *out += escape(str_); break;
    case Type::Arr: {
      if (arr_.empty()) {
        *out += "[]";
        break;
      }
      *out += "[\n";
      for (std::size_t i = 0; i < arr_.size(); ++i) {
        *out += pad;
        arr_[i].render(out, indent, depth + 1);
        if (i + 1 < arr_.size()) *out += ',';
        *out += '\n';
      }
      *out += pad_close + "]";
      break;
    }
    case Type::Obj: {
      if (obj_.empty()) {
        *out += "{}";
        break;
      }
      *out += "{\n";
      for (std::size_t i = 0; i < obj_.size(); ++i) {
        *out += pad + escape(obj_[i].first) + ": ";
        obj_[i].second.render(out, indent, depth + 1);
        if (i + 1 < obj_.size()) *out += ',';
        *out += '\n';
      }
      *out += pad_close + "}";
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  render(&out, indent, 0);
  out += '\n';
  return out;
}

Json to_json(const VerificationReport& report) {
  Json arr = Json::array();
  for (const auto& e : report.entries) {
    Json j = Json::object();
    j["name"] = e.name;
    j["target"] = e.target;
    j["computed"] = e.computed;
    j["abs_err"] = e.abs_err;
    j["rel_err"] = e.rel_err;
    j["tolerance"] = e.tolerance;
    j["tolerance_kind"] = e.relative ? "relative" : "absolute";
    j["pass"] = e.pass;
    arr.push(std::move(j));
  }
  return arr;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream os(path);
  if (!os) throw Error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) os << ',';
    os << header[i];
  }
  os << '\n';
  char buf[40];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace dbarg
