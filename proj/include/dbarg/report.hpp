#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dbarg/verify.hpp"

namespace dbarg {

// Insertion-ordered JSON tree with fixed float formatting (17 significant
// digits) so identical runs produce byte-identical reports.
class Json {
 public:
  Json() = default;
  Json(bool v) : type_(Type::Bool), bool_(v) {}
  Json(long v) : type_(Type::Int), int_(v) {}
  Json(int v) : type_(Type::Int), int_(v) {}
  Json(double v) : type_(Type::Real), real_(v) {}
  Json(const char* s) : type_(Type::Str), str_(s) {}
  Json(std::string s) : type_(Type::Str), str_(std::move(s)) {}

  static Json array() {
    Json j;
    j.type_ = Type::Arr;
    return j;
  }
  static Json object() {
    Json j;
    j.type_ = Type::Obj;
    return j;
  }

  Json& operator[](const std::string& key);  // object field (created on demand)
  void push(Json v);                         // array append

  std::string dump(int indent = 2) const;

  static std::string format_double(double v);

 private:
  enum class Type { Null, Bool, Int, Real, Str, Arr, Obj };
  void render(std::string* out, int indent, int depth) const;

  Type type_ = Type::Null;
  bool bool_ = false;
  long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;
};

Json to_json(const VerificationReport& report);

// CSV with a mandatory header row and %.17g floats.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace dbarg
