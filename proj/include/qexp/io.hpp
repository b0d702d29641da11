#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qexp/action.hpp"
#include "qexp/group.hpp"
#include "qexp/packing.hpp"
#include "qexp/spectral.hpp"

namespace qexp {

/// Minimal ordered JSON document used for all emitted output: keys keep
/// insertion order and floating-point values are printed with 17
/// significant digits, so identical results serialize to identical bytes.
class JsonValue {
 public:
  enum class Kind { object, array, string, number, integer, uinteger, boolean };

  JsonValue() : kind_(Kind::object) {}
  static JsonValue object();
  static JsonValue array();
  static JsonValue str(std::string s);
  static JsonValue num(double v);
  static JsonValue integer(long long v);
  static JsonValue uinteger(std::uint64_t v);
  static JsonValue boolean(bool v);

  JsonValue& add(const std::string& key, JsonValue v);  // object member
  JsonValue& push(JsonValue v);                          // array element

  std::string dump() const;                 // compact JSON
  std::string dump_csv() const;             // flattened key,value rows

 private:
  void write(std::string& out) const;
  void flatten(const std::string& prefix,
               std::vector<std::pair<std::string, std::string>>& out) const;

  Kind kind_;
  std::vector<std::pair<std::string, JsonValue>> members_;
  std::vector<JsonValue> elements_;
  std::string string_;
  double number_ = 0.0;
  long long integer_ = 0;
  std::uint64_t uinteger_ = 0;
  bool boolean_ = false;
};

/// %.17g, the shortest representation that round-trips any double here.
std::string format_double(double v);

std::string method_name(Method m);

JsonValue solver_options_json(const SolverOptions& opts);
JsonValue spectral_report_json(const SpectralReport& r);
JsonValue tuple_json(const UnitaryTuple& u);
JsonValue action_json(const GroupAction& a);
JsonValue packing_result_json(const PackingResult& p, bool save_tuples);
JsonValue certification_json(const CertificationReport& r);

/// Parsing. All readers throw std::invalid_argument with a message naming
/// the offending field.
UnitaryTuple parse_tuple(const std::string& json_text);
UnitaryTuple read_tuple_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

GroupAction parse_action(const std::string& json_text);

/// Group spec: {"kind": "sl3k_f2"|"cyclic"|"symmetric_group"|"custom_perm",
/// "k": int?, "m": int?, "generators": [[int]]?}.
FiniteGroupTable group_from_spec_json(const std::string& json_text);

/// Loadable subset of a packing result: parameters plus kept tuples
/// (embedded, or regenerated from kept_seeds).
struct LoadedPacking {
  int n = 0;
  int dim = 0;
  double eps = 0.0;
  bool symmetric = false;
  std::vector<UnitaryTuple> kept;
};
LoadedPacking parse_packing(const std::string& json_text);

}  // namespace qexp
