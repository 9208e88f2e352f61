#pragma once

#include "core/json_io.hpp"

#include <map>
#include <string>

namespace jetinv::api {

class Params {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::string get_str(const std::string& key, const std::string& fallback = "") const;
  bool flag(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

struct Output {
  Json json;
  std::string text;
  bool violated = false;  // a checked expectation failed
};

// Dispatches a command such as "group-matrix" or "orbit-codim-report".
// Throws InvalidInput, ResourceLimit or other exceptions on failure.
Output run_command(const std::string& name, const Params& params);

}  // namespace jetinv::api
