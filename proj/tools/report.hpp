#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace tri::cli {

/// Human-readable lines plus a JSON document with a fixed key order.
class Report {
 public:
  explicit Report(std::string command);

  nlohmann::ordered_json& data() { return data_; }
  void line(std::string text) { lines_.push_back(std::move(text)); }
  void set_verdict(bool pass) { pass_ = pass; }
  bool verdict() const { return pass_; }

  void print(std::ostream& os, bool json) const;

 private:
  std::string command_;
  nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
  std::vector<std::string> lines_;
  bool pass_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tri::cli
