#include "report.hpp"

#include <ostream>

namespace tri::cli {

Report::Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void Report::print(std::ostream& os, bool json) const {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  if (json) {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["verdict"] = pass_ ? "pass" : "fail";
    doc["result"] = data_;
    doc["timing_ms"] = ms;
    os << doc.dump(2) << '\n';
    return;
  }
  os << command_ << '\n';
  for (const auto& l : lines_) os << "  " << l << '\n';
  os << "verdict: " << (pass_ ? "pass" : "fail") << '\n';
}

}  // namespace tri::cli
