#pragma once

#include <functional>
#include <string>
#include <vector>

namespace acceptance {

struct Result {
  int id = 0;
  bool pass = false;
  std::string title;
  std::string detail;
  double seconds = 0;
};

/// Runs the requested criteria (all of 1..10 when empty), reporting each as it finishes.
std::vector<Result> run(const std::vector<int>& ids, const std::function<void(const Result&)>& on_result = {});

std::string format_line(const Result& r, bool with_time);

}  // namespace acceptance
