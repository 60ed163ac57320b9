#include <iostream>
#include <string>
#include <vector>

#include "acceptance_checks.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  bool all = true;
  acceptance::run(ids, [&](const acceptance::Result& r) {
    std::cout << acceptance::format_line(r, true) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
