// Writes the golden corpus (fresh command output) into a directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "wcx/verify.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: wcx_golden DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& gc : wcx::golden_corpus()) {
    const auto r = wcx::run_command(gc.command, gc.options);
    if (r.exit_code != 0) {
      std::cerr << gc.name << ": " << r.err;
      return 1;
    }
    std::ofstream(dir / (gc.name + ".json"), std::ios::binary) << r.out;
  }
  std::cout << wcx::golden_corpus().size() << " files written to " << dir << "\n";
  return 0;
}
