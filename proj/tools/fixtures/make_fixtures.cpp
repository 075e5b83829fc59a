// Regenerates the shipped synthetic datasets:
//   make_fixtures <dir>  ->  <dir>/cointegrated.csv, <dir>/independent.csv

#include <filesystem>
#include <fstream>
#include <iostream>

#include "powsec/data/dataset.hpp"
#include "powsec/stats/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const auto write = [&](const char* name, const powsec::stats::Dataset& d) {
    std::ofstream(dir / name, std::ios::binary) << powsec::data::dataset_csv(d);
  };
  write("cointegrated.csv", powsec::stats::synthetic::cointegrated_dataset(20210110));
  write("independent.csv", powsec::stats::synthetic::independent_dataset(20141227));
  return 0;
}
