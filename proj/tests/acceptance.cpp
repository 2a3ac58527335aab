// One line per acceptance criterion, in order. Exit status 1 if any fails.
#include "qschur/suites.hpp"

#include <cstdio>
#include <iostream>

using namespace qschur;

int main(int argc, char** argv) {
  struct Item {
    int no;
    const char* id;
    double budget;  // seconds
  };
  const Item items[] = {
      {1, "q-comb", 5},         {2, "calib-A2", 5},  {3, "oracle", 600},      {4, "lemma-n2", 10},
      {5, "shift", 10},         {6, "negBLM", 10},   {7, "CBmodule", 5},      {8, "chi", 30},
      {9, "transfer-A", 300},   {10, "negCBj", 120}, {11, "presentation", 900}, {12, "rank-one", 60},
      {13, "stabilization", 1200}, {14, "positivity", 1200}, {15, "embedding", 300},
  };
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (auto& it : items) {
    const Report r = run_suite(it.id);
    const bool in_time = r.seconds < it.budget;
    const bool ok = r.pass() && in_time;
    failed += !ok;
    std::printf("criterion %2d %-14s %s  checks=%ld failed=%ld time=%.1fs budget=%.0fs%s\n", it.no, it.id,
                ok ? "PASS" : "FAIL", r.checks, r.failed, r.seconds, it.budget, in_time ? "" : " (over budget)");
    if (!r.pass() || verbose) {
      for (auto& f : r.failures) std::printf("    failed: %s\n", f.c_str());
      for (auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of 15 criteria pass\n", 15 - failed);
  return failed ? 1 : 0;
}
