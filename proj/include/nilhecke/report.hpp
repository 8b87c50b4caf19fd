#pragma once
// Timed pass/fail records produced by the verification suites, and their
// aggregate report.  Serialization to JSON lives in the command-line tool;
// the library side stays dependency-free.

#include <string>
#include <vector>

namespace nilhecke {

struct Record {
  std::string suite;    // registered suite name
  std::string lemma;    // short tag of the statement verified
  std::string params;   // bounds actually used
  bool pass = true;
  std::string witness;  // first failure detail; empty when passing
  long long millis = 0;
};

struct Report {
  std::string version;
  std::string config;  // echo of the resolved configuration
  std::vector<Record> records;

  int total() const { return static_cast<int>(records.size()); }
  int failed() const {
    int k = 0;
    for (const Record& r : records)
      if (!r.pass) ++k;
    return k;
  }
  bool ok() const { return failed() == 0; }
};

}  // namespace nilhecke
