#pragma once

#include <string>
#include <vector>

#include "texp/solver.hpp"

namespace texp {

// Append-only JSON-lines root catalog. Duplicates are permitted; queries
// resolve to the latest matching line.
struct CatalogEntry {
  int schema_version = 1;
  std::string r_kind;        // "rational", "e^(1/e)", "e^(-e)"
  std::string r_numer, r_denom;
  std::string theta_pi_numer, theta_pi_denom;
  long long n = 0, m = 0;
  int p = 0;                 // 0 = absent
  std::string value_re, value_im;
  int prec = 0;
  int target_accuracy = 0;
  std::string residual_log;
  int iterations = 0;
  std::string stack, region;
  std::string timestamp;

  static CatalogEntry from_record(const RootRecord& rec, std::string timestamp);
  std::string to_json_line() const;  // without trailing newline
};

void catalog_append(const std::string& path, const CatalogEntry& entry);

struct CatalogLoad {
  std::vector<CatalogEntry> entries;
  int skipped = 0;  // corrupt lines
};

CatalogLoad catalog_load(const std::string& path);

// Exact-key filter on the z form and id; entries in file order (latest last).
std::vector<CatalogEntry> catalog_query(const std::string& path, const ZSpec& z, long long n,
                                        long long m, int p);

std::string default_catalog_path();

}  // namespace texp
