#include "texp/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "texp/render.hpp"  // IoError

namespace texp {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string kind_string(const Magnitude& m) {
  switch (m.kind) {
    case Magnitude::Kind::ExpInvE: return "e^(1/e)";
    case Magnitude::Kind::ExpNegE: return "e^(-e)";
    default: return "rational";
  }
}

}  // namespace

CatalogEntry CatalogEntry::from_record(const RootRecord& rec, std::string timestamp) {
  CatalogEntry e;
  e.r_kind = kind_string(rec.z.r);
  if (rec.z.r.kind == Magnitude::Kind::Rational) {
    e.r_numer = rec.z.r.ratio.numerator();
    e.r_denom = rec.z.r.ratio.denominator();
  } else {
    e.r_numer = "1";
    e.r_denom = "1";
  }
  e.theta_pi_numer = rec.z.theta_pi.numerator();
  e.theta_pi_denom = rec.z.theta_pi.denominator();
  e.n = rec.id.n;
  e.m = rec.id.m;
  e.p = rec.id.p.value_or(0);
  e.value_re = rec.value.re_string();
  e.value_im = rec.value.im_string();
  e.prec = rec.prec;
  e.target_accuracy = rec.target_accuracy;
  e.residual_log = rec.residual_log.to_string(10);
  e.iterations = rec.iterations;
  e.stack = stack_name(rec.stack);
  e.region = region_name(rec.region);
  e.timestamp = std::move(timestamp);
  return e;
}

std::string CatalogEntry::to_json_line() const {
  ordered_json j;
  j["schemaVersion"] = schema_version;
  j["z"] = {{"rKind", r_kind},
            {"rNumer", r_numer},
            {"rDenom", r_denom},
            {"thetaPiNumer", theta_pi_numer},
            {"thetaPiDenom", theta_pi_denom}};
  j["id"] = {{"n", n}, {"m", m}};
  if (p > 0) j["id"]["p"] = p;
  j["value"] = {{"re", value_re}, {"im", value_im}};
  j["prec"] = prec;
  j["targetAccuracy"] = target_accuracy;
  j["residualLog"] = residual_log;
  j["iterations"] = iterations;
  j["stack"] = stack;
  j["region"] = region;
  j["timestamp"] = timestamp;
  return j.dump();
}

void catalog_append(const std::string& path, const CatalogEntry& entry) {
  std::ofstream f(path, std::ios::app | std::ios::binary);
  if (!f) throw IoError("cannot open catalog " + path);
  f << entry.to_json_line() << "\n";
  if (!f) throw IoError("catalog write failed: " + path);
}

CatalogLoad catalog_load(const std::string& path) {
  CatalogLoad out;
  std::ifstream f(path, std::ios::binary);
  if (!f) return out;  // absent catalog is an empty catalog
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ordered_json j = ordered_json::parse(line);
      CatalogEntry e;
      e.schema_version = j.at("schemaVersion").get<int>();
      const auto& z = j.at("z");
      e.r_kind = z.at("rKind").get<std::string>();
      e.r_numer = z.at("rNumer").get<std::string>();
      e.r_denom = z.at("rDenom").get<std::string>();
      e.theta_pi_numer = z.at("thetaPiNumer").get<std::string>();
      e.theta_pi_denom = z.at("thetaPiDenom").get<std::string>();
      e.n = j.at("id").at("n").get<long long>();
      e.m = j.at("id").at("m").get<long long>();
      e.p = j.at("id").value("p", 0);
      e.value_re = j.at("value").at("re").get<std::string>();
      e.value_im = j.at("value").at("im").get<std::string>();
      e.prec = j.at("prec").get<int>();
      e.target_accuracy = j.at("targetAccuracy").get<int>();
      e.residual_log = j.at("residualLog").get<std::string>();
      e.iterations = j.at("iterations").get<int>();
      e.stack = j.at("stack").get<std::string>();
      e.region = j.at("region").get<std::string>();
      e.timestamp = j.value("timestamp", "");
      out.entries.push_back(std::move(e));
    } catch (const std::exception&) {
      std::cerr << "warning: skipping corrupt catalog line " << lineno << " in " << path << "\n";
      ++out.skipped;
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_query(const std::string& path, const ZSpec& z, long long n,
                                        long long m, int p) {
  CatalogLoad all = catalog_load(path);
  std::string kind = kind_string(z.r);
  std::string rn = z.r.kind == Magnitude::Kind::Rational ? z.r.ratio.numerator() : "1";
  std::string rd = z.r.kind == Magnitude::Kind::Rational ? z.r.ratio.denominator() : "1";
  std::string tn = z.theta_pi.numerator(), td = z.theta_pi.denominator();
  std::vector<CatalogEntry> out;
  for (auto& e : all.entries) {
    if (e.r_kind == kind && e.r_numer == rn && e.r_denom == rd && e.theta_pi_numer == tn &&
        e.theta_pi_denom == td && e.n == n && e.m == m && e.p == p)
      out.push_back(e);
  }
  return out;
}

std::string default_catalog_path() {
  const char* env = std::getenv("TEXP_CATALOG");
  return env && *env ? env : "texp_catalog.jsonl";
}

}  // namespace texp
