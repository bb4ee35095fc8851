#include "texp/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "texp/catalog.hpp"
#include "texp/render.hpp"

namespace texp::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct ZFlags {
  std::string r = "2";
  std::string theta_pi = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("--z-r", r, "|z| as a rational p/q, or e^(1/e) / e^(-e)");
    cmd->add_option("--z-theta-pi", theta_pi, "Arg z as a rational multiple of pi");
  }
  ZSpec spec() const {
    return normalize(Magnitude::parse(r), BigRational(theta_pi));
  }
};

ordered_json z_json(const ZSpec& z) {
  ordered_json j;
  switch (z.r.kind) {
    case Magnitude::Kind::ExpInvE: j["rKind"] = "e^(1/e)"; break;
    case Magnitude::Kind::ExpNegE: j["rKind"] = "e^(-e)"; break;
    default: j["rKind"] = "rational"; break;
  }
  j["rNumer"] = z.r.kind == Magnitude::Kind::Rational ? z.r.ratio.numerator() : "1";
  j["rDenom"] = z.r.kind == Magnitude::Kind::Rational ? z.r.ratio.denominator() : "1";
  j["thetaPiNumer"] = z.theta_pi.numerator();
  j["thetaPiDenom"] = z.theta_pi.denominator();
  return j;
}

ordered_json record_json(const RootRecord& rec) {
  ordered_json j;
  j["z"] = z_json(rec.z);
  j["id"] = {{"n", rec.id.n}, {"m", rec.id.m}};
  if (rec.id.p) j["id"]["p"] = *rec.id.p;
  j["value"] = {{"re", rec.value.re_string()}, {"im", rec.value.im_string()}};
  j["prec"] = rec.prec;
  j["targetAccuracy"] = rec.target_accuracy;
  j["residualLog"] = rec.residual_log.to_string(10);
  j["residualExp"] = rec.residual_exp ? ordered_json(rec.residual_exp->to_string(10))
                                      : ordered_json("overflow");
  j["iterations"] = rec.iterations;
  j["relaxation"] = rec.relaxation;
  j["stack"] = stack_name(rec.stack);
  j["region"] = region_name(rec.region);
  j["converged"] = rec.converged;
  return j;
}

std::string now_utc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Magnitude magnitude_from_json(const ordered_json& zj) {
  std::string kind = zj.at("rKind").get<std::string>();
  if (kind == "e^(1/e)") return Magnitude::exp_inv_e();
  if (kind == "e^(-e)") return Magnitude::exp_neg_e();
  return Magnitude::rational(
      BigRational(zj.at("rNumer").get<std::string>() + "/" + zj.at("rDenom").get<std::string>()));
}

RootRecord record_from_json(const ordered_json& j) {
  RootRecord rec;
  rec.z = ZSpec{magnitude_from_json(j.at("z")),
                BigRational(j.at("z").at("thetaPiNumer").get<std::string>() + "/" +
                            j.at("z").at("thetaPiDenom").get<std::string>())};
  rec.id.n = j.at("id").at("n").get<long long>();
  rec.id.m = j.at("id").at("m").get<long long>();
  if (j.at("id").contains("p")) rec.id.p = j.at("id").at("p").get<int>();
  rec.prec = j.at("prec").get<int>();
  rec.target_accuracy = j.at("targetAccuracy").get<int>();
  rec.value = PrecComplex(j.at("value").at("re").get<std::string>(),
                          j.at("value").at("im").get<std::string>(), rec.prec);
  rec.residual_log = BigFloat(j.at("residualLog").get<std::string>(), 10);
  rec.iterations = j.value("iterations", 0);
  rec.relaxation = j.value("relaxation", 1);
  rec.stack = stack_from_name(j.at("stack").get<std::string>());
  rec.region = region_from_name(j.at("region").get<std::string>());
  rec.converged = j.value("converged", true);
  return rec;
}

bool parse_window(const std::string& text, double& cx, double& cy, double& size) {
  return std::sscanf(text.c_str(), "%lf,%lf,%lf", &cx, &cy, &size) == 3;
}

void store_record(const RootRecord& rec, const std::string& path, std::ostream& err) {
  try {
    catalog_append(path, CatalogEntry::from_record(rec, now_utc()));
  } catch (const IoError& e) {
    err << "warning: " << e.what() << "\n";
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fixed points of the 2-cycle iterated exponential w = z^(z^w)"};
  app.require_subcommand(1);
  std::string catalog_path = default_catalog_path();
  app.add_option("--catalog", catalog_path, "catalog file (default $TEXP_CATALOG or texp_catalog.jsonl)");

  // classify
  auto* c_classify = app.add_subcommand("classify", "print the region tag of z");
  ZFlags z_classify;
  z_classify.attach(c_classify);

  // seed
  auto* c_seed = app.add_subcommand("seed", "branch-head iteration seed for branch m");
  ZFlags z_seed;
  z_seed.attach(c_seed);
  long long seed_m = 0, seed_n = 0;
  int seed_prec = 50;
  c_seed->add_option("--m", seed_m)->required();
  c_seed->add_option("--n", seed_n);
  c_seed->add_option("--prec", seed_prec);

  // root
  auto* c_root = app.add_subcommand("root", "solve one root {n,m[,p]}");
  ZFlags z_root;
  z_root.attach(c_root);
  long long root_n = 0, root_m = 0;
  int root_p = 0, root_prec = 50, root_acc = 30, root_iters = 50, root_relax = 0;
  bool root_nostore = false;
  c_root->add_option("--n", root_n)->required();
  c_root->add_option("--m", root_m)->required();
  c_root->add_option("--p", root_p);
  c_root->add_option("--prec", root_prec);
  c_root->add_option("--acc", root_acc);
  c_root->add_option("--max-iters", root_iters);
  c_root->add_option("--relax", root_relax);
  c_root->add_flag("--no-store", root_nostore);

  // sweep
  auto* c_sweep = app.add_subcommand("sweep", "sequential roots along a branch");
  ZFlags z_sweep;
  z_sweep.attach(c_sweep);
  long long sw_m = 0, sw_from = 1, sw_to = 10;
  int sw_prec = 50, sw_acc = 30, sw_iters = 50, sw_relax = 0;
  bool sw_nostore = false;
  std::string sw_csv;
  c_sweep->add_option("--m", sw_m)->required();
  c_sweep->add_option("--n-from", sw_from)->required();
  c_sweep->add_option("--n-to", sw_to)->required();
  c_sweep->add_option("--prec", sw_prec);
  c_sweep->add_option("--acc", sw_acc);
  c_sweep->add_option("--max-iters", sw_iters);
  c_sweep->add_option("--relax", sw_relax);
  c_sweep->add_option("--csv", sw_csv, "also write records as CSV");
  c_sweep->add_flag("--no-store", sw_nostore);

  // basin
  auto* c_basin = app.add_subcommand("basin", "basin-of-attraction raster for a sheet");
  ZFlags z_basin;
  z_basin.attach(c_basin);
  long long ba_n = 0, ba_m = 0;
  std::string ba_window = "0,0,20", ba_grid = "40x40", ba_out;
  int ba_prec = 30, ba_acc = 25, ba_iters = 80, ba_relax = 0;
  c_basin->add_option("--n", ba_n)->required();
  c_basin->add_option("--m", ba_m)->required();
  c_basin->add_option("--window", ba_window, "cx,cy,size");
  c_basin->add_option("--grid", ba_grid, "WxH");
  c_basin->add_option("--out", ba_out, "output PPM path")->required();
  c_basin->add_option("--prec", ba_prec);
  c_basin->add_option("--acc", ba_acc);
  c_basin->add_option("--max-iters", ba_iters);
  c_basin->add_option("--relax", ba_relax);

  // contour
  auto* c_contour = app.add_subcommand("contour", "contour diagram as SVG");
  ZFlags z_contour;
  z_contour.attach(c_contour);
  std::string co_window = "0,0,20", co_layers = "real,imag", co_out;
  int co_grid = 320, co_prec = 30;
  bool co_from_catalog = false;
  c_contour->add_option("--window", co_window, "cx,cy,size");
  c_contour->add_option("--layers", co_layers,
                        "comma list: real,imag,branch,leaf,seeds,roots,delims");
  c_contour->add_option("--grid", co_grid);
  c_contour->add_option("--prec", co_prec);
  c_contour->add_option("--out", co_out, "output SVG path")->required();
  c_contour->add_flag("--roots-from-catalog", co_from_catalog);

  // verify
  auto* c_verify = app.add_subcommand("verify", "recompute residuals for a stored record");
  std::string vf_record;
  c_verify->add_option("--record", vf_record, "record JSON file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (c_classify->parsed()) {
    out << region_name(classify(z_classify.spec())) << "\n";
    return 0;
  }

  if (c_seed->parsed()) {
    ZContext ctx = ZContext::make(z_seed.spec(), seed_prec);
    PrecComplex s = seed(SheetIndex{seed_n, seed_m}, ctx);
    ordered_json j;
    j["z"] = z_json(ctx.z);
    j["m"] = seed_m;
    j["n"] = seed_n;
    j["seed"] = {{"re", s.re_string()}, {"im", s.im_string()}};
    j["prec"] = seed_prec;
    out << j.dump() << "\n";
    return 0;
  }

  if (c_root->parsed()) {
    IterationConfig cfg{root_prec, root_acc, root_iters,
                        root_relax > 0 ? std::optional<int>(root_relax) : std::nullopt};
    ZContext ctx = ZContext::make(z_root.spec(), cfg.working_prec);
    RootId id{root_n, root_m, root_p > 0 ? std::optional<int>(root_p) : std::nullopt};
    RootRecord rec = solve_root(id, ctx, cfg);
    out << record_json(rec).dump() << "\n";
    if (!root_nostore) store_record(rec, catalog_path, err);
    return 0;
  }

  if (c_sweep->parsed()) {
    IterationConfig cfg{sw_prec, sw_acc, sw_iters,
                        sw_relax > 0 ? std::optional<int>(sw_relax) : std::nullopt};
    ZContext ctx = ZContext::make(z_sweep.spec(), cfg.working_prec);
    SweepResult res = solve_sweep(sw_m, sw_from, sw_to, ctx, cfg);
    for (const RootRecord& rec : res.records) {
      out << record_json(rec).dump() << "\n";
      if (!sw_nostore) store_record(rec, catalog_path, err);
    }
    if (!sw_csv.empty()) {
      std::ofstream csv(sw_csv, std::ios::binary);
      if (!csv) throw IoError("cannot open " + sw_csv);
      csv << "n,m,p,re,im,iterations,residualLog\n";
      for (const RootRecord& rec : res.records)
        csv << rec.id.n << "," << rec.id.m << "," << (rec.id.p ? std::to_string(*rec.id.p) : "")
            << "," << rec.value.re_string() << "," << rec.value.im_string() << ","
            << rec.iterations << "," << rec.residual_log.to_string(10) << "\n";
    }
    for (const SweepFailure& f : res.failures)
      err << "divergence at n=" << f.n << ": " << f.reason << "\n";
    return res.failures.empty() ? 0 : 3;
  }

  if (c_basin->parsed()) {
    double cx, cy, size;
    int gw, gh;
    if (!parse_window(ba_window, cx, cy, size)) throw std::invalid_argument("bad --window");
    if (std::sscanf(ba_grid.c_str(), "%dx%d", &gw, &gh) != 2)
      throw std::invalid_argument("bad --grid");
    IterationConfig cfg{ba_prec, ba_acc, ba_iters,
                        ba_relax > 0 ? std::optional<int>(ba_relax) : std::nullopt};
    ZContext ctx = ZContext::make(z_basin.spec(), cfg.working_prec);
    RootId id{ba_n, ba_m, std::nullopt};
    BasinResult res = basin_scan(cx, cy, size, gw, gh, id, ctx, cfg);
    render_basin(res, ba_out);
    ordered_json j;
    j["z"] = z_json(ctx.z);
    j["grid"] = {{"w", gw}, {"h", gh}};
    j["attractors"] = ordered_json::array();
    for (size_t i = 0; i < res.attractors.size(); ++i)
      j["attractors"].push_back({{"re", res.attractors[i].re_string()},
                                 {"im", res.attractors[i].im_string()},
                                 {"cells", res.counts[i]}});
    j["divergent"] = res.divergent;
    j["out"] = ba_out;
    out << j.dump() << "\n";
    return 0;
  }

  if (c_contour->parsed()) {
    double cx, cy, size;
    if (!parse_window(co_window, cx, cy, size)) throw std::invalid_argument("bad --window");
    ZContext ctx = ZContext::make(z_contour.spec(), co_prec);
    PlotSpec spec;
    spec.center_re = cx;
    spec.center_im = cy;
    spec.width = spec.height = size;
    spec.grid = co_grid;
    std::stringstream ls(co_layers);
    std::string item;
    while (std::getline(ls, item, ',')) {
      if (item == "real") spec.layers.insert(Layer::RealContours);
      else if (item == "imag") spec.layers.insert(Layer::ImagContours);
      else if (item == "branch") spec.layers.insert(Layer::BranchTrace);
      else if (item == "leaf") spec.layers.insert(Layer::LeafTrace);
      else if (item == "seeds") spec.layers.insert(Layer::Seeds);
      else if (item == "roots") spec.layers.insert(Layer::Roots);
      else if (item == "delims") spec.layers.insert(Layer::BranchDelimiters);
      else if (!item.empty()) throw std::invalid_argument("unknown layer: " + item);
    }
    std::vector<RootRecord> roots;
    if (co_from_catalog) {
      CatalogLoad all = catalog_load(catalog_path);
      ordered_json zj = z_json(ctx.z);
      for (const CatalogEntry& e : all.entries) {
        if (e.r_kind != zj["rKind"] || e.r_numer != zj["rNumer"] || e.r_denom != zj["rDenom"] ||
            e.theta_pi_numer != zj["thetaPiNumer"] || e.theta_pi_denom != zj["thetaPiDenom"])
          continue;
        RootRecord rec;
        rec.z = ctx.z;
        rec.id = RootId{e.n, e.m, e.p > 0 ? std::optional<int>(e.p) : std::nullopt};
        rec.value = PrecComplex(e.value_re, e.value_im, std::max(e.prec, kMinPrecDigits));
        rec.residual_log = BigFloat(e.residual_log, 10);
        rec.stack = stack_from_name(e.stack);
        rec.region = region_from_name(e.region);
        rec.prec = e.prec;
        roots.push_back(std::move(rec));
      }
    }
    render_contour(spec, ctx, roots, co_out);
    out << "wrote " << co_out << "\n";
    return 0;
  }

  if (c_verify->parsed()) {
    std::ifstream f(vf_record, std::ios::binary);
    if (!f) throw IoError("cannot open " + vf_record);
    ordered_json j = ordered_json::parse(f, nullptr, true);
    RootRecord rec = record_from_json(j);
    ZContext ctx = ZContext::make(rec.z, rec.prec);
    Residuals res = verify_root(rec, ctx);
    ordered_json o;
    o["residualLog"] = res.residual_log.to_string(10);
    o["residualExp"] = res.residual_exp ? ordered_json(res.residual_exp->to_string(10))
                                        : ordered_json("overflow");
    out << o.dump() << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 4;
  } catch (const DivergenceError& e) {
    err << "non-convergence: " << e.what() << " (last iterate " << e.last_re << " + "
        << e.last_im << "i after " << e.iterations << " iterations)\n";
    return 3;
  } catch (const SeedFailure& e) {
    err << "non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace texp::cli
