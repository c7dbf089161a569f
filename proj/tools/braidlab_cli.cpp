#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "braidlab/serialize.hpp"

using namespace braidlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitExistence = 3;
constexpr int kExitResource = 4;

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream f(path);
  f << content << "\n";
}

int cmd_classes(const std::string& type, int rank, const std::string& twist,
                const std::string& out) {
  auto rs = RootSystem::build(cartan_type_from_char(type.at(0)), rank);
  WeylGroup W(std::move(rs));
  Twist t = twist_by_name(W.roots(), twist);
  auto classes = twisted_conjugacy_classes(W, t);
  write_out(out, classes_json(W, t, classes).dump(2));
  return kExitOk;
}

int cmd_goodrep(const std::string& type, int rank, const std::string& twist, int dmax,
                const std::string& out) {
  auto rs = RootSystem::build(cartan_type_from_char(type.at(0)), rank);
  WeylGroup W(std::move(rs));
  Twist t = twist_by_name(W.roots(), twist);
  auto classes = twisted_conjugacy_classes(W, t);
  nlohmann::json certs = nlohmann::json::array();
  bool existence_failure = false;
  for (const auto& cls : classes) {
    int bound = dmax > 0 ? dmax : default_d_max(W, t, cls.representative());
    auto cert = canonical_good_rep(W, cls, bound);
    if (!cert) {
      certs.push_back({{"class_id", cls.id}, {"status", "EXISTENCE-FAILURE"}});
      existence_failure = true;
      continue;
    }
    if (!reverify_certificate(W, *cert)) {
      certs.push_back({{"class_id", cls.id}, {"status", "REVERIFY-FAILURE"}});
      existence_failure = true;
      continue;
    }
    certs.push_back(certificate_json(W, *cert));
  }
  write_out(out, certs.dump(2));
  return existence_failure ? kExitExistence : kExitOk;
}

int cmd_dimtable(int n, const std::string& out) {
  DimLedger ledger(n);
  write_out(out, ledger.to_csv());
  if (!ledger.all_identities_hold() || !ledger.pairing_unique()) return kExitViolation;
  return kExitOk;
}

int cmd_flagcheck(int n, int q, int k, const std::string& suite, const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  FlagLab lab(n, q, k);
  const WeylGroup& W = lab.weyl();
  Twist id = identity_twist(W.roots());
  auto classes = twisted_conjugacy_classes(W, id);
  nlohmann::json reports = nlohmann::json::array();
  bool violation = false;
  for (const auto& cls : classes) {
    auto cert = canonical_good_rep(W, cls, default_d_max(W, id, cls.representative()));
    if (!cert) return kExitExistence;
    CertSets& cs = lab.cert_sets(cert->w, cert->I_mask);
    std::vector<CheckReport> checks;
    if (k == 1) {
      if (suite == "all" || suite == "orbits" || suite == "isotropy") {
        auto yt = lab.enumerate_Ytilde(cs);
        checks.push_back(lab.orbit_report(cs, yt));
        if (suite != "orbits") checks.push_back(lab.bundle_check(cs, yt));
      }
      if (suite == "all" || suite == "eta") checks.push_back(lab.eta_check(cs));
      if (suite == "all" || suite == "isotropy")
        checks.push_back(lab.isotropy_full_flag(cs));
    } else {
      auto xd = lab.enumerate_X(cs);
      auto ck = lab.x_stabilizer_check(cs, xd);
      ck.stats["X"] = xd.count_X;
      checks.push_back(std::move(ck));
    }
    for (const auto& c : checks) violation = violation || !c.ok();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    reports.push_back(report_json(n, q, k, *cert, W, checks, ms));
  }
  write_out(out, reports.dump(2));
  return violation ? kExitViolation : kExitOk;
}

int cmd_slicecheck(int n, int q, const std::string& out) {
  FlagLab lab(n, q, 1);
  const WeylGroup& W = lab.weyl();
  DimLedger ledger(n);
  nlohmann::json rows = nlohmann::json::array();
  bool violation = false;
  for (const auto& rec : ledger.records()) {
    CertSets& cs = lab.cert_sets(rec.w, uint32_t(fixed_root_data(
                                             W, identity_twist(W.roots()), rec.w)
                                             .parabolic_mask));
    auto ck = lab.slice_check(cs, rec.lambda);
    violation = violation || !ck.ok();
    nlohmann::json row = {{"lambda", partition_string(rec.lambda)},
                          {"slice", ck.stats["slice"]},
                          {"intersection", ck.stats["intersection"]},
                          {"ok", ck.ok()}};
    if (ck.stats.count("intersection_ext"))
      row["intersection_ext"] = ck.stats["intersection_ext"];
    rows.push_back(row);
  }
  write_out(out, rows.dump(2));
  return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl class, braid certificate and flag variety toolkit"};
  app.require_subcommand(1);

  std::string type = "A", twist = "id", suite = "all", out;
  int rank = 2, n = 2, q = 2, k = 1, dmax = 0;

  auto add_common = [&](CLI::App* c) { c->add_option("--out", out, "output path"); };

  auto* c_classes = app.add_subcommand("classes", "twisted conjugacy class table");
  c_classes->add_option("--type", type);
  c_classes->add_option("--rank", rank);
  c_classes->add_option("--twist", twist);
  add_common(c_classes);

  auto* c_goodrep = app.add_subcommand("goodrep", "good position certificates");
  c_goodrep->add_option("--type", type);
  c_goodrep->add_option("--rank", rank);
  c_goodrep->add_option("--twist", twist);
  c_goodrep->add_option("--dmax", dmax);
  add_common(c_goodrep);

  auto* c_dim = app.add_subcommand("dimtable", "dimension identity table");
  c_dim->add_option("--n", n)->check(CLI::Range(2, 6));
  add_common(c_dim);

  auto* c_flag = app.add_subcommand("flagcheck", "flag variety check suites");
  c_flag->add_option("--n", n)->check(CLI::Range(2, 4));
  c_flag->add_option("--q", q);
  c_flag->add_option("--k", k)->check(CLI::Range(1, 2));
  c_flag->add_option("--suite", suite);
  add_common(c_flag);

  auto* c_slice = app.add_subcommand("slicecheck", "braid slice vs unipotent classes");
  c_slice->add_option("--n", n)->check(CLI::Range(2, 3));
  c_slice->add_option("--q", q);
  add_common(c_slice);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_classes->parsed()) return cmd_classes(type, rank, twist, out);
    if (c_goodrep->parsed()) return cmd_goodrep(type, rank, twist, dmax, out);
    if (c_dim->parsed()) return cmd_dimtable(n, out);
    if (c_flag->parsed()) return cmd_flagcheck(n, q, k, suite, out);
    if (c_slice->parsed()) return cmd_slicecheck(n, q, out);
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
