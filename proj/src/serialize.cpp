#include "braidlab/serialize.hpp"

namespace braidlab {

using nlohmann::json;

json root_system_json(const RootSystem& rs) {
  json j;
  j["schema"] = kSchemaVersion;
  j["type"] = rs.label();
  j["rank"] = rs.rank();
  json roots = json::array();
  for (int r = 0; r < rs.num_roots(); ++r) {
    json v = json::array();
    for (int i = 0; i < rs.rank(); ++i) v.push_back(rs.root(r)[i]);
    roots.push_back(v);
  }
  j["num_positive"] = rs.num_positive();
  j["roots"] = roots;
  return j;
}

json classes_json(const WeylGroup& W, const Twist& t,
                  const std::vector<TwistedClass>& classes) {
  json j;
  j["schema"] = kSchemaVersion;
  j["type"] = W.roots().label();
  j["twist"] = t.name;
  json rows = json::array();
  for (const auto& c : classes) {
    rows.push_back({{"class_id", c.id},
                    {"size", c.members.size()},
                    {"is_elliptic", c.is_elliptic},
                    {"min_length", c.min_length},
                    {"representative", W.word_string(c.representative())}});
  }
  j["classes"] = rows;
  return j;
}

json certificate_json(const WeylGroup& W, const GoodRepCertificate& cert) {
  json j;
  j["schema"] = kSchemaVersion;
  j["type"] = W.roots().label();
  j["twist"] = cert.twist.name;
  j["class_id"] = cert.class_id;
  j["rep_word"] = W.word_string(cert.w);
  j["length"] = cert.length;
  json I = json::array();
  for (int s = 0; s < W.rank(); ++s)
    if ((cert.I_mask >> s) & 1) I.push_back(s + 1);
  j["I"] = I;
  j["d"] = cert.d;
  j["alpha_witness"] = W.word_string(cert.alpha_witness);
  return j;
}

json report_json(int n, int q, int k, const GoodRepCertificate& cert, const WeylGroup& W,
                 const std::vector<CheckReport>& checks, long long runtime_ms) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = n;
  j["q"] = q;
  j["k"] = k;
  j["cert_id"] = cert.class_id;
  j["certificate"] = certificate_json(W, cert);
  json counts;
  long long skipped = 0;
  json violations = json::array();
  for (const auto& c : checks) {
    for (const auto& [key, val] : c.stats) counts[c.name + "." + key] = val;
    skipped += c.skipped;
    for (const auto& v : c.violations) violations.push_back(c.name + ": " + v);
  }
  j["counts"] = counts;
  j["orbit_count"] = counts.contains("orbit_report.orbit_count")
                         ? counts["orbit_report.orbit_count"]
                         : json(nullptr);
  j["violations"] = violations;
  j["skipped"] = skipped;
  j["runtime_ms"] = runtime_ms;
  return j;
}

}  // namespace braidlab
