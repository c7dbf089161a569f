#pragma once

#include <json.hpp>

#include "braidlab/dimledger.hpp"
#include "braidlab/flaglab.hpp"
#include "braidlab/goodrep.hpp"
#include "braidlab/weyl.hpp"

namespace braidlab {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json root_system_json(const RootSystem& rs);
nlohmann::json classes_json(const WeylGroup& W, const Twist& t,
                            const std::vector<TwistedClass>& classes);
nlohmann::json certificate_json(const WeylGroup& W, const GoodRepCertificate& cert);
nlohmann::json report_json(int n, int q, int k, const GoodRepCertificate& cert,
                           const WeylGroup& W, const std::vector<CheckReport>& checks,
                           long long runtime_ms);

}  // namespace braidlab
