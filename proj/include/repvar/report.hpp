#pragma once

// JSON reports. Keys keep insertion order so that identical runs produce
// byte-identical output; the runtime is only recorded on request.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "repvar/canonical.hpp"

namespace repvar {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // name, content
  Json results = Json::object();
  std::vector<std::string> assumptions;
  std::optional<std::uint64_t> seed;
  std::optional<double> runtime_seconds;

  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

Json to_json(const DimVec& d, const Quiver& q);
Json to_json(const Mat& m);
Json to_json(const TMat& m);
Json to_json(const Cochain& z, const Quiver& q);
Json to_json(const ValidationReport& r, const BoundQuiver& bq);
Json to_json(const TangentReport& t, const Quiver& q);
Json to_json(const PeriodReport& p, const Quiver& q);
Json to_json(const std::vector<Summand>& s);
Json to_json(const SplitOrWitness& r, const Quiver& q);
Json to_json(const SmoothnessCertificate& c, const Quiver& q);
Json to_json(const std::vector<ProbeValue>& probes);
Json to_json(const Bisection& b, const Quiver& q);
Json to_json(const ScanReport& s, const Quiver& q);

}  // namespace repvar
