#include "repvar/report.hpp"

#include <cstdio>

namespace repvar {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  Json in = Json::array();
  for (const auto& [name, content] : inputs) in.push_back({{"name", name}, {"fnv1a64", hex64(fnv1a64(content))}});
  j["inputs"] = in;
  if (seed) j["seed"] = *seed;
  j["results"] = results;
  j["assumptions"] = assumptions;
  if (runtime_seconds) j["runtime_seconds"] = *runtime_seconds;
  return j;
}

namespace {

Json entry(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const DimVec& d, const Quiver& q) {
  Json j = Json::object();
  for (std::size_t x = 0; x < d.size(); ++x) j[q.vertex_name(x)] = d[x];
  return j;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Coefficient matrices C_0, C_1, ... of C_0 + t C_1 + ...
Json to_json(const TMat& m) {
  Json cs = Json::array();
  for (std::size_t k = 0; k < m.order(); ++k) cs.push_back(to_json(m.coeff(k)));
  return cs;
}

Json to_json(const Cochain& z, const Quiver& q) {
  Json j = Json::object();
  for (std::size_t a = 0; a < z.size(); ++a) j[q.arrow(a).name] = to_json(z[a]);
  return j;
}

Json to_json(const ValidationReport& r, const BoundQuiver& bq) {
  Json pairs = Json::array();
  for (const auto& p : r.admissibility.pairs)
    pairs.push_back({{"source", bq.quiver.vertex_name(p.source)},
                     {"target", bq.quiver.vertex_name(p.target)},
                     {"paths_of_bound_length", p.paths_of_bound_length},
                     {"ideal_rank", p.ideal_rank},
                     {"contained", p.contained}});
  return {{"valid", r.valid()},
          {"triangular", r.triangular},
          {"relation_issues", r.relation_issues},
          {"admissible", r.admissibility.admissible},
          {"bound", r.admissibility.bound},
          {"pairs", pairs},
          {"warnings", r.warnings}};
}

Json to_json(const TangentReport& t, const Quiver& q) {
  return {{"d", to_json(t.d, q)},
          {"dimT", t.dim_t},
          {"orbit", t.orbit_dim},
          {"ext1", t.ext1},
          {"hom", t.hom},
          {"vdim", t.vdim},
          {"a", t.a},
          {"flags", t.flags},
          {"ext2_euler", opt(t.ext2_euler)},
          {"ext2_resolution", opt(t.ext2_resolution)},
          {"verdict", t.verdict}};
}

Json to_json(const PeriodReport& p, const Quiver& q) {
  Json orbit = Json::array();
  for (const auto& d : p.orbit) orbit.push_back(to_json(d, q));
  return {{"periodic", p.periodic},
          {"period", p.periodic ? Json(p.period) : Json(nullptr)},
          {"hit_projective", p.hit_projective},
          {"orbit", orbit}};
}

Json to_json(const std::vector<Summand>& s) {
  Json out = Json::array();
  for (const auto& x : s) {
    Json maps = Json::object();
    for (std::size_t a = 0; a < x.module.maps().size(); ++a)
      maps[x.module.quiver().arrow(a).name] = to_json(x.module.map(a));
    out.push_back({{"dim", to_json(x.module.dim(), x.module.quiver())},
                   {"multiplicity", x.multiplicity},
                   {"maps", maps}});
  }
  return out;
}

Json to_json(const SplitOrWitness& r, const Quiver& q) {
  if (const auto* s = std::get_if<SplitResult>(&r)) {
    Json diag = Json::object();
    for (std::size_t a = 0; a < s->diagonal.maps().size(); ++a) diag[q.arrow(a).name] = to_json(s->diagonal.map(a));
    Json total = Json::array();
    for (const auto& g : s->total) total.push_back(to_json(g));
    return {{"outcome", "split"}, {"order", s->diagonal.order()}, {"steps", s->conjugators.size()},
            {"conjugator", total}, {"diagonal", diag}};
  }
  const auto& w = std::get<WitnessResult>(r);
  Json middle = Json::object();
  for (std::size_t a = 0; a < w.middle.maps().size(); ++a) middle[q.arrow(a).name] = to_json(w.middle.map(a));
  return {{"outcome", "witness"},
          {"level", w.level},
          {"z", to_json(w.z, q)},
          {"middle", {{"dim", to_json(w.middle.dim(), q)}, {"maps", middle}}}};
}

Json to_json(const SmoothnessCertificate& c, const Quiver& q) {
  return {{"issued", true},
          {"d", to_json(c.d, q)},
          {"d_u", to_json(c.d_u, q)},
          {"d_v", to_json(c.d_v, q)},
          {"hypotheses",
           {{"ext1_uv", c.ext1_uv}, {"idim_v", c.idim_v}, {"pdim_w", c.pdim_w}, {"pdim_u", c.pdim_u}}},
          {"bound_chain",
           {{"z_uu", c.z_uu},
            {"z_vv", c.z_vv},
            {"z_vu", c.z_vu},
            {"b_uv", c.b_uv},
            {"ext2_vu", c.ext2_vu},
            {"stratum_bound", c.stratum_bound},
            {"stratum_tangent", c.stratum_tangent},
            {"z_nn", c.z_nn},
            {"ext2_nn_resolution", c.ext2_nn_resolution},
            {"ext2_nn_euler", c.ext2_nn_euler},
            {"tangent_bound", c.tangent_bound},
            {"a", c.a}}},
          {"assumptions", c.assumptions}};
}

Json to_json(const std::vector<ProbeValue>& probes) {
  Json out = Json::array();
  for (const auto& p : probes)
    out.push_back({{"probe", p.name}, {"hom_n", p.hom_n}, {"hom_m", p.hom_m}, {"difference", p.difference()}});
  return out;
}

Json to_json(const Bisection& b, const Quiver& q) {
  Json s = Json::array();
  for (const auto& x : b.summands)
    s.push_back({{"dim", to_json(x.module.dim(), q)}, {"multiplicity", x.multiplicity}, {"pairing", x.pairing}});
  return {{"class", to_string(b.cls)}, {"summands", s}};
}

Json to_json(const ScanReport& s, const Quiver& q) {
  Json rows = Json::array();
  for (const auto& x : s.samples)
    rows.push_back({{"seed", x.seed},
                    {"periodic", x.period.periodic},
                    {"period", x.period.periodic ? Json(x.period.period) : Json(nullptr)},
                    {"hit_projective", x.period.hit_projective},
                    {"pdim", opt(x.pdim)},
                    {"bisection", to_json(x.bisection, q)},
                    {"consistent", x.consistent}});
  return {{"d", to_json(s.d, q)},
          {"max_period", s.max_period},
          {"samples", s.samples.size()},
          {"periodic", s.periodic_count()},
          {"consistent", s.consistent()},
          {"rows", rows}};
}

}  // namespace repvar
