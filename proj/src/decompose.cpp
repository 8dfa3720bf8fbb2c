// Krull-Schmidt decomposition over finite fields and random module generation.

#include <algorithm>

#include "repvar/fp_poly.hpp"
#include "repvar/homology.hpp"
#include "repvar/representation.hpp"

namespace repvar {

namespace {

constexpr int kSplitTrials = 32;

Mat block_diagonal(const Morphism& f, Field field) {
  Mat r(field, 0, 0);
  for (const auto& fx : f) r = diag_sum(r, fx);
  return r;
}

void split(const Representation& m, Rng& rng, std::vector<Representation>& out) {
  if (m.is_zero()) return;
  const Field f = m.field();
  HomBasis end = hom_basis(m, m);
  if (end.dim() <= 1) {
    out.push_back(m);
    return;
  }
  for (int trial = 0; trial < kSplitTrials; ++trial) {
    Morphism phi;
    for (std::size_t x = 0; x < m.dim().size(); ++x) phi.emplace_back(f, m.dim(x), m.dim(x));
    for (const auto& b : end.basis) {
      Scalar c = Scalar::residue(f, static_cast<std::uint32_t>(draw(rng, f.characteristic())));
      for (std::size_t x = 0; x < phi.size(); ++x) phi[x] += b[x].scaled(c);
    }
    auto factors = factor(char_poly(block_diagonal(phi, f)), rng);
    if (factors.size() < 2) continue;
    // Generalised eigenspaces of phi are subrepresentations and M is their sum.
    for (const auto& [g, mult] : factors) {
      FpPoly power = FpPoly::constant(f.characteristic(), 1);
      for (std::size_t i = 0; i < mult; ++i) power = power * g;
      std::vector<Mat> spans;
      for (const auto& px : phi) spans.push_back(kernel_basis(evaluate(power, px)));
      split(subrepresentation(m, spans).module, rng, out);
    }
    return;
  }
  out.push_back(m);
}

bool dim_less(const Representation& a, const Representation& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  return a.dim() < b.dim();
}

}  // namespace

std::vector<Summand> decompose(const Representation& m, Rng& rng) {
  if (!m.field().is_prime())
    throw UnsupportedField("decomposition needs a finite field; over Q only isomorphism tests are offered");
  std::vector<Representation> parts;
  split(m, rng, parts);
  std::vector<Summand> groups;
  for (auto& p : parts) {
    bool placed = false;
    for (auto& g : groups)
      if (g.module.dim() == p.dim() && iso_test(g.module, p, rng).isomorphic) {
        ++g.multiplicity;
        placed = true;
        break;
      }
    if (!placed) groups.push_back({std::move(p), 1});
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const Summand& a, const Summand& b) { return dim_less(a.module, b.module); });
  DimVec total(m.dim().size(), 0);
  for (const auto& g : groups)
    for (std::size_t x = 0; x < total.size(); ++x) total[x] += g.multiplicity * g.module.dim(x);
  ensure(total == m.dim(), "summand dimensions do not add up");
  return groups;
}

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed) {
  Rng rng(seed);
  return decompose(m, rng);
}

bool is_indecomposable(const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) return false;
  auto s = decompose(m, seed);
  return s.size() == 1 && s.front().multiplicity == 1;
}

Representation random_module(const AlgebraPtr& alg, const DimVec& d, std::uint64_t seed,
                             const std::vector<Representation>& extra) {
  if (d.size() != alg->vertex_count()) throw ShapeError("dimension vector has the wrong length");
  Rng rng(seed);
  std::vector<Representation> blocks;
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
    blocks.push_back(simple(alg, x));
    blocks.push_back(projective(alg, x));
    blocks.push_back(injective(alg, x));
  }
  for (const auto& e : extra) {
    require_same_algebra(e.algebra(), alg);
    if (!e.is_zero()) blocks.push_back(e);
  }
  auto fits = [](const DimVec& part, const DimVec& rest) {
    for (std::size_t x = 0; x < part.size(); ++x)
      if (part[x] > rest[x]) return false;
    return true;
  };

  constexpr int kAttempts = 16;
  std::vector<Representation> parts;
  std::string tried;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    parts.clear();
    DimVec rest = d;
    for (;;) {
      std::vector<const Representation*> cands;
      for (const auto& b : blocks)
        if (fits(b.dim(), rest)) cands.push_back(&b);
      if (cands.empty()) break;
      const Representation* pick = cands[draw(rng, cands.size())];
      parts.push_back(*pick);
      for (std::size_t x = 0; x < rest.size(); ++x) rest[x] -= pick->dim(x);
    }
    if (std::all_of(rest.begin(), rest.end(), [](std::size_t v) { return v == 0; })) break;
    tried += (tried.empty() ? "" : ", ") + format_dim(rest);
    parts.clear();
  }
  bool zero_target = std::all_of(d.begin(), d.end(), [](std::size_t v) { return v == 0; });
  if (parts.empty() && !zero_target)
    throw GenerationFailed("no block decomposition of " + format_dim(d) + " found; leftovers " + tried);

  Representation w = zero_module(alg);
  for (const auto& p : parts) {
    if (w.is_zero()) {
      w = p;
      continue;
    }
    // Glue the next block either below or above the current module.
    const bool below = draw(rng, 2) == 0;
    CocycleSpace cs = below ? cocycles(p, w) : cocycles(w, p);
    w = middle_term(random_ext_class(cs, rng));
  }
  w = conjugate(w, random_gl(alg, d, rng));
  ensure(validate(w), "random module fails a relation");
  return w;
}

}  // namespace repvar
