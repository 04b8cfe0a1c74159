// Copyright 2026 The k3lat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "k3lat/kodaira.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace k3lat {

const char* to_string(KodairaTag t) {
  switch (t) {
    case KodairaTag::I: return "I";
    case KodairaTag::IStar: return "I*";
    case KodairaTag::II: return "II";
    case KodairaTag::III: return "III";
    case KodairaTag::IV: return "IV";
    case KodairaTag::IVStar: return "IV*";
    case KodairaTag::IIIStar: return "III*";
    case KodairaTag::IIStar: return "II*";
    case KodairaTag::I2OrIII: return "I2_OR_III";
    case KodairaTag::I3OrIV: return "I3_OR_IV";
  }
  return "?";
}

std::string KodairaType::name() const {
  if (tag == KodairaTag::I || tag == KodairaTag::IStar)
    return std::string(to_string(tag)) + std::to_string(n);
  return to_string(tag);
}

KodairaType type_table(KodairaTag tag, int n) {
  if (n < 0) throw std::invalid_argument("negative Kodaira index");
  KodairaType t;
  t.tag = tag;
  auto fill = [&](std::vector<int> mult, int euler_min, int euler_max, Reduction red) {
    t.multiplicities = std::move(mult);
    t.components = static_cast<int>(t.multiplicities.size());
    t.weight = 0;
    for (int m : t.multiplicities) t.weight += m;
    t.euler_min = euler_min;
    t.euler_max = euler_max;
    t.reduction = red;
  };
  switch (tag) {
    case KodairaTag::I:
      t.n = n;
      if (n == 0)
        fill({1}, 0, 0, Reduction::Smooth);
      else
        fill(std::vector<int>(static_cast<std::size_t>(n), 1), n, n, Reduction::Multiplicative);
      break;
    case KodairaTag::IStar: {
      t.n = n;
      std::vector<int> mult{1, 1};
      mult.insert(mult.end(), static_cast<std::size_t>(n + 1), 2);
      mult.push_back(1);
      mult.push_back(1);
      fill(std::move(mult), n + 6, n + 6, Reduction::Additive);
      break;
    }
    case KodairaTag::II: fill({1}, 2, 2, Reduction::Additive); break;
    case KodairaTag::III: fill({1, 1}, 3, 3, Reduction::Additive); break;
    case KodairaTag::IV: fill({1, 1, 1}, 4, 4, Reduction::Additive); break;
    case KodairaTag::IVStar: fill({3, 2, 1, 2, 1, 2, 1}, 8, 8, Reduction::Additive); break;
    case KodairaTag::IIIStar: fill({4, 2, 3, 2, 1, 3, 2, 1}, 9, 9, Reduction::Additive); break;
    case KodairaTag::IIStar: fill({6, 3, 4, 2, 5, 4, 3, 2, 1}, 10, 10, Reduction::Additive); break;
    case KodairaTag::I2OrIII: fill({1, 1}, 2, 3, Reduction::Ambiguous); break;
    case KodairaTag::I3OrIV: fill({1, 1, 1}, 3, 4, Reduction::Ambiguous); break;
  }
  return t;
}

KodairaType parse_kodaira_type(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '_' && c != ' ') s.push_back(c);
  if (s == "I2ORIII" || s == "I2_OR_III") return type_table(KodairaTag::I2OrIII);
  if (s == "I3ORIV") return type_table(KodairaTag::I3OrIV);
  if (s == "II") return type_table(KodairaTag::II);
  if (s == "III") return type_table(KodairaTag::III);
  if (s == "IV") return type_table(KodairaTag::IV);
  if (s == "IV*") return type_table(KodairaTag::IVStar);
  if (s == "III*") return type_table(KodairaTag::IIIStar);
  if (s == "II*") return type_table(KodairaTag::IIStar);
  auto digits = [](const std::string& d) {
    if (d.empty() || d.size() > 3 ||
        !std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("unknown Kodaira type");
    return std::stoi(d);
  };
  try {
    if (s.size() >= 2 && s[0] == 'I') {
      if (s[1] == '*') return type_table(KodairaTag::IStar, digits(s.substr(2)));
      if (s.back() == '*') return type_table(KodairaTag::IStar, digits(s.substr(1, s.size() - 2)));
      return type_table(KodairaTag::I, digits(s.substr(1)));
    }
  } catch (const std::invalid_argument&) {
  }
  throw std::invalid_argument("unknown Kodaira type '" + raw + "'");
}

KodairaType kodaira_type_of(RootKind kind, int rank) {
  switch (kind) {
    case RootKind::AffineA:
      return rank == 2 ? type_table(KodairaTag::I3OrIV) : type_table(KodairaTag::I, rank + 1);
    case RootKind::A1Tilde: return type_table(KodairaTag::I2OrIII);
    case RootKind::AffineD: return type_table(KodairaTag::IStar, rank - 4);
    case RootKind::AffineE:
      if (rank == 6) return type_table(KodairaTag::IVStar);
      if (rank == 7) return type_table(KodairaTag::IIIStar);
      return type_table(KodairaTag::IIStar);
    case RootKind::IsotropicVertex: return type_table(KodairaTag::I, 1);
    default: break;
  }
  throw std::invalid_argument(std::string("not an affine kind: ") + to_string(kind));
}

int KodairaDivisor::weight() const {
  int w = 0;
  for (int m : multiplicities) w += m;
  return w;
}

namespace {

enum class Shape { Growable, Divisor, Dead };

// Enumerates connected induced vertex sets (each exactly once) and stops
// growing a set as soon as it is no longer a connected Dynkin diagram.
class DivisorSearch {
 public:
  DivisorSearch(const CurveConfig& cfg, std::optional<int> cap) : cfg_(cfg), cap_(cap) {
    for (std::size_t v = 0; v < cfg.size(); ++v) adj_.push_back(cfg.neighbors(v));
  }

  std::vector<KodairaDivisor> run() {
    for (std::size_t v = 0; v < cfg_.size(); ++v) {
      std::vector<std::size_t> ext;
      for (auto u : adj_[v])
        if (u > v) ext.push_back(u);
      extend({v}, std::move(ext), v);
    }
    std::sort(found_.begin(), found_.end(), [](const auto& a, const auto& b) {
      const int wa = a.weight(), wb = b.weight();
      if (wa != wb) return wa < wb;
      return a.support < b.support;
    });
    return std::move(found_);
  }

 private:
  Shape inspect(const std::vector<std::size_t>& members) {
    std::vector<std::size_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    const CurveConfig sub = cfg_.induced(sorted);
    const auto rec = recognize_shape(sub);
    if (!rec) return Shape::Dead;
    if (rec->kind == RootKind::A || rec->kind == RootKind::D || rec->kind == RootKind::E)
      return Shape::Growable;

    KodairaDivisor div;
    div.type = kodaira_type_of(rec->kind, rec->rank);
    div.support = sorted;
    for (auto v : sorted) div.ids.push_back(cfg_.vertex(v).id);
    for (const auto& z : *rec->kernel) div.multiplicities.push_back(static_cast<int>(z.get_si()));
    div.nodal_or_cuspidal = rec->kind == RootKind::IsotropicVertex;
    if (multiply(gram(sub), to_rational(*rec->kernel)) != RationalVector(sub.size()))
      throw std::logic_error("affine multiplicities do not annihilate the support");
    if (!cap_ || div.weight() <= *cap_) found_.push_back(std::move(div));
    return Shape::Divisor;
  }

  void extend(std::vector<std::size_t> sub, std::vector<std::size_t> ext, std::size_t root) {
    if (inspect(sub) != Shape::Growable) return;
    if (cap_ && static_cast<int>(sub.size()) >= *cap_) return;
    while (!ext.empty()) {
      const std::size_t w = ext.back();
      ext.pop_back();
      std::vector<std::size_t> next_ext = ext;
      for (auto u : adj_[w]) {
        if (u <= root) continue;
        if (std::find(sub.begin(), sub.end(), u) != sub.end()) continue;
        if (std::find(next_ext.begin(), next_ext.end(), u) != next_ext.end()) continue;
        bool touches_sub = false;
        for (auto s : sub)
          if (cfg_.multiplicity(s, u) != 0) {
            touches_sub = true;
            break;
          }
        if (!touches_sub) next_ext.push_back(u);
      }
      auto next_sub = sub;
      next_sub.push_back(w);
      extend(std::move(next_sub), std::move(next_ext), root);
    }
  }

  const CurveConfig& cfg_;
  std::optional<int> cap_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<KodairaDivisor> found_;
};

}  // namespace

std::vector<KodairaDivisor> find_kodaira_divisors(const CurveConfig& cfg,
                                                  std::optional<int> max_weight) {
  if (!max_weight) {
    const auto kind = classify(cfg).kind;
    if (kind == LatticeKind::Hyperbolic || kind == LatticeKind::Invalid) max_weight = 30;
  }
  return DivisorSearch(cfg, max_weight).run();
}

long divisor_degree(const KodairaDivisor& div, const CurveConfig& cfg) {
  long deg = 0;
  for (std::size_t i = 0; i < div.support.size(); ++i)
    deg += static_cast<long>(div.multiplicities[i]) * cfg.vertex(div.support[i]).degree;
  return deg;
}

long divisor_pairing(const KodairaDivisor& div, const CurveConfig& cfg, std::size_t vertex) {
  long s = 0;
  for (std::size_t i = 0; i < div.support.size(); ++i)
    s += static_cast<long>(div.multiplicities[i]) * cfg.multiplicity(div.support[i], vertex);
  return s;
}

ExclusionReport exclusion_6d(const CurveConfig& cfg, int d, int h) {
  if (d < 1 || h < 1) throw std::invalid_argument("d and h must be positive");
  ExclusionReport rep;
  const auto cls = classify(cfg);
  if (cls.kind != LatticeKind::Hyperbolic) {
    rep.notes.push_back(std::string("not hyperbolic (") + to_string(cls.kind) +
                        "); the degree-6d exclusion does not apply");
    return rep;
  }
  if (Integer(h) <= Integer(42) * d * d)
    rep.notes.push_back("h > 42 d^2 does not hold; findings are not contradictions");
  if (cfg.max_degree() > d) rep.notes.push_back("some vertex degree exceeds d");

  const long cap = 6L * d;
  for (const auto& div : find_kodaira_divisors(cfg, static_cast<int>(cap))) {
    const long deg = divisor_degree(div, cfg);
    if (deg > cap) continue;
    rep.violations.push_back({rules::kKodaira6d, div.ids, Rational(cap + 1 - deg),
                              "Kodaira divisor " + div.type.name() + " of degree " +
                                  std::to_string(deg) + " <= 6d on a hyperbolic configuration"});
    for (std::size_t v = 0; v < cfg.size(); ++v) {
      const long dc = divisor_pairing(div, cfg, v);
      if (dc > 0)
        rep.violations.push_back({rules::kFibreOrthogonal, {cfg.vertex(v).id}, Rational(dc),
                                  "curve meets the degree-" + std::to_string(deg) + " " +
                                      div.type.name() + " divisor positively (D.C = " +
                                      std::to_string(dc) + ")"});
    }
  }
  return rep;
}

}  // namespace k3lat
