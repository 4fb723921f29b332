#include "addlaw/hyperplane.hpp"

#include <map>
#include <utility>

namespace addlaw {

std::vector<std::vector<Element>> projective_points(FieldRef f, unsigned n) {
  uint64_t q = f->order();
  std::vector<std::vector<Element>> pts;
  for (unsigned lead = 0; lead <= n; ++lead) {
    unsigned free = n - lead;
    uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) {
      ADDLAW_CHECK(count <= Field::kMaxEnumerable / q,
                   "projective space too large to enumerate");
      count *= q;
    }
    for (uint64_t m = 0; m < count; ++m) {
      std::vector<Element> p(n + 1, f->zero());
      p[lead] = f->one();
      uint64_t rest = m;
      for (unsigned i = lead + 1; i <= n; ++i) {
        p[i] = f->element_at(rest % q);
        rest /= q;
      }
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

uint64_t embedding_dimension(unsigned g, unsigned d, unsigned r0) {
  // Pure dimension arithmetic: valid for any positive parameters. The
  // geometric construction additionally needs d > r0; that constraint is
  // enforced where it matters, in build_family.
  ADDLAW_CHECK(g >= 1, "genus must be at least 1");
  ADDLAW_CHECK(r0 >= 1, "ambient dimension must be at least 1");
  ADDLAW_CHECK(d >= 1, "extension degree must be at least 1");
  uint64_t v = 1;
  for (unsigned i = 0; i < g; ++i) {
    ADDLAW_CHECK(v <= (1ULL << 40) / (2 * d), "embedding dimension overflows");
    v *= 2 * d;
  }
  return v * (r0 + 1) - 1;
}

Json HyperplaneFamily::to_json() const {
  Json j;
  j["base_field"] = base->to_string();
  j["extension_field"] = ext->to_string();
  j["d"] = d;
  j["r0"] = r0;
  j["generator"] = alpha0.to_string();
  Json planes = Json::array();
  for (const auto& v : hyperplanes) {
    Json row = Json::array();
    for (const Element& c : v) row.push_back(c.to_string());
    planes.push_back(std::move(row));
  }
  j["hyperplanes"] = std::move(planes);
  Json monos = Json::array();
  Json coeffs = Json::array();
  for (size_t i = 0; i < product_monomials.size(); ++i) {
    monos.push_back(product_monomials[i]);
    coeffs.push_back(product_coeffs[i].to_string());
  }
  j["product_monomials"] = std::move(monos);
  j["product_coefficients"] = std::move(coeffs);
  j["points_scanned"] = points_scanned;
  j["emptiness_verified"] = emptiness_verified;
  return j;
}

HyperplaneFamily build_family(FieldRef base, unsigned d, unsigned r0) {
  ADDLAW_CHECK(r0 >= 1, "ambient dimension must be at least 1");
  ADDLAW_CHECK(d > r0, "extension degree must exceed the ambient dimension");
  HyperplaneFamily fam;
  fam.base = base;
  fam.ext = Field::extension(base, d);
  fam.d = d;
  fam.r0 = r0;
  uint64_t q = base->order();
  fam.alpha0 = fam.ext->from_coeffs({base->zero(), base->one()});

  // The generator's Frobenius orbit must have length exactly d (degree-d
  // element); in particular its first r0 + 1 powers are linearly independent
  // over the base field, which is what empties the planes of rational points.
  std::vector<Element> alphas;
  Element a = fam.alpha0;
  for (unsigned i = 0; i < d; ++i) {
    alphas.push_back(a);
    a = fam.ext->frobenius(a, q);
  }
  ADDLAW_CHECK(a == fam.alpha0, "generator orbit has the wrong length");
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      ADDLAW_CHECK(!(alphas[i] == alphas[j]), "generator conjugates collide");

  for (unsigned i = 0; i < d; ++i) {
    std::vector<Element> v;
    Element pw = fam.ext->one();
    for (unsigned j = 0; j <= r0; ++j) {
      v.push_back(pw);
      pw = pw * alphas[i];
    }
    fam.hyperplanes.push_back(std::move(v));
  }

  // Expand the product of the d linear forms densely over the extension.
  std::map<ExpVec, Element> poly;
  poly.emplace(ExpVec(r0 + 1, 0), fam.ext->one());
  for (unsigned i = 0; i < d; ++i) {
    std::map<ExpVec, Element> next;
    for (const auto& [e, cf] : poly) {
      for (unsigned j = 0; j <= r0; ++j) {
        ExpVec e2 = e;
        e2[j] += 1;
        Element t = cf * fam.hyperplanes[i][j];
        auto it = next.find(e2);
        if (it == next.end())
          next.emplace(std::move(e2), t);
        else
          it->second = it->second + t;
      }
    }
    poly = std::move(next);
  }
  // The union of the planes is Galois-stable, so every dense coefficient is
  // Frobenius-fixed and lives in the base field.
  fam.product_monomials = monomial_exponents(r0 + 1, d);
  for (const ExpVec& e : fam.product_monomials) {
    auto it = poly.find(e);
    Element cf = it == poly.end() ? fam.ext->zero() : it->second;
    ADDLAW_CHECK(fam.ext->frobenius(cf, q) == cf,
                 "product coefficient is not Galois-fixed");
    auto down = fam.ext->descend(cf, base);
    ADDLAW_CHECK(down.has_value(), "product coefficient does not descend");
    fam.product_coeffs.push_back(*down);
  }

  // Exhaustive rational-point scan of P^r0 over the base field whenever the
  // affine cone is small enough.
  uint64_t space = 1;
  bool enumerable = true;
  for (unsigned i = 0; i <= r0; ++i) {
    if (space > (1ULL << 20) / q) {
      enumerable = false;
      break;
    }
    space *= q;
  }
  if (enumerable) {
    auto pts = projective_points(base, r0);
    for (const auto& p : pts) {
      for (unsigned i = 0; i < d; ++i) {
        Element v = fam.ext->zero();
        for (unsigned j = 0; j <= r0; ++j)
          v = v + fam.hyperplanes[i][j] * fam.ext->embed(p[j]);
        ADDLAW_CHECK(!v.is_zero(), "a hyperplane contains a rational point");
      }
    }
    fam.points_scanned = pts.size();
    fam.emptiness_verified = true;
  }
  return fam;
}

}  // namespace addlaw
