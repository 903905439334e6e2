#include "crystalkit/perfect.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crystalkit/g2.hpp"
#include "crystalkit/graph.hpp"

namespace crystalkit {

namespace {

int pos(int v) { return std::max(v, 0); }

Weight eps_weight_of(const Element& b, int level) {
  return Weight{g2_eps(0, b, level), g2_eps(1, b, level), g2_eps(2, b, level)};
}

Weight phi_weight_of(const Element& b, int level) {
  return Weight{g2_phi(0, b, level), g2_phi(1, b, level), g2_phi(2, b, level)};
}

std::string weight_text(const Weight& w) {
  return "(" + std::to_string(w.k0) + "," + std::to_string(w.k1) + "," +
         std::to_string(w.k2) + ")";
}

int weight_component(const Weight& w, int i) {
  switch (i) {
    case 0: return w.k0;
    case 1: return w.k1;
    default: return w.k2;
  }
}

}  // namespace

int psi_scaled(const ZVector& z) {
  const int s4 = 3 * z.z4;
  return a_vector(z).max() + 2 * pos(z.z3 + pos(z.z2)) + pos(s4) -
         (z.z1 + z.z2 + 2 * z.z3 + s4);
}

Element MinimalElement::as_element() const {
  return Element{{3 * alpha, beta3, beta3, beta3, beta3, 3 * alpha}};
}

Weight MinimalElement::eps_weight(int level) const {
  return Weight{level - 2 * alpha - beta3, alpha, beta3};
}

std::vector<MinimalElement> minimal_elements(int level) {
  if (level < 1) throw std::invalid_argument("minimal_elements: level must be >= 1");
  std::vector<MinimalElement> out;
  for (int alpha = 0; 2 * alpha <= level; ++alpha)
    for (int beta3 = 0; 2 * alpha + beta3 <= level; ++beta3)
      out.push_back(MinimalElement{alpha, beta3});
  return out;
}

std::vector<Weight> dominant_weights(int level) {
  std::vector<Weight> out;
  for (int k0 = 0; k0 <= level; ++k0)
    for (int k1 = 0; k0 + 2 * k1 <= level; ++k1)
      out.push_back(Weight{k0, k1, level - k0 - 2 * k1});
  std::sort(out.begin(), out.end());
  return out;
}

bool in_b_infinity(const InfElement& b) {
  const auto& x = b.x;
  const auto mod3 = [](int v) { return v % 3 == 0; };
  return (x[2] - x[3]) % 2 == 0 && mod3(x[0]) && mod3(x[5]) &&
         mod3(x[1] - x[2]) && mod3(x[3] - x[4]);
}

InfElement binf_f(int i, const InfElement& b) {
  return InfElement{detail::g2_f_step(i, b.x)};
}

InfElement binf_e(int i, const InfElement& b) {
  return InfElement{detail::g2_e_step(i, b.x)};
}

int binf_eps(int i, const InfElement& b) {
  switch (i) {
    case 0: {
      const ZVector z = z_vector(b.x);
      const int corr = 2 * z.z1 + z.z2 + z.z3 + 3 * z.z4;
      return detail::exact_div(a_vector(z).max() - corr - s_scaled(b.x), 3,
                               "binf_eps[0]");
    }
    case 1:
      return detail::exact_div(
          b.x[5] + pos(b.x[3] - b.x[4] + pos(b.x[1] - b.x[2])), 3,
          "binf_eps[1]");
    case 2:
      return b.x[4] + pos(b.x[2] - b.x[3]) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

int binf_phi(int i, const InfElement& b) {
  switch (i) {
    case 0:
      return detail::exact_div(a_vector(z_vector(b.x)).max() - s_scaled(b.x),
                               3, "binf_phi[0]");
    case 1:
      return detail::exact_div(
          b.x[0] + pos(b.x[2] - b.x[1] + pos(b.x[4] - b.x[3])), 3,
          "binf_phi[1]");
    case 2:
      return b.x[1] + pos(b.x[3] - b.x[2]) / 2;
  }
  throw std::invalid_argument("operator index must be 0..2");
}

InfElement embed_min(const MinimalElement& base, const Element& b) {
  InfElement out{b.x};
  out.x[0] -= 3 * base.alpha;
  out.x[5] -= 3 * base.alpha;
  for (int j = 1; j <= 4; ++j) out.x[j] -= base.beta3;
  return out;
}

std::vector<int> embed_image_union_sizes(int max_level) {
  std::set<InfElement> seen;
  std::vector<int> sizes;
  for (int level = 1; level <= max_level; ++level) {
    const auto elements = enumerate_elements(CrystalParams{Kind::G2, level});
    for (const MinimalElement& base : minimal_elements(level)) {
      for (const Element& b : elements) seen.insert(embed_min(base, b));
    }
    sizes.push_back(static_cast<int>(seen.size()));
  }
  return sizes;
}

VerifyReport verify_perfect(int level, bool include_tensor_connectivity) {
  return verify_perfect_with(
      level, [level](const Element& b) { return eps_weight_of(b, level); },
      [level](const Element& b) { return phi_weight_of(b, level); },
      include_tensor_connectivity);
}

VerifyReport verify_perfect_with(int level, const WeightFn& eps_of_b,
                                 const WeightFn& phi_of_b,
                                 bool include_tensor_connectivity) {
  VerifyReport report;
  report.suite = "perfect";
  report.level = level;
  report.clause("level-lower-bound");
  report.clause("minimal-set-matches-closed-form");
  report.clause("eps-equals-phi-on-minimal");
  report.clause("minimal-to-dominant-bijection");

  const CrystalParams params{Kind::G2, level};
  const auto elements = enumerate_elements(params);

  std::vector<Element> scanned_minimal;
  for (const Element& b : elements) {
    const int pairing = level_of(eps_of_b(b));
    if (pairing < level) {
      report.fail("level-lower-bound",
                  to_text(b) + " has <c,eps> = " + std::to_string(pairing));
    } else if (pairing == level) {
      scanned_minimal.push_back(b);
    }
  }

  const auto closed_form = minimal_elements(level);
  std::vector<Element> closed_elements;
  for (const MinimalElement& m : closed_form) closed_elements.push_back(m.as_element());
  std::sort(closed_elements.begin(), closed_elements.end());
  if (scanned_minimal != closed_elements) {
    for (const Element& b : scanned_minimal) {
      if (!std::binary_search(closed_elements.begin(), closed_elements.end(), b))
        report.fail("minimal-set-matches-closed-form", "scanned extra " + to_text(b));
    }
    for (const Element& b : closed_elements) {
      if (!std::binary_search(scanned_minimal.begin(), scanned_minimal.end(), b))
        report.fail("minimal-set-matches-closed-form", "scan missed " + to_text(b));
    }
  }

  std::set<Weight> eps_images;
  for (const MinimalElement& m : closed_form) {
    const Element b = m.as_element();
    const Weight eps = eps_of_b(b);
    const Weight phi = phi_of_b(b);
    const Weight expected = m.eps_weight(level);
    if (eps != phi || eps != expected) {
      report.fail("eps-equals-phi-on-minimal",
                  to_text(b) + " eps=" + weight_text(eps) + " phi=" +
                      weight_text(phi) + " expected " + weight_text(expected));
    }
    if (!eps_images.insert(eps).second) {
      report.fail("minimal-to-dominant-bijection",
                  "duplicate weight " + weight_text(eps));
    }
  }
  const auto dominant = dominant_weights(level);
  if (eps_images != std::set<Weight>(dominant.begin(), dominant.end())) {
    for (const Weight& w : dominant) {
      if (!eps_images.count(w))
        report.fail("minimal-to-dominant-bijection", "weight not hit: " + weight_text(w));
    }
    for (const Weight& w : eps_images) {
      if (!std::binary_search(dominant.begin(), dominant.end(), w))
        report.fail("minimal-to-dominant-bijection", "weight outside range: " + weight_text(w));
    }
  }

  if (include_tensor_connectivity) {
    report.clause("tensor-square-connected");
    const CrystalGraph g = build_graph(params);
    const TensorGraph t = tensor(g, g);
    const int parts = component_count(static_cast<int>(t.nodes.size()), t.edges, {0, 1, 2});
    if (parts != 1) {
      report.fail("tensor-square-connected",
                  std::to_string(parts) + " components in the tensor square");
    }
  }
  return report;
}

VerifyReport verify_coherent(int level) {
  VerifyReport report;
  report.suite = "coherent";
  report.level = level;
  report.clause("embedding-injective");
  report.clause("embedding-commutes-with-operators");
  report.clause("statistics-shift");
  report.clause("z-vector-preserved");

  const CrystalParams params{Kind::G2, level};
  const auto elements = enumerate_elements(params);

  for (const MinimalElement& base : minimal_elements(level)) {
    const Weight shift = base.eps_weight(level);
    const std::string base_tag = "base " + to_text(base.as_element());

    std::set<InfElement> image;
    for (const Element& b : elements) {
      const InfElement b_inf = embed_min(base, b);
      if (!in_b_infinity(b_inf)) {
        report.fail("embedding-injective",
                    base_tag + ": image outside the limit crystal " + to_text(b_inf.x));
      }
      if (!image.insert(b_inf).second) {
        report.fail("embedding-injective", base_tag + ": collision at " + to_text(b));
      }
      if (z_vector(b_inf.x) != z_vector(b)) {
        report.fail("z-vector-preserved", base_tag + ": " + to_text(b));
      }
      for (int i = 0; i < 3; ++i) {
        if (const auto fb = g2_f(i, b, level)) {
          if (embed_min(base, *fb) != binf_f(i, b_inf)) {
            report.fail("embedding-commutes-with-operators",
                        base_tag + ": f_" + std::to_string(i) + " at " + to_text(b));
          }
        }
        if (const auto eb = g2_e(i, b, level)) {
          if (embed_min(base, *eb) != binf_e(i, b_inf)) {
            report.fail("embedding-commutes-with-operators",
                        base_tag + ": e_" + std::to_string(i) + " at " + to_text(b));
          }
        }
        const int expected_eps = g2_eps(i, b, level) - weight_component(shift, i);
        const int expected_phi = g2_phi(i, b, level) - weight_component(shift, i);
        if (binf_eps(i, b_inf) != expected_eps || binf_phi(i, b_inf) != expected_phi) {
          report.fail("statistics-shift",
                      base_tag + ": i=" + std::to_string(i) + " at " + to_text(b));
        }
      }
    }
  }

  // Finite window into the limit crystal; nothing is claimed beyond it.
  const std::string window_clause =
      "coverage-window-levels-1-to-" + std::to_string(level) + "-strictly-increasing";
  report.clause(window_clause);
  const auto sizes = embed_image_union_sizes(level);
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      report.fail(window_clause, "union sizes " + std::to_string(sizes[i - 1]) +
                                     " -> " + std::to_string(sizes[i]));
    }
  }
  return report;
}

}  // namespace crystalkit
