#include "crystalkit/verify.hpp"

#include <algorithm>
#include <set>

#include "crystalkit/g2.hpp"
#include "crystalkit/graph.hpp"
#include "crystalkit/parallel.hpp"
#include "crystalkit/perfect.hpp"

namespace crystalkit {

namespace {

struct Finding {
  std::string clause;
  std::string witness;
};

std::string op_tag(int i, const Element& b) {
  return "i=" + std::to_string(i) + " b=" + to_text(b);
}

// Sweeps fn over the elements with a worker pool; findings land in
// per-element slots and are merged in canonical order, so the report is
// independent of the thread count.
template <typename Fn>
void sweep(VerifyReport& report, const std::vector<Element>& elements, Fn&& fn) {
  std::vector<std::vector<Finding>> slots(elements.size());
  parallel_for(static_cast<int>(elements.size()),
               [&](int idx) { fn(elements[idx], slots[idx]); });
  for (const auto& slot : slots) {
    for (const Finding& f : slot) report.fail(f.clause, f.witness);
  }
}

}  // namespace

VerifyReport verify_axioms(const CrystalParams& params) {
  VerifyReport report;
  report.suite = std::string("axioms[") + kind_name(params.kind) + "]";
  report.level = params.level;
  report.clause("inverse-pair");
  report.clause("statistics-count-operator-applications");
  report.clause("statistics-shift-under-f");
  report.clause("weight-change-matches-cartan-column");

  const auto& cartan = params.kind == Kind::G2 ? kCartanG2 : kCartanHatD4;
  const auto elements = enumerate_elements(params);

  sweep(report, elements, [&](const Element& b, std::vector<Finding>& out) {
    for (int i = 0; i < 3; ++i) {
      const auto fb = apply_f(params, i, b);
      const auto eb = apply_e(params, i, b);

      if (fb && apply_e(params, i, *fb) != b)
        out.push_back({"inverse-pair", "e_i(f_i b) != b at " + op_tag(i, b)});
      if (eb && apply_f(params, i, *eb) != b)
        out.push_back({"inverse-pair", "f_i(e_i b) != b at " + op_tag(i, b)});

      // the cap keeps a broken operator table from looping instead of failing
      const int cap = 12 * params.level + 16;
      int raise_count = 0;
      auto raise_cur = eb;
      while (raise_cur && raise_count <= cap) {
        ++raise_count;
        raise_cur = apply_e(params, i, *raise_cur);
      }
      int lower_count = 0;
      auto lower_cur = fb;
      while (lower_cur && lower_count <= cap) {
        ++lower_count;
        lower_cur = apply_f(params, i, *lower_cur);
      }
      if (raise_cur || lower_cur) {
        out.push_back({"statistics-count-operator-applications",
                       "chain longer than " + std::to_string(cap) + " at " + op_tag(i, b)});
      } else if (raise_count != eps_of(params, i, b) ||
                 lower_count != phi_of(params, i, b)) {
        out.push_back({"statistics-count-operator-applications", op_tag(i, b)});
      }

      if (fb) {
        if (eps_of(params, i, *fb) != eps_of(params, i, b) + 1 ||
            phi_of(params, i, *fb) != phi_of(params, i, b) - 1)
          out.push_back({"statistics-shift-under-f", op_tag(i, b)});
        for (int j = 0; j < 3; ++j) {
          const int before = phi_of(params, j, b) - eps_of(params, j, b);
          const int after = phi_of(params, j, *fb) - eps_of(params, j, *fb);
          if (before - after != cartan[j][i])
            out.push_back({"weight-change-matches-cartan-column",
                           "j=" + std::to_string(j) + " " + op_tag(i, b)});
        }
      }
    }
  });
  return report;
}

VerifyReport verify_similarity(int level) {
  VerifyReport report;
  report.suite = "similarity";
  report.level = level;
  report.clause("operator-and-statistics-power-identity");

  const auto elements = enumerate_elements(CrystalParams{Kind::G2, level});
  sweep(report, elements, [&](const Element& b, std::vector<Finding>& out) {
    for (int i = 0; i < 3; ++i) {
      if (!similarity_check(i, b, level))
        out.push_back({"operator-and-statistics-power-identity", op_tag(i, b)});
    }
  });
  return report;
}

VerifyReport verify_golden(const GoldenFixture& fixture) {
  VerifyReport report;
  report.suite = "golden";
  report.level = fixture.params.level;
  report.clause("fixture-rows-are-members");
  report.clause("element-set-matches");

  for (const GoldenBox& box : fixture.boxes) {
    if (!is_member(fixture.params, box.element))
      report.fail("fixture-rows-are-members",
                  "box " + box.label + " = " + to_text(box.element));
  }

  const auto enumerated = enumerate_elements(fixture.params);
  std::set<Element> expected;
  for (const GoldenBox& box : fixture.boxes) expected.insert(box.element);
  const std::set<Element> actual(enumerated.begin(), enumerated.end());
  if (expected != actual) {
    for (const Element& b : actual) {
      if (!expected.count(b))
        report.fail("element-set-matches", "enumerated but not in table: " + to_text(b));
    }
    for (const Element& b : expected) {
      if (!actual.count(b))
        report.fail("element-set-matches", "in table but not enumerated: " + to_text(b));
    }
  }

  if (fixture.params.kind == Kind::G2) {
    report.clause("starred-rows-match-minimal-set");
    std::set<Element> starred;
    for (const GoldenBox& box : fixture.boxes) {
      if (box.minimal) starred.insert(box.element);
    }
    std::set<Element> minimal;
    for (const MinimalElement& m : minimal_elements(fixture.params.level))
      minimal.insert(m.as_element());
    if (starred != minimal) {
      for (const Element& b : starred) {
        if (!minimal.count(b))
          report.fail("starred-rows-match-minimal-set", "starred but not minimal: " + to_text(b));
      }
      for (const Element& b : minimal) {
        if (!starred.count(b))
          report.fail("starred-rows-match-minimal-set", "minimal but not starred: " + to_text(b));
      }
    }
  }
  return report;
}

}  // namespace crystalkit
