#pragma once

#include "crystalkit/element.hpp"
#include "crystalkit/fixtures.hpp"
#include "crystalkit/report.hpp"

namespace crystalkit {

// Regular-crystal axioms over the full node set: f/e are inverse partial
// bijections, eps/phi count operator applications, one f step bumps eps by 1
// and drops phi by 1, and the weight change across every f_i step matches
// column i of the kind's Cartan matrix.
VerifyReport verify_axioms(const CrystalParams& params);

// similarity_check swept over all of V_level and all operator indices.
VerifyReport verify_similarity(int level);

// Set-compares the enumerated crystal against a reference table, checks
// every table row for membership, and checks the starred rows against the
// computed minimal set.
VerifyReport verify_golden(const GoldenFixture& fixture);

}  // namespace crystalkit
