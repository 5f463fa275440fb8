#pragma once

#include "symcyc/family_stats.hpp"
#include "symcyc/identities.hpp"

#include <json.hpp>

#include <iosfwd>

namespace symcyc {

// Fixed CSV column order:
// family,t,pattern_a,pattern_b,j_prime,j_dblprime,j,ell_prime,ell_dblprime,
// ell_cap,ell_delta,ell,closed_form,oracle,match
// Absent parameters are serialized as empty fields, not zeros. The `oracle`
// column carries the tally the product is expected to equal (ordered pairs,
// or distinct configurations for the two quotient-keyed families).
void write_sweep_csv(std::ostream& os, const FamilySweep& sweep);

nlohmann::ordered_json sweep_json(const FamilySweep& sweep);

nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace symcyc
