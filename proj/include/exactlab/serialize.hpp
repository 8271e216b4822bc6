#pragma once

#include <json.hpp>

#include "exactlab/analytic.hpp"
#include "exactlab/interval.hpp"
#include "exactlab/logic.hpp"
#include "exactlab/rational.hpp"
#include "exactlab/roots.hpp"
#include "exactlab/series.hpp"

namespace exactlab::serialize {

using nlohmann::json;

// Rationals travel as "p/q" strings, enclosures as ["lo", "hi"].

json to_json(const Rational& x);
Rational rational_from_json(const json& j);

json to_json(const CertifiedEnclosure& e);
CertifiedEnclosure enclosure_from_json(const json& j);

/// {variables, formulas, rows}; each row is {assignment: [bool...], values: [bool...]}.
json to_json(const logic::TruthTable& t);
logic::TruthTable truth_table_from_json(const json& j);

/// {a, k, iterates, enclosures, widths, converged}
json to_json(const roots::IterationTrace& t);
roots::IterationTrace trace_from_json(const json& j);

/// {conclusion, fired_test, evidence}
json to_json(const series::TestVerdict& v);
series::TestVerdict verdict_from_json(const json& j);

/// {value, error_bound, terms_used, enclosure}
json to_json(const analytic::CertifiedValue& v);
analytic::CertifiedValue certified_value_from_json(const json& j);

}  // namespace exactlab::serialize
