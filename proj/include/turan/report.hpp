#pragma once

#include <turan/extremal.hpp>

#include <string>
#include <vector>

namespace turan {

struct LabeledFamily {
    std::string label;
    ForbiddenFamily family;
};

/// CSV table of exact densities: one row per family and per n in
/// [n_min, n_max], columns family,n,pi_n,pi_n_decimal,limit,gap.
/// "limit" and "gap" are filled only for families whose limiting density
/// this library can certify, and stay empty otherwise. The range must sit
/// inside the exact-solver caps, so n_max > 6 raises TooLarge. An empty
/// family list yields just the header line.
std::string trend_csv(const std::vector<LabeledFamily>& families, int n_min, int n_max);

/// One recomputed claim. A row passes iff |expected - computed| <= tolerance;
/// property-style claims encode as expected 1, computed 0 or 1, tolerance 0.
struct ReproduceRow {
    std::string id;
    double expected = 0.0;
    double computed = 0.0;
    double delta = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;  // sorted by id
    std::string environment;

    bool all_pass() const;
};

/// Recompute every constant and checked property this library documents and
/// report them row by row. Deterministic: repeated runs produce identical
/// reports.
ReproduceReport reproduce();

/// Recompute exactly the named claims. An empty selection yields an empty
/// report; an id that matches no claim becomes a failing row, so a typo
/// cannot pass silently.
ReproduceReport reproduce(const std::vector<std::string>& ids);

std::string to_text(const ReproduceReport& report);
std::string to_json(const ReproduceReport& report);

}  // namespace turan
