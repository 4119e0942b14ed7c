#include <doctest.h>

#include <turan/constructions.hpp>
#include <turan/report.hpp>

#include "test_util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace turan;
using test_util::raises;

namespace {

ForbiddenFamily family_of(std::initializer_list<const char*> names) {
    std::vector<RGraph> members;
    for (const char* name : names) {
        members.push_back(catalog_entry(name).graph);
    }
    return make_family(std::move(members));
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

} // namespace

TEST_CASE("recomputing every documented claim") {
    ReproduceReport report = reproduce();
    CHECK(report.rows.size() >= 18);
    CHECK(report.all_pass());
    CHECK_FALSE(report.environment.empty());
    CHECK(std::is_sorted(report.rows.begin(), report.rows.end(),
                         [](const ReproduceRow& a, const ReproduceRow& b) {
                             return a.id < b.id;
                         }));
    for (const ReproduceRow& row : report.rows) {
        CAPTURE(row.id);
        CHECK(row.pass);
        CHECK(row.delta <= row.tolerance);
    }

    // Byte-identical on a second run.
    CHECK(to_text(reproduce()) == to_text(report));
}

TEST_CASE("selecting claims by id") {
    ReproduceReport empty = reproduce(std::vector<std::string>{});
    CHECK(empty.rows.empty());
    CHECK(empty.all_pass());

    ReproduceReport single = reproduce({"lagrangian-HA"});
    REQUIRE(single.rows.size() == 1);
    const ReproduceRow& row = single.rows.front();
    CHECK(row.id == "lagrangian-HA");
    CHECK(std::abs(row.expected - 1.0962250448649376) <= 1e-12);
    CHECK(row.tolerance == 1e-9);
    CHECK(row.delta <= 1e-9);
    CHECK(row.pass);

    // Typos surface as failing rows instead of silent no-ops.
    ReproduceReport unknown = reproduce({"no-such-claim"});
    REQUIRE(unknown.rows.size() == 1);
    CHECK(unknown.rows.front().id == "no-such-claim");
    CHECK_FALSE(unknown.rows.front().pass);
    CHECK_FALSE(unknown.all_pass());

    // Rows come back sorted by id whatever the request order, deduplicated.
    ReproduceReport mixed = reproduce({"pi4-C13", "lagrangian-HA", "pi4-C13"});
    REQUIRE(mixed.rows.size() == 2);
    CHECK(mixed.rows[0].id == "lagrangian-HA");
    CHECK(mixed.rows[1].id == "pi4-C13");
    CHECK(mixed.all_pass());
}

TEST_CASE("report serialization") {
    ReproduceReport report = reproduce({"lagrangian-HA"});

    std::string text = to_text(report);
    CHECK(text.find("PASS  lagrangian-HA") != std::string::npos);
    CHECK(text.find("1/1 claims pass") != std::string::npos);
    CHECK(text.find(report.environment) != std::string::npos);

    nlohmann::json doc = nlohmann::json::parse(to_json(report));
    CHECK(doc["all_pass"] == true);
    CHECK(doc["environment"] == report.environment);
    REQUIRE(doc["rows"].size() == 1);
    const auto& jrow = doc["rows"][0];
    CHECK(jrow["id"] == "lagrangian-HA");
    CHECK(jrow["pass"] == true);
    CHECK(std::abs(jrow["expected"].get<double>() - report.rows[0].expected) == 0.0);
    CHECK(jrow["delta"].get<double>() <= 1e-9);

    ReproduceReport failing = reproduce({"no-such-claim"});
    std::string failing_text = to_text(failing);
    CHECK(failing_text.find("FAIL  no-such-claim") != std::string::npos);
    CHECK(failing_text.find("0/1 claims pass") != std::string::npos);
    CHECK(nlohmann::json::parse(to_json(failing))["all_pass"] == false);
}

TEST_CASE("density trend tables") {
    const std::string header = "family,n,pi_n,pi_n_decimal,limit,gap";

    CHECK(trend_csv({}, 4, 6) == header + "\n");

    std::vector<LabeledFamily> families;
    families.push_back({"K3_bb", family_of({"K3_bb"})});
    families.push_back({"C13", family_of({"C13"})});
    std::vector<std::string> lines = lines_of(trend_csv(families, 4, 6));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == header);

    // K3_bb rows: 5/4, 6/5, 7/6 with the certified limit and a shrinking gap.
    const double limit = 1.0962250448649376;
    const char* fractions[] = {"5/4", "6/5", "7/6"};
    double previous_gap = 1.0;
    for (int i = 0; i < 3; ++i) {
        std::vector<std::string> f = fields_of(lines[static_cast<size_t>(1 + i)]);
        REQUIRE(f.size() == 6);
        CHECK(f[0] == "K3_bb");
        CHECK(f[1] == std::to_string(4 + i));
        CHECK(f[2] == fractions[i]);
        double decimal = std::stod(f[3]);
        CHECK(std::abs(decimal - (4.0 + i + 1) / (4.0 + i)) <= 1e-9);
        CHECK(std::abs(std::stod(f[4]) - limit) <= 1e-9);
        double gap = std::stod(f[5]);
        CHECK(std::abs(gap - (decimal - limit)) <= 1e-9);
        CHECK(gap > 0.0);
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }

    // C13 rows: exactly 1 everywhere, gap exactly 0.
    for (int i = 0; i < 3; ++i) {
        std::vector<std::string> f = fields_of(lines[static_cast<size_t>(4 + i)]);
        REQUIRE(f.size() == 6);
        CHECK(f[0] == "C13");
        CHECK(f[2] == "1");
        CHECK(f[4] == "1");
        CHECK(std::stod(f[5]) == 0.0);
    }

    // No certified limit: the last two columns stay empty.
    std::vector<LabeledFamily> open;
    open.push_back({"G4_b", family_of({"G4_b"})});
    std::vector<std::string> open_lines = lines_of(trend_csv(open, 4, 5));
    REQUIRE(open_lines.size() == 3);
    for (size_t i = 1; i < open_lines.size(); ++i) {
        std::vector<std::string> f = fields_of(open_lines[i]);
        REQUIRE(f.size() == 6);
        CHECK(f[4].empty());
        CHECK(f[5].empty());
    }

    // Commas in a label cannot break the column structure.
    std::vector<LabeledFamily> pair;
    pair.push_back({"K3_bb,G4_b", family_of({"K3_bb", "G4_b"})});
    std::vector<std::string> pair_lines = lines_of(trend_csv(pair, 5, 5));
    REQUIRE(pair_lines.size() == 2);
    std::vector<std::string> f = fields_of(pair_lines[1]);
    REQUIRE(f.size() == 6);
    CHECK(f[0] == "K3_bb;G4_b");
    CHECK(f[2] == "1");
    CHECK(f[4] == "1"); // the paired family's limit is on record

    CHECK(raises([] { trend_csv({}, 4, 7); }, ErrorKind::TooLarge));
    CHECK(raises([] { trend_csv({}, 5, 4); }, ErrorKind::SpecMismatch));
    CHECK(raises([] { trend_csv({}, 0, 3); }, ErrorKind::SpecMismatch));
}
