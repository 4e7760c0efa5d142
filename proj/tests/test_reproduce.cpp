#include "slb/reproduce.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace slb;

TEST_SUITE("reproduce")
{
    TEST_CASE("every row matches")
    {
        const auto rows = reproduce({"", false, 4});
        CHECK(rows.size() > 100);
        for (const auto& r : rows) {
            INFO(r.id << " " << r.quantity << ": expected " << r.expected << ", computed " << r.computed);
            CHECK(r.pass);
            CHECK((r.provenance == "stated" || r.provenance == "derived"));
        }
        std::set<std::string> ids;
        for (const auto& r : rows)
            ids.insert(r.id);
        for (const auto& id : reproduce_ids())
            CHECK(ids.count(id) == 1);
        CHECK(format_table(rows).find(std::to_string(rows.size()) + "/" + std::to_string(rows.size()) + " rows pass") !=
              std::string::npos);
    }

    TEST_CASE("perturbed Petersen fails")
    {
        const auto rows = reproduce({"petersen", true, 2});
        CHECK(std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; }));
        CHECK(to_json(rows)["failed"].get<int>() > 0);
    }

    TEST_CASE("filter and determinism")
    {
        const auto rows = reproduce({"johnson", false, 1});
        CHECK_FALSE(rows.empty());
        for (const auto& r : rows)
            CHECK(r.id.find("johnson") != std::string::npos);
        CHECK(to_json(reproduce({"c5", false, 1})).dump() == to_json(reproduce({"c5", false, 3})).dump());
    }
}
