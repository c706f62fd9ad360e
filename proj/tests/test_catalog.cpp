#include "rrcf/catalog.hpp"
#include "rrcf/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace rrcf;

TEST_CASE("every builtin entry behaves as labelled at 200 digits") {
  const PrecisionCtx ctx(200);
  for (const auto& e : Catalog::builtin().entries()) {
    CAPTURE(e.name);
    const CatalogCheck c = check_entry(e, ctx);
    CHECK(c.as_expected);
  }
}

TEST_CASE("the rejected printed forms really differ") {
  const PrecisionCtx ctx(100);
  const Catalog& cat = Catalog::builtin();
  CHECK(check_entry(cat.at("G_15_printed"), ctx).relative_error > Real(std::string("0.01"), 64));
  CHECK(check_entry(cat.at("G_240_display"), ctx).relative_error > Real(std::string("0.01"), 64));
}

TEST_CASE("JSON round trip") {
  const Catalog& cat = Catalog::builtin();
  const nlohmann::json j = cat.to_json();
  const Catalog back = Catalog::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(nlohmann::json::parse(j.dump()).dump() == j.dump());
  nlohmann::json bad = j;
  bad["version"] = kCatalogVersion + 1;
  CHECK_THROWS_AS(Catalog::from_json(bad), DomainError);
}

TEST_CASE("lookup") {
  CHECK(Catalog::builtin().find("g_130"));
  CHECK_FALSE(Catalog::builtin().find("g_131"));
  CHECK_THROWS_AS(Catalog::builtin().at("g_131"), DomainError);
  CHECK(Catalog::builtin().at("R5_16/15").status == CatalogStatus::Conjectural);
}
