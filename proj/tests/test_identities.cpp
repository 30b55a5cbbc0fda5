#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qeuler/identities.hpp"

using namespace qeuler;
using namespace qeuler::identities;

namespace {

IdentityParams ip(std::initializer_list<std::pair<const char*, long>> ints,
                  const char* q = nullptr, const char* tau = nullptr,
                  const char* tau2 = nullptr) {
  IdentityParams p;
  for (const auto& [key, v] : ints) {
    const std::string k(key);
    if (k == "m") p.m = v;
    else if (k == "h") p.h = v;
    else if (k == "k") p.k = v;
    else if (k == "l") p.l = v;
    else if (k == "i") p.i = v;
  }
  if (q) p.q = BigRational::parse(q);
  if (tau) p.tau = BigRational::parse(tau);
  if (tau2) p.tau2 = BigRational::parse(tau2);
  return p;
}

}  // namespace

TEST_CASE("registry ids and literal variants") {
  const auto ids = registry_ids(false);
  const auto all = registry_ids(true);
  CHECK(ids.size() == 34);
  CHECK(all.size() == 37);
  for (const char* lit : {"E14-literal", "E36-literal", "S3-literal"}) {
    CHECK(is_literal_variant(lit));
    CHECK(std::find(ids.begin(), ids.end(), lit) == ids.end());
    CHECK(std::find(all.begin(), all.end(), lit) != all.end());
  }
  CHECK_FALSE(is_literal_variant("E12"));
  CHECK_FALSE(identity_summary("HREC").empty());
  CHECK_THROWS_AS(identity_summary("NOPE"), UnknownIdentityError);
}

TEST_CASE("small grid holds for the whole registry") {
  const auto reports = run_registry(GridSpec::small_grid());
  CHECK(all_pass(reports));
  CHECK(reports.size() > 1000);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const IdentityReport& a, const IdentityReport& b) {
                         return a.id < b.id;
                       }));
}

TEST_CASE("filter selects identities and rejects unknown ids") {
  const auto grid = GridSpec::small_grid();
  const auto reports = run_registry(grid, {"E12"});
  CHECK_FALSE(reports.empty());
  for (const auto& r : reports) CHECK(r.id == "E12");
  CHECK_THROWS_AS(run_registry(grid, {"NOPE"}), UnknownIdentityError);

  GridSpec empty = grid;
  empty.q_values.clear();
  CHECK_THROWS_AS(run_registry(empty), InvalidParameterError);
  GridSpec bad = grid;
  bad.q_values = {BigRational(1)};
  CHECK_THROWS_AS(run_registry(bad), InvalidParameterError);
}

TEST_CASE("worker counts do not change the serialised reports") {
  const auto grid = GridSpec::small_grid();
  const std::vector<std::string> ids{"E12", "T6", "E10", "CL2", "MIX"};
  RunOptions one, three;
  one.workers = 1;
  three.workers = 3;
  CHECK(to_json_lines(run_registry(grid, ids, one)) ==
        to_json_lines(run_registry(grid, ids, three)));
}

TEST_CASE("the E14 literal fails exactly at degree zero") {
  const auto reports = run_registry(GridSpec::small_grid(), {"E14-literal"});
  CHECK_FALSE(reports.empty());
  for (const auto& r : reports) {
    REQUIRE(r.params.m.has_value());
    CHECK(r.pass == (*r.params.m != 0));
  }
  CHECK_FALSE(all_pass(reports));
}

TEST_CASE("the E36 literal fails at m = 1, k = 2 with the frozen values") {
  const auto r = verify_one("E36-literal", ip({{"m", 1}, {"k", 2}}, "2"));
  CHECK_FALSE(r.pass);
  CHECK(r.lhs == BigRational(-2, 5));
  CHECK(r.rhs == BigRational(-58, 255));
  // the corrected form passes at the same instance
  CHECK(verify_one("E36c", ip({{"m", 1}, {"k", 2}}, "2")).pass);
}

TEST_CASE("the flipped auxiliary-weight sign is not an identity") {
  const auto r = verify_one("S3-literal", ip({{"m", 0}, {"k", 1}}, "2", "1"));
  CHECK_FALSE(r.pass);
  CHECK(r.lhs == BigRational(3, 5));   // [2]/(1+q^2) at q = 2
  CHECK(r.rhs == BigRational(3, 2));   // [2]/2
  CHECK_FALSE(r.erratum.empty());
}

TEST_CASE("erratum notes travel with the reports") {
  CHECK_FALSE(verify_one("E14c", ip({{"m", 1}, {"h", 1}}, "2")).erratum.empty());
  CHECK_FALSE(verify_one("E32c", ip({{"m", 2}, {"k", 2}}, "2")).erratum.empty());
  CHECK(verify_one("E4", ip({{"m", 2}, {"k", 2}}, "2")).erratum.empty());
}

TEST_CASE("single-point verification validates its parameters") {
  CHECK_THROWS_AS(verify_one("E12", ip({{"m", 1}}, "2", "1")),
                  InvalidParameterError);  // missing h
  CHECK_THROWS_AS(verify_one("E12", ip({{"m", 1}, {"h", 1}}, nullptr, "1")),
                  InvalidParameterError);  // missing q
  CHECK_THROWS_AS(verify_one("E12", ip({{"m", 1}, {"h", 1}}, "2")),
                  InvalidParameterError);  // missing tau
  CHECK_THROWS_AS(verify_one("E12", ip({{"m", 1}, {"h", 1}}, "1", "1")),
                  InvalidParameterError);  // q = 1 invalid
  CHECK_THROWS_AS(verify_one("E12", ip({{"m", 1}, {"h", 1}}, "2", "0")),
                  InvalidParameterError);  // tau = 0
  CHECK_THROWS_AS(verify_one("E4", ip({{"m", 1}, {"k", 0}}, "2")),
                  InvalidParameterError);  // k < 1
  CHECK_THROWS_AS(verify_one("T6",
                             ip({{"m", 1}, {"h", 1}, {"k", 1}, {"l", 2}}, "2",
                                "1")),
                  InvalidParameterError);  // even l
  CHECK_THROWS_AS(verify_one("MIX",
                             ip({{"m", 1}, {"h", 1}, {"k", 1}, {"i", 2}}, "2")),
                  InvalidParameterError);  // hypothesis i <= m
  CHECK_THROWS_AS(verify_one("E16", ip({{"m", 0}, {"h", 1}}, "2")),
                  InvalidParameterError);  // hypothesis m >= 1
  CHECK_THROWS_AS(verify_one("NOPE", ip({{"m", 1}}, "2")),
                  UnknownIdentityError);

  const auto ok = verify_one("E12", ip({{"m", 2}, {"h", 1}}, "1/2", "1/4"));
  CHECK(ok.pass);
  const auto cl = verify_one("CL2", ip({{"m", 4}}));
  CHECK(cl.pass);
  CHECK_FALSE(cl.params.q.has_value());
}

TEST_CASE("json lines carry exactly the engaged parameters") {
  const auto r = verify_one("E12", ip({{"m", 2}, {"h", 1}}, "1/2", "1/4"));
  const std::string lines = to_json_lines({r});
  REQUIRE(lines.back() == '\n');
  const auto j = nlohmann::json::parse(lines.substr(0, lines.size() - 1));
  CHECK(j["id"] == "E12");
  CHECK(j["params"]["m"] == 2);
  CHECK(j["params"]["h"] == 1);
  CHECK(j["params"]["q"] == "1/2");
  CHECK(j["params"]["tau"] == "1/4");
  CHECK_FALSE(j["params"].contains("k"));
  CHECK_FALSE(j["params"].contains("l"));
  CHECK_FALSE(j["params"].contains("i"));
  CHECK_FALSE(j["params"].contains("tau2"));
  CHECK(j["pass"] == true);
  CHECK(j["lhs"].get<std::string>().find('/') != std::string::npos);
  CHECK(j["lhs"] == j["rhs"]);
  CHECK(j["erratum"].is_null());

  const auto lit = verify_one("E14-literal", ip({{"m", 0}, {"h", 1}}, "2"));
  const auto jl = nlohmann::json::parse(
      to_json_lines({lit}).substr(0, to_json_lines({lit}).size() - 1));
  CHECK(jl["pass"] == false);
  CHECK(jl["erratum"].is_string());
}

TEST_CASE("degree bounds and instance certification") {
  const auto b = degree_bounds("E12", ip({{"m", 2}, {"h", 1}}));
  CHECK(b.q_degree > 0);
  CHECK(b.tau_degree > 0);
  CHECK(b.upsilon_degree == 0);
  CHECK_FALSE(b.certified);

  const auto cert = certify_instance("E12", ip({{"m", 2}, {"h", 1}}));
  CHECK(cert.certified);
  CHECK(cert.points ==
        (cert.q_degree + 1) * (cert.tau_degree + 1) *
            (cert.upsilon_degree + 1));

  // two-argument identity tracks the second variable as well
  const auto b10 = degree_bounds("E10", ip({{"m", 2}, {"k", 1}}));
  CHECK(b10.upsilon_degree > 0);
  CHECK(certify_instance("E10", ip({{"m", 2}, {"k", 1}})).certified);
}

TEST_CASE("certification detects a wrong identity") {
  CHECK_THROWS_AS(certify_instance("E14-literal", ip({{"m", 0}, {"h", 1}})),
                  std::logic_error);
  CHECK_THROWS_AS(certify_instance("S3-literal", ip({{"m", 0}, {"k", 1}})),
                  std::logic_error);
}

TEST_CASE("certification battery covers every registered identity") {
  const auto certs = certify_battery();
  CHECK(certs.size() >= registry_ids(false).size());
  for (const auto& c : certs) {
    CHECK(c.certified);
    CHECK(c.points > 0);
    CHECK_FALSE(is_literal_variant(c.id));
  }
}
