#include "latsq/verify.hpp"

#include "doctest.h"

using namespace latsq;

TEST_CASE("empty reports fail") {
  VerifyReport empty;
  empty.suite = "nothing";
  CHECK_FALSE(empty.all_passed());
}

TEST_CASE("fixture suite") {
  VerifyReport r = verify_fixtures();
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("sade suite at small scan orders") {
  VerifyReport r = verify_sade(5);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("obvious suite") {
  VerifyReport r = verify_obvious(6);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("prolongation suite") {
  VerifyReport r = verify_prolongation(7);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("artzy suite") {
  VerifyReport r = verify_artzy(8);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("neccon suite") {
  VerifyReport r = verify_neccon(7);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("action law suite") {
  VerifyReport r = verify_action_laws(600);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("principal suite") {
  VerifyReport r = verify_principal(6);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("ts suite") {
  VerifyReport r = verify_ts(7);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("oracle suite") {
  VerifyReport r = verify_brute_oracles(3);
  INFO(r.to_text());
  CHECK(r.all_passed());
}

TEST_CASE("report serialization") {
  VerifyReport r;
  r.suite = "demo";
  r.add("first", true, "details");
  r.add("second", false, "witness \"x\"");
  CHECK_FALSE(r.all_passed());
  CHECK(r.to_text().find("FAIL second") != std::string::npos);
  std::string json = r.to_json();
  CHECK(json.find("\"passed\":false") != std::string::npos);
  CHECK(json.find('\"') != std::string::npos);
  CHECK(run_verify_suite("fixtures").all_passed());
  CHECK_THROWS(run_verify_suite("nosuch"));
}
