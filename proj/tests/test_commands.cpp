#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "deltabound/commands.hpp"

using namespace deltabound;

namespace {

std::string golden(const char* name) { return std::string(GOLDEN_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class F>
Run run(F f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bound emits deterministic JSON") {
  auto call = [](std::ostream& o, std::ostream& e) { return cmd_bound(golden("trivial.json"), std::nullopt, false, o, e); };
  const auto a = run(call);
  const auto b = run(call);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.err.empty());
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["report"]["operation"] == "cor_6_3");
}

TEST_CASE("ramified scenario includes the one-point bound") {
  const auto r = run([](std::ostream& o, std::ostream& e) { return cmd_bound(golden("ramified.json"), std::nullopt, false, o, e); });
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["operation"] == "cor_6_4");
  CHECK(doc["parshin"]["operation"] == "parshin_bound");
}

TEST_CASE("mode and rounding flags change the result in the expected direction") {
  auto final_log = [](std::optional<Mode> m, bool rounded) {
    const auto r = run([&](std::ostream& o, std::ostream& e) { return cmd_bound(golden("unramified.json"), m, rounded, o, e); });
    REQUIRE(r.code == kExitOk);
    return nlohmann::json::parse(r.out)["report"]["final"]["log_value"].get<double>();
  };
  CHECK(final_log(Mode::tight, false) <= final_log(Mode::paper_faithful, false));
  CHECK(final_log(Mode::paper_faithful, false) <= final_log(Mode::paper_faithful, true));
}

TEST_CASE("exit codes") {
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_bound(golden("malformed.json"), std::nullopt, false, o, e); }).code == kExitUsage);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_bound(golden("missing.json"), std::nullopt, false, o, e); }).code == kExitUsage);
  const auto g1 = run([](std::ostream& o, std::ostream& e) { return cmd_bound(golden("genus1.json"), std::nullopt, false, o, e); });
  CHECK(g1.code == kExitDomain);
  CHECK(g1.out.empty());
  CHECK(g1.err.find("genus") != std::string::npos);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_kernel(-1.0, "1", o, e); }).code == kExitDomain);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_kernel(1.0, "1,x", o, e); }).code == kExitUsage);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_sweep(golden("trivial.json"), "base.colour", "1", std::nullopt, false, o, e); }).code == kExitUsage);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_sweep(golden("trivial.json"), "base.systole", "1,-2", std::nullopt, false, o, e); }).code == kExitDomain);
  CHECK(run([](std::ostream& o, std::ostream& e) { return cmd_verify(std::string("nonsense"), true, o, e); }).code == kExitUsage);
}

TEST_CASE("sweep rows follow the values") {
  const auto r = run([](std::ostream& o, std::ostream& e) {
    return cmd_sweep(golden("unramified.json"), "cover.genus", "2,4,8", std::nullopt, false, o, e);
  });
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "param,value,log10_bound,decimal");
  double prev = -1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const double v = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
    CHECK(v > prev);
    prev = v;
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("kernel table") {
  const auto r = run([](std::ostream& o, std::ostream& e) { return cmd_kernel(1.0, "0,0.5,2", o, e); });
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("rho,k0,k0_err,k1,k1_err,a1,a2,a3,upper_sum,dominance\n", 0) == 0);
  CHECK(r.out.find(",true\n") != std::string::npos);
  CHECK(r.out.find(",false\n") == std::string::npos);
}

TEST_CASE("single verification suite") {
  const auto r = run([](std::ostream& o, std::ostream& e) { return cmd_verify(std::string("remark_floor"), false, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("suite remark_floor") != std::string::npos);
  CHECK(r.out.find("total failures: 0") != std::string::npos);
  const auto c = run([](std::ostream& o, std::ostream& e) { return cmd_verify(std::string("c22"), true, o, e); });
  CHECK(c.code == kExitFailures);
}
