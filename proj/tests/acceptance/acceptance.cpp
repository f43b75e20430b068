// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wittcv/harness.hpp"
#include "wittcv/varieties.hpp"

using namespace wittcv;
using harness::cli_run;
using varieties::PairSpace;
using witt::WittAlgebra;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += " [" + what + "]";
    }
  }
  void say(const std::string& text) { note += " " + text; }
};

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

ExecOptions exhaustive() {
  ExecOptions o;
  o.workers = workers();
  return o;
}

ExecOptions sampled(std::uint64_t samples) {
  ExecOptions o = exhaustive();
  o.sampling = SamplingInfo{kSeed, samples};
  return o;
}

WittAlgebra algebra(std::int64_t p) { return WittAlgebra(ffield::FieldCtx::make(p)); }

std::uint64_t count(const VerificationReport& r, const std::string& key) {
  const auto it = r.counts.find(key);
  return it == r.counts.end() ? 0 : it->second;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome centralizers() {
  Outcome o;
  for (int p : {5, 7}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = harness::centralizer_law(algebra(p), exhaustive());
    const double s = seconds_since(t0);
    o.require(r.verified(), "p=" + num(p) + " mismatches");
    o.require(count(r, "in_scope") > 0, "p=" + num(p) + " nothing checked");
    if (p == 7) o.require(s < 60.0, "p=7 took longer than 60 s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "p=%d in_scope=%llu (%.1f s)", p,
                  static_cast<unsigned long long>(count(r, "in_scope")), s);
    o.say(buf);
  }
  return o;
}

Outcome cone() {
  Outcome o;
  for (int p : {5, 7}) {
    const auto r = varieties::cone_census(algebra(p), exhaustive());
    const std::uint64_t g1 = count(r, "g1"), rect = count(r, "rectifiable"), n = count(r, "nilpotent");
    o.require(r.verified(), "p=" + num(p) + " failures");
    o.require(g1 == saturating_power(p, p - 2), "p=" + num(p) + " #g1");
    o.require(n == g1 + rect, "p=" + num(p) + " #N != #g1 + #rectifiable");
    o.say("p=" + num(p) + " N=" + num(n) + " g1=" + num(g1) + " rectifiable=" + num(rect));
  }
  return o;
}

Outcome covering() {
  Outcome o;
  for (int p : {5, 7}) {
    for (auto space : {PairSpace::Full, PairSpace::Borel}) {
      const auto r = varieties::verify_covering(algebra(p), space, exhaustive());
      const std::string tag = "p=" + num(p) + " " + std::string(to_string(space));
      o.require(r.verified(), tag + " uncovered");
      o.say(tag + " pairs=" + num(count(r, "pairs")));
    }
  }
  for (int p : {11, 13}) {
    const auto r = varieties::verify_covering(algebra(p), PairSpace::Full, sampled(1'000'000));
    o.require(r.verified(), "p=" + num(p) + " uncovered");
    o.require(count(r, "pairs") >= 1'000'000, "p=" + num(p) + " fewer than 1e6 pairs");
    o.say("p=" + num(p) + " sampled pairs=" + num(count(r, "pairs")) + " seed=" + num(kSeed));
  }
  return o;
}

Outcome witnesses() {
  Outcome o;
  for (int p : {5, 7, 11, 13}) {
    const auto full = varieties::component_witnesses(algebra(p), PairSpace::Full);
    const auto borel = varieties::component_witnesses(algebra(p), PairSpace::Borel);
    o.require(full.verified() && count(full, "components") == static_cast<std::uint64_t>((p - 1) / 2),
              "p=" + num(p) + " full");
    o.require(borel.verified() && count(borel, "components") == static_cast<std::uint64_t>((p - 3) / 2),
              "p=" + num(p) + " borel");
    o.say("p=" + num(p) + " " + num(count(full, "components")) + "/" + num(count(borel, "components")));
  }
  return o;
}

Outcome middle() {
  Outcome o;
  for (int p : {5, 7, 11, 13}) {
    const auto r = varieties::verify_middle_redundancy(algebra(p), exhaustive());
    const std::uint64_t h = static_cast<std::uint64_t>((p - 1) / 2);
    o.require(r.verified(), "p=" + num(p) + " uncovered");
    o.require(count(r, "pairs") == saturating_power(p, 2 * h), "p=" + num(p) + " pair total");
    o.say("p=" + num(p) + " pairs=" + num(count(r, "pairs")) + " method=" + r.details.at("method"));
  }
  return o;
}

Outcome counting() {
  using varieties::CountMethod;
  Outcome o;
  const auto f5 = ffield::FieldCtx::make(5);
  const auto f25 = ffield::FieldCtx::make(5, 2);
  const auto c5 = varieties::count_component(f5, 1, CountMethod::Enumerate);
  const auto c25 = varieties::count_component(f25, 1, CountMethod::Enumerate);
  o.require(c5 == 3025 && varieties::count_component(f5, 1, CountMethod::ClosedForm) == c5, "q=5");
  o.require(varieties::count_component(f25, 1, CountMethod::ClosedForm) == c25, "q=25");
  const double ratio = static_cast<double>(c25) / static_cast<double>(c5);
  const double qp = 3125.0;
  o.require(ratio >= qp / 2 && ratio <= 2 * qp, "ratio outside [q^p/2, 2q^p]");
  char buf[128];
  std::snprintf(buf, sizeof buf, "S(1): q=5 %llu, q=25 %llu, ratio %.2f vs q^p=%.0f",
                static_cast<unsigned long long>(c5), static_cast<unsigned long long>(c25), ratio, qp);
  o.say(buf);
  return o;
}

Outcome borel_minus() {
  Outcome o;
  for (int p : {5, 7, 11, 13}) {
    const auto r = varieties::verify_covering(algebra(p), PairSpace::BorelMinus, exhaustive());
    o.require(r.verified(), "p=" + num(p));
    o.say("p=" + num(p) + " N=" + num(count(r, "first_coordinates")) + " pairs=" + num(count(r, "pairs")));
  }
  return o;
}

Outcome census() {
  Outcome o;
  for (int p : {5, 7}) {
    const auto r = varieties::commuting_census(algebra(p), PairSpace::Full, exhaustive());
    const auto a = count(r, "pairs/centralizers"), b = count(r, "pairs/certificates");
    o.require(r.verified() && a == b && a > 0, "p=" + num(p));
    o.say("p=" + num(p) + " " + num(a) + "=" + num(b));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  struct Case {
    int p;
    std::uint64_t samples;  // 0: exhaustive
  };
  for (const Case c : {Case{5, 0}, Case{7, 10'000}, Case{11, 10'000}, Case{13, 1'000}}) {
    const auto r = harness::algebra_properties(algebra(c.p), c.samples ? sampled(c.samples) : exhaustive());
    o.require(r.verified(), "p=" + num(c.p));
    o.require(count(r, "jacobi_triples") == saturating_power(c.p, 3), "p=" + num(c.p) + " jacobi");
    o.say("p=" + num(c.p) + " restricted=" + num(count(r, "restricted")) +
          " equivariance=" + num(count(r, "equivariance")));
  }
  return o;
}

Outcome fault_injection() {
  Outcome o;
  for (const char* p : {"5", "7"}) {
    for (const char* task : {"centralizers", "covering"}) {
      std::ostringstream out, err;
      const std::vector<std::string> args = {"--p", p, "--task", task, "--inject-fault", "1,2", "--no-timing"};
      const int code = cli_run(args, out, err);
      const auto r = parse_report(out.str());
      const std::string tag = std::string("p=") + p + " " + task;
      o.require(code == 1 && !r.failures.empty(), tag);
      o.say(tag + " exit=" + num(static_cast<std::uint64_t>(code)) + " failures=" + num(count(r, "failures")));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"centralizer law", centralizers},
      {"cone decomposition", cone},
      {"covering", covering},
      {"component witnesses", witnesses},
      {"middle square", middle},
      {"point counts", counting},
      {"borel-minus", borel_minus},
      {"census", census},
      {"algebra properties", properties},
      {"fault injection", fault_injection},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("criterion %2zu %-20s %s (%.1f s):%s\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL",
                seconds_since(t0), o.note.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
