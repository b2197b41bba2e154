// Acceptance suite: one PASS/FAIL line per criterion, summary, exit 0 only
// if every criterion passes.  Criteria are registered in acceptance order.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;  // fills a detail string
};

std::vector<Criterion>& registry() {
  static std::vector<Criterion> r;
  return r;
}

}  // namespace

void register_criteria();  // defined in acceptance_criteria.cpp

int main() {
  register_criteria();
  int failed = 0;
  for (const Criterion& c : registry()) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("%s %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", registry().size(), failed);
  return failed == 0 ? 0 : 1;
}

void add_criterion(const std::string& name,
                   std::function<bool(std::string&)> run) {
  registry().push_back({name, std::move(run)});
}
