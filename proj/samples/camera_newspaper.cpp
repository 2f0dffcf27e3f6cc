// Two sensors report on one variable; the edge sheaf decides whether they agree.
#include <iostream>

#include "catfuse/pipeline.hpp"

int main() {
  using namespace catfuse;
  auto ex = build_L_example();
  for (double score : {0.2, 0.8}) {
    std::vector<Reading> readings{{"C", ScorePayload{score}, 1},
                                  {"E", TokensPayload{{"riot", "downtown", "riot", "calm"}}, 1}};
    auto r = run_pipeline(readings, ex.sensors, ex.variables, "L", ex.sheaf);
    for (const auto& t : r.trace) std::cout << t.sensor << " " << t.datum << " -> " << t.cooked << "\n";
    std::cout << "score " << score << ": " << (r.report.is_section ? "consistent" : "conflict") << " (max violation "
              << r.report.max_violation << ")\n";
  }
}
