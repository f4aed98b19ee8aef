// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <future>
#include <random>

#include "simul/error.hpp"
#include "simul/metrics.hpp"
#include "simul/policy.hpp"
#include "test_util.hpp"

using namespace simul;

namespace {

std::string actions_of(const SessionTrace& trace) {
  std::string p;
  for (const Event& e : trace.events) p += e.action == Action::Read ? 'R' : 'W';
  return p;
}

double closed_form_atd(const SessionTrace& trace) {
  return atd(assign_nca_times(derive_chunks(validate_trace(trace)))).value;
}

std::vector<std::pair<int, int>> chunk_lengths(const SessionTrace& trace) {
  std::vector<std::pair<int, int>> lens;
  for (const ChunkSpan& c : derive_chunks(trace).chunks) {
    lens.emplace_back(c.input_len(), c.output_len());
  }
  return lens;
}

}  // namespace

TEST_CASE("wait-k emits the expected action pattern and delay function") {
  const SessionTrace t = wait_k_trace(7, 7, 3);
  CHECK(actions_of(t) == "RRRWRWRWRWRWWW");
  CHECK(delay_function(derive_chunks(t)) == std::vector<int>{3, 4, 5, 6, 7, 7, 7});

  CHECK(actions_of(wait_k_trace(7, 7, 7)) == "RRRRRRRWWWWWWW");

  const auto g = delay_function(derive_chunks(wait_k_trace(40, 100, 1)));
  for (int t2 = 1; t2 <= 100; ++t2) CHECK(g[t2 - 1] == std::min(t2, 40));
}

TEST_CASE("wait-k trails unread source after the final write") {
  const SessionTrace t = wait_k_trace(40, 20, 1);
  const auto s = derive_chunks(t);
  CHECK(s.input_len() == 40);
  CHECK(s.chunked_input_len == 20);
}

TEST_CASE("chunk-k alternates k-runs with a residue input chunk") {
  CHECK(chunk_lengths(chunk_k_trace(7, 7, 3)) ==
        std::vector<std::pair<int, int>>{{3, 3}, {3, 3}, {1, 1}});

  const auto g39 = delay_function(derive_chunks(chunk_k_trace(40, 40, 39)));
  for (int t = 1; t <= 39; ++t) CHECK(g39[t - 1] == 39);
  CHECK(g39[39] == 40);

  const auto g40 = delay_function(derive_chunks(chunk_k_trace(40, 40, 40)));
  for (int t = 1; t <= 40; ++t) CHECK(g40[t - 1] == 40);
}

TEST_CASE("chunk-k groups all remaining outputs once the source is exhausted") {
  CHECK(chunk_lengths(chunk_k_trace(6, 14, 3)) ==
        std::vector<std::pair<int, int>>{{3, 3}, {3, 11}});
}

TEST_CASE("two-segment traces reduce to chunk pairs") {
  CHECK(chunk_lengths(two_segment_trace({20, 20}, {20, 20})) ==
        std::vector<std::pair<int, int>>{{20, 20}, {20, 20}});
  CHECK(chunk_lengths(two_segment_trace({3, 4}, {2, 5})) ==
        std::vector<std::pair<int, int>>{{3, 2}, {4, 5}});
  // A zero-length first output merges the reads into one chunk.
  CHECK(chunk_lengths(two_segment_trace({3, 4}, {0, 5})) ==
        std::vector<std::pair<int, int>>{{7, 5}});
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_WITH_AS(wait_k_trace(7, 7, 0), doctest::Contains("InvalidK"), LatencyError);
  CHECK_THROWS_WITH_AS(chunk_k_trace(7, 7, -1), doctest::Contains("InvalidK"), LatencyError);
  CHECK_THROWS_WITH_AS(wait_k_trace(0, 7, 1), doctest::Contains("InvalidLengths"), LatencyError);
  CHECK_THROWS_WITH_AS(two_segment_trace({0, 1}, {1, 1}), doctest::Contains("InvalidLengths"),
                       LatencyError);
  CHECK_THROWS_WITH_AS(two_segment_trace({1, 1}, {0, 0}), doctest::Contains("InvalidLengths"),
                       LatencyError);
}

TEST_CASE("the timeline oracle reproduces hand-computed values") {
  CHECK(oracle_timeline_atd(wait_k_trace(7, 7, 3)) == 3.0);
  CHECK(oracle_timeline_atd(chunk_k_trace(40, 40, 40)) == 40.0);
  for (int l1 = 1; l1 <= 20; ++l1) {
    CHECK(oracle_timeline_atd(two_segment_trace({20, 20}, {l1, 20})) ==
          doctest::Approx(800.0 / (l1 + 20)).epsilon(1e-12));
  }
  CHECK(oracle_timeline_atd(two_segment_trace({20, 20}, {20, 20})) == 20.0);
}

TEST_CASE("closed-form ATD equals the oracle on every chunking up to 12x12") {
  // Exhaustive over all read/write interleavings, i.e. all chunkings
  // including leading writes and trailing reads.
  auto run_for_x = [](int x) {
    long long checked = 0;
    std::string pattern;
    SessionTrace trace;
    trace.id = "enum";
    for (int y = 1; y <= 12; ++y) {
      pattern.assign(x + y, 'W');
      // Enumerate subsets: positions of the x reads among x+y actions.
      std::vector<int> pos(x);
      for (int i = 0; i < x; ++i) pos[i] = i;
      while (true) {
        for (char& c : pattern) c = 'W';
        for (int p : pos) pattern[p] = 'R';
        trace.events.clear();
        for (char c : pattern) {
          trace.events.push_back(c == 'R' ? Event::read_token("s") : Event::write_token("t"));
        }
        const double closed = atd(assign_nca_times(derive_chunks(trace))).value;
        const double oracle = oracle_timeline_atd(trace);
        if (closed != oracle) return std::make_pair(checked, false);
        ++checked;
        // Next combination.
        int i = x - 1;
        while (i >= 0 && pos[i] == x + y - (x - i)) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < x; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
    return std::make_pair(checked, true);
  };

  std::vector<std::future<std::pair<long long, bool>>> futures;
  for (int x = 1; x <= 12; ++x) {
    futures.push_back(std::async(std::launch::async, run_for_x, x));
  }
  long long total = 0;
  for (auto& f : futures) {
    const auto [count, ok] = f.get();
    CHECK(ok);
    total += count;
  }
  // sum_{x,y=1..12} C(x+y, x)
  CHECK(total == 10400574LL);
}

TEST_CASE("wait-k and chunk-k agree with the oracle for all lengths up to 40") {
  for (int src = 1; src <= 40; ++src) {
    for (int tgt = 1; tgt <= 40; tgt += 3) {
      for (int k = 1; k <= src; k += 2) {
        const SessionTrace w = wait_k_trace(src, tgt, k);
        const SessionTrace c = chunk_k_trace(src, tgt, k);
        CHECK(closed_form_atd(w) == oracle_timeline_atd(w));
        CHECK(closed_form_atd(c) == oracle_timeline_atd(c));
      }
    }
  }
}

TEST_CASE("wait-k and chunk-k share the step ATD; at k=n it is n, never below k") {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k <= n; ++k) {
      const double wait = closed_form_atd(wait_k_trace(n, n, k));
      const double chunk = closed_form_atd(chunk_k_trace(n, n, k));
      CHECK(wait == chunk);
      CHECK(wait >= k);
    }
    CHECK(closed_form_atd(wait_k_trace(n, n, n)) == n);
  }
}

TEST_CASE("sweep rows are row-aligned per parameter and policy") {
  const SweepResult r =
      run_sweep(SimCase::Case1_40_40, {SweepPolicy::WaitK, SweepPolicy::ChunkK}, 1, 40);
  REQUIRE(r.rows.size() == 80);
  CHECK(r.rows[0].policy == "wait");
  CHECK(r.rows[1].policy == "chunk");
  int prev_param = 0;
  for (std::size_t i = 0; i < r.rows.size(); i += 2) {
    CHECK(r.rows[i].param == r.rows[i + 1].param);
    CHECK(r.rows[i].param == prev_param + 1);
    CHECK(r.rows[i].atd == r.rows[i + 1].atd);  // case 1 headline: ATD agrees
    prev_param = r.rows[i].param;
  }
}

TEST_CASE("case 1 chunk-k AL jumps between k=39 and k=40") {
  const SweepResult r = run_sweep(SimCase::Case1_40_40, {SweepPolicy::ChunkK}, 39, 40);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].al == doctest::Approx(19.525).epsilon(1e-12));
  CHECK(r.rows[1].al == doctest::Approx(40.0).epsilon(1e-12));
}

TEST_CASE("case 2 chunk-k: AL is discontinuous while ATD is monotone") {
  const SweepResult r = run_sweep(SimCase::Case2_40_100, {SweepPolicy::ChunkK}, 1, 40);
  bool al_decreases_somewhere = false;
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    if (r.rows[i].al < r.rows[i - 1].al - 1e-9) al_decreases_somewhere = true;
    CHECK(r.rows[i].atd >= r.rows[i - 1].atd - 1e-9);
  }
  CHECK(al_decreases_somewhere);
}

TEST_CASE("case 3: AL goes negative for small k, ATD never drops below 1") {
  const SweepResult r =
      run_sweep(SimCase::Case3_40_20, {SweepPolicy::WaitK, SweepPolicy::ChunkK}, 1, 40);
  bool any_negative_al = false;
  for (const SweepRow& row : r.rows) {
    if (row.al < 0.0) any_negative_al = true;
    CHECK(row.atd >= 1.0);
  }
  CHECK(any_negative_al);
}

TEST_CASE("case 4: ATD is V-shaped around L1=20, AL only decreases") {
  const SweepResult r = run_sweep(SimCase::Case4_L1, {}, 1, 60);
  REQUIRE(r.rows.size() == 60);
  for (int l1 = 1; l1 <= 20; ++l1) {
    CHECK(r.rows[l1 - 1].atd == doctest::Approx(800.0 / (l1 + 20)).epsilon(1e-12));
    if (l1 > 1) CHECK(r.rows[l1 - 1].atd <= r.rows[l1 - 2].atd + 1e-9);
  }
  for (int l1 = 21; l1 <= 60; ++l1) {
    CHECK(r.rows[l1 - 1].atd >= r.rows[l1 - 2].atd - 1e-9);
  }
  for (int l1 = 2; l1 <= 60; ++l1) {
    CHECK(r.rows[l1 - 1].al <= r.rows[l1 - 2].al + 1e-9);
  }
}

TEST_CASE("case 5: both AL and ATD are non-decreasing in L2") {
  const SweepResult r = run_sweep(SimCase::Case5_L2, {}, 1, 60);
  CHECK(r.rows[0].al == doctest::Approx(40.0 / 21.0).epsilon(1e-12));
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].al >= r.rows[i - 1].al - 1e-9);
    CHECK(r.rows[i].atd >= r.rows[i - 1].atd - 1e-9);
  }
}

TEST_CASE("oracle matches the closed form on random two-segment traces") {
  std::mt19937 rng(123);
  std::uniform_int_distribution<int> in_len(1, 30);
  std::uniform_int_distribution<int> out_len(0, 30);
  for (int iter = 0; iter < 1000; ++iter) {
    std::array<int, 2> outs{out_len(rng), out_len(rng)};
    if (outs[0] == 0 && outs[1] == 0) outs[1] = 1;
    const SessionTrace t = two_segment_trace({in_len(rng), in_len(rng)}, outs);
    CHECK(closed_form_atd(t) == oracle_timeline_atd(t));
  }
}

TEST_CASE("sweep range validation") {
  CHECK_THROWS_WITH_AS(run_sweep(SimCase::Case1_40_40, {SweepPolicy::WaitK}, 0, 10),
                       doctest::Contains("InvalidRange"), LatencyError);
  CHECK_THROWS_WITH_AS(run_sweep(SimCase::Case1_40_40, {SweepPolicy::WaitK}, 5, 4),
                       doctest::Contains("InvalidRange"), LatencyError);
  CHECK_THROWS_WITH_AS(run_sweep(SimCase::Case1_40_40, {SweepPolicy::WaitK}, 1, 41),
                       doctest::Contains("InvalidRange"), LatencyError);
  CHECK_THROWS_WITH_AS(run_sweep(SimCase::Case1_40_40, {}, 1, 40),
                       doctest::Contains("InvalidRange"), LatencyError);
  CHECK_NOTHROW(run_sweep(SimCase::Case4_L1, {}, 1, 60));
}
