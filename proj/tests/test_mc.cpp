#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "test_helpers.hpp"
#include "vinechar/chain.hpp"
#include "vinechar/error.hpp"
#include "vinechar/mc.hpp"

using namespace vinechar;
using testing::bundled;

namespace {

mc::McConfig config(std::size_t n, std::uint64_t seed, int threads = 0) {
  mc::McConfig cfg;
  cfg.iterations = n;
  cfg.master_seed = seed;
  cfg.threads = threads;
  return cfg;
}

void check_same(const mc::Statistics& a, const mc::Statistics& b) {
  CHECK(a.count == b.count);
  CHECK(a.mean == b.mean);
  CHECK(a.min == b.min);
  CHECK(a.max == b.max);
  CHECK(a.std == b.std);
  CHECK(a.p5 == b.p5);
  CHECK(a.p50 == b.p50);
  CHECK(a.p95 == b.p95);
  CHECK(a.histogram.edges == b.histogram.edges);
  CHECK(a.histogram.counts == b.histogram.counts);
}

void check_same(const mc::McResult& a, const mc::McResult& b) {
  const mc::SectorSummary* sa[] = {&a.summary.biochar, &a.summary.vineyard, &a.summary.winery,
                                   &a.summary.chain};
  const mc::SectorSummary* sb[] = {&b.summary.biochar, &b.summary.vineyard, &b.summary.winery,
                                   &b.summary.chain};
  for (int i = 0; i < 4; ++i) {
    check_same(sa[i]->bc_ratio, sb[i]->bc_ratio);
    check_same(sa[i]->npv, sb[i]->npv);
    check_same(sa[i]->annual_net_income, sb[i]->annual_net_income);
    CHECK(sa[i]->prob_bc_gt_1 == sb[i]->prob_bc_gt_1);
  }
  check_same(a.summary.sequestration_cost, b.summary.sequestration_cost);
  REQUIRE(a.samples.names() == b.samples.names());
  for (std::size_t c = 0; c < a.samples.names().size(); ++c) {
    const auto x = a.samples.column(c);
    const auto y = b.samples.column(c);
    CHECK(std::equal(x.begin(), x.end(), y.begin(), y.end()));
  }
}

}  // namespace

TEST_CASE("summarize examples") {
  const std::vector<double> v{1, 2, 3};
  const auto s = mc::summarize(v, 3);
  CHECK(s.mean == 2.0);
  CHECK(s.min == 1.0);
  CHECK(s.max == 3.0);
  CHECK(s.std == doctest::Approx(1.0));
  CHECK(s.p50 == 2.0);

  const std::vector<double> flat(17, 4.25);
  const auto c = mc::summarize(flat, 10);
  CHECK(c.std == 0.0);
  CHECK(std::count_if(c.histogram.counts.begin(), c.histogram.counts.end(),
                      [](std::size_t k) { return k > 0; }) == 1);

  std::vector<double> seq(1000);
  std::iota(seq.begin(), seq.end(), 0.0);
  CHECK(mc::fraction_above(seq, 499.0) == 0.5);

  try {
    mc::summarize(std::vector<double>{}, 5);
    FAIL("expected EmptyInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyInput);
  }
}

TEST_CASE("nearest-rank percentiles") {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  CHECK(mc::nearest_rank(v, 5.0) == 5.0);
  CHECK(mc::nearest_rank(v, 50.0) == 50.0);
  CHECK(mc::nearest_rank(v, 95.0) == 95.0);
  CHECK(mc::nearest_rank(v, 100.0) == 100.0);
  const std::vector<double> one{7.0};
  CHECK(mc::nearest_rank(one, 5.0) == 7.0);
}

TEST_CASE("property: summary invariants") {
  const auto spec = bundled("independent").spec;
  const auto r = mc::run(spec, config(500, 3));
  for (const auto* s : {&r.summary.biochar, &r.summary.vineyard, &r.summary.winery,
                        &r.summary.chain}) {
    for (const auto* st : {&s->bc_ratio, &s->npv, &s->annual_net_income}) {
      CHECK(st->min <= st->p5);
      CHECK(st->p5 <= st->p50);
      CHECK(st->p50 <= st->p95);
      CHECK(st->p95 <= st->max);
      CHECK(std::accumulate(st->histogram.counts.begin(), st->histogram.counts.end(),
                            std::size_t{0}) == 500);
      CHECK(st->histogram.edges.front() == st->min);
      CHECK(st->histogram.edges.back() == st->max);
    }
    CHECK(s->prob_bc_gt_1 >= 0.0);
    CHECK(s->prob_bc_gt_1 <= 1.0);
  }
  CHECK(r.samples.rows() == 500);
  // Independent oracle for the fraction and mean from the raw column.
  const auto bc = r.samples.column("biochar.bc_ratio");
  const auto above = std::count_if(bc.begin(), bc.end(), [](double x) { return x > 1.0; });
  CHECK(r.summary.biochar.prob_bc_gt_1 == static_cast<double>(above) / 500.0);
  CHECK(r.summary.biochar.bc_ratio.mean ==
        doctest::Approx(std::accumulate(bc.begin(), bc.end(), 0.0) / 500.0).epsilon(1e-12));
}

TEST_CASE("all-degenerate scenario reduces to the deterministic chain") {
  auto spec = bundled("integrated").spec;
  visit_variables(spec, [](std::string_view, TriangularDist& d) {
    d = TriangularDist::constant(dist::mean(d));
  });
  // Re-derive red share to keep the shares consistent.
  spec.winery.red_share = TriangularDist::constant(1.0 - spec.winery.white_share.mode);
  const auto r = mc::run(spec, config(25, 9));
  const auto expected = chain::evaluate_chain(spec, base_draw(spec));
  CHECK(r.summary.biochar.bc_ratio.std == 0.0);
  CHECK(r.summary.biochar.bc_ratio.min == r.summary.biochar.bc_ratio.max);
  CHECK(r.summary.biochar.bc_ratio.mean == doctest::Approx(expected.biochar.bc_ratio));
  CHECK(r.summary.winery.npv.std == 0.0);
  CHECK(r.summary.chain.npv.mean == doctest::Approx(expected.total.npv));
}

TEST_CASE("determinism across workers and against the serial reference") {
  const auto spec = bundled("independent").spec;
  const auto serial = mc::run_serial(spec, config(400, 11));
  for (int threads : {1, 2, 3, 8}) {
    CAPTURE(threads);
    check_same(serial, mc::run(spec, config(400, 11, threads)));
  }
  const auto other = mc::run(spec, config(400, 12));
  CHECK(other.summary.biochar.bc_ratio.mean != serial.summary.biochar.bc_ratio.mean);
}

TEST_CASE("iteration prefix is stable when n grows") {
  const auto spec = bundled("integrated").spec;
  const auto small = mc::run(spec, config(50, 5));
  const auto large = mc::run(spec, config(200, 5));
  const auto a = small.samples.column("chain.npv");
  const auto b = large.samples.column("chain.npv");
  CHECK(std::equal(a.begin(), a.end(), b.begin()));
}

TEST_CASE("winery probability converges") {
  const auto spec = bundled("independent").spec;
  const double p1 = mc::run(spec, config(1000, 42)).summary.winery.prob_bc_gt_1;
  const double p2 = mc::run(spec, config(10000, 42)).summary.winery.prob_bc_gt_1;
  CHECK(std::abs(p1 - p2) < 0.01);
}

TEST_CASE("monotone coupling in the biochar price low bound") {
  auto spec = bundled("independent").spec;
  double previous = mc::run(spec, config(300, 8)).summary.biochar.bc_ratio.mean;
  for (double low : {400.0, 600.0, 800.0, 1000.0}) {
    spec.biochar.biochar_price.low = low;
    const double m = mc::run(spec, config(300, 8)).summary.biochar.bc_ratio.mean;
    CHECK(m >= previous);
    previous = m;
  }
}

TEST_CASE("sampled inputs reproduce triangular means") {
  const auto spec = bundled("independent").spec;
  const double target = dist::mean(spec.biochar.biochar_price);
  const auto r = mc::run(spec, config(1000, 42));
  const auto col = r.samples.column("biochar.biochar_price");
  const double m = std::accumulate(col.begin(), col.end(), 0.0) / 1000.0;
  CHECK(std::abs(m / 1078.0 - 1.0) < 0.01);
  CHECK(std::abs(m / target - 1.0) < 0.01);
}

TEST_CASE("sample matrix") {
  const auto spec = bundled("independent").spec;
  const auto r = mc::run(spec, config(20, 1));
  for (const auto& id : variable_ids()) CHECK(r.samples.has(id));
  for (const char* id : {"vineyard.treated_ha", "carbon.co2_t", "chain.npv", "winery.bc_ratio",
                         "carbon.sequestration_cost"}) {
    CHECK(r.samples.has(id));
  }
  try {
    r.samples.column("nope");
    FAIL("expected UnknownVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
  // Red share mirrors white in every draw.
  const auto w = r.samples.column("winery.white_share");
  const auto rd = r.samples.column("winery.red_share");
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] + rd[i] == doctest::Approx(1.0));
}

TEST_CASE("draw errors carry the iteration index") {
  auto spec = bundled("independent").spec;
  // Conversion can hit zero, which leaves the vineyard without a cost base.
  spec.biochar.conversion_rate = TriangularDist::constant(0.0);
  try {
    mc::run(spec, config(10, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroCostBase);
    CHECK(std::string(e.what()).find("iteration 0") != std::string::npos);
  }
}

TEST_CASE("config validation") {
  const auto spec = bundled("independent").spec;
  try {
    mc::run(spec, config(0, 0));
    FAIL("expected InvalidParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}
