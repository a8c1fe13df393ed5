#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "vinechar/dist.hpp"
#include "vinechar/error.hpp"
#include "vinechar/sample_stream.hpp"

using namespace vinechar;
using dist::TriangularDist;

namespace {

// Test-only density and Simpson quadrature, independent of the sampler.
double pdf(const TriangularDist& d, double x) {
  if (x < d.low || x > d.high) return 0.0;
  const double w = d.high - d.low;
  if (x <= d.mode) return d.mode == d.low ? 2.0 / w : 2.0 * (x - d.low) / (w * (d.mode - d.low));
  return 2.0 * (d.high - x) / (w * (d.high - d.mode));
}

template <class F>
double simpson(F f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

ErrorKind kind_of(const TriangularDist& d) {
  try {
    dist::validate(d);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected validation error");
  return ErrorKind::Parse;
}

const TriangularDist kPrice{334, 1078, 1822};

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(dist::validate(kPrice));
  CHECK_NOTHROW(dist::validate({5, 5, 5}));
  CHECK(kind_of({10, 5, 20}) == ErrorKind::OrderingViolation);
  CHECK(kind_of({0, 5, 4}) == ErrorKind::OrderingViolation);
  CHECK(kind_of({0, NAN, 4}) == ErrorKind::NonFinite);
  CHECK(kind_of({-INFINITY, 0, 4}) == ErrorKind::NonFinite);

  try {
    dist::validate({10, 5, 20}, "biochar.biochar_price");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("below low") != std::string::npos);
    CHECK(std::string(e.what()).find("biochar.biochar_price") != std::string::npos);
  }
}

TEST_CASE("mean matches quadrature of x * pdf") {
  CHECK(dist::mean(kPrice) == doctest::Approx(1078.0));
  CHECK(dist::mean({5991, 7107, 8222}) == doctest::Approx(7106.67).epsilon(1e-6));
  CHECK(dist::mean({3, 3, 3}) == 3.0);

  for (const TriangularDist& d : {kPrice, TriangularDist{0.25, 0.33, 0.40},
                                  TriangularDist{405.95, 487.14, 649.51},
                                  TriangularDist{0, 0, 10}}) {
    const double m = simpson([&](double x) { return x * pdf(d, x); }, d.low, d.high);
    CHECK(dist::mean(d) == doctest::Approx(m).epsilon(1e-6));
    const double v = simpson([&](double x) { return (x - m) * (x - m) * pdf(d, x); }, d.low, d.high);
    CHECK(dist::variance(d) == doctest::Approx(v).epsilon(1e-5));
  }
}

TEST_CASE("sample examples") {
  CHECK(dist::sample({0, 1, 2}, 0.5) == doctest::Approx(1.0));
  const double u_mode = (1078.0 - 334.0) / (1822.0 - 334.0);
  CHECK(dist::sample(kPrice, u_mode) == doctest::Approx(1078.0).epsilon(1e-12));
  CHECK(dist::sample({5, 5, 5}, 0.999) == 5.0);
  CHECK(dist::sample(kPrice, 0.0) == 334.0);
}

TEST_CASE("sample rejects uniforms outside [0, 1)") {
  for (double u : {-0.1, 1.0, 1.5, std::nan("")}) {
    try {
      dist::sample(kPrice, u);
      FAIL("expected InvalidUniform");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidUniform);
    }
  }
}

TEST_CASE("inverse CDF agrees with integrated density") {
  for (double u : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const double x = dist::sample(kPrice, u);
    const double area = simpson([&](double t) { return pdf(kPrice, t); }, kPrice.low, x);
    CHECK(area == doctest::Approx(u).epsilon(1e-6));
  }
}

TEST_CASE("property: samples stay in bounds and are monotone in u") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> bound(-100.0, 100.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    double a = bound(gen), b = bound(gen), c = bound(gen);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const TriangularDist d{a, b, c};
    double u1 = unit(gen), u2 = unit(gen);
    if (u1 > u2) std::swap(u1, u2);
    const double x1 = dist::sample(d, u1), x2 = dist::sample(d, u2);
    CHECK(x1 >= d.low);
    CHECK(x2 <= d.high);
    CHECK(x1 <= x2);
  }
}

TEST_CASE("property: stratified sample mean converges to the analytic mean") {
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += dist::sample(kPrice, (i + 0.5) / n);
  const double m = sum / n;
  CHECK(std::abs(m - dist::mean(kPrice)) / dist::mean(kPrice) < 0.005);
}

TEST_CASE("sample stream is a pure function of its key") {
  const dist::SampleStream a(42), b(42), c(43);
  CHECK(a.uniform(7, "biochar.biochar_price") == b.uniform(7, "biochar.biochar_price"));
  CHECK(a.uniform(7, "biochar.biochar_price") != c.uniform(7, "biochar.biochar_price"));
  CHECK(a.uniform(7, "biochar.biochar_price") != a.uniform(8, "biochar.biochar_price"));
  CHECK(a.uniform(7, "biochar.biochar_price") != a.uniform(7, "biochar.conversion_rate"));
  CHECK(a.uniform(7, dist::SampleStream::variable_key("x")) == a.uniform(7, "x"));

  // Reverse order gives the same values.
  std::vector<double> fwd, rev;
  for (std::uint64_t i = 0; i < 100; ++i) fwd.push_back(a.uniform(i, "v"));
  for (std::uint64_t i = 100; i-- > 0;) rev.push_back(a.uniform(i, "v"));
  std::reverse(rev.begin(), rev.end());
  CHECK(fwd == rev);
}

TEST_CASE("sample stream uniforms lie in [0, 1) and look uniform") {
  const dist::SampleStream s(0);
  const int n = 100000;
  std::vector<int> buckets(10, 0);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform(static_cast<std::uint64_t>(i), "biochar.biochar_price");
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    ++buckets[static_cast<std::size_t>(u * 10)];
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  // Chi-square with 9 dof; 27.9 is the 0.999 quantile.
  double chi2 = 0.0;
  for (int count : buckets) chi2 += (count - n / 10.0) * (count - n / 10.0) / (n / 10.0);
  CHECK(chi2 < 27.9);
}
