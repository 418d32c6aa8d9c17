#include <doctest.h>

#include <cmath>
#include <vector>

#include "plunge/errors.hpp"
#include "plunge/metrics.hpp"
#include "oracles.hpp"

using namespace plunge;

namespace {

PricePanel one_entity_panel(const std::vector<double>& prices) {
    PricePanel p;
    p.entities = {"A"};
    p.dates = testutil::consecutive_dates({2006, 1, 1}, prices.size());
    p.values = Matrix(prices.size(), 1);
    for (std::size_t t = 0; t < prices.size(); ++t) p.values(t, 0) = prices[t];
    return p;
}

std::vector<double> column(const ReturnPanel& r, std::size_t i) {
    std::vector<double> out;
    for (std::size_t t = 0; t < r.days(); ++t) out.push_back(r.values(t, i));
    return out;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("constant price gives zero return") {
    const ReturnPanel r = log_returns(one_entity_panel({100.0, 100.0}));
    REQUIRE(r.days() == 1);
    CHECK(r.values(0, 0) == 0.0);
}

TEST_CASE("doubling price gives ln 2") {
    const ReturnPanel r = log_returns(one_entity_panel({100.0, 200.0}));
    CHECK(r.values(0, 0) == doctest::Approx(0.6931472).epsilon(1e-6));
}

TEST_CASE("returns are dated by the later day") {
    const PricePanel p = one_entity_panel({100.0, 110.0, 121.0});
    const ReturnPanel r = log_returns(p);
    REQUIRE(r.days() == 2);
    CHECK(r.dates == std::vector<Date>(p.dates.begin() + 1, p.dates.end()));
    CHECK(r.entities == p.entities);
    CHECK(r.values(0, 0) + r.values(1, 0) == doctest::Approx(std::log(1.21)).epsilon(1e-12));
}

TEST_CASE("single-row panel is rejected") {
    CHECK_THROWS_AS(log_returns(one_entity_panel({100.0})), InputError);
}

TEST_CASE("window stats on constant returns") {
    ReturnPanel r;
    r.entities = {"A"};
    r.dates = testutil::consecutive_dates({2006, 1, 2}, 10);
    r.values = Matrix(10, 1, 0.007);
    const WindowStats s = window_stats(r, {{2006, 1}, 0, 10, true});
    CHECK(s.mean_return[0] == doctest::Approx(0.007).epsilon(1e-15));
    CHECK(s.volatility[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.n_days == 10);
}

TEST_CASE("alternating returns have zero mean and volatility r") {
    ReturnPanel r;
    r.entities = {"A"};
    r.dates = testutil::consecutive_dates({2006, 1, 2}, 8);
    r.values = Matrix(8, 1);
    for (std::size_t t = 0; t < 8; ++t) r.values(t, 0) = (t % 2 == 0) ? 0.01 : -0.01;
    const WindowStats s = window_stats(r, {{2006, 1}, 0, 8, true});
    CHECK(s.mean_return[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.volatility[0] == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("empty window is rejected") {
    const ReturnPanel r = testutil::random_returns(3, 2, 10);
    CHECK_THROWS_AS(window_stats(r, {{2006, 1}, 4, 4, true}), InputError);
}

TEST_CASE("stats match the direct evaluation on random returns") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ReturnPanel r = testutil::random_returns(seed, 4, 20);
        const WindowStats s = window_stats(r, testutil::full_window(r));
        for (std::size_t i = 0; i < 4; ++i) {
            const std::vector<double> col = column(r, i);
            CHECK(s.mean_return[i] ==
                  doctest::Approx(testutil::oracle_mean(col)).epsilon(1e-14));
            CHECK(s.volatility[i] ==
                  doctest::Approx(testutil::oracle_volatility(col)).epsilon(1e-14));
        }
    }
}

TEST_CASE("price scaling leaves returns unchanged") {
    PricePanel p;
    p.entities = {"A", "B"};
    p.dates = testutil::consecutive_dates({2006, 1, 1}, 15);
    p.values = Matrix(15, 2);
    plunge::GaussianSource g(9);
    for (std::size_t t = 0; t < 15; ++t) {
        p.values(t, 0) = 100.0 * std::exp(0.01 * g.next());
        p.values(t, 1) = 100.0 * std::exp(0.01 * g.next());
    }
    PricePanel scaled = p;
    for (std::size_t t = 0; t < 15; ++t) scaled.values(t, 0) *= 73.5;

    const ReturnPanel r1 = log_returns(p);
    const ReturnPanel r2 = log_returns(scaled);
    for (std::size_t t = 0; t < r1.days(); ++t) {
        CHECK(std::fabs(r1.values(t, 0) - r2.values(t, 0)) < 1e-12);
        CHECK(r1.values(t, 1) == r2.values(t, 1));
    }
}

TEST_CASE("shifting returns shifts the mean and leaves volatility") {
    ReturnPanel r = testutil::random_returns(17, 1, 21);
    const WindowStats base = window_stats(r, testutil::full_window(r));
    const double c = 0.004;
    for (std::size_t t = 0; t < r.days(); ++t) r.values(t, 0) += c;
    const WindowStats shifted = window_stats(r, testutil::full_window(r));
    CHECK(shifted.mean_return[0] == doctest::Approx(base.mean_return[0] + c).epsilon(1e-12));
    CHECK(shifted.volatility[0] == doctest::Approx(base.volatility[0]).epsilon(1e-12));
}

TEST_CASE("returns telescope to the log price ratio") {
    plunge::GaussianSource g(23);
    std::vector<double> prices{250.0};
    for (int t = 0; t < 40; ++t) prices.push_back(prices.back() * std::exp(0.015 * g.next()));
    const PricePanel p = one_entity_panel(prices);
    const ReturnPanel r = log_returns(p);

    for (const auto& [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
             {0, 40}, {5, 12}, {39, 40}, {10, 30}}) {
        double sum = 0.0;
        for (std::size_t t = a; t < b; ++t) sum += r.values(t, 0);
        const double direct = std::log(prices[b] / prices[a]);
        CHECK(sum == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("volatility is zero exactly for constant windows") {
    ReturnPanel r;
    r.entities = {"A"};
    r.dates = testutil::consecutive_dates({2006, 1, 2}, 6);
    r.values = Matrix(6, 1, 0.003);
    CHECK(window_stats(r, testutil::full_window(r)).volatility[0] == 0.0);

    r.values(3, 0) = 0.003 + 1e-13;  // any unequal value makes it positive
    CHECK(window_stats(r, testutil::full_window(r)).volatility[0] > 0.0);
}

TEST_CASE("drop_entity removes exactly the named column") {
    const ReturnPanel r = testutil::random_returns(2, 3, 12);
    const ReturnPanel dropped = drop_entity(r, "E02");
    REQUIRE(dropped.entity_count() == 2);
    CHECK(dropped.entities == std::vector<std::string>{"E01", "E03"});
    for (std::size_t t = 0; t < r.days(); ++t) {
        CHECK(dropped.values(t, 0) == r.values(t, 0));
        CHECK(dropped.values(t, 1) == r.values(t, 2));
    }
    CHECK(drop_entity(r, "missing").entity_count() == 3);  // unknown name is a no-op
}

}  // TEST_SUITE
