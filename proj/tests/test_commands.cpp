#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "cylosc/commands.hpp"
#include "csv.hpp"

using namespace cylosc;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

template <class Writer>
std::string render(Writer writer, const RunConfig& cfg)
{
    std::ostringstream out;
    writer(cfg, out);
    return out.str();
}

}  // namespace

TEST_CASE("density csv")
{
    RunConfig cfg;
    SUBCASE("shape")
    {
        cfg.grid_phi = 2;
        cfg.grid_l = 2;
        const std::string text = render(write_density_csv, cfg);
        const auto table = csv::parse(text);
        CHECK(table.header == "t,phi,l,p");
        CHECK(table.rows.size() == 4);
        for (const auto& row : table.rows)
            CHECK(row.size() == 4);
        CHECK(text.back() == '\n');
        CHECK(text.find(",\n") == std::string::npos);
        CHECK(text.find('\r') == std::string::npos);
    }
    SUBCASE("normalization and equal maxima at t = pi")
    {
        const auto table = csv::parse(render(write_density_csv, cfg));
        REQUIRE(table.rows.size() == 256u * 256u);
        const double dphi = kTwoPi / 256.0;
        const double dl = table.rows[1][2] - table.rows[0][2];
        double sum = 0.0;
        std::map<double, double> marginal;
        for (const auto& row : table.rows) {
            CHECK(row[0] == kPi);
            sum += row[3];
            marginal[row[1]] += row[3] * dl;
        }
        CHECK(sum * dphi * dl / kTwoPi == doctest::Approx(1.0).epsilon(1e-6));

        std::vector<double> heights;
        for (const auto& [phi, m] : marginal)
            heights.push_back(m);
        std::sort(heights.rbegin(), heights.rend());
        CHECK(std::abs(heights[0] - heights[1]) <= 1e-8 * heights[0]);
    }
    SUBCASE("explicit l range")
    {
        cfg.grid_phi = 3;
        cfg.grid_l = 5;
        cfg.l_min = -1.0;
        cfg.l_max = 1.0;
        const auto table = csv::parse(render(write_density_csv, cfg));
        CHECK(table.rows.front()[2] == -1.0);
        CHECK(table.rows[4][2] == 1.0);
    }
}

TEST_CASE("trajectory csv")
{
    RunConfig cfg;
    cfg.dt = kPi / 50;
    cfg.t_max = 8.0 * kPi;
    const auto table = csv::parse(render(write_trajectory_csv, cfg));
    CHECK(table.header == "t,phi,l,absU");
    REQUIRE(table.rows.size() == 401);
    CHECK(table.rows[0][0] == 0.0);
    CHECK(table.rows[0][1] == doctest::Approx(cfg.alpha).epsilon(1e-12));
    CHECK(table.rows[0][2] == cfg.q);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(table.rows[i][3] <= 1.0);
        if (i + 200 < table.rows.size()) {
            CHECK(std::abs(wrap_pi(table.rows[i][1] - table.rows[i + 200][1])) < 1e-10);
            CHECK(std::abs(table.rows[i][2] - table.rows[i + 200][2]) < 1e-10);
        }
    }
}

TEST_CASE("jumps csv")
{
    RunConfig cfg;
    SUBCASE("single jump")
    {
        cfg.k_min = cfg.k_max = 0;
        const auto table = csv::parse(render(write_jumps_csv, cfg));
        CHECK(table.header == "k,t_star,phi_minus,phi_plus,l,delta_phi");
        REQUIRE(table.rows.size() == 1);
        CHECK(table.rows[0][0] == 0.0);
        CHECK(table.rows[0][1] == kPi);
    }
    SUBCASE("golden ratio against 1.62")
    {
        auto distinct_l = [](const csv::Table& t) {
            std::vector<double> l;
            for (const auto& row : t.rows)
                l.push_back(row[4]);
            std::sort(l.begin(), l.end());
            return static_cast<std::size_t>(std::unique(l.begin(), l.end(), [](double a, double b) {
                                                return b - a <= 1e-9;
                                            }) - l.begin());
        };
        cfg.omega = kGolden;
        const auto golden = csv::parse(render(write_jumps_csv, cfg));
        REQUIRE(golden.rows.size() == 1000);
        for (const auto& row : golden.rows)
            CHECK(std::abs(std::abs(row[5]) - kPi) < 1e-4);
        cfg.omega = 1.62;
        const auto rational = csv::parse(render(write_jumps_csv, cfg));
        CHECK(distinct_l(golden) == 1000);
        CHECK(distinct_l(rational) <= 100);
    }
}

TEST_CASE("classical csv")
{
    RunConfig cfg;
    const auto table = csv::parse(render(write_classical_csv, cfg));
    CHECK(table.header == "t,phi,l,p_l,energy");
    REQUIRE(!table.rows.empty());
    CHECK(table.rows[0][1] == doctest::Approx(cfg.alpha));
    CHECK(table.rows[0][2] == cfg.q);
    CHECK(table.rows[0][3] == cfg.p);
    const double bound = std::hypot(cfg.q, cfg.p / cfg.omega);
    double lo = 1e300, hi = -1e300;
    for (const auto& row : table.rows) {
        CHECK(std::abs(row[2]) <= bound + 1e-12);
        lo = std::min(lo, row[4]);
        hi = std::max(hi, row[4]);
    }
    CHECK(hi - lo < 1e-12);
}

TEST_CASE("output is deterministic")
{
    RunConfig cfg;
    cfg.grid_phi = 40;
    cfg.grid_l = 30;
    CHECK(render(write_density_csv, cfg) == render(write_density_csv, cfg));
    CHECK(render(write_jumps_csv, cfg) == render(write_jumps_csv, cfg));
    CHECK(render(write_trajectory_csv, cfg) == render(write_trajectory_csv, cfg));
}

TEST_CASE("invalid configurations")
{
    auto rejects = [](auto mutate) {
        RunConfig cfg;
        mutate(cfg);
        std::ostringstream out;
        CHECK_THROWS_AS(write_density_csv(cfg, out), ArgumentError);
    };
    rejects([](RunConfig& c) { c.omega = 0.0; });
    rejects([](RunConfig& c) { c.omega = NAN; });
    rejects([](RunConfig& c) { c.grid_phi = 1; });
    rejects([](RunConfig& c) { c.grid_l = 1; });
    rejects([](RunConfig& c) { c.dt = 0.0; });
    rejects([](RunConfig& c) { c.k_max = -1; });
    rejects([](RunConfig& c) { c.tol = -1.0; });
    rejects([](RunConfig& c) {
        c.l_min = 1.0;
        c.l_max = -1.0;
    });
}
