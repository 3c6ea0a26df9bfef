#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <vector>

#include "ffopt/firefly.hpp"
#include "ffopt/objectives.hpp"
#include "oracles.hpp"

using namespace ffopt;

namespace {

Objective quadratic_1d() {
    Objective obj;
    obj.name = "quad";
    obj.space = uniform_space(1, -10.0, 10.0);
    obj.eval = [](std::span<const double> x) { return x[0] * x[0]; };
    return obj;
}

FaConfig quiet_config() {
    FaConfig cfg;
    cfg.alpha = 0.0;  // noise weight zero; draws still happen
    cfg.beta0 = 1.0;
    cfg.gamma = 1.0;
    return cfg;
}

bool same_records(const RunRecord& a, const RunRecord& b) {
    if (a.algorithm != b.algorithm || a.objective_name != b.objective_name ||
        a.seed != b.seed || a.evaluations_used != b.evaluations_used ||
        a.success != b.success)
        return false;
    if (std::memcmp(&a.best_value, &b.best_value, sizeof(double)) != 0) return false;
    if (a.best_point != b.best_point) return false;
    if (a.trace.size() != b.trace.size()) return false;
    for (std::size_t i = 0; i < a.trace.size(); ++i)
        if (a.trace[i].evaluations != b.trace[i].evaluations ||
            a.trace[i].best != b.trace[i].best)
            return false;
    return true;
}

}  // namespace

TEST_CASE("euclidean distance basics") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(distance(a, a) == 0.0);
    CHECK(distance(std::vector<double>{0.0, 0.0}, std::vector<double>{3.0, 4.0}) ==
          5.0);

    RandomSource rng(5);
    const SearchSpace box = uniform_space(6, -3.0, 7.0);
    for (int i = 0; i < 100; ++i) {
        const auto x = uniform_point(box, rng);
        const auto y = uniform_point(box, rng);
        double sq = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) sq += (x[k] - y[k]) * (x[k] - y[k]);
        CHECK(std::fabs(distance(x, y) - std::sqrt(sq)) <= 1e-12);
    }

    CHECK_THROWS_AS(distance(std::vector<double>{1.0},
                             std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("attractiveness forms") {
    FaConfig cfg;
    cfg.beta0 = 2.5;
    cfg.gamma = 1.0;

    SUBCASE("r=0 gives beta0 under both forms") {
        cfg.attractiveness_form = FaConfig::Attractiveness::gaussian;
        CHECK(attractiveness(0.0, cfg) == 2.5);
        cfg.attractiveness_form = FaConfig::Attractiveness::rational;
        CHECK(attractiveness(0.0, cfg) == 2.5);
    }

    SUBCASE("gaussian at gamma=1, r=1 is beta0/e") {
        cfg.beta0 = 1.0;
        CHECK(attractiveness(1.0, cfg) == std::exp(-1.0));
    }

    SUBCASE("the two forms agree within 1e-4 at short range") {
        cfg.beta0 = 1.0;
        cfg.attractiveness_form = FaConfig::Attractiveness::gaussian;
        const double g = attractiveness(0.1, cfg);
        cfg.attractiveness_form = FaConfig::Attractiveness::rational;
        const double r = attractiveness(0.1, cfg);
        CHECK(std::fabs(g - r) < 1e-4);
    }

    SUBCASE("both forms decrease strictly in r for gamma > 0") {
        for (auto form : {FaConfig::Attractiveness::gaussian,
                          FaConfig::Attractiveness::rational}) {
            cfg.attractiveness_form = form;
            double prev = attractiveness(0.0, cfg);
            for (int i = 1; i <= 50; ++i) {
                const double cur = attractiveness(0.1 * i, cfg);
                CHECK(cur < prev);
                prev = cur;
            }
        }
    }

    SUBCASE("rational form ignores the distance exponent") {
        cfg.attractiveness_form = FaConfig::Attractiveness::rational;
        cfg.m_exponent = 2.0;
        const double a = attractiveness(0.7, cfg);
        cfg.m_exponent = 7.0;
        CHECK(attractiveness(0.7, cfg) == a);
    }

    SUBCASE("gaussian honors a non-default exponent") {
        cfg.beta0 = 1.0;
        cfg.m_exponent = 3.0;
        CHECK(attractiveness(2.0, cfg) == std::exp(-std::pow(2.0, 3.0)));
    }

    SUBCASE("gamma=0 means constant attractiveness at any distance") {
        cfg.gamma = 0.0;
        cfg.attractiveness_form = FaConfig::Attractiveness::gaussian;
        CHECK(attractiveness(123.0, cfg) == 2.5);
        cfg.attractiveness_form = FaConfig::Attractiveness::rational;
        CHECK(attractiveness(123.0, cfg) == 2.5);
    }

    SUBCASE("huge gamma underflows to exactly zero") {
        cfg.gamma = 1e12;
        cfg.attractiveness_form = FaConfig::Attractiveness::gaussian;
        CHECK(attractiveness(0.1, cfg) == 0.0);
        CHECK(attractiveness(1.0, cfg) == 0.0);
    }
}

TEST_CASE("the two attractiveness forms differ by at most (gamma r^2)^2 when that is <= 1") {
    FaConfig g, q;
    g.beta0 = q.beta0 = 1.0;
    g.attractiveness_form = FaConfig::Attractiveness::gaussian;
    q.attractiveness_form = FaConfig::Attractiveness::rational;
    for (double gamma : {0.01, 0.1, 1.0, 10.0}) {
        g.gamma = q.gamma = gamma;
        for (int i = 1; i <= 40; ++i) {
            const double r = 0.025 * i * std::sqrt(1.0 / gamma);  // keeps gamma r^2 <= 1
            const double t = gamma * r * r;
            if (t > 1.0) continue;
            CHECK(std::fabs(attractiveness(r, g) - attractiveness(r, q)) <= t * t);
        }
    }
}

TEST_CASE("move semantics") {
    const SearchSpace box = uniform_space(2, -10.0, 10.0);

    SUBCASE("gamma=0 with unit beta0 lands exactly on the target") {
        FaConfig cfg = quiet_config();
        cfg.gamma = 0.0;
        RandomSource rng(1);
        const std::vector<double> xi{1.0, -2.0}, xj{0.5, 4.0};
        const auto out = move(xi, xj, cfg, box, rng);
        CHECK(out[0] == 0.5);  // dyadic coordinates so the step is exact
        CHECK(out[1] == 4.0);
    }

    SUBCASE("moving toward yourself changes nothing when alpha is 0") {
        FaConfig cfg = quiet_config();
        RandomSource rng(2);
        const std::vector<double> xi{3.25, -7.5};
        const auto out = move(xi, xi, cfg, box, rng);
        CHECK(out == xi);
    }

    SUBCASE("unit-distance pull matches the closed form") {
        FaConfig cfg = quiet_config();
        RandomSource rng(3);
        const std::vector<double> xi{1.0, 0.0}, xj{0.0, 0.0};
        const auto out = move(xi, xj, cfg, box, rng);
        CHECK(out[0] == 1.0 - std::exp(-1.0));
        CHECK(out[1] == 0.0);
    }

    SUBCASE("noise draws advance the stream even when alpha is 0") {
        FaConfig cfg = quiet_config();
        RandomSource rng(4);
        RandomSource probe = rng;
        (void)move(std::vector<double>{1.0, 2.0}, std::vector<double>{0.0, 0.0}, cfg,
                   box, rng);
        probe.next_double();
        probe.next_double();  // one per coordinate
        CHECK(rng.next_u64() == probe.next_u64());
    }

    SUBCASE("results are clamped into the box") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 1.0;
        const SearchSpace tight = uniform_space(1, -0.5, 0.5);
        RandomSource rng(6);
        for (int i = 0; i < 200; ++i) {
            const auto out = move(std::vector<double>{0.45},
                                  std::vector<double>{-0.45}, cfg, tight, rng);
            CHECK(contains(tight, out));
        }
    }

    SUBCASE("a gamma large enough to underflow reduces the move to pure noise") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 0.7;
        cfg.gamma = 1e12;
        RandomSource a(7), b(7);
        const std::vector<double> xi{1.25, -3.5}, xj{-8.0, 6.0};
        const auto stepped = move(xi, xj, cfg, box, a);
        const auto walked = random_walk(xi, cfg, box, b);
        REQUIRE(stepped.size() == walked.size());
        for (std::size_t k = 0; k < stepped.size(); ++k)
            CHECK(stepped[k] == walked[k]);
    }
}

TEST_CASE("random walk semantics") {
    const SearchSpace box = uniform_space(2, -10.0, 10.0);

    SUBCASE("alpha=0 leaves the point untouched but consumes draws") {
        FaConfig cfg = quiet_config();
        RandomSource rng(8);
        RandomSource probe = rng;
        const std::vector<double> x{2.5, -1.25};
        CHECK(random_walk(x, cfg, box, rng) == x);
        probe.next_double();
        probe.next_double();
        CHECK(rng.next_u64() == probe.next_u64());
    }

    SUBCASE("centered-uniform steps obey the half-width bound and hit both signs") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 0.3;
        RandomSource rng(9);
        const std::vector<double> x{0.0, 0.0};
        const double bound = 0.3 * box.width(0) * 0.5;
        int neg = 0, pos = 0;
        for (int i = 0; i < 500; ++i) {
            const auto out = random_walk(x, cfg, box, rng);
            for (double v : out) {
                CHECK(std::fabs(v) <= bound);
                (v < 0.0 ? neg : pos) += 1;
            }
        }
        CHECK(neg > 100);
        CHECK(pos > 100);
    }

    SUBCASE("first step replays exactly from a cloned stream") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 0.3;
        RandomSource rng(10);
        RandomSource probe = rng;
        const auto out = random_walk(std::vector<double>{0.0, 0.0}, cfg, box, rng);
        const double w = 0.3 * box.width(0);
        const double e0 = 0.0 + w * (probe.next_double() - 0.5);
        const double e1 = 0.0 + w * (probe.next_double() - 0.5);
        CHECK(out[0] == e0);
        CHECK(out[1] == e1);
    }

    SUBCASE("normal-noise walks draw gaussians instead") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 0.1;
        cfg.noise = FaConfig::Noise::normal;
        RandomSource rng(11);
        RandomSource probe = rng;
        const auto out = random_walk(std::vector<double>{0.0, 0.0}, cfg, box, rng);
        const double w = 0.1 * box.width(0);
        CHECK(out[0] == std::clamp(w * probe.next_normal(), -10.0, 10.0));
        CHECK(out[1] == std::clamp(w * probe.next_normal(), -10.0, 10.0));
    }

    SUBCASE("unscaled alpha uses the raw weight in every dimension") {
        FaConfig cfg = quiet_config();
        cfg.alpha = 0.25;
        cfg.scale_alpha_per_dim = false;
        RandomSource rng(12);
        RandomSource probe = rng;
        const auto out = random_walk(std::vector<double>{1.0, 1.0}, cfg, box, rng);
        CHECK(out[0] == 1.0 + 0.25 * (probe.next_double() - 0.5));
        CHECK(out[1] == 1.0 + 0.25 * (probe.next_double() - 0.5));
    }
}

TEST_CASE("one generation: dimmer agents chase brighter ones, the brightest walks") {
    Objective obj = quadratic_1d();
    FaConfig cfg = quiet_config();
    cfg.n = 2;
    cfg.alpha = 0.5;

    Evaluator ev(obj, 1000);
    FireflyState st;
    st.positions = {{1.0}, {3.0}};
    st.intensities = {-ev(st.positions[0]), -ev(st.positions[1])};

    RandomSource rng(42);
    RandomSource probe = rng;
    fa_step(st, ev, cfg, rng);

    // replay: one attraction move (firefly 1 toward 0), then firefly 0 walks
    const double w = 0.5 * obj.space.width(0);
    const double beta = std::exp(-(2.0 * 2.0));  // r = |3-1| = 2, gamma = 1
    const double moved = 3.0 + beta * (1.0 - 3.0) + w * (probe.next_double() - 0.5);
    const double walked = 1.0 + w * (probe.next_double() - 0.5);

    CHECK(st.positions[1][0] == moved);
    CHECK(st.positions[0][0] == walked);
    CHECK(st.intensities[1] == -(moved * moved));
    CHECK(st.intensities[0] == -(walked * walked));
    CHECK(ev.count() == 4);  // 2 init + 1 move + 1 walk
    CHECK(st.best_value == ev.best_value());
}

TEST_CASE("one generation: equal intensities mean no attraction moves at all") {
    Objective obj = quadratic_1d();
    FaConfig cfg = quiet_config();
    cfg.n = 3;
    cfg.alpha = 0.5;

    Evaluator ev(obj, 1000);
    FireflyState st;
    st.positions = {{2.0}, {2.0}, {2.0}};
    st.intensities = {-ev(st.positions[0]), -ev(st.positions[1]),
                      -ev(st.positions[2])};

    RandomSource rng(43);
    fa_step(st, ev, cfg, rng);

    CHECK(st.positions[1][0] == 2.0);
    CHECK(st.positions[2][0] == 2.0);
    CHECK(ev.count() == 4);  // 3 init + the walker only
    CHECK(st.positions[0][0] != 2.0);  // ties go to the first index, which walks
}

TEST_CASE("one generation, three agents: full hand trace is reproduced bitwise") {
    Objective obj = quadratic_1d();
    FaConfig cfg = quiet_config();  // alpha = 0: deterministic positions
    cfg.n = 3;

    Evaluator ev(obj, 1000);
    FireflyState st;
    st.positions = {{0.5}, {1.0}, {2.0}};
    st.intensities = {-ev(st.positions[0]), -ev(st.positions[1]),
                      -ev(st.positions[2])};

    RandomSource rng(44);
    RandomSource probe = rng;
    fa_step(st, ev, cfg, rng);

    // mirror of the in-place sweep, using the same arithmetic step by step
    auto pull = [](double xi, double xj) {
        const double d = xi - xj;
        const double r = std::sqrt(d * d);
        const double beta = std::exp(-(r * r));
        return xi + beta * (xj - xi);
    };
    const double x1 = pull(1.0, 0.5);   // i=1 chases the brighter 0
    const double x2a = pull(2.0, 0.5);  // i=2 chases 0 first...
    const double x2b = pull(x2a, x1);   // ...then the already-updated 1

    CHECK(st.positions[0][0] == 0.5);  // brightest: only the (zero-noise) walk
    CHECK(st.positions[1][0] == x1);
    CHECK(st.positions[2][0] == x2b);
    CHECK(st.intensities[1] == -(x1 * x1));
    CHECK(st.intensities[2] == -(x2b * x2b));
    CHECK(ev.count() == 7);  // 3 init + 3 moves + 1 walk
    CHECK(ev.best_value() == 0.25);
    CHECK(ev.best_point() == std::vector<double>{0.5});

    // exactly four uniforms were consumed (three moves + walk, one per coord)
    for (int i = 0; i < 4; ++i) probe.next_double();
    CHECK(rng.next_u64() == probe.next_u64());
}

TEST_CASE("one generation stops cold when the evaluation budget runs out") {
    Objective obj = quadratic_1d();
    FaConfig cfg = quiet_config();
    cfg.n = 3;

    Evaluator ev(obj, 5);  // 3 init + only 2 more
    FireflyState st;
    st.positions = {{0.5}, {1.0}, {2.0}};
    st.intensities = {-ev(st.positions[0]), -ev(st.positions[1]),
                      -ev(st.positions[2])};

    RandomSource rng(45);
    fa_step(st, ev, cfg, rng);

    auto pull = [](double xi, double xj) {
        const double d = xi - xj;
        const double r = std::sqrt(d * d);
        return xi + std::exp(-(r * r)) * (xj - xi);
    };
    CHECK(ev.count() == 5);
    CHECK(st.positions[1][0] == pull(1.0, 0.5));
    CHECK(st.positions[2][0] == pull(2.0, 0.5));  // second chase never happened
    CHECK(st.positions[0][0] == 0.5);             // walk never happened
    CHECK(st.best_value == ev.best_value());
}

TEST_CASE("full runs replay as init plus stepped generations with alpha decay") {
    const Objective obj = make_objective("rastrigin", 4);
    FaConfig cfg;
    cfg.n = 8;
    cfg.alpha = 0.4;
    cfg.alpha_decay = 0.5;
    cfg.max_generations = 6;
    cfg.max_evaluations = 100000;

    RandomSource run_rng(77);
    const RunRecord rec = fa_run(obj, cfg, run_rng, StopRule{1e-5, 0});

    RandomSource replay(77);
    Evaluator ev(obj, cfg.max_evaluations);
    FireflyState st;
    for (std::size_t i = 0; i < cfg.n; ++i) {
        st.positions.push_back(uniform_point(obj.space, replay));
        st.intensities.push_back(-ev(st.positions.back()));
    }
    FaConfig stepped = cfg;
    for (std::size_t gen = 1; gen <= cfg.max_generations; ++gen) {
        fa_step(st, ev, stepped, replay);
        stepped.alpha *= cfg.alpha_decay;
    }

    CHECK(rec.evaluations_used == ev.count());
    CHECK(rec.best_value == ev.best_value());
    CHECK(rec.best_point == ev.best_point());
    CHECK(rec.trace.size() == cfg.max_generations + 1);
    CHECK(rec.trace.front().evaluations == cfg.n);
    CHECK(rec.trace.back().evaluations == ev.count());
}

TEST_CASE("evaluation counts in run records match an external tally") {
    Objective obj = make_objective("ackley", 3);
    std::uint64_t calls = 0;
    const auto inner = obj.eval;
    obj.eval = [&calls, inner](std::span<const double> x) {
        ++calls;
        return inner(x);
    };

    FaConfig cfg;
    cfg.n = 10;
    cfg.max_generations = 20;
    cfg.max_evaluations = 3000;
    RandomSource rng(91);
    const RunRecord rec = fa_run(obj, cfg, rng, StopRule{1e-5, 0});

    CHECK(rec.evaluations_used == calls);
    CHECK(rec.trace.back().evaluations == calls);
    CHECK(rec.evaluations_used <= cfg.max_evaluations);
}

TEST_CASE("run traces are monotone and all observed agents stay inside the box") {
    const Objective obj = make_objective("griewank", 5);
    FaConfig cfg;
    cfg.n = 12;
    cfg.max_generations = 30;
    cfg.max_evaluations = 20000;

    std::size_t observed = 0;
    const GenerationObserver observer = [&](std::size_t, const FireflyState& st) {
        ++observed;
        for (const auto& p : st.positions) CHECK(contains(obj.space, p));
        CHECK(std::isfinite(st.best_value));
    };

    RandomSource rng(123);
    const RunRecord rec = fa_run(obj, cfg, rng, StopRule{1e-5, 0}, observer);

    CHECK(observed == rec.trace.size());
    for (std::size_t i = 1; i < rec.trace.size(); ++i) {
        CHECK(rec.trace[i].best <= rec.trace[i - 1].best);
        CHECK(rec.trace[i].evaluations > rec.trace[i - 1].evaluations);
    }
    CHECK(rec.best_value == rec.trace.back().best);
}

TEST_CASE("same seed, same run; different seed, different run") {
    const Objective obj = make_objective("rastrigin", 3);
    FaConfig cfg;
    cfg.n = 6;
    cfg.max_generations = 15;
    cfg.max_evaluations = 5000;

    RandomSource a(2024), b(2024), c(2025);
    const RunRecord ra = fa_run(obj, cfg, a, StopRule{1e-5, 0});
    const RunRecord rb = fa_run(obj, cfg, b, StopRule{1e-5, 0});
    const RunRecord rc = fa_run(obj, cfg, c, StopRule{1e-5, 0});

    CHECK(same_records(ra, rb));
    CHECK(!same_records(ra, rc));
    CHECK(ra.seed == 2024);
    CHECK(rc.seed == 2025);
}

TEST_CASE("the stall rule ends runs early when progress dries up") {
    // gamma=0, alpha=0: after one generation everyone collapses onto the
    // initial best and nothing changes, so a 5-generation window stops it
    const Objective obj = make_objective("dejong", 2);
    FaConfig cfg;
    cfg.n = 4;
    cfg.alpha = 0.0;
    cfg.gamma = 0.0;
    cfg.max_generations = 1000;
    cfg.max_evaluations = 100000;

    RandomSource rng(7);
    const RunRecord rec = fa_run(obj, cfg, rng, StopRule{1e-5, 5});
    CHECK(rec.trace.size() <= 8);  // init + collapse + a stalled window
    CHECK(rec.evaluations_used < 100);
}

TEST_CASE("a 2-D multimodal benchmark is solved reliably at small budget") {
    const Objective obj = make_objective("michalewicz", 2);
    FaConfig cfg;  // defaults: n=40, alpha=0.2, beta0=1, gamma=1
    cfg.max_generations = 10;

    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        RandomSource rng(seed);
        const RunRecord rec = fa_run(obj, cfg, rng, StopRule{1e-5, 0});
        if (rec.best_value <= -1.79) ++hits;
    }
    CHECK(hits >= 90);
}

TEST_CASE("configuration validation rejects out-of-range parameters") {
    FaConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.gamma = 0.0;
    CHECK_NOTHROW(cfg.validate());  // degenerate but accepted

    auto bad = [](auto&& tweak) {
        FaConfig c;
        tweak(c);
        CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    };
    bad([](FaConfig& c) { c.n = 1; });
    bad([](FaConfig& c) { c.alpha = -0.1; });
    bad([](FaConfig& c) { c.alpha = 1.5; });
    bad([](FaConfig& c) { c.beta0 = 0.0; });
    bad([](FaConfig& c) { c.gamma = -1.0; });
    bad([](FaConfig& c) { c.m_exponent = 0.5; });
    bad([](FaConfig& c) { c.alpha_decay = 0.0; });
    bad([](FaConfig& c) { c.alpha_decay = 1.5; });
}
