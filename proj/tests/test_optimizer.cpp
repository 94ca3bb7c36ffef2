#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qap/errors.hpp"
#include "qap/optimizer.hpp"

using namespace qap;

TEST_CASE("plain gradient descent step") {
  Optimizer opt({OptKind::GD, 0.2}, 1);
  const std::vector<double> params{1.0};
  const std::vector<double> grad{0.5};
  const std::vector<std::uint8_t> live{0};
  const std::vector<double> next = opt.step(params, grad, live);
  CHECK(next[0] == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(opt.step_count() == 1);
}

TEST_CASE("adam first step") {
  OptimizerConfig cfg;
  cfg.kind = OptKind::Adam;
  cfg.learning_rate = 0.001;
  Optimizer opt(cfg, 1);
  const std::vector<double> next =
      opt.step(std::vector<double>{0.0}, std::vector<double>{0.5}, {0});
  CHECK(next[0] == doctest::Approx(-0.0009999999800000003).epsilon(1e-14));
}

TEST_CASE("adam matches a recorded three-step scalar trace") {
  OptimizerConfig cfg;
  cfg.kind = OptKind::Adam;
  cfg.learning_rate = 0.1;
  Optimizer opt(cfg, 1);
  std::vector<double> theta{0.5};
  const double grads[3] = {0.3, -0.2, 0.1};
  const double want[3] = {0.4000000033333332, 0.3855479509285968,
                          0.3576970608345972};
  for (int t = 0; t < 3; ++t) {
    theta = opt.step(theta, std::vector<double>{grads[t]}, {0});
    CHECK(theta[0] == doctest::Approx(want[t]).epsilon(1e-14));
  }
}

TEST_CASE("rmsprop matches a recorded three-step scalar trace") {
  OptimizerConfig cfg;
  cfg.kind = OptKind::RMSProp;
  cfg.learning_rate = 0.1;
  Optimizer opt(cfg, 1);
  std::vector<double> theta{0.5};
  const double grads[3] = {0.3, -0.2, 0.1};
  const double want[3] = {0.18377226731649188, 0.36559043260574964,
                          0.27388205027751344};
  for (int t = 0; t < 3; ++t) {
    theta = opt.step(theta, std::vector<double>{grads[t]}, {0});
    CHECK(theta[0] == doctest::Approx(want[t]).epsilon(1e-14));
  }
}

TEST_CASE("all-frozen step is the identity and skips moment updates") {
  for (OptKind kind : {OptKind::GD, OptKind::RMSProp, OptKind::Adam}) {
    OptimizerConfig cfg;
    cfg.kind = kind;
    cfg.learning_rate = 0.3;
    Optimizer opt(cfg, 3);
    const std::vector<double> params{0.1, -2.0, 5.5};
    const std::vector<double> grad{1.0, 1.0, 1.0};
    const std::vector<std::uint8_t> frozen{1, 1, 1};
    const std::vector<double> next = opt.step(params, grad, frozen);
    CHECK(next == params);  // bit-identical
    CHECK(opt.step_count() == 1);
  }
}

TEST_CASE("partially frozen slots keep their exact value") {
  OptimizerConfig cfg;
  cfg.kind = OptKind::Adam;
  cfg.learning_rate = 0.05;
  Optimizer opt(cfg, 2);
  std::vector<double> params{0.123456789, -0.5};
  const std::vector<std::uint8_t> frozen{1, 0};
  for (int t = 0; t < 5; ++t) {
    params = opt.step(params, std::vector<double>{0.7, 0.7}, frozen);
    CHECK(params[0] == 0.123456789);
  }
  CHECK(params[1] != -0.5);
}

TEST_CASE("gradient descent converges on the cosine bowl") {
  // Minimizing cos(theta) from 0.1 with eta = 0.2 walks to pi.
  Optimizer opt({OptKind::GD, 0.2}, 1);
  std::vector<double> theta{0.1};
  bool reached = false;
  for (int t = 0; t < 200 && !reached; ++t) {
    theta = opt.step(theta, std::vector<double>{-std::sin(theta[0])}, {0});
    reached = std::abs(theta[0] - std::numbers::pi) < 1e-3;
  }
  CHECK(reached);
}

TEST_CASE("optimizer input validation") {
  CHECK_THROWS_AS(Optimizer({OptKind::GD, 0.0}, 1), input_error);
  Optimizer opt({OptKind::GD, 0.1}, 2);
  CHECK_THROWS_AS(opt.step(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0},
                           {0, 0}),
                  input_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(opt.step(std::vector<double>{1.0, 1.0},
                           std::vector<double>{nan, 0.0}, {0, 0}),
                  numeric_error);
  // A non-finite gradient on a frozen slot is ignored.
  const std::vector<double> out = opt.step(std::vector<double>{1.0, 1.0},
                                           std::vector<double>{nan, 0.5}, {1, 0});
  CHECK(out[0] == 1.0);
}
