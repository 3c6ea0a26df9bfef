#pragma once

// The ten benchmark functions, plus a catalog that attaches search
// domains and known-optimum metadata for success checking.
//
// Standard forms (all minimization):
//   michalewicz  -sum sin(x_i) * sin(i*x_i^2/pi)^(2m),      [0, pi]^d, m=10
//   yang         [e^(-sum (x_i/a)^(2m)) - 2 e^(-sum x_i^2)] * prod cos^2 x_i,
//                                                           [-20, 20]^d, a=15, m=5
//   rosenbrock   sum 100(x_{i+1}-x_i^2)^2 + (1-x_i)^2,      [-2.048, 2.048]^d
//   dejong       sum x_i^2,                                 [-5.12, 5.12]^d
//   schwefel     418.9829 d - sum x_i sin(sqrt|x_i|),       [-500, 500]^d
//   ackley       a=20, b=0.2, c=2pi form,                   [-32.768, 32.768]^d
//   rastrigin    10 d + sum (x_i^2 - 10 cos 2pi x_i),       [-5.12, 5.12]^d
//   easom        -cos x cos y exp(-(x-pi)^2-(y-pi)^2),      [-100, 100]^2
//   griewank     1 + sum x_i^2/4000 - prod cos(x_i/sqrt i), [-600, 600]^d
//   shubert      prod_k sum_{j=1..5} j cos((j+1)x_k + j),   [-10, 10]^2

#include <span>
#include <string>
#include <vector>

#include "ffopt/objective.hpp"

namespace ffopt {

double michalewicz(std::span<const double> x, int m = 10);
double yang(std::span<const double> x, double a = 15.0, int m = 5);
double rosenbrock(std::span<const double> x);
double dejong(std::span<const double> x);
double schwefel(std::span<const double> x);
double ackley(std::span<const double> x);
double rastrigin(std::span<const double> x);
double easom(std::span<const double> x);
double griewank(std::span<const double> x);
double shubert(std::span<const double> x);

// Catalog names in presentation (table) order.
const std::vector<std::string>& objective_names();
bool is_objective_name(const std::string& name);

// Dimension each function is benchmarked at by default; easom and shubert
// are inherently 2-D and reject other dimensions.
std::size_t default_dim(const std::string& name);

// Builds the named objective at dimension `dim` (0 = default_dim), with
// domain and known-optimum metadata attached. Throws std::invalid_argument
// for unknown names (message lists the catalog) or invalid dimensions.
Objective make_objective(const std::string& name, std::size_t dim = 0);

}  // namespace ffopt
