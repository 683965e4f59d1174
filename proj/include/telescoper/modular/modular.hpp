#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "telescoper/algebra/monomial.hpp"
#include "telescoper/algebra/ratfun.hpp"
#include "telescoper/picardfuchs/integrand.hpp"
#include "telescoper/picardfuchs/operator.hpp"

namespace tel {

// Image of the reduction data at one evaluation t = u modulo p.
//
// basis is the smallest monomial set containing supp [alpha]_r and closed
// under mu -> [f^delta mu]_r, except that monomials with pole order > n
// (frontier) are recorded but not expanded. cols[j] is [f^delta basis_j]_r
// in coordinates, empty for frontier monomials.
struct PointImage {
  std::uint32_t u = 0;
  std::vector<Monomial> basis;  // decreasing grevlex
  std::vector<char> frontier;
  std::vector<std::uint32_t> rho0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> cols;
};

struct ModularOptions {
  int r_start = 1;
  int max_r = 8;
  int max_order = 64;
  int prime_bits = 31;
  int primes = 0;           // 0: add primes until reconstruction is confirmed
  int max_primes = 16;
  int initial_points = 8;
  int max_points = 2048;
  int quorum = 3;
  std::size_t max_basis = 20000;
  std::uint64_t seed = 1;
  bool parallel = true;
  double budget_seconds = 0;
  // Test hook: called on every residue relation before lifting.
  std::function<void(std::size_t prime_index, std::vector<FptElem>& relation, const FptField& L)> fault;
};

// Same data over F_p(t), obtained by interpolation in u.
struct ModularSnapshot {
  std::uint32_t p = 0;
  std::vector<Monomial> basis;
  std::vector<char> frontier;
  std::vector<FptElem> rho0;
  std::vector<std::vector<std::pair<int, FptElem>>> cols;
  int points_used = 0;
};

struct ModularResult {
  DiffOperator op;
  std::vector<QtElem> relation;  // a_0..a_m with a_m = 1
  int r_used = 0;
  std::vector<std::uint32_t> primes;
  std::uint32_t confirmation_prime = 0;
  int points_per_prime = 0;
  std::size_t basis_size = 0;
};

// Reduction of H.a and of f^delta times each basis monomial, at t = u.
// Throws DegenerateEvaluation if u is a pole of a coefficient or kills a
// coefficient of f, ResourceError if the basis grows past max_basis.
PointImage point_image(const HomogeneousIntegrand& H, int r, const PrimeField& K, std::uint32_t u,
                       std::size_t max_basis = 20000);

// Evaluates at random points of F_p (OpenMP over points when opt.parallel),
// keeps the majority support, interpolates every entry and confirms on a
// withheld point, doubling the number of points until that succeeds.
ModularSnapshot delta_matrix(const HomogeneousIntegrand& H, int r, std::uint32_t p, const ModularOptions& opt,
                             std::mt19937_64& rng);

// rho_{i+1} = rho_i^delta - B rho_i over F_p(t) until the first linear
// dependence. Returns a_0..a_m with a_m = 1, or nullopt when some rho_i
// reaches a frontier monomial.
std::optional<std::vector<FptElem>> relation_from_snapshot(const ModularSnapshot& S, int max_order);

// Evaluation/interpolation version of the exact driver: per-prime images,
// Chinese remaindering, rational reconstruction and a withheld prime check.
ModularResult picard_fuchs_modular(const HomogeneousIntegrand& H, const ModularOptions& opt = {});

}  // namespace tel
