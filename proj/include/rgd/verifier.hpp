#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgd/group_model.hpp"

namespace rgd {

enum class Axiom { RGD0, RGD1, RGD2, RGD3, RGD4, RGD5, CorootShift, Q2Additive, Combinatorics };

std::string axiom_name(Axiom a);
std::string axiom_tag(Axiom a);  // CLI spelling: rgd0 .. rgd5, coroot, q2, comb
std::optional<Axiom> axiom_from_tag(const std::string& tag);
const std::vector<Axiom>& all_axioms();

struct Failure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct AxiomReport {
  Axiom axiom = Axiom::RGD0;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first max_failures witnesses
  double elapsed_ms = 0;
  bool pass() const { return failure_count == 0; }
};

struct SuiteConfig {
  long level_min = -2;
  long level_max = 2;
  std::size_t samples = 8;
  std::uint64_t seed = 0;
  std::vector<Axiom> suites = all_axioms();
  std::size_t max_failures = 20;
  std::size_t points = 20;  // sampled points per combinatorial case

  void validate() const;  // throws ConfigError
};

// 1, -1, 1/2 followed by seeded small nonzero rationals.
std::vector<Rational> coefficient_samples(std::size_t count, std::uint64_t seed);

AxiomReport check_rgd0(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_rgd1(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_rgd2(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_rgd3(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_rgd4(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_rgd5(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_coroot_shift(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_q2_additive(const GroupModel& g, const SuiteConfig& cfg);
AxiomReport check_combinatorics(const RootSystem& sys, const SuiteConfig& cfg);

AxiomReport run_suite(const GroupModel& g, const SuiteConfig& cfg, Axiom a);
std::vector<AxiomReport> run_suites(const GroupModel& g, const SuiteConfig& cfg);

// Entries in k^[1/t] with upper unitriangular constant term, and its mirror.
bool in_positive_profile(const LaurentMatrix& m);
bool in_negative_profile(const LaurentMatrix& m);

}  // namespace rgd
