#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgt/kernels.hpp"
#include "sgt/mass_function.hpp"
#include "sgt/shape.hpp"

namespace sgt {

struct CheckLine {
  std::string statistic;
  double value = 0;
  double threshold = 0;
  bool exact = false;  // equality-style check carried out in rational mode
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string claim;
  std::vector<CheckLine> checks;
  long long samples = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  double runtime_seconds = 0;
  std::string status;  // "pass", "fail", possibly "inconclusive" notes appended

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Every acceptance threshold lives in this one table (verify.cpp).
double threshold_for(const std::string& claim, const std::string& statistic);

struct VerifyOptions {
  long long samples = 0;  // 0 picks the claim's default
  std::uint64_t seed = 20260810;
  int threads = 0;  // 0 picks the machine default
};

VerificationReport verify_char(const VerifyOptions& opts);            // CHAR-1
VerificationReport verify_pieri(const VerifyOptions& opts);           // PIERI-1
VerificationReport verify_lemma_5_1(const VerifyOptions& opts);       // LEM-5.1
VerificationReport verify_kernel_rows(const VerifyOptions& opts);     // KER-1
VerificationReport verify_intertwining(const VerifyOptions& opts);    // PROP-8.2
VerificationReport verify_intertwining(const VerifyOptions& opts, int k_min, int k_max);
VerificationReport verify_theorem_7_2(const VerifyOptions& opts);     // THM-7.2
VerificationReport verify_cor_7_3(const VerifyOptions& opts);         // COR-7.3 + PROP-3.1
VerificationReport verify_cor_7_4(const VerifyOptions& opts);         // COR-7.4 + RM-1
VerificationReport verify_density(const VerifyOptions& opts);         // P-DENS-1
VerificationReport verify_dynamics(const VerifyOptions& opts);        // DYN-1

// THM-7.2 style comparison at explicit parameters (CLI overrides): the main
// TV line plus, when the top history class has enough hits, a Markov spot
// check line; otherwise a note is appended to *status_note.
std::vector<CheckLine> theorem_7_2_checks(int k, double alpha, const std::vector<double>& q,
                                          int n_steps, long long n_samples, std::uint64_t seed,
                                          int threads, std::string* status_note);

// THM-7.2 at one explicit configuration instead of the pinned pair.
VerificationReport verify_theorem_7_2_at(int k, double alpha, const std::vector<double>& q,
                                         int n_steps, const VerifyOptions& opts);

const std::vector<std::string>& all_claims();
VerificationReport verify_claim(const std::string& claim, const VerifyOptions& opts);

// Law of the depth-k top row at continuous time t started from zero, by
// uniformization of the nearest-neighbor generator on coordinates <= bound.
MassFunction<Shape, double> continuous_row_law(int k, const std::vector<double>& q, double t,
                                               Coord bound);

}  // namespace sgt
