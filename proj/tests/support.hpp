#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdt/quiver.hpp"
#include "mdt/qseries.hpp"
#include "mdt/ring.hpp"

// Shared between the unit tests and the acceptance gate: random value
// generators and the per-module property suites. Each suite returns
// human-readable failure lines; an empty vector means the suite is green.
namespace testsup {

using Rng = std::mt19937_64;

long rand_long(Rng& rng, long lo, long hi);

mdt::TPoly random_tpoly(Rng& rng, int max_terms, long exp_lo, long exp_hi, long coeff_bound,
                        bool nonzero);
mdt::TRat random_trat(Rng& rng);
mdt::TRat random_trat_nonzero(Rng& rng);
mdt::QSeries random_qseries(Rng& rng, long trunc);
mdt::QSeries random_unit_qseries(Rng& rng, long trunc);

mdt::QMat random_qmat(Rng& rng, long n, long bound);
mdt::QVec random_qvec(Rng& rng, long n, long bound);
mdt::FramedRep random_framed_rep(Rng& rng, long n, int framings, long bound);
// random product of unit-triangular matrices, always invertible
mdt::QMat random_invertible(Rng& rng, long n, long bound);

mdt::QMat qmat_mul(const mdt::QMat& a, const mdt::QMat& b);
mdt::QVec qmat_apply(const mdt::QMat& a, const mdt::QVec& v);
mdt::QMat qmat_inverse(const mdt::QMat& a);

// `cases` is the number of randomized repetitions where randomization
// applies; deterministic checks inside a suite always run once.
std::vector<std::string> ring_properties(int cases, std::uint64_t seed);
std::vector<std::string> qseries_properties(int cases, std::uint64_t seed);
std::vector<std::string> quiver_properties(int cases, std::uint64_t seed);
std::vector<std::string> planepart_properties();
std::vector<std::string> asymptotic_properties();
std::vector<std::string> oracle_properties();

} // namespace testsup
