#pragma once

#include "counting.hpp"
#include "graph.hpp"
#include "pattern.hpp"
#include "rational.hpp"

namespace hfreg {

/// The integers (a, b) with n_F(H ⊙_e G0) = (a + b·d(G0)) · |V_1|···|V_k|:
/// a = n_F(H^-), a + b = n_F(H), counted in the unlabeled convention with the
/// host pattern viewed as a 1-blowup.  Always a >= 1 and a + b <= k!.
struct SemiBlowupCoefficients {
  int k;
  Int a;
  Int b;
};

/// Blowup of a pattern: class i of the given size; complete bipartite between
/// classes i, j iff {i,j} is a pattern edge.
KPartiteGraph build_blowup(const Pattern& h, const std::vector<int>& sizes);

/// H ⊙_e G0 with e = {1,2}: a blowup of H whose (1,2)-bipartite graph is
/// exactly G0 (first side -> class 1, second side -> class 2) and classes
/// 3..k of the given sizes.  When `balanced` is set, all class sizes must
/// equal |V_1(G0)| = |V_2(G0)|.
KPartiteGraph build_semi_blowup(const PatternPair& pp, const BipartiteGraph& g0,
                                const std::vector<int>& extra_sizes,
                                bool balanced = false);

SemiBlowupCoefficients pattern_coefficients(const PatternPair& pp);

enum class TransferFunction { f, g, f_prime, g_prime };

/// f(x) = x/(a+bx), g(x) = ax/(1-bx), and their derivatives, all exact.
/// g's domain is [0, 1/b) for b > 0 and [0, ∞) for b = 0.
Rational evaluate_transfer(const SemiBlowupCoefficients& coeffs,
                           TransferFunction which, const Rational& x);

/// Sidecar descriptor so experiments can regenerate semi-blowup instances:
/// `semiblowup: pattern=<file> e=(1,2) g0=<file> n=<int>`.
struct SemiBlowupDescriptor {
  std::string pattern_file;
  std::string g0_file;
  int n;  // size of classes 3..k (balanced builds)
};

SemiBlowupDescriptor parse_semiblowup_descriptor(const std::string& text);
std::string serialize_semiblowup_descriptor(const SemiBlowupDescriptor& d);

}  // namespace hfreg
