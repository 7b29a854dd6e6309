#include "semiblowup.hpp"

#include <sstream>

namespace hfreg {

KPartiteGraph build_blowup(const Pattern& h, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != h.k())
    throw invalid_argument_error("need one size per pattern vertex");
  std::vector<int> begin(h.k() + 1, 0);
  for (int i = 0; i < h.k(); ++i) {
    if (sizes[i] < 1) throw invalid_argument_error("blowup class sizes must be >= 1");
    begin[i + 1] = begin[i] + sizes[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : h.edges())
    for (int u = begin[i]; u < begin[i + 1]; ++u)
      for (int v = begin[j]; v < begin[j + 1]; ++v) edges.emplace_back(u, v);
  return KPartiteGraph(sizes, edges);
}

KPartiteGraph build_semi_blowup(const PatternPair& pp, const BipartiteGraph& g0,
                                const std::vector<int>& extra_sizes,
                                bool balanced) {
  int k = pp.k();
  if (static_cast<int>(extra_sizes.size()) != k - 2)
    throw invalid_argument_error("need sizes for classes 3..k");
  std::vector<int> sizes;
  sizes.push_back(g0.n1());
  sizes.push_back(g0.n2());
  for (int s : extra_sizes) sizes.push_back(s);
  if (balanced) {
    for (int s : sizes)
      if (s != sizes[0])
        throw invalid_argument_error(
            "balanced semi-blowup requires all class sizes equal");
  }
  std::vector<int> begin(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    if (sizes[i] < 1) throw invalid_argument_error("class sizes must be >= 1");
    begin[i + 1] = begin[i] + sizes[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : pp.h().edges()) {
    if (i == 0 && j == 1) continue;  // the e-pair carries G0 instead
    for (int u = begin[i]; u < begin[i + 1]; ++u)
      for (int v = begin[j]; v < begin[j + 1]; ++v) edges.emplace_back(u, v);
  }
  for (int a = 0; a < g0.n1(); ++a)
    for (size_t b = g0.row(a).find_first(); b != Bitset::npos;
         b = g0.row(a).find_next(b))
      edges.emplace_back(a, begin[1] + static_cast<int>(b));
  return KPartiteGraph(std::move(sizes), edges);
}

SemiBlowupCoefficients pattern_coefficients(const PatternPair& pp) {
  // Count F inside the host pattern treated as a 1-blowup (one vertex per
  // class), so both counts are in the unlabeled transversal convention.
  std::vector<int> ones(pp.k(), 1);
  Int a = count_copies(pp.f(), build_blowup(pp.h_minus(), ones)).value;
  Int total = count_copies(pp.f(), build_blowup(pp.h(), ones)).value;
  SemiBlowupCoefficients coeffs{pp.k(), a, total - a};
  if (coeffs.a < 1)
    throw invalid_argument_error("internal: a >= 1 must hold (F avoids e)");
  if (coeffs.a + coeffs.b > factorial(pp.k()))
    throw invalid_argument_error("internal: a+b <= k! must hold");
  return coeffs;
}

Rational evaluate_transfer(const SemiBlowupCoefficients& coeffs,
                           TransferFunction which, const Rational& x) {
  Rational a(coeffs.a), b(coeffs.b);
  switch (which) {
    case TransferFunction::f:
      if (x < 0 || x > 1)
        throw invalid_argument_error("f is defined on [0,1]");
      return x / (a + b * x);
    case TransferFunction::f_prime:
      if (x < 0 || x > 1)
        throw invalid_argument_error("f' is defined on [0,1]");
      return a / ((a + b * x) * (a + b * x));
    case TransferFunction::g:
    case TransferFunction::g_prime: {
      if (x < 0 || (coeffs.b > 0 && x >= Rational(1, coeffs.b)))
        throw invalid_argument_error("x outside the domain of g");
      Rational denom = 1 - b * x;
      if (which == TransferFunction::g) return a * x / denom;
      return a / (denom * denom);
    }
  }
  throw invalid_argument_error("unknown transfer function");
}

SemiBlowupDescriptor parse_semiblowup_descriptor(const std::string& text) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head != "semiblowup:")
    throw parse_error("descriptor must start with `semiblowup:`");
  SemiBlowupDescriptor d{"", "", -1};
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw parse_error("malformed descriptor field: " + tok);
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "pattern") {
      d.pattern_file = val;
    } else if (key == "g0") {
      d.g0_file = val;
    } else if (key == "n") {
      try {
        d.n = std::stoi(val);
      } catch (const std::exception&) {
        throw parse_error("malformed n field: " + val);
      }
    } else if (key == "e") {
      if (val != "(1,2)")
        throw parse_error("descriptor e must be (1,2) (patterns are canonical)");
    } else {
      throw parse_error("unknown descriptor field: " + key);
    }
  }
  if (d.pattern_file.empty() || d.g0_file.empty() || d.n < 1)
    throw parse_error("descriptor needs pattern=, g0= and n>=1");
  return d;
}

std::string serialize_semiblowup_descriptor(const SemiBlowupDescriptor& d) {
  std::ostringstream os;
  os << "semiblowup: pattern=" << d.pattern_file << " e=(1,2) g0=" << d.g0_file
     << " n=" << d.n << '\n';
  return os.str();
}

}  // namespace hfreg
