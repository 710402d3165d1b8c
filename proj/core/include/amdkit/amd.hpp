#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "amdkit/func.hpp"
#include "amdkit/rational.hpp"

namespace amdkit {

// Systematic code: encodings are (s, x, f(s, x)) with fresh uniform x.
// Sources and encodings are equiprobable throughout; every source has
// exactly t = |A2| valid encodings.
struct AmdCode {
  Func f;
  std::uint64_t m;   // |A1|
  std::uint64_t t;   // |A2|, the regularity
  std::uint64_t nb;  // |B|
  std::uint64_t n;   // |A1| * |A2| * |B|
};

AmdCode build_code(Func f);

struct Codeword {
  Idx s1;
  Idx s2;
  Idx tag;
};

// Tamper offset in A1 x A2 x B.
struct Offset {
  Idx a1 = 0;
  Idx a2 = 0;
  Idx b = 0;
  bool is_zero() const { return a1 == 0 && a2 == 0 && b == 0; }
};

using Sampler = std::function<Idx(Idx bound)>;

// Deterministic seeded uniform sampler; rejection keeps non-power-of-two
// bounds exactly uniform and the mt19937_64 stream is platform-stable.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : eng_(seed) {}
  Idx operator()(Idx bound);

 private:
  std::mt19937_64 eng_;
};

Codeword encode(const AmdCode& code, Idx s1, Sampler& draw);
std::optional<Idx> decode(const AmdCode& code, const Codeword& w);  // nullopt rejects

// Additive masking of a codeword (and its inverse); hides the codeword from
// the adversary without affecting tampering semantics.
Codeword mask(const AmdCode& code, const Codeword& w, const Offset& delta);
Codeword unmask(const AmdCode& code, const Codeword& w, const Offset& delta);

enum class AttackModel { Weak, Strong, Stronger };

struct Model {
  AttackModel kind = AttackModel::Weak;
  Idx source = 0;  // used by Strong only
};

// Exact success probability of the offset under the model, by enumeration of
// the decoder on every shifted codeword.
Rational success_given(const AmdCode& code, const Offset& delta, const Model& model);

struct SuccessProfile {
  bool weak_computed = false;
  bool strong_computed = false;
  bool stronger_computed = false;
  Rational weak_rho;
  Offset weak_argmax;
  std::vector<Rational> strong_rho_per_source;
  Rational strong_rho;
  Rational stronger_rho;
  Offset stronger_argmax;
};

struct ModelSet {
  bool weak = true;
  bool strong = true;
  bool stronger = true;
};

// Maximize over all offsets; argmax ties resolve to the smallest offset index
// (A1 fastest, then A2, then B), independent of the worker count.
SuccessProfile evaluate(const AmdCode& code, const ModelSet& models, unsigned workers = 1,
                        std::uint64_t max_cells = kDefaultMaxCells);

struct TagSize {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Rational ratio;     // n / m, exact and authoritative
  double bits = 0.0;  // log2(n/m), rendering only
};
TagSize tag_size(const AmdCode& code);

}  // namespace amdkit
